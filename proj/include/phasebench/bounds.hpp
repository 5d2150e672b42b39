#pragma once

#include "phasebench/parameter.hpp"
#include "phasebench/roughp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace phasebench {

/// The exponential envelope Poly(n) * c^n. c is kept through its exact
/// square so that c = 1/sqrt(2) stays exact.
struct BoundParams {
    Rational cSquared{1, 2};
    /// Poly(n) = sum_i poly[i] * n^i.
    std::vector<Rational> poly{Rational(4)};

    /// Throws ConfigError unless 0 < c < 1, coefficients are nonnegative and
    /// Poly has a positive coefficient.
    void validate() const;

    Rational poly_at(std::uint64_t n) const;
    Surd c() const { return Surd::sqrt_of(cSquared); }
    Surd c_power(std::uint64_t n) const;
    Surd envelope(std::uint64_t n) const { return c_power(n) * Surd(poly_at(n)); }

    /// Parses "sqrt(p/q)", "p/q" or a decimal into cSquared.
    static Rational parse_c(const std::string& text);
    std::string c_string() const;
};

struct BoundPair {
    Surd lower;
    Surd upper;
};

/// On the side where acceptance tends to 1: [max(0, 1 - env), 1].
/// On the other side: [0, min(1, env)].
BoundPair bound_curve(std::uint64_t n, bool acceptSide, const BoundParams& bounds);

/// Canonical orientation: positive tau is the accepting side.
BoundPair bound_curve(const ParamValue& tau, const BoundParams& bounds);

/// True iff Poly(n) * (1/sqrt 2)^n strictly decreases on [1, maxN],
/// checked exactly as Poly(n+1)^2 < 2 Poly(n)^2.
bool poly_side_condition(const BoundParams& bounds, std::uint64_t maxN);

/// Share of a slice taken by the discriminator's tie-break:
/// (bottom/2) / sliceSize.
struct FStat {
    std::size_t n = 0;
    int p = +1;
    Rational value;
    Surd bound; // (7/2) c^n
    bool exceedsBound = false;
};

/// From class counts; sliceSize = total/2 + p * bottom/2.
FStat f_statistic(const ClassCounts& counts, int p, const BoundParams& bounds = {});

FStat compute_F(const PIso& iso, std::size_t n, int p, const BoundParams& bounds = {});

/// c^n / (1 - c^n), the bound F obeys before it is loosened to (7/2) c^n.
Surd f_intermediate_bound(std::uint64_t n, const BoundParams& bounds = {});

} // namespace phasebench
