#pragma once

#include "phasebench/roughp.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phasebench {

/// The parameter is not defined for the input whose image is empty.
class UndefinedParameter : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// tau = sign * sqrt(n), kept as the exact pair. Ordered by real value.
struct ParamValue {
    int sign = +1;
    std::uint64_t n = 1;

    double tau() const;
    /// tau printed with 12 significant digits.
    std::string tau_string() const;
    ParamValue negated() const { return {-sign, n}; }

    friend bool operator==(const ParamValue&, const ParamValue&) = default;
    friend std::strong_ordering operator<=>(const ParamValue& a, const ParamValue& b);
};

/// Q(x) * sqrt(N(x)). Throws UndefinedParameter when the image is empty.
ParamValue gamma(const PIso& iso, const Word& x, const QPrimeFn& tieBreak = qprime);

/// Inputs whose image has length n, in image order.
struct Ball {
    std::size_t n = 0;
    std::vector<Word> members;
};

struct Slice {
    ParamValue param;
    std::vector<Word> members;
};

Ball ball(const PIso& iso, std::size_t n);

/// Inputs of the ball with discriminator value `sign`.
Slice slice(const PIso& iso, int sign, std::size_t n, const QPrimeFn& tieBreak = qprime);

} // namespace phasebench
