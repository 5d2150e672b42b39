#include "phasebench/bounds.hpp"

#include <algorithm>

namespace phasebench {

void BoundParams::validate() const {
    if (cSquared <= 0 || cSquared >= 1)
        throw ConfigError("bound constant c must lie strictly between 0 and 1");
    if (poly.empty())
        throw ConfigError("Poly needs at least one coefficient");
    bool positive = false;
    for (const Rational& coeff : poly) {
        if (coeff < 0)
            throw ConfigError("Poly coefficients must be nonnegative");
        positive = positive || coeff > 0;
    }
    if (!positive)
        throw ConfigError("Poly must have a positive coefficient");
}

Rational BoundParams::poly_at(std::uint64_t n) const {
    Rational value = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        value = value * Rational(n) + *it;
    return value;
}

Surd BoundParams::c_power(std::uint64_t n) const {
    Surd power(rational_pow(cSquared, n / 2));
    if (n % 2 == 1)
        power *= c();
    return power;
}

Rational BoundParams::parse_c(const std::string& text) {
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(), [](char ch) { return ch == ' '; }), body.end());
    const std::string prefix = "sqrt(";
    try {
        if (body.rfind(prefix, 0) == 0 && body.size() > prefix.size() && body.back() == ')')
            return parse_rational(body.substr(prefix.size(), body.size() - prefix.size() - 1));
        const Rational value = parse_rational(body);
        if (value <= 0)
            throw ConfigError("bound constant c must be positive");
        return value * value;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad bound constant c: ") + e.what());
    }
}

std::string BoundParams::c_string() const {
    Rational root;
    if (rational_sqrt(cSquared, root))
        return fraction_string(root);
    return "sqrt(" + fraction_string(cSquared) + ")";
}

BoundPair bound_curve(std::uint64_t n, bool acceptSide, const BoundParams& bounds) {
    const Surd env = bounds.envelope(n);
    const Surd zero(0);
    const Surd one(1);
    if (acceptSide)
        return {max(zero, one - env), one};
    return {zero, min(one, env)};
}

BoundPair bound_curve(const ParamValue& tau, const BoundParams& bounds) {
    return bound_curve(tau.n, tau.sign > 0, bounds);
}

bool poly_side_condition(const BoundParams& bounds, std::uint64_t maxN) {
    for (std::uint64_t n = 1; n < maxN; ++n) {
        const Rational now = bounds.poly_at(n);
        const Rational next = bounds.poly_at(n + 1);
        if (!(next * next < 2 * now * now))
            return false;
    }
    return true;
}

FStat f_statistic(const ClassCounts& counts, int p, const BoundParams& bounds) {
    if (p != 1 && p != -1)
        throw ContractViolation("F needs p = +1 or -1");
    FStat f;
    f.n = counts.n;
    f.p = p;
    const BigInt twiceSlice = BigInt(counts.total) + p * BigInt(counts.bottomCount);
    f.value = twiceSlice == 0 ? Rational(0) : Rational(BigInt(counts.bottomCount), twiceSlice);
    f.bound = Surd(Rational(7, 2)) * bounds.c_power(counts.n);
    f.exceedsBound = Surd(f.value) > f.bound;
    return f;
}

FStat compute_F(const PIso& iso, std::size_t n, int p, const BoundParams& bounds) {
    return f_statistic(class_counts(iso, n), p, bounds);
}

Surd f_intermediate_bound(std::uint64_t n, const BoundParams& bounds) {
    const Surd cn = bounds.c_power(n);
    return cn / (Surd(1) - cn);
}

} // namespace phasebench
