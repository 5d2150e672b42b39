#include "phasebench/parameter.hpp"

#include <cmath>
#include <cstdio>

namespace phasebench {

double ParamValue::tau() const { return sign * std::sqrt(static_cast<double>(n)); }

std::string ParamValue::tau_string() const {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", tau());
    return buf;
}

std::strong_ordering operator<=>(const ParamValue& a, const ParamValue& b) {
    if (a.sign != b.sign)
        return a.sign <=> b.sign;
    return a.sign > 0 ? a.n <=> b.n : b.n <=> a.n;
}

ParamValue gamma(const PIso& iso, const Word& x, const QPrimeFn& tieBreak) {
    const Word image = iso.apply(x);
    if (image.empty())
        throw UndefinedParameter("parameter undefined: input maps to the empty word");
    return ParamValue{discriminate_image(image, tieBreak), image.size()};
}

Ball ball(const PIso& iso, std::size_t n) {
    if (iso.kind() == IsoKind::Table && n > iso.budget())
        throw BudgetExceeded("ball beyond iso budget");
    Ball b;
    b.n = n;
    for (const Word& image : iso.alphabet().words(n))
        b.members.push_back(iso.invert(image));
    return b;
}

Slice slice(const PIso& iso, int sign, std::size_t n, const QPrimeFn& tieBreak) {
    if (sign != 1 && sign != -1)
        throw ContractViolation("slice sign must be +1 or -1");
    if (n < 1)
        throw UndefinedParameter("no slice at n = 0");
    Slice s{ParamValue{sign, n}, {}};
    for (const Word& x : ball(iso, n).members)
        if (gamma(iso, x, tieBreak).sign == sign)
            s.members.push_back(x);
    return s;
}

} // namespace phasebench
