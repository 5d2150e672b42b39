#include "phasebench/roughp.hpp"

namespace phasebench {

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Accept: return "accept";
    case Verdict::Reject: return "reject";
    case Verdict::Bottom: return "bottom";
    }
    return "?";
}

Verdict classify_image(const Word& image) {
    if (weight(image) % 2 == 1)
        return Verdict::Accept;
    return is_symmetric(image) ? Verdict::Bottom : Verdict::Reject;
}

Verdict decide_rough(const PIso& iso, const Word& x) { return classify_image(iso.apply(x)); }

int qprime(const Word& w) {
    if (w.empty())
        throw ContractViolation("qprime is undefined on the empty word");
    if (!is_symmetric(w))
        throw ContractViolation("qprime needs a symmetric word");
    return weight(w.prefix(w.size() / 2)) % 2 == 1 ? +1 : -1;
}

int discriminate_image(const Word& image, const QPrimeFn& tieBreak) {
    switch (classify_image(image)) {
    case Verdict::Accept: return +1;
    case Verdict::Reject: return -1;
    case Verdict::Bottom: break;
    }
    return tieBreak(image);
}

int discriminate(const PIso& iso, const Word& x, const QPrimeFn& tieBreak) {
    return discriminate_image(iso.apply(x), tieBreak);
}

Verdict psi(int p) {
    if (p == +1)
        return Verdict::Accept;
    if (p == -1)
        return Verdict::Reject;
    throw ContractViolation("psi is defined on +1 and -1 only");
}

ClassCounts class_counts(const PIso& iso, std::size_t n) {
    if (iso.kind() == IsoKind::Table && n > iso.budget())
        throw BudgetExceeded("class_counts beyond iso budget");
    ClassCounts counts;
    counts.n = n;
    for (const Word& image : iso.alphabet().words(n)) {
        const Word x = iso.invert(image);
        switch (decide_rough(iso, x)) {
        case Verdict::Accept: ++counts.acceptCount; break;
        case Verdict::Reject: ++counts.rejectCount; break;
        case Verdict::Bottom: ++counts.bottomCount; break;
        }
        ++counts.total;
    }
    return counts;
}

Rational bottom_fraction(const PIso& iso, std::size_t n) {
    const ClassCounts counts = class_counts(iso, n);
    return Rational(counts.bottomCount, counts.total);
}

ErrorlessReport verify_errorless(const Language& lang, const PIso& iso, std::size_t budget) {
    ErrorlessReport report;
    for (std::size_t len = 0; len <= budget; ++len) {
        for (const Word& x : iso.alphabet().words(len)) {
            ++report.checked;
            const Verdict v = decide_rough(iso, x);
            if (v == Verdict::Bottom) {
                ++report.bottoms;
                continue;
            }
            if ((v == Verdict::Accept) != lang.contains(x))
                report.wrongDecisions.push_back(x);
        }
    }
    return report;
}

} // namespace phasebench
