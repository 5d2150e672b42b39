#include "phasebench/transition.hpp"

#include "phasebench/parallel.hpp"

#include <algorithm>
#include <array>

namespace phasebench {

const char* to_string(Orientation o) noexcept {
    return o == Orientation::Canonical ? "canonical" : "inverted";
}

bool SliceStats::within_bounds() const {
    const Surd a(accepting_fraction());
    return lowerBound <= a && a <= upperBound;
}

std::uint64_t ScanReport::wrong_decisions() const {
    std::uint64_t total = 0;
    for (const SliceStats& s : slices)
        total += s.wrongDecisions;
    return total;
}

bool ScanReport::bounds_hold() const {
    return std::all_of(slices.begin(), slices.end(), [](const SliceStats& s) { return s.within_bounds(); });
}

bool ScanReport::passed() const {
    return errorless() && bounds_hold() && threshold.value.has_value() && requirement1.passed &&
           requirement2.passed && requirement3.passed;
}

namespace {

bool by_n_then_sign(const SliceStats& a, const SliceStats& b) {
    return a.n != b.n ? a.n < b.n : a.sign < b.sign;
}

bool above_half(const SliceStats& s) { return 2 * s.acceptedCount > s.sliceSize; }

std::string describe(const SliceStats& s) {
    return "tau=" + s.param().tau_string() + " (n=" + std::to_string(s.n) + ", sign=" + std::to_string(s.sign) +
           ", A=" + s.accepting_fraction_exact() + ")";
}

BigInt ceil_of(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (q * den < num)
        ++q;
    return q;
}

BigInt floor_of(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (q * den > num)
        --q;
    return q;
}

void validate_options(const ScanOptions& options) {
    options.bounds.validate();
    if (options.delta <= 0)
        throw ConfigError("delta must be positive");
    if (options.exemptRadius < 0)
        throw ConfigError("exemptRadius must be nonnegative");
    if (options.growthBase && *options.growthBase <= 1)
        throw ConfigError("growthBase must exceed 1");
}

// Tallies the two slices of one ball.
std::array<SliceStats, 2> tally_ball(const Language& lang, const PIso& iso, std::uint64_t n,
                                     const QPrimeFn& tieBreak) {
    std::array<SliceStats, 2> out; // [0]: sign -1, [1]: sign +1
    out[0].sign = -1;
    out[1].sign = +1;
    std::uint64_t ballSize = 0;
    std::uint64_t ballBottom = 0;
    for (const Word& image : iso.alphabet().words(n)) {
        const Word x = iso.invert(image);
        const Verdict verdict = classify_image(image);
        const int sign = discriminate_image(image, tieBreak);
        if (sign != 1 && sign != -1)
            throw ContractViolation("discriminator returned a value other than +1 or -1");
        const bool member = lang.contains(x);
        SliceStats& s = out[sign > 0 ? 1 : 0];
        ++s.sliceSize;
        ++ballSize;
        if (member)
            ++s.acceptedCount;
        switch (verdict) {
        case Verdict::Bottom:
            ++s.bottomInSlice;
            ++ballBottom;
            break;
        case Verdict::Accept: ++(member ? s.correctIn : s.wrongDecisions); break;
        case Verdict::Reject: ++(member ? s.wrongDecisions : s.correctOut); break;
        }
    }
    for (SliceStats& s : out) {
        s.n = n;
        s.ballSize = ballSize;
        s.ballBottom = ballBottom;
    }
    return out;
}

} // namespace

ScanReport run_scan(const Language& lang, const PIso& iso, std::uint64_t budget, const ScanOptions& options,
                    const QPrimeFn& tieBreak) {
    validate_options(options);
    if (budget < 1)
        throw ConfigError("scan budget must be at least 1");
    if (lang.alphabet_size() != iso.alphabet().size())
        throw ConfigError("language and iso use different alphabets");
    if (iso.kind() == IsoKind::Table && budget > iso.budget())
        throw BudgetExceeded("scan budget " + std::to_string(budget) + " exceeds iso budget " +
                             std::to_string(iso.budget()));

    std::vector<std::array<SliceStats, 2>> perBall(budget);
    parallel_for(budget, worker_count(options.threads),
                 [&](std::size_t i) { perBall[i] = tally_ball(lang, iso, i + 1, tieBreak); });

    ScanReport scan;
    scan.alphabetSize = iso.alphabet().size();
    scan.budget = budget;
    scan.options = options;
    scan.skippedUndefined = 1; // the one input whose image is empty
    for (const auto& pair : perBall) {
        for (const SliceStats& s : pair) {
            if (s.sliceSize == 0)
                scan.gaps.push_back(s.param());
            else
                scan.slices.push_back(s);
        }
    }
    std::sort(scan.slices.begin(), scan.slices.end(), by_n_then_sign);
    analyze(scan);
    return scan;
}

void analyze(ScanReport& scan) {
    const int acceptSide = accept_sign(scan.orientation);
    for (SliceStats& s : scan.slices) {
        s.envelope = scan.options.bounds.envelope(s.n);
        const BoundPair b = bound_curve(s.n, s.sign == acceptSide, scan.options.bounds);
        s.lowerBound = b.lower;
        s.upperBound = b.upper;
    }
    scan.threshold = find_threshold(scan.slices, scan.orientation);
    scan.requirement1 = requirement1_check(scan);
    scan.requirement2 = requirement2_check(scan);
    scan.requirement3 = requirement3_check(scan);
    scan.balance = balance_check(scan);
}

ScanReport invert_scan(const ScanReport& scan) {
    ScanReport out = scan;
    for (SliceStats& s : out.slices)
        s.sign = -s.sign;
    for (ParamValue& g : out.gaps)
        g = g.negated();
    std::sort(out.slices.begin(), out.slices.end(), by_n_then_sign);
    std::sort(out.gaps.begin(), out.gaps.end(),
              [](const ParamValue& a, const ParamValue& b) { return a.n != b.n ? a.n < b.n : a.sign < b.sign; });
    out.orientation = scan.orientation == Orientation::Canonical ? Orientation::Inverted : Orientation::Canonical;
    analyze(out);
    return out;
}

ScanReport with_orientation(const ScanReport& scan, Orientation orientation) {
    ScanReport out = scan;
    out.orientation = orientation;
    analyze(out);
    return out;
}

ThresholdResult find_threshold(const std::vector<SliceStats>& slices, Orientation orientation) {
    ThresholdResult result;
    if (slices.empty()) {
        result.diagnostic = "no realized slices";
        return result;
    }
    // Walk tau away from the rejecting side: a run of A <= 1/2 must be
    // followed by a run of A > 1/2.
    std::vector<const SliceStats*> order;
    for (const SliceStats& s : slices)
        order.push_back(&s);
    std::sort(order.begin(), order.end(), [&](const SliceStats* a, const SliceStats* b) {
        return orientation == Orientation::Canonical ? a->param() < b->param() : b->param() < a->param();
    });
    const auto firstAbove = std::find_if(order.begin(), order.end(), [](const SliceStats* s) { return above_half(*s); });
    const auto offender = std::find_if(firstAbove, order.end(), [](const SliceStats* s) { return !above_half(*s); });
    if (offender != order.end()) {
        result.diagnostic = "slice " + describe(**offender) + " has A <= 1/2 beyond slice " + describe(**firstAbove) +
                            " with A > 1/2";
        return result;
    }
    if (firstAbove == order.begin()) {
        result.diagnostic = "every realized slice has A > 1/2, so no realized value bounds the rejecting side";
        return result;
    }
    result.value = (*(firstAbove - 1))->param();
    return result;
}

bool threshold_biconditional_holds(const std::vector<SliceStats>& slices, const ParamValue& threshold,
                                   Orientation orientation) {
    return std::all_of(slices.begin(), slices.end(), [&](const SliceStats& s) {
        const bool beyond = orientation == Orientation::Canonical ? threshold < s.param() : s.param() < threshold;
        return beyond == above_half(s);
    });
}

namespace {

Requirement12Result side_check(const ScanReport& scan, bool acceptSide) {
    Requirement12Result result;
    const int sign = acceptSide ? accept_sign(scan.orientation) : -accept_sign(scan.orientation);
    std::vector<const SliceStats*> side;
    for (const SliceStats& s : scan.slices)
        if (s.sign == sign)
            side.push_back(&s);
    result.slicesChecked = side.size();
    result.envelopeMonotone = true;
    for (std::size_t i = 1; i < side.size(); ++i) {
        const SliceStats& prev = *side[i - 1];
        const SliceStats& cur = *side[i];
        const bool boundMoves = acceptSide ? prev.lowerBound <= cur.lowerBound : cur.upperBound <= prev.upperBound;
        if (cur.envelope > prev.envelope || !boundMoves) {
            result.envelopeMonotone = false;
            result.violations.push_back({cur.sign, cur.n,
                                         "envelope grows from n=" + std::to_string(prev.n) + " to n=" +
                                             std::to_string(cur.n)});
        }
    }
    for (const SliceStats* s : side) {
        if (!s->within_bounds()) {
            result.violations.push_back(
                {s->sign, s->n,
                 "A=" + s->accepting_fraction_exact() + " outside [" + s->lowerBound.to_string() + ", " +
                     s->upperBound.to_string() + "]"});
        }
    }
    result.informativeAtEdge = !side.empty() && side.back()->envelope < Surd(1);
    result.passed = !side.empty() && result.envelopeMonotone && result.informativeAtEdge && result.violations.empty();
    return result;
}

} // namespace

Requirement12Result requirement1_check(const ScanReport& scan) { return side_check(scan, true); }

Requirement12Result requirement2_check(const ScanReport& scan) { return side_check(scan, false); }

Requirement3Result requirement3_check(const ScanReport& scan) {
    Requirement3Result result;
    const ScanOptions& opt = scan.options;
    const Rational base = opt.growthBase.value_or(Rational(scan.alphabetSize));
    std::optional<BigInt> previous;
    bool monotone = true;
    std::size_t nonEmpty = 0;
    for (Rational low = opt.exemptRadius;; low += opt.delta) {
        const Rational high = low + opt.delta;
        if (high * high > Rational(scan.budget))
            break;
        DensityWindow w;
        w.lowEdge = low;
        w.highEdge = high;
        const BigInt nLow = ceil_of(low * low);
        const BigInt nHigh = floor_of(high * high);
        w.nLow = nLow.convert_to<std::uint64_t>();
        w.nHigh = nHigh.convert_to<std::uint64_t>();
        bool any = false;
        for (const SliceStats& s : scan.slices) {
            if (s.n >= nLow && s.n <= nHigh) {
                w.count += s.sliceSize;
                any = true;
            }
        }
        w.empty = !any;
        if (!w.empty) {
            ++nonEmpty;
            if (previous) {
                w.ratio = Rational(w.count, *previous);
                if (w.count < *previous)
                    monotone = false;
            }
            previous = w.count;
        }
        result.windows.push_back(w);
    }
    const DensityWindow* last = nullptr;
    for (const DensityWindow& w : result.windows)
        if (!w.empty)
            last = &w;
    if (nonEmpty < 2) {
        result.note = "fewer than two non-empty full windows fit within the budget";
        return result;
    }
    if (!monotone) {
        result.note = "window counts decrease moving away from the threshold";
        return result;
    }
    if (!(*last->ratio >= base)) {
        result.note = "last window ratio " + fraction_string(*last->ratio) + " is below growth base " +
                      fraction_string(base);
        return result;
    }
    result.passed = true;
    return result;
}

BalanceReport balance_check(const ScanReport& scan) {
    BalanceReport report;
    report.sideCondition = poly_side_condition(scan.options.bounds, scan.budget);
    report.passed = report.sideCondition;
    for (std::uint64_t n = 1; n <= scan.budget; ++n) {
        std::uint64_t ballSize = 0;
        std::uint64_t in = 0;
        std::uint64_t out = 0;
        for (const SliceStats& s : scan.slices) {
            if (s.n != n)
                continue;
            ballSize = s.ballSize;
            in += s.correctIn;
            out += s.correctOut;
        }
        if (ballSize == 0)
            continue;
        BalanceRow row;
        row.n = n;
        row.inFraction = Rational(in, ballSize);
        row.outFraction = Rational(out, ballSize);
        row.required = 1 / scan.options.bounds.poly_at(n);
        row.passed = row.inFraction >= row.required && row.outFraction >= row.required;
        row.exempt = n < scan.options.balanceMinN;
        if (!row.exempt && !row.passed)
            report.passed = false;
        report.rows.push_back(row);
    }
    return report;
}

std::vector<BoundViolation> verify_acc_bounds(const ScanReport& scan) {
    std::vector<BoundViolation> out;
    for (const SliceStats& s : scan.slices)
        if (!s.within_bounds())
            out.push_back({s.sign, s.n,
                           "A=" + s.accepting_fraction_exact() + " outside [" + s.lowerBound.to_string() + ", " +
                               s.upperBound.to_string() + "]"});
    return out;
}

} // namespace phasebench
