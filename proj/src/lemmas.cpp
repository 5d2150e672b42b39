#include "phasebench/lemmas.hpp"

#include "phasebench/parameter.hpp"
#include "phasebench/sharpen.hpp"

#include <cmath>

namespace phasebench {

namespace {

template <class Describe>
void expect(LemmaResult& r, bool ok, Describe describe) {
    ++r.checked;
    if (!ok && r.passed) {
        r.passed = false;
        r.counterexample = describe();
    }
}

std::string at(std::uint64_t n) { return "n=" + std::to_string(n) + ": "; }

LemmaResult parity_lemma(const LemmaContext& ctx) {
    LemmaResult r{"parity_counts"};
    const std::size_t k = ctx.alphabet.size();
    for (std::uint64_t n = 1; n <= ctx.budget; ++n) {
        const ParityCounts pc = parity_counts(k, n);
        BigInt even = 0;
        BigInt odd = 0;
        for (const Word& w : ctx.alphabet.words(n))
            (weight(w) % 2 == 0 ? even : odd) += 1;
        expect(r, pc.evenCount == even && pc.oddCount == odd && even == odd, [&] {
            return at(n) + "recurrence (" + pc.evenCount.str() + "," + pc.oddCount.str() + ") vs enumeration (" +
                   even.str() + "," + odd.str() + ")";
        });
    }
    return r;
}

LemmaResult symmetric_lemma(const LemmaContext& ctx) {
    LemmaResult r{"symmetric_words"};
    const std::size_t k = ctx.alphabet.size();
    for (std::uint64_t n = 1; n <= ctx.budget; ++n) {
        BigInt count = 0;
        for (const Word& w : ctx.alphabet.words(n)) {
            if (!is_symmetric(w))
                continue;
            ++count;
            expect(r, weight(w) % 2 == 0, [&] { return ctx.alphabet.format(w) + " is symmetric with odd weight"; });
        }
        const BigInt expected = n % 2 == 0 ? big_pow(k, n / 2) : BigInt(0);
        expect(r, count == expected,
               [&] { return at(n) + count.str() + " symmetric words, expected " + expected.str(); });
    }
    return r;
}

LemmaResult split_lemma(const LemmaContext& ctx) {
    LemmaResult r{"tie_break_split"};
    for (std::uint64_t n = 2; n <= ctx.budget; n += 2) {
        const std::uint64_t half = checked_pow(ctx.alphabet.size(), n / 2) / 2;
        std::uint64_t plus = 0;
        std::uint64_t minus = 0;
        for (const Word& z : ctx.alphabet.words(n / 2)) {
            const Word w = concat(z, z);
            const int q = ctx.tieBreak(w);
            expect(r, q == 1 || q == -1, [&] { return ctx.alphabet.format(w) + " maps to " + std::to_string(q); });
            std::uint64_t& side = q == 1 ? plus : minus;
            ++side;
            expect(r, side <= half, [&] {
                return at(n) + ctx.alphabet.format(w) + " is symmetric word number " + std::to_string(side) +
                       " sent to " + (q == 1 ? "+1" : "-1") + ", more than half of " + std::to_string(2 * half);
            });
        }
    }
    return r;
}

LemmaResult errorless_lemma(const LemmaContext& ctx) {
    LemmaResult r{"errorless"};
    const ErrorlessReport report = verify_errorless(ctx.lang, ctx.iso, ctx.budget);
    r.checked = report.checked;
    if (!report.passed()) {
        r.passed = false;
        r.counterexample = "rough decider is wrong on " + ctx.alphabet.format(report.wrongDecisions.front());
    }
    return r;
}

LemmaResult class_count_lemma(const LemmaContext& ctx) {
    LemmaResult r{"class_counts"};
    for (std::uint64_t n = 1; n <= ctx.budget; ++n) {
        const ClassCounts cc = class_counts(ctx.iso, n);
        expect(r, 2 * cc.acceptCount == cc.total && 2 * cc.rejectCount + 2 * cc.bottomCount == cc.total, [&] {
            return at(n) + "accept=" + std::to_string(cc.acceptCount) + " reject=" + std::to_string(cc.rejectCount) +
                   " bottom=" + std::to_string(cc.bottomCount) + " of " + std::to_string(cc.total);
        });
    }
    return r;
}

LemmaResult bottom_fraction_lemma(const LemmaContext& ctx) {
    LemmaResult r{"bottom_fraction"};
    const std::size_t k = ctx.alphabet.size();
    for (std::uint64_t n = 1; n <= ctx.budget; ++n) {
        const Rational f = bottom_fraction(ctx.iso, n);
        const Rational exact = n % 2 == 0 ? Rational(1) / Rational(big_pow(k, n / 2)) : Rational(0);
        const auto describe = [&] { return at(n) + "bottom fraction " + fraction_string(f); };
        expect(r, f == exact, describe);
        expect(r, f * f * Rational(big_pow(2, n)) <= 1, describe); // f <= 2^{-n/2}
        expect(r, Surd(f) <= ctx.bounds.c_power(n), describe);
    }
    return r;
}

LemmaResult slice_size_lemma(const LemmaContext& ctx) {
    LemmaResult r{"slice_sizes"};
    for (std::uint64_t n = 1; n <= ctx.budget; ++n) {
        const ClassCounts cc = class_counts(ctx.iso, n);
        for (int p : {+1, -1}) {
            const std::uint64_t size = slice(ctx.iso, p, n, ctx.tieBreak).members.size();
            const std::int64_t twice =
                static_cast<std::int64_t>(cc.total) + p * static_cast<std::int64_t>(cc.bottomCount);
            expect(r, 2 * static_cast<std::int64_t>(size) == twice, [&] {
                return at(n) + "slice " + (p > 0 ? "+1" : "-1") + " has " + std::to_string(size) + " inputs, expected " +
                       std::to_string(twice / 2);
            });
        }
    }
    return r;
}

LemmaResult f_bound_lemma(const LemmaContext& ctx) {
    LemmaResult r{"f_bound"};
    for (std::uint64_t n = 1; n <= ctx.budget; ++n) {
        const ClassCounts cc = class_counts(ctx.iso, n);
        for (int p : {+1, -1}) {
            const FStat f = f_statistic(cc, p, ctx.bounds);
            const auto describe = [&] {
                return at(n) + "F(" + std::to_string(p) + ")=" + fraction_string(f.value) + " above " +
                       f.bound.to_string();
            };
            expect(r, !f.exceedsBound, describe);
            expect(r, Surd(f.value) <= f_intermediate_bound(n, ctx.bounds), describe);
        }
    }
    return r;
}

LemmaResult paddability_lemma(const LemmaContext& ctx) {
    LemmaResult r{"paddability"};
    const PaddabilityReport report = check_paddability(ctx.lang, ctx.padMaxLen);
    r.checked = report.checkedPairs;
    const auto pair_text = [&](const std::pair<Word, Word>& p) {
        return "x=" + ctx.alphabet.format(p.first) + " y=" + ctx.alphabet.format(p.second);
    };
    if (!report.axiom1Violations.empty()) {
        r.passed = false;
        r.counterexample = "padding changes membership at " + pair_text(report.axiom1Violations.front());
    } else if (!report.axiom2Violations.empty()) {
        r.passed = false;
        r.counterexample = "decoding fails at " + pair_text(report.axiom2Violations.front());
    }
    return r;
}

LemmaResult bijection_lemma(const LemmaContext& ctx) {
    LemmaResult r{"bijection"};
    const BijectionReport report = verify_bijection(ctx.iso, ctx.budget);
    r.checked = report.checked;
    if (!report.injectivityViolations.empty()) {
        r.passed = false;
        const auto& [a, b] = report.injectivityViolations.front();
        r.counterexample = ctx.alphabet.format(a) + " and " + ctx.alphabet.format(b) + " share an image";
    } else if (!report.surjectivityViolations.empty()) {
        r.passed = false;
        r.counterexample = ctx.alphabet.format(report.surjectivityViolations.front()) + " has no preimage";
    } else if (!report.roundTripViolations.empty()) {
        r.passed = false;
        r.counterexample = ctx.alphabet.format(report.roundTripViolations.front()) + " does not round-trip";
    }
    return r;
}

LemmaResult sharpening_lemma(const LemmaContext& ctx) {
    LemmaResult r{"sharpening"};
    const Surd up = sharpen_parameter(ParamValue{+1, 49}, Word{}, {});
    expect(r, up == Surd(1), [&] { return "tau=+7 sharpens to " + up.to_string(); });
    const Surd down = sharpen_parameter(ParamValue{-1, 36}, Word{}, {});
    expect(r, down == Surd(0), [&] { return "tau=-6 sharpens to " + down.to_string(); });
    const double length = pull_in_length(Rational(1, 2));
    expect(r, std::abs(length - 5.6147) <= 1e-4, [&] { return "pull-in length " + std::to_string(length); });
    const SharpenReport report =
        verify_reassignment(ctx.lang, ctx.iso, ctx.budget, default_reassignment(ctx.lang, ctx.iso, ctx.budget));
    expect(r, report.halfMembership(), [&] {
        return std::to_string(report.zeroMembers) + " of " + std::to_string(report.zeroCount) +
               " inputs sent to 0 are members";
    });
    return r;
}

} // namespace

std::vector<LemmaResult> run_lemmas(const LemmaContext& ctx) {
    return {parity_lemma(ctx),      symmetric_lemma(ctx),   split_lemma(ctx),       errorless_lemma(ctx),
            class_count_lemma(ctx), bottom_fraction_lemma(ctx), slice_size_lemma(ctx), f_bound_lemma(ctx),
            paddability_lemma(ctx), bijection_lemma(ctx),   sharpening_lemma(ctx)};
}

nlohmann::json lemmas_json(const std::vector<LemmaResult>& results) {
    nlohmann::json list = nlohmann::json::array();
    bool all = true;
    for (const LemmaResult& r : results) {
        all = all && r.passed;
        list.push_back({{"name", r.name},
                        {"passed", r.passed},
                        {"checked", r.checked},
                        {"counterexample", r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json()}});
    }
    return {{"lemmas", list}, {"passed", all}};
}

} // namespace phasebench
