#pragma once

#include "phasebench/isomorphism.hpp"
#include "phasebench/language.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace phasebench {

/// A precondition of an internal operation was broken by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Verdict { Accept, Reject, Bottom };

const char* to_string(Verdict v) noexcept;

/// The three-case rule on an image word: odd weight accepts, even weight
/// rejects unless the word is symmetric, symmetric words give Bottom.
Verdict classify_image(const Word& image);

/// The rule applied to iso.apply(x).
Verdict decide_rough(const PIso& iso, const Word& x);

/// Tie-breaker on a non-empty symmetric word z z: +1 iff weight(z) is odd.
/// Throws ContractViolation on the empty word or an asymmetric word.
int qprime(const Word& w);

using QPrimeFn = std::function<int(const Word&)>;

/// +1 on Accept, -1 on Reject, tieBreak(image) on Bottom.
int discriminate(const PIso& iso, const Word& x, const QPrimeFn& tieBreak = qprime);

/// Same as discriminate but from a precomputed image.
int discriminate_image(const Word& image, const QPrimeFn& tieBreak = qprime);

/// +1 -> Accept, -1 -> Reject. Throws ContractViolation for any other value.
Verdict psi(int p);

struct ClassCounts {
    std::size_t n = 0;
    std::uint64_t acceptCount = 0;
    std::uint64_t rejectCount = 0;
    std::uint64_t bottomCount = 0;
    std::uint64_t total = 0;
};

/// Verdict counts over the ball of inputs whose image has length n,
/// by enumerating the ball.
ClassCounts class_counts(const PIso& iso, std::size_t n);

/// bottomCount / |Sigma|^n, exactly.
Rational bottom_fraction(const PIso& iso, std::size_t n);

struct ErrorlessReport {
    std::uint64_t checked = 0;
    std::uint64_t bottoms = 0;
    /// Inputs where the rough decider committed to the wrong answer.
    std::vector<Word> wrongDecisions;
    bool passed() const { return wrongDecisions.empty(); }
};

/// Exhaustive check over inputs of length <= budget that the rough decider
/// never contradicts the language when it commits.
ErrorlessReport verify_errorless(const Language& lang, const PIso& iso, std::size_t budget);

} // namespace phasebench
