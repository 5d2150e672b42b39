#pragma once

#include "phasebench/alphabet.hpp"
#include "phasebench/language.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace phasebench {

/// Input longer than a table isomorphism covers.
class BudgetExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The slot discipline cannot be met. `length_class()` is the smallest L for
/// which the words of length <= L already outnumber the usable images.
class InfeasibleIso : public std::runtime_error {
public:
    InfeasibleIso(const std::string& what, std::size_t lengthClass)
        : std::runtime_error(what), lengthClass_(lengthClass) {}
    std::size_t length_class() const noexcept { return lengthClass_; }

private:
    std::size_t lengthClass_;
};

/// How many words of Sigma^n fall in each image class of the rough decider.
struct SlotBudget {
    std::size_t n = 0;
    BigInt acceptCapacity; // odd weight
    BigInt rejectCapacity; // even weight, asymmetric
    BigInt bottomCapacity; // symmetric
};

SlotBudget slot_budget(std::size_t alphabetSize, std::size_t n);

enum class IsoKind { Identity, Table };

/// A bijection on words. The identity covers all of Sigma*; a table covers
/// Sigma^{<=budget} and throws BudgetExceeded beyond it.
class PIso {
public:
    static PIso identity(const Alphabet& alphabet, std::size_t budget);

    /// Table from explicit (input, image) pairs. Every input of Sigma^{<=budget}
    /// must appear exactly once; images must lie in Sigma^{<=budget}. Duplicate
    /// images are accepted so that verify_bijection can report them.
    static PIso from_pairs(const Alphabet& alphabet, std::size_t budget,
                           const std::vector<std::pair<Word, Word>>& pairs);

    IsoKind kind() const noexcept { return kind_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t budget() const noexcept { return budget_; }

    Word apply(const Word& x) const;
    /// Throws std::domain_error if `w` has no preimage (broken table).
    Word invert(const Word& w) const;
    std::size_t output_size(const Word& x) const { return apply(x).size(); }

    /// (input, image) pairs ordered by input position in Sigma^{<=budget}.
    std::vector<std::pair<Word, Word>> pairs() const;

private:
    PIso(IsoKind kind, Alphabet alphabet, std::size_t budget);
    void require_in_budget(const Word& w) const;

    static constexpr std::uint64_t kNoPreimage = ~std::uint64_t{0};

    IsoKind kind_;
    Alphabet alphabet_;
    std::size_t budget_;
    std::vector<std::uint64_t> forward_; // domain index -> image domain index
    std::vector<std::uint64_t> inverse_; // first preimage, or kNoPreimage
};

/// Greedy table construction. Inputs are taken in (length, rank) order;
/// members get the smallest free odd-weight image, non-members the smallest
/// free even-weight asymmetric image, and either falls back to the smallest
/// free symmetric image once its own class is used up.
PIso build_table_iso(const Language& lang, const Alphabet& alphabet, std::size_t budget);

struct BijectionReport {
    std::uint64_t checked = 0;
    /// Pairs of distinct inputs sharing an image.
    std::vector<std::pair<Word, Word>> injectivityViolations;
    /// Words of Sigma^{<=budget} that are nobody's image.
    std::vector<Word> surjectivityViolations;
    /// Inputs x with invert(apply(x)) != x.
    std::vector<Word> roundTripViolations;
    bool passed() const {
        return injectivityViolations.empty() && surjectivityViolations.empty() && roundTripViolations.empty();
    }
};

BijectionReport verify_bijection(const PIso& iso, std::size_t budget);

} // namespace phasebench
