#pragma once

#include "phasebench/alphabet.hpp"

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace phasebench {

enum class Membership { Out, In };

/// Result of Dec. `inImage` is false when the input was not produced by Pad;
/// `value` is then whatever prefix could be read and carries no meaning.
struct Decoded {
    Word value;
    bool inImage = false;
};

/// A decision problem: ground-truth membership plus its padding pair.
class Language {
public:
    using MembershipFn = std::function<Membership(const Word&)>;
    using PadFn = std::function<Word(const Word&, const Word&)>;
    using DecFn = std::function<Decoded(const Word&)>;

    Language(std::string name, std::size_t alphabetSize, MembershipFn membership, PadFn pad, DecFn dec);

    const std::string& name() const noexcept { return name_; }
    std::size_t alphabet_size() const noexcept { return alphabetSize_; }

    Membership decide(const Word& x) const { return membership_(x); }
    bool contains(const Word& x) const { return decide(x) == Membership::In; }
    Word pad(const Word& x, const Word& y) const { return pad_(x, y); }
    Decoded dec(const Word& w) const { return dec_(w); }

    /// Same language with a different Pad/Dec pair (used for negative controls).
    Language with_padding(PadFn pad, DecFn dec) const;

private:
    std::string name_;
    std::size_t alphabetSize_;
    MembershipFn membership_;
    PadFn pad_;
    DecFn dec_;
};

// Padding layout shared by the built-ins:
//
//     head(x) . doubled(y) . 1 2 2 1 . tail(x)
//
// doubled(y) repeats every symbol twice, so Dec reads equal pairs until the
// first unequal pair, which opens the marker. The marker has even weight and
// doubled(y) has even weight, so parity-based languages keep their answer.
namespace padding {

inline const Word kMarker{1, 2, 2, 1};

Word doubled(const Word& y);

Word layout(const Word& head, const Word& y, const Word& tail);

/// Reads doubled(y) starting at `from` and checks the marker follows.
/// On success `next` is the position just after the marker.
Decoded read_doubled(const Word& w, std::size_t from, std::size_t* next = nullptr);

} // namespace padding

/// { x : weight(x) odd }.
Language odd_weight_language(std::size_t alphabetSize);

/// { x : x non-empty and x[0] in firstSymbols }. `firstSymbols` must be a
/// proper non-empty subset of the alphabet.
Language first_symbol_language(std::string name, std::size_t alphabetSize, std::set<Symbol> firstSymbols);

/// { x : x[0] = 2 }.
Language first_is_two_language(std::size_t alphabetSize);

/// { x : x[0] > |Sigma|/2 }; half of every Sigma^n for any even alphabet.
Language first_upper_half_language(std::size_t alphabetSize);

/// All of Sigma*.
Language universal_language(std::size_t alphabetSize);

/// Explicit membership table on Sigma^{<=maxLen}. Longer words are members
/// exactly when they are padding images of members, which keeps the table
/// language paddable: Pad always emits words longer than maxLen.
Language table_language(std::size_t alphabetSize, std::size_t maxLen, std::set<Word> members);

struct PaddabilityReport {
    std::uint64_t checkedPairs = 0;
    std::vector<std::pair<Word, Word>> axiom1Violations; // membership changed
    std::vector<std::pair<Word, Word>> axiom2Violations; // Dec(Pad(x,y)) != y
    bool passed() const { return axiom1Violations.empty() && axiom2Violations.empty(); }
};

/// Exhaustive check of both padding axioms over all x, y with |x|,|y| <= maxLen.
PaddabilityReport check_paddability(const Language& lang, std::size_t maxLen);

} // namespace phasebench
