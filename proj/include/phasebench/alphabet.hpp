#pragma once

#include "phasebench/exact.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phasebench {

/// Bad user input: malformed config, odd alphabet, unknown builtin, ...
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 1-based symbol index; the weight function sums these directly.
using Symbol = std::uint16_t;

/// A word as a sequence of symbol indices. Carries no alphabet; validity
/// against one is checked by Alphabet::contains.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> indices) : indices_(std::move(indices)) {}
    Word(std::initializer_list<Symbol> indices) : indices_(indices) {}

    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    Symbol operator[](std::size_t i) const { return indices_[i]; }
    std::span<const Symbol> indices() const noexcept { return indices_; }

    auto begin() const noexcept { return indices_.begin(); }
    auto end() const noexcept { return indices_.end(); }

    void push_back(Symbol s) { indices_.push_back(s); }
    Word& append(const Word& tail);

    /// First/last k symbols (k clamped to size()).
    Word prefix(std::size_t k) const;
    Word suffix_from(std::size_t pos) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Symbol> indices_;
};

Word concat(const Word& x, const Word& y);

/// Sum of symbol indices. Additive under concatenation.
std::uint64_t weight(const Word& w);

/// True iff w = z z for some z. The empty word counts (z empty).
bool is_symmetric(const Word& w);

/// Numbers of even- and odd-weight words in Sigma^n.
struct ParityCounts {
    std::size_t n = 0;
    BigInt evenCount;
    BigInt oddCount;
};

/// Via #E(n+1) = #O(n+1) = (|Sigma|/2)(#E(n) + #O(n)), #E(1) = #O(1) = |Sigma|/2.
ParityCounts parity_counts(std::size_t alphabetSize, std::size_t n);

/// Throws ConfigError unless size is even and at least two.
void require_even_alphabet(std::size_t size);

/// Lexicographic enumeration of Sigma^n as an input range.
class WordRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Word;
        using difference_type = std::ptrdiff_t;
        using pointer = const Word*;
        using reference = const Word&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& l, const iterator& r) {
            return l.done_ == r.done_ && (l.done_ || l.current_ == r.current_);
        }

    private:
        friend class WordRange;
        iterator(std::size_t alphabetSize, Word start, bool done)
            : alphabetSize_(alphabetSize), current_(std::move(start)), done_(done) {}

        std::size_t alphabetSize_ = 0;
        Word current_;
        bool done_ = true;
    };

    WordRange(std::size_t alphabetSize, std::size_t length)
        : alphabetSize_(alphabetSize), length_(length) {}

    iterator begin() const;
    iterator end() const { return iterator{}; }

private:
    std::size_t alphabetSize_;
    std::size_t length_;
};

/// An even-sized alphabet. Internally symbols are 1..size(); labels are
/// numbered in lexicographic order.
class Alphabet {
public:
    /// Labels "1".."size".
    explicit Alphabet(std::size_t size);
    explicit Alphabet(std::vector<std::string> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(Symbol s) const;
    Symbol index_of(std::string_view label) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    bool contains(const Word& w) const noexcept;

    /// Digit string ("1212") for alphabets up to 9 symbols, dot-separated
    /// indices ("10.3.12") above that.
    std::string format(const Word& w) const;
    Word parse(std::string_view text) const;

    /// Labels joined, for human-facing output.
    std::string spell(const Word& w) const;

    /// |Sigma|^n, checked.
    std::uint64_t word_count(std::size_t n) const;
    /// |Sigma^{<=budget}|, checked.
    std::uint64_t domain_size(std::size_t budget) const;

    /// Lexicographic position of w in Sigma^{|w|}.
    std::uint64_t rank(const Word& w) const;
    /// Inverse of rank; throws std::out_of_range for r >= |Sigma|^n.
    Word unrank(std::size_t n, std::uint64_t r) const;

    /// Position in Sigma^{<=inf} ordered by (length, rank).
    std::uint64_t domain_index(const Word& w) const;
    Word word_at(std::uint64_t index) const;

    WordRange words(std::size_t n) const { return WordRange(size(), n); }

private:
    std::vector<std::string> labels_;
};

} // namespace phasebench
