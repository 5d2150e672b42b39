#include "phasebench/alphabet.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace phasebench {

Word& Word::append(const Word& tail) {
    indices_.insert(indices_.end(), tail.indices_.begin(), tail.indices_.end());
    return *this;
}

Word Word::prefix(std::size_t k) const {
    k = std::min(k, indices_.size());
    return Word(std::vector<Symbol>(indices_.begin(), indices_.begin() + static_cast<std::ptrdiff_t>(k)));
}

Word Word::suffix_from(std::size_t pos) const {
    pos = std::min(pos, indices_.size());
    return Word(std::vector<Symbol>(indices_.begin() + static_cast<std::ptrdiff_t>(pos), indices_.end()));
}

Word concat(const Word& x, const Word& y) {
    Word out = x;
    out.append(y);
    return out;
}

std::uint64_t weight(const Word& w) {
    return std::accumulate(w.begin(), w.end(), std::uint64_t{0});
}

bool is_symmetric(const Word& w) {
    if (w.size() % 2 != 0)
        return false;
    const auto half = static_cast<std::ptrdiff_t>(w.size() / 2);
    return std::equal(w.begin(), w.begin() + half, w.begin() + half);
}

void require_even_alphabet(std::size_t size) {
    if (size < 2 || size % 2 != 0)
        throw ConfigError("alphabet size must be even and at least 2, got " + std::to_string(size));
}

ParityCounts parity_counts(std::size_t alphabetSize, std::size_t n) {
    require_even_alphabet(alphabetSize);
    if (n < 1)
        throw ConfigError("parity_counts needs n >= 1");
    const BigInt half = alphabetSize / 2;
    ParityCounts pc{1, half, half};
    while (pc.n < n) {
        const BigInt next = half * (pc.evenCount + pc.oddCount);
        pc.evenCount = next;
        pc.oddCount = next;
        ++pc.n;
    }
    return pc;
}

// --- WordRange --------------------------------------------------------------

WordRange::iterator WordRange::begin() const {
    if (alphabetSize_ == 0 && length_ > 0)
        return end();
    return iterator(alphabetSize_, Word(std::vector<Symbol>(length_, Symbol{1})), false);
}

WordRange::iterator& WordRange::iterator::operator++() {
    std::vector<Symbol> digits(current_.begin(), current_.end());
    std::size_t pos = digits.size();
    while (pos > 0) {
        --pos;
        if (digits[pos] < alphabetSize_) {
            ++digits[pos];
            current_ = Word(std::move(digits));
            return *this;
        }
        digits[pos] = 1;
    }
    done_ = true;
    current_ = Word{};
    return *this;
}

// --- Alphabet ---------------------------------------------------------------

Alphabet::Alphabet(std::size_t size) {
    require_even_alphabet(size);
    labels_.reserve(size);
    for (std::size_t i = 1; i <= size; ++i)
        labels_.push_back(std::to_string(i));
}

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    require_even_alphabet(labels_.size());
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw ConfigError("alphabet symbols must be distinct");
}

const std::string& Alphabet::label(Symbol s) const {
    if (s < 1 || s > size())
        throw std::out_of_range("symbol index " + std::to_string(s) + " outside alphabet");
    return labels_[s - 1];
}

Symbol Alphabet::index_of(std::string_view label) const {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw ConfigError("unknown symbol '" + std::string(label) + "'");
    return static_cast<Symbol>(it - labels_.begin() + 1);
}

bool Alphabet::contains(const Word& w) const noexcept {
    return std::all_of(w.begin(), w.end(), [&](Symbol s) { return s >= 1 && s <= size(); });
}

std::string Alphabet::format(const Word& w) const {
    std::string out;
    const bool digits = size() <= 9;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i > 0)
            out.push_back('.');
        out += std::to_string(w[i]);
    }
    return out;
}

Word Alphabet::parse(std::string_view text) const {
    std::vector<Symbol> out;
    auto push = [&](unsigned long v) {
        if (v < 1 || v > size())
            throw ConfigError("symbol " + std::to_string(v) + " outside 1.." + std::to_string(size()) +
                              " in word '" + std::string(text) + "'");
        out.push_back(static_cast<Symbol>(v));
    };
    if (size() <= 9) {
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw ConfigError("bad character in word '" + std::string(text) + "'");
            push(static_cast<unsigned long>(ch - '0'));
        }
    } else if (!text.empty()) {
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t dot = std::min(text.find('.', start), text.size());
            const std::string_view part = text.substr(start, dot - start);
            if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos)
                throw ConfigError("bad symbol in word '" + std::string(text) + "'");
            push(std::stoul(std::string(part)));
            start = dot + 1;
        }
    }
    return Word(std::move(out));
}

std::string Alphabet::spell(const Word& w) const {
    const bool single = std::all_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single && i > 0)
            out.push_back(' ');
        out += label(w[i]);
    }
    return out;
}

std::uint64_t Alphabet::word_count(std::size_t n) const { return checked_pow(size(), n); }

std::uint64_t Alphabet::domain_size(std::size_t budget) const {
    std::uint64_t total = 0;
    for (std::size_t n = 0; n <= budget; ++n)
        total = checked_add(total, word_count(n));
    return total;
}

std::uint64_t Alphabet::rank(const Word& w) const {
    std::uint64_t r = 0;
    for (Symbol s : w) {
        if (s < 1 || s > size())
            throw std::out_of_range("symbol outside alphabet in rank");
        r = checked_add(checked_mul(r, size()), s - 1u);
    }
    return r;
}

Word Alphabet::unrank(std::size_t n, std::uint64_t r) const {
    if (r >= word_count(n))
        throw std::out_of_range("rank " + std::to_string(r) + " outside Sigma^" + std::to_string(n));
    std::vector<Symbol> digits(n);
    for (std::size_t i = n; i > 0; --i) {
        digits[i - 1] = static_cast<Symbol>(r % size() + 1);
        r /= size();
    }
    return Word(std::move(digits));
}

std::uint64_t Alphabet::domain_index(const Word& w) const {
    return checked_add(domain_size(w.size()) - word_count(w.size()), rank(w));
}

Word Alphabet::word_at(std::uint64_t index) const {
    std::size_t n = 0;
    for (;;) {
        const std::uint64_t count = word_count(n);
        if (index < count)
            return unrank(n, index);
        index -= count;
        ++n;
    }
}

} // namespace phasebench
