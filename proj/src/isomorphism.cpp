#include "phasebench/isomorphism.hpp"

#include <map>
#include <string>

namespace phasebench {

SlotBudget slot_budget(std::size_t alphabetSize, std::size_t n) {
    require_even_alphabet(alphabetSize);
    SlotBudget slots;
    slots.n = n;
    const BigInt total = big_pow(alphabetSize, n);
    if (n == 0) {
        // Only the empty word, which is symmetric.
        slots.bottomCapacity = 1;
        return slots;
    }
    slots.acceptCapacity = total / 2;
    slots.bottomCapacity = n % 2 == 0 ? big_pow(alphabetSize, n / 2) : BigInt(0);
    slots.rejectCapacity = total / 2 - slots.bottomCapacity;
    return slots;
}

PIso::PIso(IsoKind kind, Alphabet alphabet, std::size_t budget)
    : kind_(kind), alphabet_(std::move(alphabet)), budget_(budget) {}

PIso PIso::identity(const Alphabet& alphabet, std::size_t budget) {
    return PIso(IsoKind::Identity, alphabet, budget);
}

PIso PIso::from_pairs(const Alphabet& alphabet, std::size_t budget,
                      const std::vector<std::pair<Word, Word>>& pairs) {
    PIso iso(IsoKind::Table, alphabet, budget);
    const std::uint64_t domain = alphabet.domain_size(budget);
    iso.forward_.assign(domain, kNoPreimage);
    iso.inverse_.assign(domain, kNoPreimage);
    for (const auto& [input, image] : pairs) {
        for (const Word* w : {&input, &image}) {
            if (!alphabet.contains(*w) || w->size() > budget)
                throw ConfigError("iso table word '" + alphabet.format(*w) + "' outside Sigma^{<=" +
                                  std::to_string(budget) + "}");
        }
        const std::uint64_t from = alphabet.domain_index(input);
        if (iso.forward_[from] != kNoPreimage)
            throw ConfigError("iso table lists input '" + alphabet.format(input) + "' twice");
        const std::uint64_t to = alphabet.domain_index(image);
        iso.forward_[from] = to;
        if (iso.inverse_[to] == kNoPreimage)
            iso.inverse_[to] = from;
    }
    for (std::uint64_t i = 0; i < domain; ++i)
        if (iso.forward_[i] == kNoPreimage)
            throw ConfigError("iso table has no image for input '" + alphabet.format(alphabet.word_at(i)) + "'");
    return iso;
}

void PIso::require_in_budget(const Word& w) const {
    if (kind_ == IsoKind::Table && w.size() > budget_)
        throw BudgetExceeded("word of length " + std::to_string(w.size()) + " exceeds iso budget " +
                             std::to_string(budget_));
    if (!alphabet_.contains(w))
        throw ConfigError("word uses symbols outside the alphabet");
}

Word PIso::apply(const Word& x) const {
    require_in_budget(x);
    if (kind_ == IsoKind::Identity)
        return x;
    return alphabet_.word_at(forward_[alphabet_.domain_index(x)]);
}

Word PIso::invert(const Word& w) const {
    require_in_budget(w);
    if (kind_ == IsoKind::Identity)
        return w;
    const std::uint64_t from = inverse_[alphabet_.domain_index(w)];
    if (from == kNoPreimage)
        throw std::domain_error("word '" + alphabet_.format(w) + "' has no preimage");
    return alphabet_.word_at(from);
}

std::vector<std::pair<Word, Word>> PIso::pairs() const {
    std::vector<std::pair<Word, Word>> out;
    const std::uint64_t domain = alphabet_.domain_size(budget_);
    out.reserve(domain);
    for (std::uint64_t i = 0; i < domain; ++i) {
        const Word x = alphabet_.word_at(i);
        out.emplace_back(x, apply(x));
    }
    return out;
}

namespace {

enum class ImageClass { Odd, EvenAsymmetric, Symmetric };

ImageClass image_class(const Word& w) {
    if (weight(w) % 2 == 1)
        return ImageClass::Odd;
    return is_symmetric(w) ? ImageClass::Symmetric : ImageClass::EvenAsymmetric;
}

// Free images of one class, handed out smallest first.
struct Pool {
    std::vector<std::uint64_t> slots;
    std::size_t next = 0;
    bool empty() const { return next == slots.size(); }
    std::uint64_t take() { return slots[next++]; }
};

// Feasibility is global: short inputs may borrow long images. When the whole
// domain does not fit, report the first length class whose cumulative
// count already overflows.
void check_capacity(const Language& lang, const Alphabet& alphabet, std::size_t budget) {
    struct Prefix {
        BigInt members, nonMembers, memberRoom, nonMemberRoom;
    };
    std::vector<Prefix> prefix;
    Prefix running{0, 0, 0, 0};
    for (std::size_t len = 0; len <= budget; ++len) {
        const SlotBudget slots = slot_budget(alphabet.size(), len);
        running.memberRoom += slots.acceptCapacity + slots.bottomCapacity;
        running.nonMemberRoom += slots.rejectCapacity + slots.bottomCapacity;
        for (const Word& x : alphabet.words(len))
            (lang.contains(x) ? running.members : running.nonMembers) += 1;
        prefix.push_back(running);
    }
    const bool membersOverflow = running.members > running.memberRoom;
    const bool nonMembersOverflow = running.nonMembers > running.nonMemberRoom;
    if (!membersOverflow && !nonMembersOverflow)
        return;
    for (std::size_t len = 0; len <= budget; ++len) {
        const Prefix& p = prefix[len];
        if (membersOverflow && p.members > p.memberRoom)
            throw InfeasibleIso("language has " + p.members.str() + " members in Sigma^{<=" + std::to_string(len) +
                                    "} but only " + p.memberRoom.str() + " odd-weight or symmetric images",
                                len);
        if (nonMembersOverflow && p.nonMembers > p.nonMemberRoom)
            throw InfeasibleIso("language has " + p.nonMembers.str() + " non-members in Sigma^{<=" +
                                    std::to_string(len) + "} but only " + p.nonMemberRoom.str() +
                                    " even-weight or symmetric images",
                                len);
    }
}

} // namespace

PIso build_table_iso(const Language& lang, const Alphabet& alphabet, std::size_t budget) {
    if (budget < 1)
        throw ConfigError("table iso budget must be at least 1");
    if (lang.alphabet_size() != alphabet.size())
        throw ConfigError("language and alphabet sizes differ");

    // Fails on a length class before the global greedy could run dry.
    check_capacity(lang, alphabet, budget);

    const std::uint64_t domain = alphabet.domain_size(budget);
    Pool odd;
    Pool evenAsym;
    Pool symmetric;
    std::vector<Word> words;
    words.reserve(domain);
    for (std::uint64_t i = 0; i < domain; ++i) {
        words.push_back(alphabet.word_at(i));
        switch (image_class(words.back())) {
        case ImageClass::Odd: odd.slots.push_back(i); break;
        case ImageClass::EvenAsymmetric: evenAsym.slots.push_back(i); break;
        case ImageClass::Symmetric: symmetric.slots.push_back(i); break;
        }
    }

    std::vector<std::pair<Word, Word>> pairs;
    pairs.reserve(domain);
    for (std::uint64_t i = 0; i < domain; ++i) {
        Pool& own = lang.contains(words[i]) ? odd : evenAsym;
        Pool& pool = own.empty() ? symmetric : own;
        if (pool.empty())
            throw InfeasibleIso("ran out of images at input '" + alphabet.format(words[i]) + "'", words[i].size());
        pairs.emplace_back(words[i], words[pool.take()]);
    }
    return PIso::from_pairs(alphabet, budget, pairs);
}

BijectionReport verify_bijection(const PIso& iso, std::size_t budget) {
    BijectionReport report;
    const Alphabet& alphabet = iso.alphabet();
    std::map<Word, Word> firstPreimage;
    for (std::size_t len = 0; len <= budget; ++len) {
        for (const Word& x : alphabet.words(len)) {
            ++report.checked;
            const Word image = iso.apply(x);
            const auto [it, fresh] = firstPreimage.emplace(image, x);
            if (!fresh)
                report.injectivityViolations.emplace_back(it->second, x);
            bool roundTrips = false;
            try {
                roundTrips = iso.invert(image) == x;
            } catch (const std::domain_error&) {
            }
            if (!roundTrips)
                report.roundTripViolations.push_back(x);
        }
    }
    for (std::size_t len = 0; len <= budget; ++len)
        for (const Word& w : alphabet.words(len))
            if (firstPreimage.count(w) == 0)
                report.surjectivityViolations.push_back(w);
    return report;
}

} // namespace phasebench
