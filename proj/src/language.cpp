#include "phasebench/language.hpp"

#include <algorithm>
#include <memory>

namespace phasebench {

Language::Language(std::string name, std::size_t alphabetSize, MembershipFn membership, PadFn pad, DecFn dec)
    : name_(std::move(name)), alphabetSize_(alphabetSize), membership_(std::move(membership)),
      pad_(std::move(pad)), dec_(std::move(dec)) {
    require_even_alphabet(alphabetSize_);
    if (!membership_ || !pad_ || !dec_)
        throw ConfigError("language '" + name_ + "' is missing a membership, pad or dec function");
}

Language Language::with_padding(PadFn pad, DecFn dec) const {
    return Language(name_, alphabetSize_, membership_, std::move(pad), std::move(dec));
}

namespace padding {

Word doubled(const Word& y) {
    Word out;
    for (Symbol s : y) {
        out.push_back(s);
        out.push_back(s);
    }
    return out;
}

Word layout(const Word& head, const Word& y, const Word& tail) {
    Word out = head;
    out.append(doubled(y)).append(kMarker).append(tail);
    return out;
}

Decoded read_doubled(const Word& w, std::size_t from, std::size_t* next) {
    Decoded result;
    std::size_t pos = from;
    while (pos + 1 < w.size() && w[pos] == w[pos + 1]) {
        result.value.push_back(w[pos]);
        pos += 2;
    }
    if (pos + kMarker.size() > w.size())
        return result;
    for (std::size_t i = 0; i < kMarker.size(); ++i)
        if (w[pos + i] != kMarker[i])
            return result;
    result.inImage = true;
    if (next != nullptr)
        *next = pos + kMarker.size();
    return result;
}

} // namespace padding

namespace {

Decoded dec_after_head(const Word& w, std::size_t headLength) {
    if (w.size() < headLength)
        return {};
    return padding::read_doubled(w, headLength);
}

} // namespace

Language odd_weight_language(std::size_t alphabetSize) {
    return Language(
        "odd_weight", alphabetSize,
        [](const Word& x) { return weight(x) % 2 == 1 ? Membership::In : Membership::Out; },
        [](const Word& x, const Word& y) { return padding::layout(Word{}, y, x); },
        [](const Word& w) { return dec_after_head(w, 0); });
}

Language first_symbol_language(std::string name, std::size_t alphabetSize, std::set<Symbol> firstSymbols) {
    require_even_alphabet(alphabetSize);
    if (firstSymbols.empty() || firstSymbols.size() >= alphabetSize)
        throw ConfigError("first-symbol language needs a proper non-empty symbol subset");
    if (*firstSymbols.begin() < 1 || *firstSymbols.rbegin() > alphabetSize)
        throw ConfigError("first-symbol language refers to symbols outside the alphabet");
    Symbol outside = 1;
    while (firstSymbols.count(outside) != 0)
        ++outside;
    const Symbol inside = *firstSymbols.begin();
    auto members = std::make_shared<const std::set<Symbol>>(std::move(firstSymbols));
    auto decide = [members](const Word& x) {
        return !x.empty() && members->count(x[0]) != 0 ? Membership::In : Membership::Out;
    };
    return Language(
        std::move(name), alphabetSize, decide,
        [decide, inside, outside](const Word& x, const Word& y) {
            const Word head{decide(x) == Membership::In ? inside : outside};
            return padding::layout(head, y, x);
        },
        [](const Word& w) { return dec_after_head(w, 1); });
}

Language first_is_two_language(std::size_t alphabetSize) {
    return first_symbol_language("first_is_two", alphabetSize, {2});
}

Language first_upper_half_language(std::size_t alphabetSize) {
    require_even_alphabet(alphabetSize);
    std::set<Symbol> upper;
    for (std::size_t s = alphabetSize / 2 + 1; s <= alphabetSize; ++s)
        upper.insert(static_cast<Symbol>(s));
    return first_symbol_language("first_upper_half", alphabetSize, std::move(upper));
}

Language universal_language(std::size_t alphabetSize) {
    return Language(
        "universal", alphabetSize, [](const Word&) { return Membership::In; },
        [](const Word& x, const Word& y) { return padding::layout(Word{}, y, x); },
        [](const Word& w) { return dec_after_head(w, 0); });
}

namespace {

// Long words of table languages: doubled(y) M doubled(1^m) M x.
struct TableLanguage {
    std::size_t maxLen;
    std::set<Word> members;

    Membership decide(const Word& w) const {
        if (w.size() <= maxLen)
            return members.count(w) != 0 ? Membership::In : Membership::Out;
        std::size_t afterY = 0;
        if (!padding::read_doubled(w, 0, &afterY).inImage)
            return Membership::Out;
        std::size_t afterFiller = 0;
        const Decoded filler = padding::read_doubled(w, afterY, &afterFiller);
        if (!filler.inImage)
            return Membership::Out;
        if (std::any_of(filler.value.begin(), filler.value.end(), [](Symbol s) { return s != 1; }))
            return Membership::Out;
        return decide(w.suffix_from(afterFiller));
    }

    Word pad(const Word& x, const Word& y) const {
        const std::size_t fixed = 2 * y.size() + 2 * padding::kMarker.size() + x.size();
        std::size_t fill = 0;
        if (fixed <= maxLen)
            fill = (maxLen + 1 - fixed + 1) / 2;
        const Word filler(std::vector<Symbol>(fill, Symbol{1}));
        Word tail = padding::doubled(filler);
        tail.append(padding::kMarker).append(x);
        return padding::layout(Word{}, y, tail);
    }
};

} // namespace

Language table_language(std::size_t alphabetSize, std::size_t maxLen, std::set<Word> members) {
    require_even_alphabet(alphabetSize);
    for (const Word& w : members) {
        if (w.size() > maxLen)
            throw ConfigError("table member longer than maxLen");
        if (std::any_of(w.begin(), w.end(), [&](Symbol s) { return s < 1 || s > alphabetSize; }))
            throw ConfigError("table member uses a symbol outside the alphabet");
    }
    auto table = std::make_shared<const TableLanguage>(TableLanguage{maxLen, std::move(members)});
    return Language(
        "table", alphabetSize, [table](const Word& w) { return table->decide(w); },
        [table](const Word& x, const Word& y) { return table->pad(x, y); },
        [](const Word& w) { return dec_after_head(w, 0); });
}

PaddabilityReport check_paddability(const Language& lang, std::size_t maxLen) {
    PaddabilityReport report;
    std::vector<Word> words;
    for (std::size_t n = 0; n <= maxLen; ++n)
        for (const Word& w : WordRange(lang.alphabet_size(), n))
            words.push_back(w);
    for (const Word& x : words) {
        const Membership expected = lang.decide(x);
        for (const Word& y : words) {
            const Word padded = lang.pad(x, y);
            if (lang.decide(padded) != expected)
                report.axiom1Violations.emplace_back(x, y);
            const Decoded back = lang.dec(padded);
            if (!back.inImage || back.value != y)
                report.axiom2Violations.emplace_back(x, y);
            ++report.checkedPairs;
        }
    }
    return report;
}

} // namespace phasebench
