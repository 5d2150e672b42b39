#include "phasebench/isomorphism.hpp"
#include "phasebench/roughp.hpp"

#include "../oracles.hpp"

#include <doctest.h>

#include <random>

using namespace phasebench;

TEST_CASE("slot budgets partition each length class") {
    for (unsigned k : {2u, 4u, 6u})
        for (unsigned n = 0; n <= 8; ++n) {
            const SlotBudget s = slot_budget(k, n);
            CHECK(s.acceptCapacity + s.rejectCapacity + s.bottomCapacity == big_pow(k, n));
            CHECK(s.rejectCapacity >= 0);
            if (n >= 1) {
                const oracle::Classes brute = oracle::classes(k, std::min(n, k == 2 ? 8u : 4u));
                if (n <= (k == 2 ? 8u : 4u)) {
                    CHECK(s.acceptCapacity == brute.accept);
                    CHECK(s.rejectCapacity == brute.reject);
                    CHECK(s.bottomCapacity == brute.bottom);
                }
            }
            if (n % 2 == 0 && n > 0) {
                // bottom share |Sigma|^{-n/2} <= 2^{-n/2}
                const Rational share(s.bottomCapacity, big_pow(k, n));
                CHECK(share == Rational(1) / Rational(big_pow(k, n / 2)));
                CHECK(share * share * Rational(big_pow(2, n)) <= 1);
            }
        }
}

TEST_CASE("identity isomorphism") {
    const PIso id = PIso::identity(Alphabet(2), 6);
    CHECK(id.apply(Word{1, 2}) == Word{1, 2});
    CHECK(id.output_size(Word{1, 2}) == 2);
    CHECK(id.output_size(Word{}) == 0);
    CHECK(id.invert(Word{2, 2, 1}) == Word{2, 2, 1});
    CHECK(id.apply(Word(std::vector<Symbol>(20, 1))).size() == 20); // not budget-bound
    CHECK(verify_bijection(id, 6).passed());
}

TEST_CASE("table isomorphism for first_is_two round-trips and is errorless") {
    const Alphabet a(2);
    const Language lang = first_is_two_language(2);
    const PIso iso = build_table_iso(lang, a, 6);
    CHECK(iso.kind() == IsoKind::Table);
    for (unsigned n = 0; n <= 6; ++n)
        for (const Word& x : a.words(n))
            CHECK(iso.invert(iso.apply(x)) == x);
    CHECK(verify_bijection(iso, 6).passed());
    CHECK(verify_errorless(lang, iso, 6).passed());
    CHECK_THROWS_AS(iso.apply(Word(std::vector<Symbol>(7, 1))), BudgetExceeded);
}

TEST_CASE("table isomorphism for odd_weight is valid") {
    const Alphabet a(2);
    const Language lang = odd_weight_language(2);
    const PIso iso = build_table_iso(lang, a, 8);
    CHECK(verify_bijection(iso, 8).passed());
    CHECK(verify_errorless(lang, iso, 8).passed());
}

TEST_CASE("all-member language is infeasible at the first crowded length") {
    const Alphabet a(2);
    try {
        (void)build_table_iso(universal_language(2), a, 2);
        FAIL("expected infeasibility");
    } catch (const InfeasibleIso& e) {
        CHECK(e.length_class() == 1);
    }
    CHECK_THROWS_AS(build_table_iso(first_is_two_language(4), Alphabet(4), 3), InfeasibleIso);
    CHECK_NOTHROW(build_table_iso(first_upper_half_language(4), Alphabet(4), 4));
}

TEST_CASE("short inputs may borrow longer images") {
    // Every word of length <= 1 is a member: length class 1 alone has too few
    // odd or symmetric images, the whole domain does not.
    const Language lang =
        table_language(2, 3, {Word{}, Word{1}, Word{2}, Word{1, 1, 1}, Word{1, 1, 2}, Word{1, 2, 1}, Word{1, 2, 2}});
    const PIso iso = build_table_iso(lang, Alphabet(2), 3);
    CHECK(verify_bijection(iso, 3).passed());
    CHECK(verify_errorless(lang, iso, 3).passed());
}

TEST_CASE("duplicated image is reported as an injectivity violation") {
    const Alphabet a(2);
    std::vector<std::pair<Word, Word>> pairs;
    for (unsigned n = 0; n <= 2; ++n)
        for (const Word& x : a.words(n))
            pairs.emplace_back(x, x);
    pairs[2].second = pairs[1].second; // "2" now maps to "1" as well
    const PIso broken = PIso::from_pairs(a, 2, pairs);
    const BijectionReport report = verify_bijection(broken, 2);
    CHECK_FALSE(report.passed());
    REQUIRE(report.injectivityViolations.size() == 1);
    CHECK(report.injectivityViolations[0].first == Word{1});
    CHECK(report.injectivityViolations[0].second == Word{2});
    CHECK(report.surjectivityViolations == std::vector<Word>{Word{2}});
    CHECK_THROWS_AS(broken.invert(Word{2}), std::domain_error);
}

TEST_CASE("from_pairs rejects incomplete or out-of-domain tables") {
    const Alphabet a(2);
    CHECK_THROWS_AS(PIso::from_pairs(a, 1, {{Word{}, Word{}}, {Word{1}, Word{1}}}), ConfigError);
    CHECK_THROWS_AS(PIso::from_pairs(a, 1, {{Word{}, Word{}}, {Word{1}, Word{1, 1}}, {Word{2}, Word{2}}}),
                    ConfigError);
}

TEST_CASE("random feasible table languages give errorless bijections") {
    std::mt19937 rng(2718);
    int built = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned budget = 2 + rng() % 4;
        std::set<Word> members;
        for (unsigned n = 0; n <= budget; ++n)
            for (const auto& d : oracle::all_words(2, n))
                if (rng() % 2 == 0)
                    members.insert(oracle::to_word(d));
        const Language lang = table_language(2, budget, members);
        try {
            const PIso iso = build_table_iso(lang, Alphabet(2), budget);
            CHECK(verify_bijection(iso, budget).passed());
            CHECK(verify_errorless(lang, iso, budget).passed());
            ++built;
        } catch (const InfeasibleIso&) {
            // Capacity oracle: members or non-members really exceed their room.
            std::uint64_t odd = 0;
            std::uint64_t evenAsym = 0;
            std::uint64_t sym = 0;
            for (unsigned n = 0; n <= budget; ++n)
                for (const auto& d : oracle::all_words(2, n))
                    (oracle::weight(d) % 2 == 1 ? odd : oracle::symmetric(d) ? sym : evenAsym) += 1;
            const std::uint64_t m = members.size();
            const std::uint64_t nonMembers = odd + evenAsym + sym - m;
            CHECK((m > odd + sym || nonMembers > evenAsym + sym));
        }
    }
    CHECK(built > 0);
}
