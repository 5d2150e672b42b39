#include "phasebench/config.hpp"
#include "phasebench/density.hpp"
#include "phasebench/report.hpp"
#include "phasebench/transition.hpp"

#include "../oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace phasebench;

namespace {

ScanReport odd_scan(std::uint64_t budget, ScanOptions options = {}) {
    return run_scan(odd_weight_language(2), PIso::identity(Alphabet(2), budget), budget, options);
}

const SliceStats& find_slice(const ScanReport& scan, int sign, std::uint64_t n) {
    for (const SliceStats& s : scan.slices)
        if (s.sign == sign && s.n == n)
            return s;
    FAIL("slice not realized");
    return scan.slices.front();
}

SliceStats synthetic(int sign, std::uint64_t n, std::uint64_t accepted, std::uint64_t size) {
    SliceStats s;
    s.sign = sign;
    s.n = n;
    s.acceptedCount = accepted;
    s.sliceSize = size;
    s.ballSize = 2 * size;
    return s;
}

std::string csv_of(const ScanReport& scan) {
    std::ostringstream out;
    write_scan_csv(out, scan);
    return out.str();
}

Language even_weight_language() {
    const Language odd = odd_weight_language(2);
    return Language(
        "even_weight", 2,
        [](const Word& x) { return weight(x) % 2 == 0 ? Membership::In : Membership::Out; },
        [odd](const Word& x, const Word& y) { return odd.pad(x, y); }, [odd](const Word& w) { return odd.dec(w); });
}

} // namespace

TEST_CASE("odd-weight scan matches brute-force slice counts") {
    const ScanReport scan = odd_scan(10);
    CHECK(scan.skippedUndefined == 1);
    CHECK(scan.slices.size() == 20);
    CHECK(scan.gaps.empty());
    for (unsigned n = 1; n <= 10; ++n) {
        const auto brute =
            oracle::identity_slices(2, n, [](const oracle::Digits& d) { return oracle::weight(d) % 2 == 1; });
        for (int p : {-1, +1}) {
            const SliceStats& s = find_slice(scan, p, n);
            CHECK(s.sliceSize == brute.at(p).first);
            CHECK(s.acceptedCount == brute.at(p).second);
            CHECK(s.wrongDecisions == 0);
        }
    }
    CHECK(find_slice(scan, +1, 4).accepting_fraction_exact() == "8/10");
    CHECK(find_slice(scan, -1, 4).acceptedCount == 0);
    CHECK(find_slice(scan, +1, 2).accepting_fraction_exact() == "2/3");
    CHECK(scan.errorless());
    CHECK(scan.passed());
}

TEST_CASE("acceptance bounds hold on odd weight and on a table iso") {
    const ScanReport odd = odd_scan(10);
    CHECK(verify_acc_bounds(odd).empty());

    const unsigned budget = 10;
    const Language lang = first_is_two_language(2);
    const PIso table = build_table_iso(lang, Alphabet(2), budget);
    const ScanReport scan = run_scan(lang, table, budget, {});
    CHECK(verify_acc_bounds(scan).empty());
    CHECK(scan.errorless());
}

TEST_CASE("acceptance bounds flag the complement language") {
    const ScanReport scan = run_scan(even_weight_language(), PIso::identity(Alphabet(2), 10), 10, {});
    const std::vector<BoundViolation> violations = verify_acc_bounds(scan);
    REQUIRE_FALSE(violations.empty());
    CHECK_FALSE(scan.errorless());
    CHECK_FALSE(scan.passed());
    // Envelopes 4 c^n saturate through n = 4; the first offender is n = 5.
    CHECK(violations.front().n == 5);
}

TEST_CASE("bounds flag a synthetic slice on each side") {
    ScanReport scan = odd_scan(10);
    for (SliceStats& s : scan.slices)
        if (s.n == 8 && s.sign == +1)
            s.acceptedCount = s.sliceSize / 2;
    analyze(scan);
    CHECK_FALSE(scan.requirement1.passed);
    CHECK(scan.requirement2.passed);
    REQUIRE(scan.requirement1.violations.size() == 1);
    CHECK(scan.requirement1.violations.front().n == 8);
}

TEST_CASE("an envelope that never drops below one fails both sides") {
    ScanOptions options;
    options.bounds.poly = {Rational(100)};
    const ScanReport scan = odd_scan(10, options);
    CHECK_FALSE(scan.requirement1.informativeAtEdge);
    CHECK_FALSE(scan.requirement1.passed);
    CHECK_FALSE(scan.requirement2.passed);
    CHECK(scan.bounds_hold());
}

TEST_CASE("a growing envelope breaks monotonicity") {
    ScanOptions options;
    options.bounds.poly = {Rational(0), Rational(0), Rational(0), Rational(1, 64)};
    const ScanReport scan = odd_scan(10, options);
    CHECK_FALSE(scan.requirement1.envelopeMonotone);
    CHECK_FALSE(scan.requirement2.envelopeMonotone);
}

TEST_CASE("threshold of the odd-weight scan") {
    const ScanReport scan = odd_scan(10);
    REQUIRE(scan.threshold.value.has_value());
    CHECK(*scan.threshold.value == ParamValue{-1, 1});
    CHECK(scan.threshold.value->tau() == doctest::Approx(-1.0));
    CHECK(threshold_biconditional_holds(scan.slices, *scan.threshold.value, Orientation::Canonical));
    // Any other realized value breaks the biconditional.
    for (const SliceStats& s : scan.slices)
        if (s.param() != ParamValue{-1, 1})
            CHECK_FALSE(threshold_biconditional_holds(scan.slices, s.param(), Orientation::Canonical));
}

TEST_CASE("a positive slice at or below one half leaves no threshold") {
    ScanReport scan = odd_scan(10);
    for (SliceStats& s : scan.slices)
        if (s.n == 9 && s.sign == +1)
            s.acceptedCount = s.sliceSize * 2 / 5; // A = 0.4
    analyze(scan);
    CHECK_FALSE(scan.threshold.value.has_value());
    CHECK(scan.threshold.diagnostic.find("n=9, sign=1") != std::string::npos);
    CHECK_FALSE(scan.passed());
}

TEST_CASE("threshold on synthetic slices") {
    SUBCASE("clean step") {
        const std::vector<SliceStats> slices{synthetic(-1, 1, 0, 4), synthetic(+1, 1, 1, 4),
                                             synthetic(+1, 4, 3, 4)};
        const ThresholdResult t = find_threshold(slices, Orientation::Canonical);
        REQUIRE(t.value);
        CHECK(*t.value == ParamValue{+1, 1});
    }
    SUBCASE("all above one half") {
        const std::vector<SliceStats> slices{synthetic(-1, 1, 3, 4), synthetic(+1, 1, 3, 4)};
        const ThresholdResult t = find_threshold(slices, Orientation::Canonical);
        CHECK_FALSE(t.value);
        CHECK_FALSE(t.diagnostic.empty());
    }
    SUBCASE("inverted reads the other way") {
        const std::vector<SliceStats> slices{synthetic(-1, 4, 3, 4), synthetic(-1, 1, 3, 4),
                                             synthetic(+1, 1, 0, 4)};
        const ThresholdResult t = find_threshold(slices, Orientation::Inverted);
        REQUIRE(t.value);
        CHECK(*t.value == ParamValue{+1, 1});
        CHECK_FALSE(find_threshold(slices, Orientation::Canonical).value);
    }
}

TEST_CASE("threshold biconditional on random monotone step profiles") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<SliceStats> slices;
        std::vector<ParamValue> values;
        for (std::uint64_t n = 1; n <= 8; ++n) {
            values.push_back({-1, n});
            values.push_back({+1, n});
        }
        std::sort(values.begin(), values.end());
        std::uniform_int_distribution<std::size_t> cut(0, values.size());
        const std::size_t step = cut(rng);
        std::uniform_int_distribution<std::uint64_t> below(0, 5);
        std::uniform_int_distribution<std::uint64_t> above(6, 10);
        for (std::size_t i = 0; i < values.size(); ++i)
            slices.push_back(synthetic(values[i].sign, values[i].n, i < step ? below(rng) : above(rng), 10));
        std::shuffle(slices.begin(), slices.end(), rng);
        const ThresholdResult t = find_threshold(slices, Orientation::Canonical);
        if (step == 0) {
            CHECK_FALSE(t.value);
            continue;
        }
        REQUIRE(t.value);
        CHECK(*t.value == values[step - 1]);
        CHECK(threshold_biconditional_holds(slices, *t.value, Orientation::Canonical));
        // Breaking one slice beyond the step removes the threshold.
        if (step + 1 < values.size()) {
            for (SliceStats& s : slices)
                if (s.param() == values.back())
                    s.acceptedCount = 1;
            CHECK_FALSE(find_threshold(slices, Orientation::Canonical).value);
        }
    }
}

TEST_CASE("requirement 3 on the odd-weight scan") {
    const ScanReport scan = odd_scan(10);
    const Requirement3Result& r = scan.requirement3;
    CHECK(r.passed);
    REQUIRE(r.windows.size() == 2);
    CHECK(r.windows[0].count == 30);
    CHECK(r.windows[1].count == 1008);
    CHECK(*r.windows[1].ratio == Rational(168, 5));
}

TEST_CASE("requirement 3 window counts against geometric sums") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> tenths(1, 10);
    std::uniform_int_distribution<int> start(0, 20);
    const ScanReport base = odd_scan(10);
    for (int trial = 0; trial < 60; ++trial) {
        ScanReport scan = base;
        scan.options.delta = Rational(tenths(rng), 10);
        scan.options.exemptRadius = Rational(start(rng), 10);
        analyze(scan);
        for (const DensityWindow& w : scan.requirement3.windows) {
            CHECK(w.highEdge - w.lowEdge == scan.options.delta);
            CHECK(w.highEdge * w.highEdge <= 10);
            const unsigned lo = std::max<unsigned>(1, static_cast<unsigned>(w.nLow));
            const std::uint64_t expected =
                w.nLow > w.nHigh || w.nHigh == 0 ? 0 : oracle::geometric_sum(2, lo, static_cast<unsigned>(w.nHigh));
            CHECK(w.count == expected);
            CHECK(w.empty == (expected == 0));
        }
    }
}

TEST_CASE("requirement 3 flags empty windows without failing on them") {
    ScanReport scan = odd_scan(10);
    scan.options.delta = Rational(1, 10);
    scan.options.exemptRadius = Rational(1);
    analyze(scan);
    const auto& windows = scan.requirement3.windows;
    const auto empties = std::count_if(windows.begin(), windows.end(), [](const DensityWindow& w) { return w.empty; });
    CHECK(empties > 0);
    // [1.1, 1.2] covers n in [2, 1].
    CHECK(windows[1].empty);
    // Counts of non-empty windows never decrease; the verdict turns on the last ratio.
    CHECK(scan.requirement3.note.find("decrease") == std::string::npos);
}

TEST_CASE("requirement 3 fails on a uniform scan") {
    ScanReport scan;
    scan.alphabetSize = 2;
    scan.budget = 10;
    for (std::uint64_t n = 1; n <= 10; ++n)
        for (int sign : {-1, +1})
            scan.slices.push_back(synthetic(sign, n, sign > 0 ? 1 : 0, 1));
    analyze(scan);
    CHECK_FALSE(scan.requirement3.passed);
    REQUIRE(scan.requirement3.windows.size() == 2);
    CHECK(*scan.requirement3.windows[1].ratio == Rational(3, 2));
}

TEST_CASE("balance margins") {
    const ScanReport scan = odd_scan(12);
    CHECK(scan.balance.sideCondition);
    for (const BalanceRow& row : scan.balance.rows) {
        CHECK(row.inFraction == Rational(1, 2));
        CHECK(row.required == Rational(1, 4));
        if (row.n == 2) {
            CHECK(row.outFraction == 0);
            CHECK_FALSE(row.passed);
        } else if (row.n >= 4) {
            CHECK(row.outFraction >= Rational(1, 4));
            CHECK(row.passed);
        }
        if (row.n % 2 == 0)
            CHECK(row.outFraction == Rational(1, 2) - Rational(1) / Rational(big_pow(2, row.n / 2)));
    }
    CHECK_FALSE(scan.balance.passed);
    CHECK(scan.passed()); // balance does not gate

    ScanOptions options;
    options.balanceMinN = 3;
    CHECK(odd_scan(12, options).balance.passed);
}

TEST_CASE("inversion is an involution") {
    const ScanReport scan = odd_scan(10);
    const ScanReport once = invert_scan(scan);
    const ScanReport twice = invert_scan(once);
    CHECK(once.orientation == Orientation::Inverted);
    CHECK(csv_of(twice) == csv_of(scan));
    const RunConfig cfg;
    CHECK(dump(scan_summary_json(twice, cfg)) == dump(scan_summary_json(scan, cfg)));
    CHECK(csv_of(once) != csv_of(scan));
    REQUIRE(once.threshold.value);
    CHECK(*once.threshold.value == ParamValue{+1, 1});
}

TEST_CASE("inverted scan passes exactly when the original does") {
    std::vector<ScanReport> scans;
    scans.push_back(odd_scan(10));
    ScanOptions loose;
    loose.bounds.poly = {Rational(100)};
    scans.push_back(odd_scan(10, loose));
    scans.push_back(run_scan(even_weight_language(), PIso::identity(Alphabet(2), 8), 8, {}));
    const Language upperHalf = first_upper_half_language(4);
    scans.push_back(run_scan(upperHalf, build_table_iso(upperHalf, Alphabet(4), 5), 5, {}));
    ScanReport broken = odd_scan(10);
    broken.slices[5].acceptedCount = 0;
    analyze(broken);
    scans.push_back(broken);
    for (const ScanReport& scan : scans) {
        const ScanReport inverted = invert_scan(scan);
        CHECK(inverted.passed() == scan.passed());
        CHECK(inverted.requirement1.passed == scan.requirement1.passed);
        CHECK(inverted.requirement2.passed == scan.requirement2.passed);
        CHECK(inverted.requirement3.passed == scan.requirement3.passed);
        // Judging the same slices under the wrong orientation is not the same thing.
        if (scan.passed())
            CHECK_FALSE(with_orientation(scan, Orientation::Inverted).passed());
    }
}

TEST_CASE("scan output does not depend on the worker count") {
    ScanOptions one;
    one.threads = 1;
    ScanOptions many;
    many.threads = 5;
    const Language lang = first_is_two_language(2);
    const PIso iso = build_table_iso(lang, Alphabet(2), 9);
    CHECK(csv_of(run_scan(lang, iso, 9, one)) == csv_of(run_scan(lang, iso, 9, many)));
}

TEST_CASE("scan rejects bad options") {
    ScanOptions bad;
    bad.delta = 0;
    CHECK_THROWS_AS(odd_scan(4, bad), ConfigError);
    CHECK_THROWS_AS(odd_scan(0), ConfigError);
    const Language lang = first_is_two_language(2);
    const PIso small = build_table_iso(lang, Alphabet(2), 3);
    CHECK_THROWS_AS(run_scan(lang, small, 4, {}), BudgetExceeded);
}

TEST_CASE("density examples") {
    const DensityReport zero = density_counts(2, 0, 2);
    REQUIRE(zero.enumeratedCount);
    CHECK(*zero.enumeratedCount == 31);
    CHECK(zero.closedFormCount == 31);
    CHECK(*zero.zeroStartForm == 31);
    CHECK(*zero.fixedWidthForm == 31);
    CHECK(zero.closedFormExcludingUndefined == 30);
    CHECK(*zero.enumeratedExcludingUndefined == 30);
    CHECK(zero.consistent());

    const DensityReport one = density_counts(2, 1, 2);
    CHECK(*one.enumeratedCount == 30);
    CHECK(*one.fixedWidthForm == 30);
    CHECK_FALSE(one.zeroStartForm);

    CHECK_THROWS_AS(density_counts(2, 2, 1), ConfigError);
    CHECK_THROWS_AS(density_counts(3, 0, 1), ConfigError);
}

TEST_CASE("density closed forms against enumeration") {
    for (unsigned e2 = 1; e2 <= 3; ++e2)
        for (unsigned e1 = 0; e1 < e2; ++e1) {
            const DensityReport r = density_counts(2, e1, e2);
            const std::uint64_t brute = oracle::geometric_sum(2, e1 * e1, e2 * e2);
            REQUIRE(r.enumeratedCount);
            CHECK(*r.enumeratedCount == brute);
            CHECK(r.closedFormCount == brute);
            REQUIRE(r.fixedWidthForm);
            CHECK(*r.fixedWidthForm == brute);
            if (e1 == 0)
                CHECK(*r.zeroStartForm == (oracle::power(2, e2 * e2 + 1) - 1));
            CHECK(r.consistent());
        }
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> q(0, 40);
    for (int trial = 0; trial < 100; ++trial) {
        int a = q(rng);
        int b = q(rng);
        if (a == b)
            continue;
        if (a > b)
            std::swap(a, b);
        const Rational e1(a, 10);
        const Rational e2(b, 10);
        const DensityReport r = density_counts(4, e1, e2);
        std::uint64_t brute = 0;
        for (unsigned n = 0; n <= 16; ++n)
            if (Rational(n) >= e1 * e1 && Rational(n) <= e2 * e2)
                brute += oracle::power(4, n);
        CHECK(r.closedFormCount == brute);
        if (r.enumeratedCount)
            CHECK(*r.enumeratedCount == brute);
        CHECK(r.consistent());
    }
}

TEST_CASE("density through a table iso") {
    const Language lang = first_is_two_language(2);
    const PIso iso = build_table_iso(lang, Alphabet(2), 6);
    const DensityReport r = density_counts(2, 1, 2, &iso);
    CHECK(*r.enumeratedCount == 30);
    CHECK(r.consistent());
}
