#pragma once

#include "phasebench/bounds.hpp"
#include "phasebench/language.hpp"
#include "phasebench/parameter.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phasebench {

/// Canonical: acceptance tends to 1 for large positive tau.
/// Inverted: acceptance tends to 1 for large negative tau.
enum class Orientation { Canonical, Inverted };

const char* to_string(Orientation o) noexcept;

/// Sign of tau on which acceptance tends to 1.
inline int accept_sign(Orientation o) noexcept { return o == Orientation::Canonical ? +1 : -1; }

struct SliceStats {
    int sign = +1;
    std::uint64_t n = 0;
    std::uint64_t sliceSize = 0;
    std::uint64_t acceptedCount = 0; // language members in the slice
    std::uint64_t bottomInSlice = 0;
    std::uint64_t correctIn = 0;     // members the rough decider accepts
    std::uint64_t correctOut = 0;    // non-members it rejects
    std::uint64_t wrongDecisions = 0;
    std::uint64_t ballSize = 0;
    std::uint64_t ballBottom = 0;

    Surd envelope; // Poly(n) c^n
    Surd lowerBound;
    Surd upperBound;

    ParamValue param() const { return {sign, n}; }
    Rational accepting_fraction() const { return Rational(acceptedCount, sliceSize); }
    /// acceptedCount/sliceSize, unreduced.
    std::string accepting_fraction_exact() const { return fraction_string(acceptedCount, sliceSize); }
    /// Ball-level ballBottom/ballSize, unreduced.
    std::string bottom_fraction_exact() const { return fraction_string(ballBottom, ballSize); }
    bool within_bounds() const;
};

struct ThresholdResult {
    std::optional<ParamValue> value;
    std::string diagnostic;
};

struct BoundViolation {
    int sign = +1;
    std::uint64_t n = 0;
    std::string detail;
};

struct Requirement12Result {
    bool passed = false;
    bool envelopeMonotone = false;
    bool informativeAtEdge = false; // envelope < 1 at the largest realized n
    std::uint64_t slicesChecked = 0;
    std::vector<BoundViolation> violations;
};

struct DensityWindow {
    Rational lowEdge;  // |tau| at window start
    Rational highEdge; // lowEdge + delta
    std::uint64_t nLow = 0;
    std::uint64_t nHigh = 0;
    BigInt count;
    bool empty = false;
    std::optional<Rational> ratio; // count / previous non-empty count
};

struct Requirement3Result {
    bool passed = false;
    std::vector<DensityWindow> windows;
    std::string note;
};

struct BalanceRow {
    std::uint64_t n = 0;
    Rational inFraction;  // correctly accepted members / ball
    Rational outFraction; // correctly rejected non-members / ball
    Rational required;    // 1 / Poly(n)
    bool passed = false;
    bool exempt = false;  // n below balanceMinN
};

struct BalanceReport {
    std::vector<BalanceRow> rows;
    bool sideCondition = false;
    bool passed = false; // all non-exempt rows pass and the side condition holds
};

struct ScanOptions {
    BoundParams bounds;
    Rational delta{1};
    Rational exemptRadius{1};
    std::optional<Rational> growthBase; // default: alphabet size
    std::uint64_t balanceMinN = 1;
    unsigned threads = 0; // 0: hardware concurrency, capped by PHASEBENCH_THREADS
};

struct ScanReport {
    std::size_t alphabetSize = 0;
    std::uint64_t budget = 0;
    Orientation orientation = Orientation::Canonical;
    ScanOptions options;

    std::vector<SliceStats> slices; // realized slices sorted by (n, sign)
    std::vector<ParamValue> gaps;   // empty slices
    std::uint64_t skippedUndefined = 0;

    ThresholdResult threshold;
    Requirement12Result requirement1;
    Requirement12Result requirement2;
    Requirement3Result requirement3;
    BalanceReport balance;

    std::uint64_t wrong_decisions() const;
    bool errorless() const { return wrong_decisions() == 0; }
    bool bounds_hold() const;
    /// Everything that gates a scan: errorless, bounds, threshold, and the
    /// three requirements. Balance is reported but does not gate.
    bool passed() const;
};

/// Enumerates every ball of length 1..budget (n = 0 is counted as
/// skippedUndefined), tallies slice statistics in parallel per n, then runs
/// analyze(). Output does not depend on the worker count.
ScanReport run_scan(const Language& lang, const PIso& iso, std::uint64_t budget, const ScanOptions& options,
                    const QPrimeFn& tieBreak = qprime);

/// Recomputes bounds, threshold, requirements and balance from the slices.
void analyze(ScanReport& scan);

/// Reindexes by tau' = -tau and swaps orientation. Involution.
ScanReport invert_scan(const ScanReport& scan);

/// Same slices judged under the other orientation without reindexing.
ScanReport with_orientation(const ScanReport& scan, Orientation orientation);

ThresholdResult find_threshold(const std::vector<SliceStats>& slices, Orientation orientation);

/// Checks the threshold biconditional over all realized slices.
bool threshold_biconditional_holds(const std::vector<SliceStats>& slices, const ParamValue& threshold,
                                   Orientation orientation);

/// Accept side: lower bound non-decreasing away from zero and respected.
Requirement12Result requirement1_check(const ScanReport& scan);
/// Reject side: upper bound non-increasing away from zero and respected.
Requirement12Result requirement2_check(const ScanReport& scan);
Requirement3Result requirement3_check(const ScanReport& scan);
BalanceReport balance_check(const ScanReport& scan);

/// Every slice against its bounds; the violations are the witnesses.
std::vector<BoundViolation> verify_acc_bounds(const ScanReport& scan);

} // namespace phasebench
