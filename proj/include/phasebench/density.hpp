#pragma once

#include "phasebench/isomorphism.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace phasebench {

/// How many inputs have |tau| in [e1, e2], i.e. image length in
/// [ceil(e1^2), floor(e2^2)], counted by enumeration and by the geometric
/// series. Counts including the one input with an empty image (n = 0) and
/// excluding it are both reported.
struct DensityReport {
    std::size_t alphabetSize = 0;
    Rational e1;
    Rational e2;
    Rational delta; // e2 - e1
    std::uint64_t nLow = 0;
    std::uint64_t nHigh = 0;
    bool endpointsAligned = false; // e1^2 and e2^2 are integers

    /// Empty when enumeration would exceed the enumeration cap.
    std::optional<BigInt> enumeratedCount;
    /// (k^{nHigh+1} - k^{nLow}) / (k - 1).
    BigInt closedFormCount;
    /// Same range with the n = 0 input left out.
    std::optional<BigInt> enumeratedExcludingUndefined;
    BigInt closedFormExcludingUndefined;

    /// (k^{e2^2+1} - 1) / (k - 1), present when e1 = 0 and e2^2 is an integer.
    std::optional<BigInt> zeroStartForm;
    /// k^{e1^2} (k^{2 delta e1 + delta^2 + 1} - 1) / (k - 1), present when the
    /// exponents are integers.
    std::optional<BigInt> fixedWidthForm;

    bool consistent() const;
};

inline constexpr std::uint64_t kDensityEnumerationCap = std::uint64_t{1} << 24;

/// `iso` may be null, in which case inputs are counted through the identity.
DensityReport density_counts(std::size_t alphabetSize, const Rational& e1, const Rational& e2,
                             const PIso* iso = nullptr);

} // namespace phasebench
