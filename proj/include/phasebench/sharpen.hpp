#pragma once

#include "phasebench/parameter.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace phasebench {

/// |tau| at and beyond which the shift applies: (7/2) c^n <= 1/2 once
/// n exceeds log_c(1/7), about 5.61 for c = 1/sqrt(2).
inline constexpr std::uint64_t kSharpenShift = 6;

/// log_c(1/7) for c = sqrt(cSquared).
double pull_in_length(const Rational& cSquared = Rational(1, 2));

/// Values for inputs with |tau| below the shift, keyed by input word. The
/// input with an empty image belongs here too.
using ReassignmentTable = std::map<Word, Surd>;

/// |tau| >= 6: sign * (|tau| - 6). Otherwise the table entry for x; a missing
/// entry throws ConfigError. `tau` is empty for the input with empty image.
Surd sharpen_parameter(const std::optional<ParamValue>& tau, const Word& x, const ReassignmentTable& table);

/// The input with empty image plus the first input (in image order) of the
/// opposite membership go to 0; every other small input goes to
/// +-sqrt(n)/6 with + for members.
/// Covers the inputs whose image has length <= budget; for a table iso pass
/// its own budget so that these are exactly the inputs of length <= budget.
ReassignmentTable default_reassignment(const Language& lang, const PIso& iso, std::uint64_t budget);

struct SharpenReport {
    std::uint64_t inputsChecked = 0;
    std::uint64_t shifted = 0;
    std::uint64_t reassigned = 0;
    std::uint64_t zeroCount = 0;
    std::uint64_t zeroMembers = 0;
    /// Exactly half of the inputs sent to 0 are members.
    bool halfMembership() const { return 2 * zeroMembers == zeroCount; }
};

/// Applies the transform to every input of length <= budget. Throws
/// ConfigError if the table misses an input that needs it.
SharpenReport verify_reassignment(const Language& lang, const PIso& iso, std::uint64_t budget,
                                  const ReassignmentTable& table);

} // namespace phasebench
