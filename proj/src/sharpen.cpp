#include "phasebench/sharpen.hpp"

#include <cmath>

namespace phasebench {

double pull_in_length(const Rational& cSquared) {
    if (cSquared <= 0 || cSquared >= 1)
        throw ConfigError("pull-in length needs 0 < c < 1");
    return std::log(1.0 / 7.0) / (0.5 * std::log(to_double(cSquared)));
}

Surd sharpen_parameter(const std::optional<ParamValue>& tau, const Word& x, const ReassignmentTable& table) {
    constexpr std::uint64_t shiftSquared = kSharpenShift * kSharpenShift;
    if (tau && tau->n >= shiftSquared)
        return Surd(tau->sign) * (Surd::sqrt_of(Rational(tau->n)) - Surd(kSharpenShift));
    const auto it = table.find(x);
    if (it == table.end())
        throw ConfigError("reassignment table has no entry for an input with |tau| < " +
                          std::to_string(kSharpenShift));
    return it->second;
}

namespace {

std::optional<ParamValue> gamma_or_empty(const PIso& iso, const Word& x) {
    try {
        return gamma(iso, x);
    } catch (const UndefinedParameter&) {
        return std::nullopt;
    }
}

} // namespace

ReassignmentTable default_reassignment(const Language& lang, const PIso& iso, std::uint64_t budget) {
    constexpr std::uint64_t shiftSquared = kSharpenShift * kSharpenShift;
    ReassignmentTable table;
    const Word undefinedInput = iso.invert(Word{});
    const bool undefinedIsMember = lang.contains(undefinedInput);
    table.emplace(undefinedInput, Surd(0));
    bool partnerFound = false;
    for (std::uint64_t n = 1; n <= budget && n < shiftSquared; ++n) {
        for (const Word& image : iso.alphabet().words(n)) {
            const Word x = iso.invert(image);
            const bool member = lang.contains(x);
            if (!partnerFound && member != undefinedIsMember) {
                table.emplace(x, Surd(0));
                partnerFound = true;
                continue;
            }
            table.emplace(x, Surd(member ? 1 : -1) * Surd::sqrt_of(Rational(n)) / Surd(6));
        }
    }
    return table;
}

SharpenReport verify_reassignment(const Language& lang, const PIso& iso, std::uint64_t budget,
                                  const ReassignmentTable& table) {
    SharpenReport report;
    for (std::uint64_t len = 0; len <= budget; ++len) {
        for (const Word& x : iso.alphabet().words(len)) {
            ++report.inputsChecked;
            const std::optional<ParamValue> tau = gamma_or_empty(iso, x);
            const Surd value = sharpen_parameter(tau, x, table);
            if (tau && tau->n >= kSharpenShift * kSharpenShift)
                ++report.shifted;
            else
                ++report.reassigned;
            if (value.sign() == 0) {
                ++report.zeroCount;
                if (lang.contains(x))
                    ++report.zeroMembers;
            }
        }
    }
    return report;
}

} // namespace phasebench
