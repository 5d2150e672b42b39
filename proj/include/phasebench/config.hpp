#pragma once

#include "phasebench/isomorphism.hpp"
#include "phasebench/language.hpp"
#include "phasebench/transition.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phasebench {

struct IsoConfig {
    IsoKind mode = IsoKind::Identity;
    std::optional<std::uint64_t> budget; // table only; defaults to the run budget
};

/// One experiment, as read from the JSON config. Defaults describe the
/// binary odd-weight language under the identity with budget 10.
struct RunConfig {
    std::size_t alphabetSize = 2;
    std::vector<std::string> symbols;
    nlohmann::json language = {{"builtin", "odd_weight"}};
    IsoConfig iso;
    std::uint64_t budget = 10;
    ScanOptions scan;
    std::uint64_t padMaxLen = 4;
    std::string output;
    std::optional<Rational> densityE1;
    std::optional<Rational> densityE2;

    std::uint64_t iso_budget() const { return iso.budget.value_or(budget); }
};

/// Reads a number given as a JSON number or a string ("3/4", "0.25").
Rational json_rational(const nlohmann::json& value, const std::string& field);

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// Throws ConfigError on an invalid combination of fields.
void validate(const RunConfig& config);

/// Parses "4" or "1,0,2" into Poly coefficients.
std::vector<Rational> parse_poly(const std::string& text);

Alphabet make_alphabet(const RunConfig& config);
Language make_language(const RunConfig& config);
/// Identity, or the greedy table over Sigma^{<=iso budget}.
PIso make_iso(const RunConfig& config, const Language& lang, const Alphabet& alphabet);

/// Short human-readable name of the language block.
std::string language_label(const RunConfig& config);

} // namespace phasebench
