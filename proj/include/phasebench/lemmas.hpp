#pragma once

#include "phasebench/bounds.hpp"
#include "phasebench/isomorphism.hpp"
#include "phasebench/language.hpp"
#include "phasebench/roughp.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace phasebench {

struct LemmaResult {
    LemmaResult() = default;
    explicit LemmaResult(std::string lemmaName) : name(std::move(lemmaName)) {}

    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::optional<std::string> counterexample; // first failure only
};

struct LemmaContext {
    const Alphabet& alphabet;
    const Language& lang;
    const PIso& iso;
    std::uint64_t budget;
    BoundParams bounds;
    std::uint64_t padMaxLen = 4;
    QPrimeFn tieBreak = qprime;
};

/// Runs every exhaustive check over lengths 1..budget: parity counts,
/// symmetric words, tie-break split, errorless decisions, class counts,
/// bottom fraction, slice sizes, F bounds, paddability, bijection and the
/// sharpening arithmetic.
std::vector<LemmaResult> run_lemmas(const LemmaContext& ctx);

nlohmann::json lemmas_json(const std::vector<LemmaResult>& results);

} // namespace phasebench
