#include "phasebench/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace phasebench {

using nlohmann::json;

Rational json_rational(const json& value, const std::string& field) {
    try {
        if (value.is_number_integer())
            return Rational(value.get<long long>());
        if (value.is_number_unsigned())
            return Rational(value.get<unsigned long long>());
        if (value.is_number_float())
            return rational_from_double(value.get<double>());
        if (value.is_string())
            return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError("field '" + field + "': " + e.what());
    }
    throw ConfigError("field '" + field + "' must be a number or a numeric string");
}

namespace {

std::uint64_t json_count(const json& value, const std::string& field) {
    if (value.is_number_unsigned())
        return value.get<std::uint64_t>();
    if (value.is_number_integer() && value.get<long long>() >= 0)
        return static_cast<std::uint64_t>(value.get<long long>());
    throw ConfigError("field '" + field + "' must be a nonnegative integer");
}

void reject_unknown(const json& object, const std::set<std::string>& known, const std::string& where) {
    for (const auto& [key, value] : object.items())
        if (known.count(key) == 0)
            throw ConfigError("unknown field '" + key + "' in " + where);
}

std::vector<Rational> poly_from_json(const json& value) {
    if (!value.is_array())
        return {json_rational(value, "bounds.poly")};
    std::vector<Rational> coeffs;
    for (const json& c : value)
        coeffs.push_back(json_rational(c, "bounds.poly"));
    return coeffs;
}

} // namespace

std::vector<Rational> parse_poly(const std::string& text) {
    std::vector<Rational> coeffs;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            coeffs.push_back(parse_rational(part));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("bad Poly coefficient: ") + e.what());
        }
    }
    if (coeffs.empty())
        throw ConfigError("Poly needs at least one coefficient");
    return coeffs;
}

RunConfig parse_config(const json& doc) {
    if (!doc.is_object())
        throw ConfigError("config must be a JSON object");
    reject_unknown(doc,
                   {"alphabetSize", "symbols", "language", "iso", "budget", "bounds", "delta", "exemptRadius",
                    "growthBase", "balanceMinN", "padMaxLen", "output", "density"},
                   "config");
    RunConfig cfg;
    try {
        if (doc.contains("alphabetSize"))
            cfg.alphabetSize = json_count(doc["alphabetSize"], "alphabetSize");
        if (doc.contains("symbols")) {
            cfg.symbols = doc["symbols"].get<std::vector<std::string>>();
            if (!doc.contains("alphabetSize"))
                cfg.alphabetSize = cfg.symbols.size();
        }
        if (doc.contains("language"))
            cfg.language = doc["language"];
        if (doc.contains("iso")) {
            const json& iso = doc["iso"];
            reject_unknown(iso, {"mode", "budget"}, "iso");
            const std::string mode = iso.value("mode", "identity");
            if (mode == "identity")
                cfg.iso.mode = IsoKind::Identity;
            else if (mode == "table")
                cfg.iso.mode = IsoKind::Table;
            else
                throw ConfigError("iso.mode must be 'identity' or 'table'");
            if (iso.contains("budget"))
                cfg.iso.budget = json_count(iso["budget"], "iso.budget");
        }
        if (doc.contains("budget"))
            cfg.budget = json_count(doc["budget"], "budget");
        if (doc.contains("bounds")) {
            const json& b = doc["bounds"];
            reject_unknown(b, {"c", "poly"}, "bounds");
            if (b.contains("c") && b["c"].is_string()) {
                cfg.scan.bounds.cSquared = BoundParams::parse_c(b["c"].get<std::string>());
            } else if (b.contains("c")) {
                const Rational c = json_rational(b["c"], "bounds.c");
                if (c <= 0)
                    throw ConfigError("bound constant c must be positive");
                cfg.scan.bounds.cSquared = c * c;
            }
            if (b.contains("poly"))
                cfg.scan.bounds.poly = poly_from_json(b["poly"]);
        }
        if (doc.contains("delta"))
            cfg.scan.delta = json_rational(doc["delta"], "delta");
        if (doc.contains("exemptRadius"))
            cfg.scan.exemptRadius = json_rational(doc["exemptRadius"], "exemptRadius");
        if (doc.contains("growthBase"))
            cfg.scan.growthBase = json_rational(doc["growthBase"], "growthBase");
        if (doc.contains("balanceMinN"))
            cfg.scan.balanceMinN = json_count(doc["balanceMinN"], "balanceMinN");
        if (doc.contains("padMaxLen"))
            cfg.padMaxLen = json_count(doc["padMaxLen"], "padMaxLen");
        if (doc.contains("output"))
            cfg.output = doc["output"].get<std::string>();
        if (doc.contains("density")) {
            const json& d = doc["density"];
            reject_unknown(d, {"e1", "e2"}, "density");
            if (d.contains("e1"))
                cfg.densityE1 = json_rational(d["e1"], "density.e1");
            if (d.contains("e2"))
                cfg.densityE2 = json_rational(d["e2"], "density.e2");
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

void validate(const RunConfig& config) {
    require_even_alphabet(config.alphabetSize);
    if (!config.symbols.empty() && config.symbols.size() != config.alphabetSize)
        throw ConfigError("symbols lists " + std::to_string(config.symbols.size()) + " labels for alphabetSize " +
                          std::to_string(config.alphabetSize));
    if (config.budget < 1)
        throw ConfigError("budget must be at least 1");
    if (config.iso.mode == IsoKind::Table && config.iso_budget() < config.budget)
        throw ConfigError("iso.budget must cover the run budget");
    if (config.padMaxLen < 1)
        throw ConfigError("padMaxLen must be at least 1");
    config.scan.bounds.validate();
    if (config.scan.delta <= 0)
        throw ConfigError("delta must be positive");
    if (config.scan.exemptRadius < 0)
        throw ConfigError("exemptRadius must be nonnegative");
    if (config.scan.growthBase && *config.scan.growthBase <= 1)
        throw ConfigError("growthBase must exceed 1");
}

Alphabet make_alphabet(const RunConfig& config) {
    if (!config.symbols.empty())
        return Alphabet(config.symbols);
    return Alphabet(config.alphabetSize);
}

Language make_language(const RunConfig& config) {
    const json& block = config.language;
    const std::size_t k = config.alphabetSize;
    if (!block.is_object())
        throw ConfigError("language must be an object");
    if (block.contains("builtin")) {
        reject_unknown(block, {"builtin"}, "language");
        const std::string name = block["builtin"].is_string() ? block["builtin"].get<std::string>() : "";
        if (name == "odd_weight")
            return odd_weight_language(k);
        if (name == "first_is_two")
            return first_is_two_language(k);
        if (name == "first_upper_half")
            return first_upper_half_language(k);
        if (name == "universal")
            return universal_language(k);
        throw ConfigError("unknown builtin language '" + name + "'");
    }
    if (block.contains("table")) {
        reject_unknown(block, {"table"}, "language");
        const json& t = block["table"];
        reject_unknown(t, {"maxLen", "members"}, "language.table");
        if (!t.contains("maxLen") || !t.contains("members") || !t["members"].is_array())
            throw ConfigError("language.table needs maxLen and a members array");
        const std::uint64_t maxLen = json_count(t["maxLen"], "language.table.maxLen");
        const Alphabet alphabet(k);
        std::set<Word> members;
        for (const json& m : t["members"]) {
            if (!m.is_string())
                throw ConfigError("table members must be digit strings");
            members.insert(alphabet.parse(m.get<std::string>()));
        }
        return table_language(k, maxLen, std::move(members));
    }
    throw ConfigError("language needs a 'builtin' or 'table' entry");
}

PIso make_iso(const RunConfig& config, const Language& lang, const Alphabet& alphabet) {
    if (config.iso.mode == IsoKind::Identity)
        return PIso::identity(alphabet, config.budget);
    return build_table_iso(lang, alphabet, config.iso_budget());
}

std::string language_label(const RunConfig& config) {
    if (config.language.contains("builtin") && config.language["builtin"].is_string())
        return config.language["builtin"].get<std::string>();
    return "table";
}

} // namespace phasebench
