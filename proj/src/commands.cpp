#include "phasebench/commands.hpp"

#include "phasebench/config.hpp"
#include "phasebench/density.hpp"
#include "phasebench/lemmas.hpp"
#include "phasebench/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace phasebench {

namespace {

using nlohmann::json;

struct CommonOptions {
    std::string configPath;
    std::optional<std::uint64_t> budget;
    std::optional<std::string> poly;
    std::optional<std::string> c;
    std::optional<std::string> output;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.configPath, "JSON experiment config (defaults: binary odd_weight, identity)");
    cmd->add_option("--budget", opts.budget, "Override the maximum image length");
    cmd->add_option("--poly", opts.poly, "Override Poly coefficients, constant term first (e.g. 4 or 1,0,2)");
    cmd->add_option("--c", opts.c, "Override the bound constant (sqrt(1/2), p/q or decimal)");
    cmd->add_option("--output", opts.output, "Output path");
    cmd->add_option("--threads", opts.threads, "Worker threads (0: all cores, capped by PHASEBENCH_THREADS)");
}

RunConfig resolve_config(const CommonOptions& opts) {
    RunConfig cfg = opts.configPath.empty() ? parse_config(json::object()) : load_config(opts.configPath);
    if (opts.budget)
        cfg.budget = *opts.budget;
    if (opts.poly)
        cfg.scan.bounds.poly = parse_poly(*opts.poly);
    if (opts.c)
        cfg.scan.bounds.cSquared = BoundParams::parse_c(*opts.c);
    if (opts.output)
        cfg.output = *opts.output;
    cfg.scan.threads = opts.threads;
    validate(cfg);
    return cfg;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw ConfigError("cannot write '" + path + "'");
    file << text;
    if (!file)
        throw ConfigError("failed writing '" + path + "'");
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output.empty())
        out << text;
    else
        write_file(cfg.output, text);
}

int cmd_lemmas(const CommonOptions& opts, std::ostream& out, const CliHooks& hooks) {
    const RunConfig cfg = resolve_config(opts);
    const Alphabet alphabet = make_alphabet(cfg);
    const Language lang = make_language(cfg);
    const PIso iso = make_iso(cfg, lang, alphabet);
    const LemmaContext ctx{alphabet, lang, iso, cfg.budget, cfg.scan.bounds, cfg.padMaxLen, hooks.tieBreak};
    const json doc = lemmas_json(run_lemmas(ctx));
    emit(cfg, out, dump(doc));
    return doc["passed"].get<bool>() ? kExitPass : kExitViolation;
}

int cmd_scan(const CommonOptions& opts, bool invert, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
    const RunConfig cfg = resolve_config(opts);
    const Alphabet alphabet = make_alphabet(cfg);
    const Language lang = make_language(cfg);
    const PIso iso = make_iso(cfg, lang, alphabet);
    ScanReport scan = run_scan(lang, iso, cfg.budget, cfg.scan, hooks.tieBreak);
    if (invert)
        scan = invert_scan(scan);

    std::ostringstream csv;
    write_scan_csv(csv, scan);
    const std::string summary = dump(scan_summary_json(scan, cfg));
    if (cfg.output.empty()) {
        out << csv.str();
        err << summary;
    } else {
        write_file(cfg.output, csv.str());
        write_file(sidecar_path(cfg.output), summary);
    }
    return scan.passed() ? kExitPass : kExitViolation;
}

json pairs_json(const PIso& iso) {
    json doc = json::array();
    for (const auto& [x, image] : iso.pairs())
        doc.push_back({iso.alphabet().format(x), iso.alphabet().format(image)});
    return doc;
}

PIso import_pairs(const RunConfig& cfg, const Alphabet& alphabet, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open iso table '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError("iso table '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_array())
        throw ConfigError("iso table must be an array of [input, image] pairs");
    std::vector<std::pair<Word, Word>> pairs;
    for (const json& p : doc) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw ConfigError("iso table entries must be [input, image] string pairs");
        pairs.emplace_back(alphabet.parse(p[0].get<std::string>()), alphabet.parse(p[1].get<std::string>()));
    }
    return PIso::from_pairs(alphabet, cfg.iso_budget(), pairs);
}

json iso_check_json(const PIso& iso, const Language& lang, std::uint64_t budget, bool& passed) {
    const BijectionReport bijection = verify_bijection(iso, budget);
    const ErrorlessReport errorless = verify_errorless(lang, iso, budget);
    const Alphabet& a = iso.alphabet();
    json duplicates = json::array();
    for (const auto& [first, second] : bijection.injectivityViolations)
        duplicates.push_back({a.format(first), a.format(second)});
    json unhit = json::array();
    for (const Word& w : bijection.surjectivityViolations)
        unhit.push_back(a.format(w));
    json wrong = json::array();
    for (const Word& w : errorless.wrongDecisions)
        wrong.push_back(a.format(w));
    passed = bijection.passed() && errorless.passed();
    return {{"kind", iso.kind() == IsoKind::Identity ? "identity" : "table"},
            {"budget", budget},
            {"checked", bijection.checked},
            {"bijection", bijection.passed()},
            {"sharedImages", duplicates},
            {"missingImages", unhit},
            {"roundTripFailures", bijection.roundTripViolations.size()},
            {"errorless", errorless.passed()},
            {"wrongDecisions", wrong},
            {"passed", passed}};
}

int cmd_iso(const CommonOptions& opts, const std::string& action, const std::string& file, std::ostream& out) {
    RunConfig cfg = resolve_config(opts);
    const Alphabet alphabet = make_alphabet(cfg);
    const Language lang = make_language(cfg);
    const std::uint64_t budget = cfg.iso.mode == IsoKind::Table ? cfg.iso_budget() : cfg.budget;

    if (action == "export") {
        const PIso iso = make_iso(cfg, lang, alphabet);
        const std::string text = dump(pairs_json(iso));
        if (file.empty())
            out << text;
        else
            write_file(file, text);
        return kExitPass;
    }
    if (action == "import" && file.empty())
        throw ConfigError("iso import needs --file");

    bool passed = false;
    json doc;
    if (!file.empty() && (action == "import" || action == "verify")) {
        cfg.iso.mode = IsoKind::Table;
        doc = iso_check_json(import_pairs(cfg, alphabet, file), lang, cfg.iso_budget(), passed);
    } else {
        doc = iso_check_json(make_iso(cfg, lang, alphabet), lang, budget, passed);
    }
    doc["action"] = action;
    emit(cfg, out, dump(doc));
    return passed ? kExitPass : kExitViolation;
}

int cmd_density(const CommonOptions& opts, std::optional<std::string> e1Text, std::optional<std::string> e2Text,
                std::ostream& out) {
    RunConfig cfg = resolve_config(opts);
    try {
        if (e1Text)
            cfg.densityE1 = parse_rational(*e1Text);
        if (e2Text)
            cfg.densityE2 = parse_rational(*e2Text);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad density endpoint: ") + e.what());
    }
    if (!cfg.densityE2)
        throw ConfigError("density needs e2 (flag --e2 or config density.e2)");
    const Rational e1 = cfg.densityE1.value_or(Rational(0));
    const Alphabet alphabet = make_alphabet(cfg);
    std::optional<PIso> iso;
    if (cfg.iso.mode == IsoKind::Table) {
        const Language lang = make_language(cfg);
        iso.emplace(make_iso(cfg, lang, alphabet));
    }
    const DensityReport report = density_counts(alphabet.size(), e1, *cfg.densityE2, iso ? &*iso : nullptr);
    emit(cfg, out, dump(density_json(report)));
    return report.consistent() ? kExitPass : kExitViolation;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
    CLI::App app{"Exhaustive phase-transition checks for paddable languages over even alphabets", "phasebench"};
    app.require_subcommand(1);

    CommonOptions lemmaOpts;
    CLI::App* lemmas = app.add_subcommand("lemmas", "Run the exhaustive lemma suite; JSON report");
    add_common(lemmas, lemmaOpts);

    CommonOptions scanOpts;
    bool invert = false;
    CLI::App* scan = app.add_subcommand("scan", "Acceptance-fraction scan; CSV plus JSON sidecar");
    add_common(scan, scanOpts);
    scan->add_flag("--invert", invert, "Report the scan reindexed by tau' = -tau");

    CommonOptions isoOpts;
    std::string isoAction;
    std::string isoFile;
    CLI::App* iso = app.add_subcommand("iso", "Build, verify, export or import a table isomorphism");
    add_common(iso, isoOpts);
    iso->add_option("action", isoAction, "build | verify | export | import")
        ->required()
        ->check(CLI::IsMember({"build", "verify", "export", "import"}));
    iso->add_option("--file", isoFile, "Pair-list JSON to export to or import from");

    CommonOptions densityOpts;
    std::optional<std::string> e1;
    std::optional<std::string> e2;
    CLI::App* density = app.add_subcommand("density", "Count inputs with |tau| in [e1, e2]");
    add_common(density, densityOpts);
    density->add_option("--e1", e1, "Lower |tau| endpoint (default 0)");
    density->add_option("--e2", e2, "Upper |tau| endpoint");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (lemmas->parsed())
            return cmd_lemmas(lemmaOpts, out, hooks);
        if (scan->parsed())
            return cmd_scan(scanOpts, invert, out, err, hooks);
        if (iso->parsed())
            return cmd_iso(isoOpts, isoAction, isoFile, out);
        if (density->parsed())
            return cmd_density(densityOpts, e1, e2, out);
    } catch (const InfeasibleIso& e) {
        err << "infeasible: " << e.what() << " (length class " << e.length_class() << ")\n";
        return kExitInfeasible;
    } catch (const ContractViolation& e) {
        err << "violation: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}

} // namespace phasebench
