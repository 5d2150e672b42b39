#include "phasebench/commands.hpp"
#include "phasebench/config.hpp"
#include "phasebench/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace phasebench;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args, const CliHooks& hooks = {}) {
    args.insert(args.begin(), "phasebench");
    std::vector<const char*> argv;
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    RunResult r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, hooks);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "phasebench_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

} // namespace

TEST_CASE("lemmas pass on the defaults") {
    const RunResult r = run({"lemmas"});
    CHECK(r.code == kExitPass);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["passed"].get<bool>());
    CHECK(doc["lemmas"].size() == 11);
}

TEST_CASE("a sabotaged tie-break makes lemmas fail") {
    CliHooks hooks;
    hooks.tieBreak = [](const Word&) { return +1; };
    const RunResult r = run({"lemmas", "--budget", "6"}, hooks);
    CHECK(r.code == kExitViolation);
    const auto doc = nlohmann::json::parse(r.out);
    bool sawSplit = false;
    for (const auto& lemma : doc["lemmas"])
        if (lemma["name"] == "tie_break_split") {
            sawSplit = true;
            CHECK_FALSE(lemma["passed"].get<bool>());
        }
    CHECK(sawSplit);
}

TEST_CASE("config errors exit with code 2") {
    CHECK(run({"lemmas", "--budget", "0"}).code == kExitConfig);
    CHECK(run({"scan", "--c", "2"}).code == kExitConfig);
    CHECK(run({"scan", "--poly", "x"}).code == kExitConfig);
    CHECK(run({"nonsense"}).code == kExitConfig);
    CHECK(run({"scan", "--config", scratch("missing.json").string()}).code == kExitConfig);
    const fs::path bad = scratch("unknown_key.json");
    write(bad, R"({"alphabetSize": 2, "colour": "blue"})");
    CHECK(run({"scan", "--config", bad.string()}).code == kExitConfig);
    const fs::path odd = scratch("odd_alphabet.json");
    write(odd, R"({"alphabetSize": 3})");
    CHECK(run({"scan", "--config", odd.string()}).code == kExitConfig);
}

TEST_CASE("an infeasible table iso exits with code 3") {
    const fs::path cfg = scratch("universal.json");
    write(cfg, R"({"language": {"builtin": "universal"}, "iso": {"mode": "table"}, "budget": 2})");
    const RunResult r = run({"scan", "--config", cfg.string()});
    CHECK(r.code == kExitInfeasible);
    CHECK(r.err.find("length class") != std::string::npos);
}

TEST_CASE("scan writes CSV and a JSON sidecar") {
    const fs::path csv = scratch("scan.csv");
    const RunResult r = run({"scan", "--output", csv.string()});
    CHECK(r.code == kExitPass);
    const std::string text = slurp(csv);
    CHECK(text.rfind(kScanCsvHeader, 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 21);
    const auto summary = nlohmann::json::parse(slurp(scratch("scan.json")));
    CHECK(summary["threshold"].get<double>() == doctest::Approx(-1.0));
    CHECK(summary["passed"].get<bool>());
    CHECK(run({"scan", "--output", scratch("clash.json").string()}).code == kExitConfig);
}

TEST_CASE("scan to stdout is deterministic across worker counts") {
    const RunResult one = run({"scan", "--threads", "1"});
    const RunResult many = run({"scan", "--threads", "7"});
    CHECK(one.code == kExitPass);
    CHECK(one.out == many.out);
    CHECK(one.err == many.err);
    const RunResult inverted = run({"scan", "--invert"});
    CHECK(inverted.code == kExitPass);
    CHECK(inverted.out != one.out);
}

TEST_CASE("iso export is byte-stable and import checks the table") {
    const fs::path cfg = scratch("first_is_two.json");
    write(cfg, R"({"language": {"builtin": "first_is_two"}, "iso": {"mode": "table"}, "budget": 5})");
    const fs::path a = scratch("table_a.json");
    const fs::path b = scratch("table_b.json");
    CHECK(run({"iso", "export", "--config", cfg.string(), "--file", a.string()}).code == kExitPass);
    CHECK(run({"iso", "export", "--config", cfg.string(), "--file", b.string()}).code == kExitPass);
    CHECK(slurp(a) == slurp(b));

    const RunResult ok = run({"iso", "import", "--config", cfg.string(), "--file", a.string()});
    CHECK(ok.code == kExitPass);
    CHECK(nlohmann::json::parse(ok.out)["bijection"].get<bool>());

    // Point two inputs at the same image.
    auto pairs = nlohmann::json::parse(slurp(a));
    pairs[3][1] = pairs[4][1];
    const fs::path tampered = scratch("table_tampered.json");
    write(tampered, pairs.dump());
    const RunResult bad = run({"iso", "verify", "--config", cfg.string(), "--file", tampered.string()});
    CHECK(bad.code == kExitViolation);
    const auto doc = nlohmann::json::parse(bad.out);
    CHECK_FALSE(doc["bijection"].get<bool>());
    CHECK(doc["sharedImages"].size() == 1);
    CHECK(doc["missingImages"].size() == 1);

    CHECK(run({"iso", "import", "--config", cfg.string()}).code == kExitConfig);
    CHECK(run({"iso", "build", "--config", cfg.string()}).code == kExitPass);
}

TEST_CASE("density subcommand") {
    const RunResult r = run({"density", "--e1", "0", "--e2", "2"});
    CHECK(r.code == kExitPass);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.dump().find("31") != std::string::npos);
    CHECK(run({"density"}).code == kExitConfig);
    CHECK(run({"density", "--e1", "2", "--e2", "1"}).code == kExitConfig);
}

TEST_CASE("config parsing") {
    const RunConfig cfg = parse_config(nlohmann::json::parse(R"json({
        "alphabetSize": 4,
        "language": {"builtin": "first_upper_half"},
        "iso": {"mode": "table", "budget": 4},
        "budget": 3,
        "bounds": {"c": "sqrt(1/2)", "poly": [1, 0, 2]},
        "delta": "1/2",
        "balanceMinN": 3
    })json"));
    CHECK(cfg.alphabetSize == 4);
    CHECK(cfg.iso.mode == IsoKind::Table);
    CHECK(cfg.iso_budget() == 4);
    CHECK(cfg.scan.bounds.cSquared == Rational(1, 2));
    CHECK(cfg.scan.bounds.poly.size() == 3);
    CHECK(cfg.scan.delta == Rational(1, 2));
    CHECK(cfg.scan.balanceMinN == 3);
    CHECK(parse_poly("1,0,2") == std::vector<Rational>{1, 0, 2});
    CHECK_THROWS_AS(parse_config(nlohmann::json::parse(R"({"iso": {"mode": "magic"}})")), ConfigError);
    CHECK_THROWS_AS(make_language(parse_config(nlohmann::json::parse(R"({"language": {"builtin": "nope"}})"))),
                    ConfigError);
}

#ifdef PHASEBENCH_HOOKED_PATH
TEST_CASE("hooked binary with a sabotaged tie-break exits 1") {
    const std::string base = std::string("\"") + PHASEBENCH_HOOKED_PATH + "\"";
    const std::string quiet = " > \"" + scratch("hooked.out").string() + "\" 2>&1";
    CHECK(std::system((base + " lemmas --budget 6" + quiet).c_str()) == 0);
    const int status = std::system((base + " lemmas --budget 6 --sabotage-qprime" + quiet).c_str());
    CHECK(WEXITSTATUS(status) == kExitViolation);
}
#endif
