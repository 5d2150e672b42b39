#include "phasebench/report.hpp"

#include <cstdio>
#include <filesystem>
#include <ostream>

namespace phasebench {

using nlohmann::json;

namespace {

std::string decimal12(double value) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

json param_json(const ParamValue& p) {
    return {{"tau", decimal12(p.tau())}, {"sign", p.sign}, {"n", p.n}};
}

json violations_json(const std::vector<BoundViolation>& violations) {
    json out = json::array();
    for (const BoundViolation& v : violations)
        out.push_back({{"sign", v.sign}, {"n", v.n}, {"detail", v.detail}});
    return out;
}

json requirement12_json(const Requirement12Result& r) {
    return {{"passed", r.passed},
            {"envelopeMonotone", r.envelopeMonotone},
            {"informativeAtEdge", r.informativeAtEdge},
            {"slicesChecked", r.slicesChecked},
            {"violations", violations_json(r.violations)}};
}

json optional_big(const std::optional<BigInt>& v) { return v ? json(v->str()) : json(nullptr); }

} // namespace

void write_scan_csv(std::ostream& out, const ScanReport& scan) {
    out << kScanCsvHeader << '\n';
    for (const SliceStats& s : scan.slices) {
        out << s.param().tau_string() << ',' << s.n << ',' << s.sign << ',' << s.sliceSize << ',' << s.acceptedCount
            << ',' << decimal12(to_double(s.accepting_fraction())) << ',' << s.accepting_fraction_exact() << ','
            << s.lowerBound.to_string() << ',' << s.upperBound.to_string() << ',' << s.bottom_fraction_exact() << '\n';
    }
}

json scan_summary_json(const ScanReport& scan, const RunConfig& config) {
    json doc;
    doc["alphabetSize"] = scan.alphabetSize;
    doc["language"] = language_label(config);
    doc["iso"] = config.iso.mode == IsoKind::Identity ? "identity" : "table";
    doc["budget"] = scan.budget;
    doc["orientation"] = to_string(scan.orientation);

    json poly = json::array();
    for (const Rational& c : scan.options.bounds.poly)
        poly.push_back(fraction_string(c));
    doc["bounds"] = {{"c", scan.options.bounds.c_string()}, {"poly", poly}};

    doc["skippedUndefined"] = scan.skippedUndefined;
    doc["wrongDecisions"] = scan.wrong_decisions();
    doc["errorless"] = scan.errorless();
    doc["boundsHold"] = scan.bounds_hold();
    doc["boundViolations"] = violations_json(verify_acc_bounds(scan));

    if (scan.threshold.value) {
        doc["threshold"] = scan.threshold.value->tau();
        doc["thresholdExact"] = param_json(*scan.threshold.value);
    } else {
        doc["threshold"] = nullptr;
        doc["thresholdExact"] = nullptr;
    }
    doc["thresholdDiagnostic"] = scan.threshold.diagnostic;

    doc["requirement1"] = requirement12_json(scan.requirement1);
    doc["requirement2"] = requirement12_json(scan.requirement2);

    json windows = json::array();
    for (const DensityWindow& w : scan.requirement3.windows) {
        windows.push_back({{"low", fraction_string(w.lowEdge)},
                           {"high", fraction_string(w.highEdge)},
                           {"nLow", w.nLow},
                           {"nHigh", w.nHigh},
                           {"count", w.count.str()},
                           {"empty", w.empty},
                           {"ratio", w.ratio ? json(fraction_string(*w.ratio)) : json(nullptr)}});
    }
    doc["requirement3"] = {
        {"passed", scan.requirement3.passed},
        {"delta", fraction_string(scan.options.delta)},
        {"exemptRadius", fraction_string(scan.options.exemptRadius)},
        {"growthBase", fraction_string(scan.options.growthBase.value_or(Rational(scan.alphabetSize)))},
        {"windows", windows},
        {"note", scan.requirement3.note}};

    json rows = json::array();
    for (const BalanceRow& r : scan.balance.rows) {
        rows.push_back({{"n", r.n},
                        {"inMargin", fraction_string(r.inFraction)},
                        {"outMargin", fraction_string(r.outFraction)},
                        {"required", fraction_string(r.required)},
                        {"passed", r.passed},
                        {"exempt", r.exempt}});
    }
    doc["balance"] = {{"passed", scan.balance.passed},
                      {"sideCondition", scan.balance.sideCondition},
                      {"minN", scan.options.balanceMinN},
                      {"rows", rows}};

    json gaps = json::array();
    for (const ParamValue& g : scan.gaps)
        gaps.push_back(param_json(g));
    doc["gaps"] = gaps;
    doc["passed"] = scan.passed();
    return doc;
}

json density_json(const DensityReport& r) {
    return {{"alphabetSize", r.alphabetSize},
            {"e1", fraction_string(r.e1)},
            {"e2", fraction_string(r.e2)},
            {"delta", fraction_string(r.delta)},
            {"nLow", r.nLow},
            {"nHigh", r.nHigh},
            {"endpointsAligned", r.endpointsAligned},
            {"enumeratedCount", optional_big(r.enumeratedCount)},
            {"closedFormCount", r.closedFormCount.str()},
            {"enumeratedExcludingUndefined", optional_big(r.enumeratedExcludingUndefined)},
            {"closedFormExcludingUndefined", r.closedFormExcludingUndefined.str()},
            {"zeroStartForm", optional_big(r.zeroStartForm)},
            {"fixedWidthForm", optional_big(r.fixedWidthForm)},
            {"consistent", r.consistent()}};
}

std::string sidecar_path(const std::string& csvPath) {
    std::filesystem::path p(csvPath);
    if (p.extension() == ".json")
        throw ConfigError("scan output must not itself end in .json");
    p.replace_extension(".json");
    return p.string();
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

} // namespace phasebench
