#pragma once

#include "phasebench/config.hpp"
#include "phasebench/density.hpp"
#include "phasebench/transition.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace phasebench {

inline constexpr const char* kScanCsvHeader =
    "tau,n,sign,slice_size,accept_count,accepting_fraction,accepting_fraction_exact,lower_bound_exact,"
    "upper_bound_exact,bottom_fraction_exact";

/// One row per realized (n, sign), in that order. Bounds that are
/// irrational (odd n with c = 1/sqrt(2)) print as "a+b*sqrt(d)".
void write_scan_csv(std::ostream& out, const ScanReport& scan);

/// Threshold, requirement verdicts, balance margins and gaps.
nlohmann::json scan_summary_json(const ScanReport& scan, const RunConfig& config);

nlohmann::json density_json(const DensityReport& report);

/// "out/scan.csv" -> "out/scan.json"; "scan" -> "scan.json".
std::string sidecar_path(const std::string& csvPath);

/// Two-space indented JSON with a trailing newline.
std::string dump(const nlohmann::json& doc);

} // namespace phasebench
