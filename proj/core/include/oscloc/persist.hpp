#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "oscloc/config.hpp"
#include "oscloc/experiment.hpp"
#include "oscloc/fit.hpp"

namespace oscloc {

/// Bumped whenever a CSV column is added, renamed or reordered.
inline constexpr int kCsvSchemaVersion = 1;

const char* library_version() noexcept;

/// Header `separation,mean,stderr,count`, one row per separation.
void write_table_csv(std::ostream& out, const EstimateTable& table);

/// Reads a table CSV. The first column may be named `separation` or
/// `distance`; `count` (or `N`) is optional.
std::vector<EstimateRow> read_table_csv(const std::string& text);

struct RunRecord {
    RunConfig config;
    std::uint64_t resamples = 0;
    double wall_seconds = 0.0;
};

/// JSON sidecar: config echo (text and structured), seed, library version,
/// wall time and CSV schema version.
std::string sidecar_json(const RunRecord& record);

/// Recovers the config from a sidecar written by sidecar_json.
RunConfig config_from_sidecar(const std::string& json_text);

/// Writes `<prefix>.csv` and `<prefix>.json`; returns the two paths.
std::pair<std::filesystem::path, std::filesystem::path>
write_run(const std::filesystem::path& prefix, const EstimateTable& table, const RunRecord& record);

std::string fit_json(const DecayFit& fit);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace oscloc
