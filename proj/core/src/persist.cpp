#include "oscloc/persist.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oscloc/csv.hpp"
#include "oscloc/errors.hpp"

namespace oscloc {

namespace {

using nlohmann::json;

json number(double v) {
    // JSON has no infinities; keep them as strings.
    if (!std::isfinite(v)) return format_double(v);
    return v;
}

json structured(const RunConfig& c) {
    const auto& m = c.experiment.model;
    const auto& o = c.experiment.observable;
    json window = nullptr;
    if (o.window) window = {{"lower", number(o.window->lower)}, {"upper", number(o.window->upper)}};
    return {
        {"model",
         {{"dimension", m.dimension},
          {"half_width", m.half_width},
          {"side", m.side},
          {"boundary", m.boundary == Boundary::open ? "open" : "periodic"},
          {"mass", m.disorder.mass},
          {"coupling", m.disorder.coupling},
          {"disorder", "uniform"},
          {"spring_min", m.disorder.spring_lower},
          {"spring_width", m.disorder.width},
          {"max_sites", m.max_sites}}},
        {"observable",
         {{"kind", to_string(o.kind)},
          {"alpha", o.alpha},
          {"window", window},
          {"entry", to_string(o.entry)},
          {"beta", o.beta},
          {"s", o.s},
          {"energy", o.z.energy},
          {"epsilon", o.z.epsilon},
          {"f", {o.f_coeff.real(), o.f_coeff.imag()}},
          {"g", {o.g_coeff.real(), o.g_coeff.imag()}},
          {"exponent", o.exponent}}},
        {"execution",
         {{"realizations", c.experiment.realizations},
          {"seed", c.experiment.seed},
          {"workers", c.experiment.workers},
          {"pairs", to_string(c.experiment.pairs)},
          {"output", c.output}}},
        {"fit", {{"r_min", c.fit_r_min}, {"r_max", c.fit_r_max}}},
    };
}

}  // namespace

const char* library_version() noexcept { return OSCLOC_VERSION_STRING; }

void write_table_csv(std::ostream& out, const EstimateTable& table) {
    CsvWriter csv(out);
    csv.header({"separation", "mean", "stderr", "count"});
    for (const auto& row : table.rows) {
        csv.row({std::int64_t{row.separation}, row.mean, row.standard_error, row.count});
    }
}

std::vector<EstimateRow> read_table_csv(const std::string& text) {
    const auto records = parse_csv(text);
    if (records.empty()) throw ConfigError("table CSV is empty");
    const auto& head = records.front();
    auto column = [&](std::initializer_list<const char*> names) -> std::ptrdiff_t {
        for (std::size_t i = 0; i < head.size(); ++i) {
            for (const char* n : names) {
                if (head[i] == n) return static_cast<std::ptrdiff_t>(i);
            }
        }
        return -1;
    };
    const auto sep = column({"separation", "distance"});
    const auto mean = column({"mean"});
    const auto err = column({"stderr"});
    const auto count = column({"count", "N"});
    if (sep < 0 || mean < 0 || err < 0) {
        throw ConfigError("table CSV needs separation (or distance), mean and stderr columns");
    }
    std::vector<EstimateRow> rows;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.size() == 1 && rec[0].empty()) continue;
        if (rec.size() != head.size()) {
            throw ConfigError("table CSV record " + std::to_string(r + 1) + " has " +
                              std::to_string(rec.size()) + " fields, expected " +
                              std::to_string(head.size()));
        }
        EstimateRow row;
        row.separation = static_cast<int>(parse_int(rec[sep], "separation"));
        row.mean = parse_double(rec[mean], "mean");
        row.standard_error = parse_double(rec[err], "stderr");
        if (count >= 0) row.count = static_cast<std::uint64_t>(parse_int(rec[count], "count"));
        rows.push_back(row);
    }
    return rows;
}

std::string sidecar_json(const RunRecord& record) {
    json j = {
        {"format", "oscloc-run"},
        {"csv_schema_version", kCsvSchemaVersion},
        {"library_version", library_version()},
        {"seed", record.config.experiment.seed},
        {"realizations", record.config.experiment.realizations},
        {"resamples", record.resamples},
        {"wall_time_seconds", record.wall_seconds},
        {"config_text", echo_config(record.config)},
        {"config", structured(record.config)},
    };
    return j.dump(2) + "\n";
}

RunConfig config_from_sidecar(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("sidecar is not valid JSON: ") + e.what());
    }
    if (!j.contains("config_text") || !j["config_text"].is_string()) {
        throw ConfigError("sidecar has no config_text field");
    }
    return parse_config(j["config_text"].get<std::string>());
}

std::pair<std::filesystem::path, std::filesystem::path>
write_run(const std::filesystem::path& prefix, const EstimateTable& table, const RunRecord& record) {
    auto csv_path = prefix;
    csv_path += ".csv";
    auto json_path = prefix;
    json_path += ".json";
    std::ostringstream csv;
    write_table_csv(csv, table);
    write_file(csv_path, csv.str());
    write_file(json_path, sidecar_json(record));
    return {csv_path, json_path};
}

std::string fit_json(const DecayFit& fit) {
    json j = {
        {"prefactor", fit.prefactor},
        {"decay_rate", fit.decay_rate},
        {"decay_rate_stderr", fit.decay_rate_stderr},
        {"r_squared", fit.r_squared},
        {"r_min", fit.r_min},
        {"r_max", fit.r_max},
        {"points", fit.points},
    };
    return j.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

}  // namespace oscloc
