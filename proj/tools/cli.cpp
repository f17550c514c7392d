#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oscloc/config.hpp"
#include "oscloc/csv.hpp"
#include "oscloc/dynamics.hpp"
#include "oscloc/errors.hpp"
#include "oscloc/experiment.hpp"
#include "oscloc/fit.hpp"
#include "oscloc/persist.hpp"
#include "oscloc/presets.hpp"
#include "oscloc/states.hpp"
#include "oscloc/system.hpp"

namespace oscloc::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct ConfigOptions {
    std::string config_path;
    std::string preset;
    std::vector<std::string> overrides;
    std::uint64_t realization = 0;
};

struct OutputOptions {
    std::string prefix;
};

struct PairOptions {
    std::optional<long> x;
    std::optional<long> y;
};

struct TimeOptions {
    std::optional<double> time;
    bool sup = false;
};

void add_config_options(CLI::App* sub, ConfigOptions& opts) {
    sub->add_option("--config,-c", opts.config_path, "Config file");
    sub->add_option("--preset", opts.preset, "Start from a regime preset instead of a file");
    sub->add_option("--set", opts.overrides, "Override a config key, section.key=value")
        ->take_all()
        ->allow_extra_args(false);
}

void add_output_option(CLI::App* sub, OutputOptions& opts) {
    sub->add_option("--output,-o", opts.prefix,
                    "Write <prefix>.csv and a <prefix>.json sidecar instead of printing the CSV");
}

void add_pair_options(CLI::App* sub, PairOptions& opts) {
    sub->add_option("--x", opts.x, "First site index (default: pair policy from the config)");
    sub->add_option("--y", opts.y, "Second site index");
}

void add_time_options(CLI::App* sub, TimeOptions& opts) {
    auto* t = sub->add_option("--time,-t", opts.time, "Evaluate at this time");
    auto* s = sub->add_flag("--sup", opts.sup, "Report the supremum over all times");
    t->excludes(s);
}

RunConfig load_config(const ConfigOptions& opts) {
    if (!opts.config_path.empty() && !opts.preset.empty()) {
        throw ConfigError("--config and --preset are mutually exclusive");
    }
    std::string text;
    if (!opts.preset.empty()) text = echo_config(regime_preset(opts.preset));
    else if (!opts.config_path.empty()) text = read_file(opts.config_path);
    return parse_config(text, opts.overrides);
}

/// The realization a single-system subcommand works on.
OscillatorSystem load_system(const RunConfig& config, std::uint64_t realization) {
    const auto& model = config.experiment.model;
    DisorderSpec disorder = model.disorder;
    disorder.seed = config.experiment.seed;
    return OscillatorSystem(sample_params(disorder, model.lattice(), realization));
}

std::vector<SitePair> selected_pairs(const RunConfig& config, const Lattice& lattice,
                                     const PairOptions& opts) {
    if (opts.x.has_value() != opts.y.has_value()) throw ConfigError("--x and --y go together");
    if (opts.x) {
        const auto n = lattice.site_count();
        if (*opts.x < 0 || *opts.x >= n || *opts.y < 0 || *opts.y >= n) {
            throw ConfigError("site index out of range [0, " + std::to_string(n) + ")");
        }
        return {{*opts.x, *opts.y, lattice.distance(*opts.x, *opts.y)}};
    }
    return site_pairs(lattice, config.experiment.pairs);
}

double require_time(const TimeOptions& opts) {
    if (!opts.time && !opts.sup) throw ConfigError("pass --time T or --sup");
    return opts.time.value_or(0.0);
}

/// Emits CSV either to `out` or to <prefix>.csv plus a sidecar describing the run.
void emit(const std::string& csv, const OutputOptions& output, const std::string& subcommand,
          const RunConfig& config, const std::vector<std::string>& args, Clock::time_point start,
          std::ostream& out) {
    if (output.prefix.empty()) {
        out << csv;
        return;
    }
    std::filesystem::path csv_path = output.prefix, json_path = output.prefix;
    csv_path += ".csv";
    json_path += ".json";
    write_file(csv_path, csv);
    const double wall = std::chrono::duration<double>(Clock::now() - start).count();
    nlohmann::json j = {
        {"format", "oscloc-output"},
        {"subcommand", subcommand},
        {"arguments", args},
        {"csv_schema_version", kCsvSchemaVersion},
        {"library_version", library_version()},
        {"seed", config.experiment.seed},
        {"wall_time_seconds", wall},
        {"config_text", echo_config(config)},
    };
    write_file(json_path, j.dump(2) + "\n");
}

std::vector<std::pair<double, double>> read_symbol_file(const std::string& path, Eigen::Index sites) {
    const auto records = parse_csv(read_file(path));
    if (records.empty() || records.front() != std::vector<std::string>{"site", "re", "im"}) {
        throw ConfigError(path + ": expected header site,re,im");
    }
    std::vector<std::pair<double, double>> values(static_cast<std::size_t>(sites), {0.0, 0.0});
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.size() == 1 && rec[0].empty()) continue;
        if (rec.size() != 3) throw ConfigError(path + ": record " + std::to_string(r + 1) + " needs 3 fields");
        const auto site = parse_int(rec[0], "site");
        if (site < 0 || site >= sites) throw ConfigError(path + ": site " + rec[0] + " out of range");
        values[static_cast<std::size_t>(site)] = {parse_double(rec[1], "re"), parse_double(rec[2], "im")};
    }
    return values;
}

WeylSymbol symbol_from(const std::vector<std::pair<double, double>>& values) {
    WeylSymbol f = WeylSymbol::zero(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        f.values(static_cast<Eigen::Index>(i)) = {values[i].first, values[i].second};
    }
    return f;
}

void print_error(std::ostream& err, const char* category, const std::string& message) {
    nlohmann::json j = {{"error", {{"category", category}, {"message", message}}}};
    err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Disordered harmonic lattices: spectra, commutator bounds, correlations and "
                 "disorder-averaged decay estimates.",
                 "oscloc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(library_version()));

    std::function<void()> action;
    const auto start = Clock::now();
    ConfigOptions cfg;
    OutputOptions output;
    PairOptions pair;
    TimeOptions time;

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues gamma^2 and frequencies gamma of h");
    std::string vectors_path;
    add_config_options(spectrum, cfg);
    add_output_option(spectrum, output);
    spectrum->add_option("--realization", cfg.realization, "Disorder realization index");
    spectrum->add_option("--vectors", vectors_path, "Also write eigenvectors as CSV (k,site,value)");
    spectrum->callback([&] {
        action = [&] {
            const auto config = load_config(cfg);
            const auto system = load_system(config, cfg.realization);
            const auto& spec = system.spectrum();
            std::ostringstream csv;
            CsvWriter w(csv);
            w.header({"k", "eigenvalue", "gamma"});
            for (Eigen::Index k = 0; k < spec.size(); ++k) {
                w.row({std::int64_t{k}, spec.eigenvalues()(k), spec.gamma()(k)});
            }
            if (!vectors_path.empty()) {
                std::ostringstream vec;
                CsvWriter v(vec);
                v.header({"k", "site", "value"});
                for (Eigen::Index k = 0; k < spec.size(); ++k) {
                    for (Eigen::Index x = 0; x < spec.size(); ++x) {
                        v.row({std::int64_t{k}, std::int64_t{x}, spec.eigenvectors()(x, k)});
                    }
                }
                write_file(vectors_path, vec.str());
            }
            emit(csv.str(), output, "spectrum", config, args, start, out);
        };
    });

    // lr-commutator
    auto* lr = app.add_subcommand("lr-commutator", "Commutator norms between evolved and fixed observables");
    std::string lr_observable = "weyl";
    std::string f_file, g_file;
    add_config_options(lr, cfg);
    add_output_option(lr, output);
    add_pair_options(lr, pair);
    add_time_options(lr, time);
    lr->add_option("--realization", cfg.realization, "Disorder realization index");
    lr->add_option("--observable", lr_observable, "weyl, qq, qp, pq or pp")
        ->check(CLI::IsMember({"weyl", "qq", "qp", "pq", "pp"}));
    lr->add_option("--f-file", f_file, "Symbol f as CSV site,re,im (weyl only)");
    lr->add_option("--g-file", g_file, "Symbol g as CSV site,re,im (weyl only)");
    lr->callback([&] {
        action = [&] {
            const auto config = load_config(cfg);
            const auto system = load_system(config, cfg.realization);
            const double t = require_time(time);
            const auto& obs = config.experiment.observable;
            std::ostringstream csv;
            CsvWriter w(csv);
            w.header({"x", "y", "value"});
            if (!f_file.empty() || !g_file.empty()) {
                if (lr_observable != "weyl" || f_file.empty() || g_file.empty()) {
                    throw ConfigError("--f-file and --g-file go together and need --observable weyl");
                }
                const auto f = symbol_from(read_symbol_file(f_file, system.size()));
                const auto g = symbol_from(read_symbol_file(g_file, system.size()));
                const double v = time.sup ? weyl_commutator_sup(system, f, g)
                                          : weyl_commutator_norm(system, f, g, t);
                w.row({std::string("f"), std::string("g"), v});
            } else {
                for (const auto& p : selected_pairs(config, system.lattice(), pair)) {
                    double v;
                    if (lr_observable == "weyl") {
                        const auto f = WeylSymbol::delta(system.size(), p.x, obs.f_coeff);
                        const auto g = WeylSymbol::delta(system.size(), p.y, obs.g_coeff);
                        v = time.sup ? weyl_commutator_sup(system, f, g)
                                     : weyl_commutator_norm(system, f, g, t);
                    } else {
                        const auto [row, col] = matrix_position(parse_pq_entry(lr_observable));
                        v = time.sup ? pq_commutator_sup(system, p.x, p.y)(row, col)
                                     : std::abs(pq_commutator_matrix(system, p.x, p.y, t)(row, col));
                    }
                    w.row({std::int64_t{p.x}, std::int64_t{p.y}, v});
                }
            }
            emit(csv.str(), output, "lr-commutator", config, args, start, out);
        };
    });

    // gs-correlations / thermal-correlations
    auto correlations = [&](CLI::App* sub, bool thermal, std::optional<double>& beta) {
        add_config_options(sub, cfg);
        add_output_option(sub, output);
        add_pair_options(sub, pair);
        add_time_options(sub, time);
        sub->add_option("--realization", cfg.realization, "Disorder realization index");
        if (thermal) sub->add_option("--beta", beta, "Inverse temperature (default: observable.beta)");
        sub->callback([&, sub, thermal] {
            action = [&, sub, thermal] {
                const auto config = load_config(cfg);
                const auto system = load_system(config, cfg.realization);
                const double t = require_time(time);
                const ThermalSpec state = thermal
                    ? ThermalSpec::at(beta.value_or(config.experiment.observable.beta))
                    : ThermalSpec::ground();
                std::ostringstream csv;
                CsvWriter w(csv);
                w.header({"x", "y", "entry", "real", "imag"});
                for (const auto& p : selected_pairs(config, system.lattice(), pair)) {
                    Eigen::Matrix2cd m;
                    if (time.sup) m = pq_correlation_sup(system, p.x, p.y, state).cast<std::complex<double>>();
                    else m = thermal_pq_correlations(system, p.x, p.y, t, state);
                    for (PqEntry e : {PqEntry::qq, PqEntry::qp, PqEntry::pq, PqEntry::pp}) {
                        const auto [row, col] = matrix_position(e);
                        w.row({std::int64_t{p.x}, std::int64_t{p.y}, std::string(to_string(e)),
                               m(row, col).real(), m(row, col).imag()});
                    }
                }
                emit(csv.str(), output, sub->get_name(), config, args, start, out);
            };
        });
    };
    std::optional<double> no_beta, thermal_beta;
    correlations(app.add_subcommand("gs-correlations", "Ground-state position/momentum correlations"),
                 false, no_beta);
    correlations(app.add_subcommand("thermal-correlations", "Thermal position/momentum correlations"),
                 true, thermal_beta);

    // green-moments
    auto* green = app.add_subcommand("green-moments", "Disorder-averaged |G(x, y; z)|^s by distance");
    std::optional<unsigned> green_workers;
    add_config_options(green, cfg);
    add_output_option(green, output);
    green->add_option("--workers", green_workers, "Worker threads (default: execution.workers)");
    green->callback([&] {
        action = [&] {
            auto config = load_config(cfg);
            auto experiment = config.experiment;
            experiment.observable.kind = ObservableKind::green_moment;
            experiment.observable.exponent = 1.0;
            if (green_workers) experiment.workers = *green_workers;
            const auto table = run_experiment(experiment);
            std::ostringstream csv;
            CsvWriter w(csv);
            w.header({"distance", "mean", "stderr", "N"});
            for (const auto& row : table.rows) {
                w.row({std::int64_t{row.separation}, row.mean, row.standard_error,
                       experiment.realizations});
            }
            emit(csv.str(), output, "green-moments", config, args, start, out);
        };
    });

    // correlator
    auto* correlator = app.add_subcommand("correlator", "Eigenfunction correlator Q_alpha(x, y) on one realization");
    add_config_options(correlator, cfg);
    add_output_option(correlator, output);
    add_pair_options(correlator, pair);
    correlator->add_option("--realization", cfg.realization, "Disorder realization index");
    correlator->callback([&] {
        action = [&] {
            const auto config = load_config(cfg);
            const auto system = load_system(config, cfg.realization);
            const auto& obs = config.experiment.observable;
            std::ostringstream csv;
            CsvWriter w(csv);
            w.header({"x", "y", "value"});
            for (const auto& p : selected_pairs(config, system.lattice(), pair)) {
                w.row({std::int64_t{p.x}, std::int64_t{p.y},
                       correlator_Q(system.spectrum(), obs.alpha, p.x, p.y, obs.window)});
            }
            emit(csv.str(), output, "correlator", config, args, start, out);
        };
    });

    // fit-decay
    auto* fit = app.add_subcommand("fit-decay", "Exponential fit of a table CSV");
    std::string fit_input, fit_output;
    std::optional<int> r_min, r_max;
    fit->add_option("--input,-i", fit_input, "Table CSV (separation or distance, mean, stderr)")->required();
    fit->add_option("--r-min", r_min, "Smallest separation in the fit (default 5)");
    fit->add_option("--r-max", r_max, "Largest separation in the fit (default 40)");
    fit->add_option("--output,-o", fit_output, "Write the fit JSON here instead of printing it");
    fit->callback([&] {
        action = [&] {
            const RunConfig defaults;
            const auto rows = read_table_csv(read_file(fit_input));
            const auto result = fit_exponential_decay(rows, r_min.value_or(defaults.fit_r_min),
                                                      r_max.value_or(defaults.fit_r_max));
            const auto text = fit_json(result);
            if (fit_output.empty()) out << text;
            else write_file(fit_output, text);
        };
    });

    // run-experiment
    auto* experiment = app.add_subcommand("run-experiment", "Disorder-averaged estimate table plus sidecar");
    std::optional<unsigned> run_workers;
    bool with_fit = false;
    add_config_options(experiment, cfg);
    add_output_option(experiment, output);
    experiment->add_option("--workers", run_workers, "Worker threads (default: execution.workers)");
    experiment->add_flag("--fit", with_fit, "Also fit the table over the config's fit window");
    experiment->callback([&] {
        action = [&] {
            auto config = load_config(cfg);
            if (run_workers) {
                if (*run_workers < 1) throw ConfigError("--workers must be >= 1");
                config.experiment.workers = *run_workers;
            }
            if (!output.prefix.empty()) config.output = output.prefix;
            const auto table = run_experiment(config.experiment);
            RunRecord record{config, table.resamples,
                             std::chrono::duration<double>(Clock::now() - start).count()};
            const auto [csv_path, json_path] = write_run(config.output, table, record);
            if (with_fit) {
                const auto result = fit_exponential_decay(table, config.fit_r_min, config.fit_r_max);
                std::filesystem::path fit_path = config.output;
                fit_path += ".fit.json";
                write_file(fit_path, fit_json(result));
            }
            out << csv_path.string() << "\n" << json_path.string() << "\n";
        };
    });

    // preset
    auto* preset = app.add_subcommand("preset", "Print or write a regime preset config");
    std::string preset_name, preset_output;
    preset->add_option("name", preset_name, "band_edge_static, large_disorder or one_dimensional")->required();
    preset->add_option("--output,-o", preset_output, "Write the config here instead of printing it");
    preset->callback([&] {
        action = [&] {
            const auto text = echo_config(regime_preset(preset_name));
            if (preset_output.empty()) out << text;
            else write_file(preset_output, text);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << library_version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        print_error(err, to_string(ErrorCategory::config), e.what());
        return exit_code(ErrorCategory::config);
    }

    try {
        if (action) action();
        return 0;
    } catch (const Error& e) {
        print_error(err, to_string(e.category()), e.what());
        return exit_code(e.category());
    } catch (const std::exception& e) {
        print_error(err, "internal", e.what());
        return 1;
    }
}

}  // namespace oscloc::cli
