#include "oscloc/config.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "oscloc/csv.hpp"
#include "oscloc/errors.hpp"

namespace oscloc {

namespace {

struct Entry {
    std::string value;
    std::string origin;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

using Setter = std::function<void(RunConfig&, std::string_view, const std::string&)>;

double as_double(std::string_view v, const std::string& key) { return parse_double(v, key); }

int as_int(std::string_view v, const std::string& key) {
    const auto n = parse_int(v, key);
    if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max()) {
        throw ConfigError(key + ": value out of range");
    }
    return static_cast<int>(n);
}

std::uint64_t as_count(std::string_view v, const std::string& key) {
    const auto n = parse_int(v, key);
    if (n < 0) throw ConfigError(key + ": must be non-negative");
    return static_cast<std::uint64_t>(n);
}

double at_least(std::string_view v, const std::string& key, double lower, bool strict) {
    const double x = as_double(v, key);
    if (strict ? !(x > lower) : !(x >= lower)) {
        throw ConfigError(key + ": must be " + (strict ? "> " : ">= ") + format_double(lower) +
                          ", got " + std::string(v));
    }
    return x;
}

int int_at_least(std::string_view v, const std::string& key, int lower) {
    const int x = as_int(v, key);
    if (x < lower) {
        throw ConfigError(key + ": must be >= " + std::to_string(lower) + ", got " + std::string(v));
    }
    return x;
}

std::optional<EnergyWindow>& window(RunConfig& c) {
    auto& w = c.experiment.observable.window;
    if (!w) w = EnergyWindow{};
    return w;
}

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table{
        {"model.dimension", [](RunConfig& c, auto v, auto& k) { c.experiment.model.dimension = int_at_least(v, k, 1); }},
        {"model.half_width", [](RunConfig& c, auto v, auto& k) { c.experiment.model.half_width = int_at_least(v, k, 0); }},
        {"model.side", [](RunConfig& c, auto v, auto& k) { c.experiment.model.side = int_at_least(v, k, 3); }},
        {"model.boundary",
         [](RunConfig& c, auto v, auto& k) {
             if (v == "open") c.experiment.model.boundary = Boundary::open;
             else if (v == "periodic") c.experiment.model.boundary = Boundary::periodic;
             else throw ConfigError(k + ": expected open or periodic, got '" + std::string(v) + "'");
         }},
        {"model.mass", [](RunConfig& c, auto v, auto& k) { c.experiment.model.disorder.mass = at_least(v, k, 0.0, true); }},
        {"model.coupling", [](RunConfig& c, auto v, auto& k) { c.experiment.model.disorder.coupling = at_least(v, k, 0.0, false); }},
        {"model.disorder",
         [](RunConfig&, auto v, auto& k) {
             if (v != "uniform") throw ConfigError(k + ": only 'uniform' disorder is supported");
         }},
        {"model.spring_min", [](RunConfig& c, auto v, auto& k) { c.experiment.model.disorder.spring_lower = at_least(v, k, 0.0, false); }},
        {"model.spring_width", [](RunConfig& c, auto v, auto& k) { c.experiment.model.disorder.width = at_least(v, k, 0.0, false); }},
        {"model.max_sites", [](RunConfig& c, auto v, auto& k) { c.experiment.model.max_sites = as_count(v, k); }},
        {"observable.kind", [](RunConfig& c, auto v, auto&) { c.experiment.observable.kind = parse_observable_kind(v); }},
        {"observable.alpha", [](RunConfig& c, auto v, auto& k) { c.experiment.observable.alpha = as_double(v, k); }},
        {"observable.window_lower", [](RunConfig& c, auto v, auto& k) { window(c)->lower = as_double(v, k); }},
        {"observable.window_upper", [](RunConfig& c, auto v, auto& k) { window(c)->upper = as_double(v, k); }},
        {"observable.entry", [](RunConfig& c, auto v, auto&) { c.experiment.observable.entry = parse_pq_entry(v); }},
        {"observable.beta", [](RunConfig& c, auto v, auto& k) { c.experiment.observable.beta = at_least(v, k, 0.0, true); }},
        {"observable.s", [](RunConfig& c, auto v, auto& k) {
             const double x = as_double(v, k);
             if (!(x > 0.0 && x < 1.0)) throw ConfigError(k + ": must lie in (0, 1), got " + std::string(v));
             c.experiment.observable.s = x;
         }},
        {"observable.energy", [](RunConfig& c, auto v, auto& k) { c.experiment.observable.z.energy = as_double(v, k); }},
        {"observable.epsilon", [](RunConfig& c, auto v, auto& k) { c.experiment.observable.z.epsilon = as_double(v, k); }},
        {"observable.f_re", [](RunConfig& c, auto v, auto& k) { c.experiment.observable.f_coeff.real(as_double(v, k)); }},
        {"observable.f_im", [](RunConfig& c, auto v, auto& k) { c.experiment.observable.f_coeff.imag(as_double(v, k)); }},
        {"observable.g_re", [](RunConfig& c, auto v, auto& k) { c.experiment.observable.g_coeff.real(as_double(v, k)); }},
        {"observable.g_im", [](RunConfig& c, auto v, auto& k) { c.experiment.observable.g_coeff.imag(as_double(v, k)); }},
        {"observable.exponent", [](RunConfig& c, auto v, auto& k) {
             const double r = as_double(v, k);
             if (!(r > 0.0 && r <= 1.0)) throw ConfigError(k + ": must lie in (0, 1], got " + std::string(v));
             c.experiment.observable.exponent = r;
         }},
        {"execution.realizations", [](RunConfig& c, auto v, auto& k) { c.experiment.realizations = static_cast<std::uint64_t>(int_at_least(v, k, 1)); }},
        {"execution.seed", [](RunConfig& c, auto v, auto& k) { c.experiment.seed = as_count(v, k); }},
        {"execution.workers", [](RunConfig& c, auto v, auto& k) { c.experiment.workers = static_cast<unsigned>(int_at_least(v, k, 1)); }},
        {"execution.pairs", [](RunConfig& c, auto v, auto&) { c.experiment.pairs = parse_pair_policy(v); }},
        {"execution.output", [](RunConfig& c, auto v, auto&) { c.output = std::string(v); }},
        {"fit.r_min", [](RunConfig& c, auto v, auto& k) { c.fit_r_min = as_int(v, k); }},
        {"fit.r_max", [](RunConfig& c, auto v, auto& k) { c.fit_r_max = as_int(v, k); }},
    };
    return table;
}

void put(std::map<std::string, Entry>& entries, std::vector<std::string>& order,
         const std::string& key, std::string value, const std::string& origin) {
    if (!setters().count(key)) throw ConfigError(origin + ": unknown key '" + key + "'");
    if (!entries.count(key)) order.push_back(key);
    entries[key] = {std::move(value), origin};
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
    std::map<std::string, Entry> entries;
    std::vector<std::string> order;
    std::string section;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (int line_no = 1; std::getline(in, raw); ++line_no) {
        const std::string origin = "line " + std::to_string(line_no);
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(origin + ": malformed section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "model" && section != "observable" && section != "execution" &&
                section != "fit") {
                throw ConfigError(origin + ": unknown section '" + section + "'");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(origin + ": expected key = value");
        if (section.empty()) throw ConfigError(origin + ": key outside of any section");
        const std::string key = section + "." + std::string(trim(line.substr(0, eq)));
        if (entries.count(key)) throw ConfigError(origin + ": duplicate key '" + key + "'");
        put(entries, order, key, std::string(trim(line.substr(eq + 1))), origin);
    }
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ConfigError("override '" + o + "': expected section.key=value");
        put(entries, order, std::string(trim(std::string_view(o).substr(0, eq))),
            std::string(trim(std::string_view(o).substr(eq + 1))), "override '" + o + "'");
    }

    RunConfig config;
    for (const auto& key : order) {
        const auto& entry = entries.at(key);
        try {
            setters().at(key)(config, entry.value, key);
        } catch (const ConfigError& e) {
            throw ConfigError(entry.origin + ": " + e.what());
        }
    }
    auto& w = config.experiment.observable.window;
    if (w && std::isinf(w->lower) && w->lower < 0 && std::isinf(w->upper) && w->upper > 0) {
        w.reset();
    }
    try {
        config.experiment.validate();
        if (config.fit_r_min > config.fit_r_max) throw ConfigError("fit.r_min exceeds fit.r_max");
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("constraint violated: ") + e.what());
    }
    return config;
}

std::string echo_config(const RunConfig& c) {
    const auto& m = c.experiment.model;
    const auto& o = c.experiment.observable;
    const auto& x = c.experiment;
    const EnergyWindow w = o.window.value_or(EnergyWindow{});
    std::ostringstream out;
    out << "[model]\n"
        << "dimension = " << m.dimension << "\n"
        << "half_width = " << m.half_width << "\n"
        << "side = " << m.side << "\n"
        << "boundary = " << (m.boundary == Boundary::open ? "open" : "periodic") << "\n"
        << "mass = " << format_double(m.disorder.mass) << "\n"
        << "coupling = " << format_double(m.disorder.coupling) << "\n"
        << "disorder = uniform\n"
        << "spring_min = " << format_double(m.disorder.spring_lower) << "\n"
        << "spring_width = " << format_double(m.disorder.width) << "\n"
        << "max_sites = " << m.max_sites << "\n"
        << "\n[observable]\n"
        << "kind = " << to_string(o.kind) << "\n"
        << "alpha = " << format_double(o.alpha) << "\n"
        << "window_lower = " << format_double(w.lower) << "\n"
        << "window_upper = " << format_double(w.upper) << "\n"
        << "entry = " << to_string(o.entry) << "\n"
        << "beta = " << format_double(o.beta) << "\n"
        << "s = " << format_double(o.s) << "\n"
        << "energy = " << format_double(o.z.energy) << "\n"
        << "epsilon = " << format_double(o.z.epsilon) << "\n"
        << "f_re = " << format_double(o.f_coeff.real()) << "\n"
        << "f_im = " << format_double(o.f_coeff.imag()) << "\n"
        << "g_re = " << format_double(o.g_coeff.real()) << "\n"
        << "g_im = " << format_double(o.g_coeff.imag()) << "\n"
        << "exponent = " << format_double(o.exponent) << "\n"
        << "\n[execution]\n"
        << "realizations = " << x.realizations << "\n"
        << "seed = " << x.seed << "\n"
        << "workers = " << x.workers << "\n"
        << "pairs = " << to_string(x.pairs) << "\n"
        << "output = " << c.output << "\n"
        << "\n[fit]\n"
        << "r_min = " << c.fit_r_min << "\n"
        << "r_max = " << c.fit_r_max << "\n";
    return out.str();
}

}  // namespace oscloc
