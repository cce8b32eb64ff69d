#include "smadamp/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "smadamp/errors.hpp"

namespace smadamp {

namespace {

struct PresetSpec {
    const char* name;
    const char* description;
    double mass_per_area;
    double v0;
    double nu;
    double t_end;
};

// Block mass per area (g/cm^2), initial block velocity (cm/ms), viscosity and
// time span (ms) of the four damping experiments. Everything else is shared.
constexpr PresetSpec kPresets[] = {
    {"exp1", "m/beta = 200, v0 = -3, nu = 10, [0, 4] ms", 200.0, -3.0, 10.0, 4.0},
    {"exp2", "m/beta = 500, v0 = -3, nu = 10, [0, 4] ms", 500.0, -3.0, 10.0, 4.0},
    {"exp3-novisc", "m/beta = 20, v0 = -1, nu = 0, [0, 20] ms", 20.0, -1.0, 0.0, 20.0},
    {"exp3-visc", "m/beta = 20, v0 = -1, nu = 20, [0, 20] ms", 20.0, -1.0, 20.0, 20.0},
};

const PresetSpec* find_preset(std::string_view name) {
    for (const auto& p : kPresets) {
        if (name == p.name) return &p;
    }
    return nullptr;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("not a number: '" + std::string(text) + "'");
    }
    return v;
}

int parse_int(std::string_view text) {
    int v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("not an integer: '" + std::string(text) + "'");
    }
    return v;
}

JacobianMode parse_jacobian_mode(std::string_view text) {
    if (text == "finite-difference") return JacobianMode::finite_difference;
    if (text == "reuse-per-step") return JacobianMode::reuse_per_step;
    throw ConfigError("expected finite-difference or reuse-per-step, got '" + std::string(text) +
                      "'");
}

struct Field {
    std::function<void(ScenarioConfig&, std::string_view)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

template <typename Member>
Field real(Member member) {
    return {[member](ScenarioConfig& c, std::string_view v) { std::invoke(member, c) = parse_double(v); },
            [member](const ScenarioConfig& c) { return format_double(std::invoke(member, c)); }};
}

template <typename Member>
Field integer(Member member) {
    return {[member](ScenarioConfig& c, std::string_view v) { std::invoke(member, c) = parse_int(v); },
            [member](const ScenarioConfig& c) { return std::to_string(std::invoke(member, c)); }};
}

// Ordered as written by serialize_config.
const std::vector<std::pair<std::string, Field>>& fields() {
    static const std::vector<std::pair<std::string, Field>> table = {
        {"name", {[](ScenarioConfig& c, std::string_view v) { c.name = std::string(v); },
                  [](const ScenarioConfig& c) { return c.name; }}},
        {"material.rho", real([](auto& c) -> auto& { return c.material.rho; })},
        {"material.k1", real([](auto& c) -> auto& { return c.material.k1; })},
        {"material.k2", real([](auto& c) -> auto& { return c.material.k2; })},
        {"material.k3", real([](auto& c) -> auto& { return c.material.k3; })},
        {"material.theta1", real([](auto& c) -> auto& { return c.material.theta1; })},
        {"material.cv", real([](auto& c) -> auto& { return c.material.cv; })},
        {"material.kappa", real([](auto& c) -> auto& { return c.material.kappa; })},
        {"material.kg", real([](auto& c) -> auto& { return c.material.kg; })},
        {"material.nu", real([](auto& c) -> auto& { return c.material.nu; })},
        {"block.mass_per_area", real([](auto& c) -> auto& { return c.block.mass_per_area; })},
        {"block.friction", real([](auto& c) -> auto& { return c.block.friction; })},
        {"block.stiffness", real([](auto& c) -> auto& { return c.block.stiffness; })},
        {"block.v0", real([](auto& c) -> auto& { return c.block.v0; })},
        {"rod.length", real([](auto& c) -> auto& { return c.rod_length; })},
        {"rod.n_intervals", integer([](auto& c) -> auto& { return c.n_intervals; })},
        {"initial.strain0", real([](auto& c) -> auto& { return c.strain0; })},
        {"initial.theta0", real([](auto& c) -> auto& { return c.theta0; })},
        {"run.t_end", real([](auto& c) -> auto& { return c.t_end; })},
        {"solver.dt", real([](auto& c) -> auto& { return c.solver.dt; })},
        {"solver.bdf_order", integer([](auto& c) -> auto& { return c.solver.bdf_order; })},
        {"solver.newton_tol", real([](auto& c) -> auto& { return c.solver.newton_tol; })},
        {"solver.newton_abs_tol",
         real([](auto& c) -> auto& { return c.solver.newton_abs_tol; })},
        {"solver.max_newton_iters",
         integer([](auto& c) -> auto& { return c.solver.max_newton_iters; })},
        {"solver.jacobian_mode",
         {[](ScenarioConfig& c, std::string_view v) { c.solver.jacobian_mode = parse_jacobian_mode(v); },
          [](const ScenarioConfig& c) { return std::string(to_string(c.solver.jacobian_mode)); }}},
        {"output.every", integer([](auto& c) -> auto& { return c.output_every; })},
        {"output.snapshots_every", integer([](auto& c) -> auto& { return c.snapshots_every; })},
        {"output.path",
         {[](ScenarioConfig& c, std::string_view v) { c.output_path = std::filesystem::path(std::string(v)); },
          [](const ScenarioConfig& c) { return c.output_path.string(); }}},
    };
    return table;
}

const Field* find_field(std::string_view key) {
    for (const auto& [name, field] : fields()) {
        if (name == key) return &field;
    }
    return nullptr;
}

}  // namespace

std::string_view to_string(JacobianMode mode) {
    return mode == JacobianMode::reuse_per_step ? "reuse-per-step" : "finite-difference";
}

void ScenarioConfig::validate() const {
    material.validate();
    block.validate();
    solver.validate();
    if (!(rod_length > 0.0)) throw ConfigError("rod.length must be positive");
    if (n_intervals < 4) throw ConfigError("rod.n_intervals must be at least 4");
    if (!std::isfinite(strain0)) throw ConfigError("initial.strain0 must be finite");
    if (!(theta0 > 0.0)) throw ConfigError("initial.theta0 must be positive");
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw ConfigError("run.t_end must be positive");
    if (output_every < 1) throw ConfigError("output.every must be at least 1");
    if (snapshots_every < 0) throw ConfigError("output.snapshots_every must be non-negative");
    if (name.empty() || name.find('\n') != std::string::npos) {
        throw ConfigError("name must be a non-empty single line");
    }
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& p : kPresets) out.emplace_back(p.name);
        return out;
    }();
    return names;
}

std::string preset_description(std::string_view name) {
    const PresetSpec* spec = find_preset(name);
    if (spec == nullptr) throw ConfigError("unknown preset '" + std::string(name) + "'");
    return spec->description;
}

ScenarioConfig preset(std::string_view name) {
    const PresetSpec* spec = find_preset(name);
    if (spec == nullptr) {
        throw ConfigError("unknown preset '" + std::string(name) + "'");
    }
    ScenarioConfig cfg;
    cfg.name = spec->name;
    cfg.block.mass_per_area = spec->mass_per_area;
    cfg.block.v0 = spec->v0;
    cfg.material.nu = spec->nu;
    cfg.t_end = spec->t_end;
    cfg.output_path = spec->name;
    // Small-amplitude 20 ms runs: modified Newton converges in a few
    // iterations and keeps the run at a few minutes.
    if (spec->t_end > 4.0) cfg.solver.jacobian_mode = JacobianMode::reuse_per_step;
    return cfg;
}

ScenarioConfig parse_config(std::string_view text) {
    struct Entry {
        int line;
        std::string key;
        std::string value;
    };
    std::vector<Entry> entries;
    std::set<std::string> seen;
    std::string base = "";

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        const std::string where = "line " + std::to_string(line_no) + ", key '" + key + "': ";
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": missing key");
        if (value.empty()) throw ConfigError(where + "missing value");
        if (!seen.insert(key).second) throw ConfigError(where + "duplicate key");

        if (key == "preset") {
            if (find_preset(value) == nullptr) throw ConfigError(where + "unknown preset '" + value + "'");
            base = value;
        } else if (find_field(key) == nullptr) {
            throw ConfigError(where + "unknown key");
        } else {
            entries.push_back({line_no, key, value});
        }
    }

    ScenarioConfig cfg = base.empty() ? ScenarioConfig{} : preset(base);
    for (const auto& e : entries) {
        try {
            find_field(e.key)->set(cfg, e.value);
        } catch (const ConfigError& err) {
            throw ConfigError("line " + std::to_string(e.line) + ", key '" + e.key + "': " + err.what());
        }
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(std::string_view path_or_preset) {
    if (find_preset(path_or_preset) != nullptr) return preset(path_or_preset);
    const std::filesystem::path path{std::string(path_or_preset)};
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open configuration '" + path.string() +
                          "' (and it is not a preset name)");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::string out;
    for (const auto& [key, field] : fields()) {
        out += key;
        out += " = ";
        out += field.get(cfg);
        out += '\n';
    }
    return out;
}

}  // namespace smadamp
