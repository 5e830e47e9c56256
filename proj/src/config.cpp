#include "heatplate/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace heatplate {

namespace {

using nlohmann::json;

// Reads the keys of one section into their targets, rejecting anything
// that is not listed.
class Section {
public:
    Section(const json& doc, std::string name) : name_(std::move(name)) {
        if (!doc.contains(name_)) return;
        node_ = &doc.at(name_);
        if (!node_->is_object()) throw ConfigError(name_ + ": must be an object");
    }

    void reject_unknown(std::initializer_list<std::string_view> keys) const {
        if (!node_) return;
        for (const auto& [key, value] : node_->items()) {
            bool known = false;
            for (auto k : keys) known = known || key == k;
            if (!known) throw ConfigError(name_ + "." + key + ": unknown key");
        }
    }

    const json* find(const char* key) const {
        if (!node_ || !node_->contains(key)) return nullptr;
        return &node_->at(key);
    }

    void number(const char* key, double& out) const {
        if (const json* v = find(key)) {
            if (!v->is_number()) throw ConfigError(path(key) + ": must be a number");
            out = v->get<double>();
            if (!std::isfinite(out)) throw ConfigError(path(key) + ": must be finite");
        }
    }

    void count(const char* key, std::size_t& out) const {
        if (const json* v = find(key)) {
            if (!v->is_number_integer())
                throw ConfigError(path(key) + ": must be an integer");
            if (v->is_number_unsigned()) {
                out = v->get<std::size_t>();
            } else {
                // negative integers land here; report the same way as
                // an out-of-range value
                out = 0;
            }
        }
    }

    void flag(const char* key, bool& out) const {
        if (const json* v = find(key)) {
            if (!v->is_boolean()) throw ConfigError(path(key) + ": must be true or false");
            out = v->get<bool>();
        }
    }

    std::string path(const char* key) const { return name_ + "." + key; }

private:
    std::string name_;
    const json* node_ = nullptr;
};

void read_bank(const json& doc, const char* name, DeviceBankSpec& bank) {
    Section s(doc, name);
    s.reject_unknown({"count", "m", "M", "nu"});
    s.count("count", bank.count);
    s.number("m", bank.m);
    s.number("M", bank.M);
    s.number("nu", bank.nu);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json bank_json(const DeviceBankSpec& b) {
    return {{"count", b.count}, {"m", b.m}, {"M", b.M}, {"nu", b.nu}};
}

}  // namespace

SimulationConfig load_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        throw ConfigError("parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        static constexpr std::string_view sections[] = {
            "geometry", "grid",    "material", "exchange", "actuators",
            "sensors",  "controller", "initial", "time"};
        bool known = false;
        for (auto s : sections) known = known || key == s;
        if (!known) throw ConfigError(key + ": unknown section");
    }

    SimulationConfig cfg = scenario_preset(1);

    Section geometry(doc, "geometry");
    geometry.reject_unknown({"L", "H"});
    geometry.number("L", cfg.geometry.length);
    geometry.number("H", cfg.geometry.height);

    Section grid(doc, "grid");
    grid.reject_unknown({"J", "K"});
    grid.count("J", cfg.J);
    grid.count("K", cfg.K);

    Section material(doc, "material");
    material.reject_unknown({"rho", "c0", "c1", "lambda0", "lambda1", "theta_cap"});
    material.number("rho", cfg.material.rho);
    material.number("c0", cfg.material.c0);
    material.number("c1", cfg.material.c1);
    material.number("lambda0", cfg.material.lambda0);
    material.number("lambda1", cfg.material.lambda1);
    material.number("theta_cap", cfg.theta_cap);

    Section exchange(doc, "exchange");
    exchange.reject_unknown({"h", "emissivity", "sigma", "theta_amb", "underside_emission"});
    exchange.number("h", cfg.exchange.h);
    exchange.number("emissivity", cfg.exchange.emissivity);
    exchange.number("sigma", cfg.exchange.sigma);
    exchange.number("theta_amb", cfg.exchange.theta_amb);
    exchange.flag("underside_emission", cfg.underside_emission);

    read_bank(doc, "actuators", cfg.actuators);
    read_bank(doc, "sensors", cfg.sensors);

    Section controller(doc, "controller");
    controller.reject_unknown({"kp", "y_ref", "u_min", "u_max"});
    const double default_gain = cfg.controller.kp.front();
    cfg.controller.kp.assign(cfg.actuators.count, default_gain);
    if (const json* kp = controller.find("kp")) {
        if (kp->is_number()) {
            cfg.controller.kp.assign(cfg.actuators.count, kp->get<double>());
        } else if (kp->is_array()) {
            cfg.controller.kp.clear();
            for (const auto& g : *kp) {
                if (!g.is_number())
                    throw ConfigError("controller.kp: array entries must be numbers");
                cfg.controller.kp.push_back(g.get<double>());
            }
        } else {
            throw ConfigError("controller.kp: must be a number or an array of numbers");
        }
    }
    controller.number("y_ref", cfg.controller.y_ref);
    controller.number("u_min", cfg.controller.u_min);
    if (const json* umax = controller.find("u_max"); umax && umax->is_null())
        cfg.controller.u_max = kUnbounded;
    else
        controller.number("u_max", cfg.controller.u_max);

    Section initial(doc, "initial");
    initial.reject_unknown({"base", "a0", "a1", "a2"});
    initial.number("base", cfg.initial.base);
    initial.number("a0", cfg.initial.a0);
    initial.number("a1", cfg.initial.a1);
    initial.number("a2", cfg.initial.a2);

    Section time(doc, "time");
    time.reject_unknown({"dt", "t_final", "snapshot_stride", "signal_stride"});
    time.number("dt", cfg.time.dt);
    time.number("t_final", cfg.time.t_final);
    time.count("snapshot_stride", cfg.time.snapshot_stride);
    time.count("signal_stride", cfg.time.signal_stride);

    validate(cfg);
    return cfg;
}

SimulationConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config(buf.str());
}

std::string dump_config(const SimulationConfig& cfg) {
    json doc;
    doc["geometry"] = {{"L", cfg.geometry.length}, {"H", cfg.geometry.height}};
    doc["grid"] = {{"J", cfg.J}, {"K", cfg.K}};
    doc["material"] = {{"rho", cfg.material.rho},         {"c0", cfg.material.c0},
                       {"c1", cfg.material.c1},           {"lambda0", cfg.material.lambda0},
                       {"lambda1", cfg.material.lambda1}, {"theta_cap", cfg.theta_cap}};
    doc["exchange"] = {{"h", cfg.exchange.h},
                       {"emissivity", cfg.exchange.emissivity},
                       {"sigma", cfg.exchange.sigma},
                       {"theta_amb", cfg.exchange.theta_amb},
                       {"underside_emission", cfg.underside_emission}};
    doc["actuators"] = bank_json(cfg.actuators);
    doc["sensors"] = bank_json(cfg.sensors);
    doc["controller"] = {{"kp", cfg.controller.kp},
                         {"y_ref", cfg.controller.y_ref},
                         {"u_min", cfg.controller.u_min},
                         {"u_max", std::isinf(cfg.controller.u_max) ? json(nullptr)
                                                                    : json(cfg.controller.u_max)}};
    doc["initial"] = {{"base", cfg.initial.base},
                      {"a0", cfg.initial.a0},
                      {"a1", cfg.initial.a1},
                      {"a2", cfg.initial.a2}};
    doc["time"] = {{"dt", cfg.time.dt},
                   {"t_final", cfg.time.t_final},
                   {"snapshot_stride", cfg.time.snapshot_stride},
                   {"signal_stride", cfg.time.signal_stride}};
    return doc.dump(2) + "\n";
}

}  // namespace heatplate
