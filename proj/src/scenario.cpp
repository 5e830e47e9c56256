#include "heatplate/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace heatplate {

namespace {

std::vector<BoundaryDevice> devices_for(const DeviceBankSpec& spec, double length) {
    return uniform_devices(length, spec.count, spec.m, spec.M, spec.nu);
}

bool is_multiple(std::size_t n, std::size_t stride) { return n % stride == 0; }

}  // namespace

void validate(const SimulationConfig& cfg) {
    try {
        const Grid grid(cfg.geometry, cfg.J, cfg.K);
        validate(cfg.material, cfg.theta_cap);
        validate(cfg.exchange);
        if (cfg.actuators.count < 1) throw std::invalid_argument("actuators.count: must be >= 1");
        if (cfg.sensors.count < 1) throw std::invalid_argument("sensors.count: must be >= 1");
        ActuatorBank(grid, devices_for(cfg.actuators, cfg.geometry.length));
        SensorBank(grid, devices_for(cfg.sensors, cfg.geometry.length));
        validate(cfg.controller, cfg.actuators.count, cfg.sensors.count);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    const auto& ic = cfg.initial;
    if (!std::isfinite(ic.base) || !std::isfinite(ic.a0) || !std::isfinite(ic.a1) ||
        !std::isfinite(ic.a2))
        throw ConfigError("initial: all entries must be finite");
    if (!(ic.base - std::abs(ic.a0) >= 0.0))
        throw ConfigError("initial.a0: base - |a0| must be >= 0");
    const auto& t = cfg.time;
    if (!(t.dt > 0.0) || !std::isfinite(t.dt)) throw ConfigError("time.dt: must be > 0");
    if (!(t.t_final > 0.0) || !std::isfinite(t.t_final))
        throw ConfigError("time.t_final: must be > 0");
    if (t.snapshot_stride < 1) throw ConfigError("time.snapshot_stride: must be >= 1");
    if (t.signal_stride < 1) throw ConfigError("time.signal_stride: must be >= 1");
    if (step_count(cfg) < 1) throw ConfigError("time.t_final: must span at least one step");
}

std::size_t step_count(const SimulationConfig& cfg) {
    return static_cast<std::size_t>(std::llround(cfg.time.t_final / cfg.time.dt));
}

SimulationConfig scenario_preset(int which) {
    SimulationConfig cfg;
    switch (which) {
    case 1: cfg.actuators.M = 0.0; break;
    case 2: cfg.actuators.M = 30.0; break;
    default: throw std::invalid_argument("scenario must be 1 or 2");
    }
    return cfg;
}

TemperatureField initial_field(const Grid& grid, const InitialCondition& ic) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double L = grid.geometry().length;
    const double H = grid.geometry().height;
    TemperatureField field(grid.size());
    for (std::size_t k = 0; k < grid.K(); ++k) {
        const double wave2 = std::cos(two_pi * ic.a2 * grid.center_x2(k) / H);
        for (std::size_t j = 0; j < grid.J(); ++j) {
            const double wave1 = std::cos(two_pi * ic.a1 * grid.center_x1(j) / L);
            field[grid.flat_index({j, k})] = ic.base + ic.a0 * wave1 * wave2;
        }
    }
    return field;
}

SimulationResult run_simulation(const SimulationConfig& cfg) {
    validate(cfg);
    const Grid grid(cfg.geometry, cfg.J, cfg.K);
    const ActuatorBank actuators(grid, devices_for(cfg.actuators, cfg.geometry.length));
    const SensorBank sensors(grid, devices_for(cfg.sensors, cfg.geometry.length));
    const std::size_t steps = step_count(cfg);
    const double dt = cfg.time.dt;

    SimulationResult result{grid, initial_field(grid, cfg.initial), 0.0, {}, {}, std::nullopt};
    TemperatureField& field = result.final_field;

    auto log_signals = [&](double t, std::vector<double> u, std::vector<double> y) {
        result.signals.times.push_back(t);
        result.signals.u.push_back(std::move(u));
        result.signals.y.push_back(std::move(y));
    };

    for (std::size_t n = 0; n < steps; ++n) {
        const double t = static_cast<double>(n) * dt;
        auto y = measure(sensors, field, grid);
        auto u = proportional_law(cfg.controller, control_error(cfg.controller, y));

        if (is_multiple(n, cfg.time.snapshot_stride)) result.snapshots.push_back({t, field});

        try {
            const auto fluxes =
                boundary_fluxes(field, grid, cfg.exchange, actuators, u, cfg.underside_emission);
            const auto rhs = assemble_rhs(field, grid, cfg.material, fluxes);
            auto next = step_forward_euler(field, rhs, dt);
            if (const auto bad = first_invalid_cell(next)) throw DivergenceError(*bad, n + 1);
            if (is_multiple(n, cfg.time.signal_stride)) log_signals(t, std::move(u), std::move(y));
            field = std::move(next);
        } catch (const DivergenceError& e) {
            if (is_multiple(n, cfg.time.signal_stride)) log_signals(t, std::move(u), std::move(y));
            result.final_time = t;
            result.diverged = DivergenceInfo{n + 1, e.cell()};
            return result;
        }
    }

    const double t_end = static_cast<double>(steps) * dt;
    auto y = measure(sensors, field, grid);
    auto u = proportional_law(cfg.controller, control_error(cfg.controller, y));
    log_signals(t_end, std::move(u), std::move(y));
    if (result.snapshots.empty() || result.snapshots.back().time < t_end)
        result.snapshots.push_back({t_end, field});
    result.final_time = t_end;
    return result;
}

AveragedSignals averaged_signals(const SignalLog& log) {
    auto mean = [](const std::vector<double>& row) {
        return std::accumulate(row.begin(), row.end(), 0.0) / static_cast<double>(row.size());
    };
    AveragedSignals avg;
    avg.times = log.times;
    for (std::size_t i = 0; i < log.times.size(); ++i) {
        avg.u_avg.push_back(mean(log.u[i]));
        avg.y_avg.push_back(mean(log.y[i]));
    }
    return avg;
}

TopsideStatistics topside_statistics(std::span<const double> field, const Grid& grid) {
    const std::size_t J = grid.J();
    const auto top = field.subspan((grid.K() - 1) * J, J);

    TopsideStatistics stats;
    stats.mean = std::accumulate(top.begin(), top.end(), 0.0) / static_cast<double>(J);
    const auto [lo, hi] = std::minmax_element(top.begin(), top.end());
    stats.peak_to_peak = *hi - *lo;
    if (stats.peak_to_peak == 0.0) return stats;

    // direct DFT of the mean-removed row over the non-negative frequencies
    double best = 0.0;
    for (std::size_t mode = 1; mode <= J / 2; ++mode) {
        double re = 0.0;
        double im = 0.0;
        for (std::size_t j = 0; j < J; ++j) {
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(mode * j) /
                                 static_cast<double>(J);
            re += (top[j] - stats.mean) * std::cos(phase);
            im -= (top[j] - stats.mean) * std::sin(phase);
        }
        const double power = re * re + im * im;
        if (power > best) {
            best = power;
            stats.dominant_mode = mode;
        }
    }
    return stats;
}

TopsideStatistics topside_statistics(const SimulationResult& result) {
    return topside_statistics(result.final_field, result.grid);
}

}  // namespace heatplate
