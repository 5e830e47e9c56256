#ifndef HEATPLATE_SCENARIO_HPP
#define HEATPLATE_SCENARIO_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "heatplate/actuation.hpp"
#include "heatplate/control.hpp"
#include "heatplate/fv_solver.hpp"
#include "heatplate/grid.hpp"
#include "heatplate/material.hpp"

namespace heatplate {

/// θ(0, x) = base + a0·cos(2π a1 x₁/L)·cos(2π a2 x₂/H)
struct InitialCondition {
    double base = 300.0;
    double a0 = 3.0;
    double a1 = 10.0;
    double a2 = 5.0;

    bool operator==(const InitialCondition&) const = default;
};

/// A bank of `count` devices on uniform partitions sharing one shape.
struct DeviceBankSpec {
    std::size_t count = 5;
    double m = 1.0;
    double M = 0.0;
    double nu = 4.0;

    bool operator==(const DeviceBankSpec&) const = default;
};

struct TimeSettings {
    double dt = 1e-3;             // s
    double t_final = 10.0;        // s
    std::size_t snapshot_stride = 1000;
    std::size_t signal_stride = 1;

    bool operator==(const TimeSettings&) const = default;
};

struct SimulationConfig {
    PlateGeometry geometry;
    std::size_t J = 100;
    std::size_t K = 40;
    ThermalMaterial material;
    double theta_cap = kDefaultThetaCap;
    SurfaceExchange exchange;
    bool underside_emission = false;
    DeviceBankSpec actuators{5, 1.0, 0.0, 4.0};
    DeviceBankSpec sensors{5, 1.0, 10.0, 4.0};
    ControllerConfig controller{std::vector<double>(5, 1e4), 400.0, 0.0, kUnbounded};
    InitialCondition initial;
    TimeSettings time;

    bool operator==(const SimulationConfig&) const = default;
};

/// Throws ConfigError naming the offending field.
void validate(const SimulationConfig& cfg);

/// Number of Euler steps, round(t_final / dt).
std::size_t step_count(const SimulationConfig& cfg);

/// Table 1/2 parameters on the 100×40 grid; 1 = nominal (indicator)
/// actuators, 2 = realistic actuators with M = 30.
SimulationConfig scenario_preset(int which);

TemperatureField initial_field(const Grid& grid, const InitialCondition& ic);

struct Snapshot {
    double time = 0.0;
    TemperatureField field;
};

/// Per-instant controller data. u[i] is the input held over the step that
/// starts at times[i], computed from the measurement y[i].
struct SignalLog {
    std::vector<double> times;
    std::vector<std::vector<double>> u;
    std::vector<std::vector<double>> y;
};

struct DivergenceInfo {
    std::size_t step = 0;  // 1-based number of the step that failed
    std::size_t cell = 0;  // flat index
};

struct SimulationResult {
    Grid grid;
    TemperatureField final_field;
    double final_time = 0.0;
    std::vector<Snapshot> snapshots;
    SignalLog signals;
    std::optional<DivergenceInfo> diverged;
};

/// Closed loop, per step: measure → control → boundary fluxes → RHS →
/// forward Euler. On divergence the loop stops and the result keeps the
/// last valid field together with the partial logs.
SimulationResult run_simulation(const SimulationConfig& cfg);

struct AveragedSignals {
    std::vector<double> times;
    std::vector<double> u_avg;
    std::vector<double> y_avg;
};

AveragedSignals averaged_signals(const SignalLog& log);

struct TopsideStatistics {
    double mean = 0.0;
    double peak_to_peak = 0.0;
    /// Index of the strongest nonzero DFT bin of the mean-removed topside
    /// row (cycles per plate length); ties go to the lower index, 0 for a
    /// flat row.
    std::size_t dominant_mode = 0;
};

TopsideStatistics topside_statistics(std::span<const double> field, const Grid& grid);
TopsideStatistics topside_statistics(const SimulationResult& result);

}  // namespace heatplate

#endif
