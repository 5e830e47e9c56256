#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "heatplate/scenario.hpp"

using namespace heatplate;

TEST_CASE("scenario presets") {
    const auto one = scenario_preset(1);
    const auto two = scenario_preset(2);
    CHECK(one.actuators.M == 0.0);
    CHECK(two.actuators.M == 30.0);
    CHECK(one.sensors == DeviceBankSpec{5, 1.0, 10.0, 4.0});
    CHECK(two.sensors == one.sensors);
    const Grid g(one.geometry, one.J, one.K);
    CHECK(g.dx1() == doctest::Approx(3e-3).epsilon(1e-14));
    CHECK(g.dx2() == doctest::Approx(2.5e-4).epsilon(1e-14));
    CHECK(one.controller.kp == std::vector<double>(5, 1e4));
    CHECK(one.controller.y_ref == 400.0);
    CHECK(one.initial == InitialCondition{300.0, 3.0, 10.0, 5.0});
    CHECK(step_count(one) == 10000);
    CHECK_THROWS_AS(scenario_preset(3), std::invalid_argument);
    CHECK_NOTHROW(validate(one));
    CHECK_NOTHROW(validate(two));
}

TEST_CASE("initial field") {
    const Grid g(PlateGeometry{0.30, 0.01}, 100, 40);
    const auto paper = initial_field(g, InitialCondition{});
    // 300 + 3·cos(0.1π)·cos(0.0625π)
    CHECK(paper[0] == doctest::Approx(302.63598494899975).epsilon(1e-13));
    for (double t : initial_field(g, InitialCondition{300.0, 0.0, 10.0, 5.0})) CHECK(t == 300.0);
    for (double t : initial_field(g, InitialCondition{300.0, 3.0, 0.0, 0.0})) CHECK(t == 303.0);

    auto cfg = scenario_preset(1);
    cfg.initial.a0 = 301.0;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
}

TEST_CASE("equilibrium is a fixed point of the closed loop") {
    auto cfg = scenario_preset(1);
    cfg.J = 30;
    cfg.K = 10;
    cfg.controller.kp.assign(5, 0.0);
    cfg.initial.a0 = 0.0;
    cfg.time.t_final = 0.5;
    const auto result = run_simulation(cfg);
    REQUIRE(!result.diverged);
    for (double t : result.final_field) CHECK(std::abs(t - 300.0) <= 1e-9);
}

TEST_CASE("logging cadence") {
    auto cfg = scenario_preset(1);
    cfg.J = 20;
    cfg.K = 8;
    cfg.time.t_final = 1.0;
    cfg.time.snapshot_stride = 250;
    const auto r = run_simulation(cfg);
    REQUIRE(!r.diverged);
    CHECK(r.signals.times.size() == 1001);
    CHECK(r.signals.times.back() == doctest::Approx(1.0));
    CHECK(r.snapshots.size() == 5);  // t = 0, .25, .5, .75, 1
    for (std::size_t i = 1; i < r.snapshots.size(); ++i)
        CHECK(r.snapshots[i].time > r.snapshots[i - 1].time);
    CHECK(r.snapshots.back().field == r.final_field);
    for (const auto& u : r.signals.u)
        for (double x : u) CHECK(x >= 0.0);

    cfg.time.signal_stride = 100;
    CHECK(run_simulation(cfg).signals.times.size() == 11);
}

TEST_CASE("runs are deterministic") {
    auto cfg = scenario_preset(2);
    cfg.J = 25;
    cfg.K = 10;
    cfg.time.t_final = 0.5;
    const auto a = run_simulation(cfg);
    const auto b = run_simulation(cfg);
    CHECK(a.final_field == b.final_field);
    CHECK(a.signals.u == b.signals.u);
    CHECK(a.signals.y == b.signals.y);
}

TEST_CASE("an oversized step diverges and keeps partial logs") {
    auto cfg = scenario_preset(1);
    cfg.time.dt = 0.05;
    const auto r = run_simulation(cfg);
    REQUIRE(r.diverged.has_value());
    CHECK(r.diverged->step <= 200);
    CHECK(r.diverged->step >= 1);
    CHECK(r.signals.times.size() == r.diverged->step);
    for (double t : r.final_field) CHECK(std::isfinite(t));
}

TEST_CASE("averaged signals") {
    SignalLog log;
    log.times = {0.0, 1.0};
    log.u = {std::vector<double>(5, 7.0), {1, 2, 3, 4, 5}};
    log.y = {{390, 400, 410, 395, 405}, std::vector<double>(5, 1.0)};
    const auto avg = averaged_signals(log);
    CHECK(avg.u_avg == std::vector<double>{7.0, 3.0});
    CHECK(avg.y_avg[0] == doctest::Approx(400.0));
    CHECK(avg.y_avg[1] == 1.0);
}

TEST_CASE("topside statistics") {
    const Grid g(PlateGeometry{0.30, 0.01}, 100, 4);
    std::vector<double> field(g.size(), 300.0);
    auto flat = topside_statistics(field, g);
    CHECK(flat.peak_to_peak == 0.0);
    CHECK(flat.mean == 300.0);

    for (std::size_t j = 0; j < 100; ++j)
        field[g.flat_index({j, 3})] = 400.0 + std::cos(2 * std::numbers::pi * 5 * g.center_x1(j) / 0.30);
    const auto s = topside_statistics(field, g);
    CHECK(s.dominant_mode == 5);
    CHECK(s.peak_to_peak == doctest::Approx(2.0).epsilon(0.02));
    CHECK(s.mean == doctest::Approx(400.0).epsilon(1e-14));
}
