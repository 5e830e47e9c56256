#include "heatplate/control.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace heatplate {

void validate(const ControllerConfig& cfg, std::size_t actuators, std::size_t sensors) {
    if (actuators != sensors)
        throw std::invalid_argument("controller: actuator count (" + std::to_string(actuators) +
                                    ") must equal sensor count (" + std::to_string(sensors) + ")");
    if (cfg.kp.size() != actuators)
        throw std::invalid_argument("controller.kp: expected " + std::to_string(actuators) +
                                    " gains, got " + std::to_string(cfg.kp.size()));
    for (std::size_t n = 0; n < cfg.kp.size(); ++n)
        if (!(cfg.kp[n] >= 0.0) || !std::isfinite(cfg.kp[n]))
            throw std::invalid_argument("controller.kp[" + std::to_string(n) + "]: must be >= 0");
    if (!std::isfinite(cfg.y_ref)) throw std::invalid_argument("controller.y_ref: must be finite");
    if (!std::isfinite(cfg.u_min)) throw std::invalid_argument("controller.u_min: must be finite");
    if (std::isnan(cfg.u_max) || !(cfg.u_min <= cfg.u_max))
        throw std::invalid_argument("controller.u_max: must be >= u_min");
}

std::vector<double> control_error(const ControllerConfig& cfg, std::span<const double> y) {
    std::vector<double> e(y.size());
    for (std::size_t n = 0; n < y.size(); ++n) e[n] = cfg.y_ref - y[n];
    return e;
}

std::vector<double> proportional_law(const ControllerConfig& cfg, std::span<const double> e) {
    assert(e.size() == cfg.kp.size());
    std::vector<double> u(e.size());
    for (std::size_t n = 0; n < e.size(); ++n) {
        const double raw = e[n] > 0.0 ? cfg.kp[n] * e[n] : 0.0;
        u[n] = std::clamp(raw, cfg.u_min, cfg.u_max);
    }
    return u;
}

}  // namespace heatplate
