#include "heatplate/material.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace heatplate {

void validate(const ThermalMaterial& mat, double theta_cap) {
    if (!(theta_cap >= 0.0) || !std::isfinite(theta_cap))
        throw std::invalid_argument("material.theta_cap: must be finite and >= 0");
    if (!(mat.rho > 0.0) || !std::isfinite(mat.rho))
        throw std::invalid_argument("material.rho: must be > 0");
    for (double theta : {0.0, theta_cap}) {
        if (!(heat_capacity(mat, theta) > 0.0))
            throw std::invalid_argument("material.c0/c1: heat capacity must be > 0 on [0, " +
                                        std::to_string(theta_cap) + "] K");
        if (!(thermal_conductivity(mat, theta) > 0.0))
            throw std::invalid_argument("material.lambda0/lambda1: conductivity must be > 0 on [0, " +
                                        std::to_string(theta_cap) + "] K");
    }
}

void validate(const SurfaceExchange& exch) {
    if (!(exch.h >= 0.0) || !std::isfinite(exch.h))
        throw std::invalid_argument("exchange.h: must be >= 0");
    if (!(exch.emissivity >= 0.0 && exch.emissivity <= 1.0))
        throw std::invalid_argument("exchange.emissivity: must lie in [0, 1]");
    if (!(exch.sigma > 0.0) || !std::isfinite(exch.sigma))
        throw std::invalid_argument("exchange.sigma: must be > 0");
    if (!(exch.theta_amb >= 0.0) || !std::isfinite(exch.theta_amb))
        throw std::invalid_argument("exchange.theta_amb: must be >= 0");
}

double heat_capacity(const ThermalMaterial& mat, double theta) {
    assert(theta >= 0.0);
    return mat.c0 + mat.c1 * theta;
}

double thermal_conductivity(const ThermalMaterial& mat, double theta) {
    assert(theta >= 0.0);
    return mat.lambda0 + mat.lambda1 * theta;
}

double face_conductivity(const ThermalMaterial& mat, double theta_a, double theta_b) {
    return thermal_conductivity(mat, 0.5 * (theta_a + theta_b));
}

double volumetric_heat_coefficient(const ThermalMaterial& mat, double theta) {
    return mat.rho * heat_capacity(mat, theta);
}

double emitted_flux(const SurfaceExchange& exch, double theta) {
    assert(theta >= 0.0);
    const double t2 = theta * theta;
    const double a2 = exch.theta_amb * exch.theta_amb;
    // θ⁴ − θa⁴ factored so that θ == θa gives exactly zero
    const double quartic = (t2 - a2) * (t2 + a2);
    return -exch.h * (theta - exch.theta_amb) - exch.emissivity * exch.sigma * quartic;
}

}  // namespace heatplate
