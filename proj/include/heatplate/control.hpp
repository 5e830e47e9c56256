#ifndef HEATPLATE_CONTROL_HPP
#define HEATPLATE_CONTROL_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace heatplate {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

/// One-sided proportional controller; sensor n drives actuator n.
struct ControllerConfig {
    std::vector<double> kp;   // W/(m²·K), one gain per channel
    double y_ref = 400.0;     // K
    double u_min = 0.0;       // W/m²
    double u_max = kUnbounded;

    bool operator==(const ControllerConfig&) const = default;
};

/// Throws std::invalid_argument on negative gains, u_min > u_max, or a
/// channel-count mismatch between gains, actuators and sensors.
void validate(const ControllerConfig& cfg, std::size_t actuators, std::size_t sensors);

/// e_n = y_ref − y_n
std::vector<double> control_error(const ControllerConfig& cfg, std::span<const double> y);

/// u_n = kp_n·e_n for e_n > 0, else 0; then clamped into [u_min, u_max].
std::vector<double> proportional_law(const ControllerConfig& cfg, std::span<const double> e);

}  // namespace heatplate

#endif
