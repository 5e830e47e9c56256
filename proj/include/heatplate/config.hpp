#ifndef HEATPLATE_CONFIG_HPP
#define HEATPLATE_CONFIG_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "heatplate/scenario.hpp"

namespace heatplate {

/// Parses a JSON config document. Every section and key is optional and
/// defaults to the Scenario-1 preset; unknown keys are rejected. Throws
/// ConfigError with line/column for syntax errors and the field path for
/// validation errors.
///
/// Sections: geometry{L,H}, grid{J,K},
/// material{rho,c0,c1,lambda0,lambda1,theta_cap},
/// exchange{h,emissivity,sigma,theta_amb,underside_emission},
/// actuators{count,m,M,nu}, sensors{count,m,M,nu},
/// controller{kp,y_ref,u_min,u_max}, initial{base,a0,a1,a2},
/// time{dt,t_final,snapshot_stride,signal_stride}.
///
/// controller.kp is a single gain for every channel or an array with one
/// entry per actuator; controller.u_max = null means unbounded.
SimulationConfig load_config(std::string_view text);
SimulationConfig load_config_file(const std::filesystem::path& path);

/// Inverse of load_config: every field written explicitly.
std::string dump_config(const SimulationConfig& cfg);

}  // namespace heatplate

#endif
