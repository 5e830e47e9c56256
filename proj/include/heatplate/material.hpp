#ifndef HEATPLATE_MATERIAL_HPP
#define HEATPLATE_MATERIAL_HPP

// Temperature-dependent material laws and the emitted boundary flux.
//
// All temperatures are absolute Kelvin. The heat capacity and conductivity
// are affine in temperature:
//   c(θ) = c0 + c1 θ,   λ(θ) = lambda0 + lambda1 θ
// and the density is constant.

namespace heatplate {

inline constexpr double kStefanBoltzmann = 5.67e-8;  // W/(m²·K⁴)
inline constexpr double kDefaultThetaCap = 3000.0;   // K

struct ThermalMaterial {
    double rho = 7800.0;    // kg/m³
    double c0 = 330.0;      // J/(kg·K)
    double c1 = 0.4;        // J/(kg·K²)
    double lambda0 = 10.0;  // W/(m·K)
    double lambda1 = 0.1;   // W/(m·K²)

    bool operator==(const ThermalMaterial&) const = default;
};

struct SurfaceExchange {
    double h = 10.0;          // W/(m²·K)
    double emissivity = 0.6;  // [0, 1]
    double sigma = kStefanBoltzmann;
    double theta_amb = 300.0; // K

    bool operator==(const SurfaceExchange&) const = default;
};

/// Throws std::invalid_argument unless rho > 0 and both c and λ stay
/// strictly positive on [0, theta_cap]. Affine laws make the endpoint
/// check sufficient.
void validate(const ThermalMaterial& mat, double theta_cap = kDefaultThetaCap);
void validate(const SurfaceExchange& exch);

double heat_capacity(const ThermalMaterial& mat, double theta);
double thermal_conductivity(const ThermalMaterial& mat, double theta);

/// Conductivity on the face shared by two cells, evaluated at the mean
/// temperature. Bitwise symmetric in its arguments.
double face_conductivity(const ThermalMaterial& mat, double theta_a, double theta_b);

/// ρ·c(θ), the factor multiplying ∂θ/∂t.
double volumetric_heat_coefficient(const ThermalMaterial& mat, double theta);

/// Convective plus radiative flux leaving through a surface at θ:
///   −h(θ − θ_amb) − ε σ (θ⁴ − θ_amb⁴)
/// Positive values heat the plate.
double emitted_flux(const SurfaceExchange& exch, double theta);

}  // namespace heatplate

#endif
