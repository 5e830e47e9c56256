#ifndef HEATPLATE_FV_SOLVER_HPP
#define HEATPLATE_FV_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "heatplate/actuation.hpp"
#include "heatplate/errors.hpp"
#include "heatplate/grid.hpp"
#include "heatplate/material.hpp"

namespace heatplate {

/// Cell-average temperatures in K, ordered by Grid::flat_index.
using TemperatureField = std::vector<double>;
/// dθ/dt per cell in K/s, same ordering.
using RhsVector = std::vector<double>;

/// Heat fluxes through the four boundaries, stored per boundary cell.
/// Positive values heat the plate.
struct BoundaryFluxes {
    std::vector<double> phi_in;          // underside, J entries
    std::vector<double> phi_out_bottom;  // underside emission, J entries (zero unless enabled)
    std::vector<double> phi_out_left;    // K entries
    std::vector<double> phi_out_right;   // K entries
    std::vector<double> phi_out_top;     // J entries
};

/// φ_in from the actuator bank, φ_out from the boundary cells' centre
/// temperatures. The underside carries only φ_in unless `underside_emission`.
BoundaryFluxes boundary_fluxes(std::span<const double> field, const Grid& grid,
                               const SurfaceExchange& exch, const ActuatorBank& bank,
                               std::span<const double> u, bool underside_emission = false);

/// Semi-discrete right-hand side of ρ c(θ) θ̇ = div(λ(θ) ∇θ).
///
/// Interior faces use λ at the mean of the two adjacent temperatures.
/// Boundary faces contribute φ/Δx only: after eliminating the ghost cell
/// the ghost conductivity cancels, so no boundary λ is ever evaluated.
/// Each cell's rate is divided by ρ c at its own temperature.
///
/// Throws DivergenceError if any rate is non-finite.
RhsVector assemble_rhs(std::span<const double> field, const Grid& grid,
                       const ThermalMaterial& mat, const BoundaryFluxes& fluxes);

/// θ + dt·rhs. Throws DivergenceError on a non-finite result.
TemperatureField step_forward_euler(std::span<const double> field, std::span<const double> rhs,
                                    double dt);

/// Σ ρ c(θ) θ̇ Δx₁Δx₂ in flat-index order.
double weighted_rhs_sum(std::span<const double> field, std::span<const double> rhs,
                        const Grid& grid, const ThermalMaterial& mat);

/// Δx₂ Σ(φ_left + φ_right) + Δx₁ Σ(φ_top + φ_in + φ_out_bottom). Equal to
/// weighted_rhs_sum up to round-off, since interior fluxes telescope.
double boundary_flux_total(const BoundaryFluxes& fluxes, const Grid& grid);

/// First cell whose temperature is non-finite or negative.
std::optional<std::size_t> first_invalid_cell(std::span<const double> field);

}  // namespace heatplate

#endif
