#include "heatplate/fv_solver.hpp"

#include <cassert>
#include <cmath>

namespace heatplate {

BoundaryFluxes boundary_fluxes(std::span<const double> field, const Grid& grid,
                               const SurfaceExchange& exch, const ActuatorBank& bank,
                               std::span<const double> u, bool underside_emission) {
    assert(field.size() == grid.size());
    const std::size_t J = grid.J();
    const std::size_t K = grid.K();

    BoundaryFluxes f;
    f.phi_in = induced_flux(bank, u);
    f.phi_out_bottom.assign(J, 0.0);
    f.phi_out_left.resize(K);
    f.phi_out_right.resize(K);
    f.phi_out_top.resize(J);
    for (std::size_t k = 0; k < K; ++k) {
        f.phi_out_left[k] = emitted_flux(exch, field[grid.flat_index({0, k})]);
        f.phi_out_right[k] = emitted_flux(exch, field[grid.flat_index({J - 1, k})]);
    }
    for (std::size_t j = 0; j < J; ++j) {
        f.phi_out_top[j] = emitted_flux(exch, field[grid.flat_index({j, K - 1})]);
        if (underside_emission) f.phi_out_bottom[j] = emitted_flux(exch, field[j]);
    }
    return f;
}

RhsVector assemble_rhs(std::span<const double> field, const Grid& grid,
                       const ThermalMaterial& mat, const BoundaryFluxes& fluxes) {
    const std::size_t J = grid.J();
    const std::size_t K = grid.K();
    assert(field.size() == grid.size());
    assert(fluxes.phi_in.size() == J && fluxes.phi_out_top.size() == J);
    assert(fluxes.phi_out_left.size() == K && fluxes.phi_out_right.size() == K);

    const double inv_dx1 = 1.0 / grid.dx1();
    const double inv_dx2 = 1.0 / grid.dx2();
    const double inv_dx1_sq = inv_dx1 * inv_dx1;
    const double inv_dx2_sq = inv_dx2 * inv_dx2;

    // flux from neighbour b into cell a through their shared face
    auto face = [&](double a, double b, double inv_sq) {
        return face_conductivity(mat, a, b) * (b - a) * inv_sq;
    };

    RhsVector rhs(grid.size());
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t j = 0; j < J; ++j) {
            const std::size_t c = k * J + j;
            const double t = field[c];

            const double west = j == 0 ? fluxes.phi_out_left[k] * inv_dx1
                                       : face(t, field[c - 1], inv_dx1_sq);
            const double east = j == J - 1 ? fluxes.phi_out_right[k] * inv_dx1
                                           : face(t, field[c + 1], inv_dx1_sq);
            const double south =
                k == 0 ? (fluxes.phi_in[j] + fluxes.phi_out_bottom[j]) * inv_dx2
                       : face(t, field[c - J], inv_dx2_sq);
            const double north = k == K - 1 ? fluxes.phi_out_top[j] * inv_dx2
                                            : face(t, field[c + J], inv_dx2_sq);

            rhs[c] = ((west + east) + (south + north)) / volumetric_heat_coefficient(mat, t);
        }
    }
    for (std::size_t c = 0; c < rhs.size(); ++c)
        if (!std::isfinite(rhs[c])) throw DivergenceError(c);
    return rhs;
}

TemperatureField step_forward_euler(std::span<const double> field, std::span<const double> rhs,
                                    double dt) {
    assert(field.size() == rhs.size());
    assert(dt > 0.0);
    TemperatureField next(field.size());
    for (std::size_t c = 0; c < field.size(); ++c) {
        next[c] = field[c] + dt * rhs[c];
        if (!std::isfinite(next[c])) throw DivergenceError(c);
    }
    return next;
}

double weighted_rhs_sum(std::span<const double> field, std::span<const double> rhs,
                        const Grid& grid, const ThermalMaterial& mat) {
    assert(field.size() == rhs.size());
    double sum = 0.0;
    for (std::size_t c = 0; c < field.size(); ++c)
        sum += volumetric_heat_coefficient(mat, field[c]) * rhs[c] * grid.cell_area();
    return sum;
}

double boundary_flux_total(const BoundaryFluxes& fluxes, const Grid& grid) {
    double lateral = 0.0;
    for (std::size_t k = 0; k < fluxes.phi_out_left.size(); ++k)
        lateral += fluxes.phi_out_left[k] + fluxes.phi_out_right[k];
    double horizontal = 0.0;
    for (std::size_t j = 0; j < fluxes.phi_in.size(); ++j)
        horizontal += fluxes.phi_out_top[j] + fluxes.phi_in[j] + fluxes.phi_out_bottom[j];
    return grid.dx2() * lateral + grid.dx1() * horizontal;
}

std::optional<std::size_t> first_invalid_cell(std::span<const double> field) {
    for (std::size_t c = 0; c < field.size(); ++c)
        if (!std::isfinite(field[c]) || field[c] < 0.0) return c;
    return std::nullopt;
}

}  // namespace heatplate
