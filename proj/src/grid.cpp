#include "heatplate/grid.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace heatplate {

Grid::Grid(const PlateGeometry& geom, std::size_t cells_x1, std::size_t cells_x2)
    : geom_(geom), J_(cells_x1), K_(cells_x2) {
    if (!(geom.length > 0.0) || !std::isfinite(geom.length))
        throw std::invalid_argument("geometry.L: must be > 0");
    if (!(geom.height > 0.0) || !std::isfinite(geom.height))
        throw std::invalid_argument("geometry.H: must be > 0");
    if (J_ < 2) throw std::invalid_argument("grid.J: must be >= 2");
    if (K_ < 2) throw std::invalid_argument("grid.K: must be >= 2");
    dx1_ = geom.length / static_cast<double>(J_);
    dx2_ = geom.height / static_cast<double>(K_);
}

std::pair<double, double> Grid::cell_center(CellIndex idx) const {
    assert(idx.j < J_ && idx.k < K_);
    return {center_x1(idx.j), center_x2(idx.k)};
}

Side Grid::boundary_membership(CellIndex idx) const {
    assert(idx.j < J_ && idx.k < K_);
    Side s = Side::None;
    if (idx.j == 0) s = s | Side::Left;
    if (idx.j == J_ - 1) s = s | Side::Right;
    if (idx.k == 0) s = s | Side::Bottom;
    if (idx.k == K_ - 1) s = s | Side::Top;
    return s;
}

double stability_limit(const Grid& grid, const ThermalMaterial& mat, double theta_ref) {
    const double alpha =
        thermal_conductivity(mat, theta_ref) / volumetric_heat_coefficient(mat, theta_ref);
    const double inv_sq = 1.0 / (grid.dx1() * grid.dx1()) + 1.0 / (grid.dx2() * grid.dx2());
    return 1.0 / (2.0 * alpha * inv_sq);
}

}  // namespace heatplate
