#ifndef HEATPLATE_GRID_HPP
#define HEATPLATE_GRID_HPP

#include <cstddef>
#include <utility>

#include "heatplate/material.hpp"

namespace heatplate {

/// Side view of the plate, Ω = (0, L) × (0, H). x₁ runs along the length,
/// x₂ from the underside (x₂ = 0) to the topside (x₂ = H).
struct PlateGeometry {
    double length = 0.30;  // m
    double height = 0.01;  // m

    bool operator==(const PlateGeometry&) const = default;
};

struct CellIndex {
    std::size_t j = 0;  // x₁ column
    std::size_t k = 0;  // x₂ row

    bool operator==(const CellIndex&) const = default;
};

/// Boundary sides a cell touches, as bit flags. Corner cells carry two.
enum class Side : unsigned { None = 0, Left = 1, Right = 2, Bottom = 4, Top = 8 };

constexpr Side operator|(Side a, Side b) {
    return static_cast<Side>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has(Side set, Side s) {
    return (static_cast<unsigned>(set) & static_cast<unsigned>(s)) != 0;
}

/// Uniform cell-centred finite-volume grid. Cells are stored row-major
/// along x₁: flat offset = k·J + j, so the topside row k = K−1 is the
/// contiguous tail of every field vector.
class Grid {
public:
    /// Throws std::invalid_argument for J < 2, K < 2 or a degenerate geometry.
    Grid(const PlateGeometry& geom, std::size_t cells_x1, std::size_t cells_x2);

    const PlateGeometry& geometry() const { return geom_; }
    std::size_t J() const { return J_; }
    std::size_t K() const { return K_; }
    std::size_t size() const { return J_ * K_; }
    double dx1() const { return dx1_; }
    double dx2() const { return dx2_; }
    double cell_area() const { return dx1_ * dx2_; }

    std::size_t flat_index(CellIndex idx) const { return idx.k * J_ + idx.j; }
    CellIndex cell_index(std::size_t flat) const { return {flat % J_, flat / J_}; }

    std::pair<double, double> cell_center(CellIndex idx) const;
    /// x₁ coordinate of column j's cell centres.
    double center_x1(std::size_t j) const { return (static_cast<double>(j) + 0.5) * dx1_; }
    double center_x2(std::size_t k) const { return (static_cast<double>(k) + 0.5) * dx2_; }

    Side boundary_membership(CellIndex idx) const;

    bool operator==(const Grid&) const = default;

private:
    PlateGeometry geom_;
    std::size_t J_;
    std::size_t K_;
    double dx1_;
    double dx2_;
};

inline Grid build_grid(const PlateGeometry& geom, std::size_t J, std::size_t K) {
    return Grid(geom, J, K);
}

/// Explicit-diffusion time-step bound 1 / (2α(1/dx1² + 1/dx2²)) with
/// α = λ(θ_ref)/(ρ c(θ_ref)). Advisory only; the stepper does not enforce it.
double stability_limit(const Grid& grid, const ThermalMaterial& mat, double theta_ref);

}  // namespace heatplate

#endif
