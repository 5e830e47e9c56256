#include <doctest.h>

#include <set>
#include <stdexcept>

#include "heatplate/grid.hpp"

using namespace heatplate;

namespace {
const Grid paper_grid(PlateGeometry{0.30, 0.01}, 100, 40);
}

TEST_CASE("grid spacing") {
    CHECK(paper_grid.dx1() == doctest::Approx(3.0e-3).epsilon(1e-14));
    CHECK(paper_grid.dx2() == doctest::Approx(2.5e-4).epsilon(1e-14));

    const Grid unit(PlateGeometry{1.0, 1.0}, 2, 2);
    CHECK(unit.dx1() == 0.5);
    CHECK(unit.dx2() == 0.5);

    const Grid fine(PlateGeometry{0.30, 0.01}, 200, 80);
    CHECK(fine.dx1() == doctest::Approx(1.5e-3).epsilon(1e-14));
    CHECK(fine.dx2() == doctest::Approx(1.25e-4).epsilon(1e-14));

    CHECK_THROWS_AS(Grid(PlateGeometry{}, 1, 40), std::invalid_argument);
    CHECK_THROWS_AS(Grid(PlateGeometry{}, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(Grid(PlateGeometry{0.0, 0.01}, 10, 10), std::invalid_argument);
}

TEST_CASE("cell centres") {
    auto [a1, a2] = paper_grid.cell_center({0, 0});
    CHECK(a1 == doctest::Approx(1.5e-3).epsilon(1e-14));
    CHECK(a2 == doctest::Approx(1.25e-4).epsilon(1e-14));
    auto [b1, b2] = paper_grid.cell_center({99, 39});
    CHECK(b1 == doctest::Approx(0.2985).epsilon(1e-14));
    CHECK(b2 == doctest::Approx(0.009875).epsilon(1e-14));  // 39.5·2.5e-4
    const Grid unit(PlateGeometry{1.0, 1.0}, 2, 2);
    CHECK(unit.cell_center({0, 0}) == std::pair{0.25, 0.25});
}

TEST_CASE("flat index is a row-major bijection") {
    CHECK(paper_grid.flat_index({0, 0}) == 0);
    CHECK(paper_grid.flat_index({5, 2}) == 205);
    CHECK(paper_grid.flat_index({99, 39}) == 3999);

    std::set<std::size_t> seen;
    for (std::size_t k = 0; k < paper_grid.K(); ++k)
        for (std::size_t j = 0; j < paper_grid.J(); ++j) {
            const auto f = paper_grid.flat_index({j, k});
            REQUIRE(f < paper_grid.size());
            REQUIRE(paper_grid.cell_index(f) == CellIndex{j, k});
            seen.insert(f);
        }
    CHECK(seen.size() == paper_grid.size());
}

TEST_CASE("cell areas sum to the plate area") {
    double area = 0.0;
    for (std::size_t c = 0; c < paper_grid.size(); ++c) area += paper_grid.cell_area();
    CHECK(area == doctest::Approx(0.30 * 0.01).epsilon(1e-12));
}

TEST_CASE("boundary membership") {
    CHECK(paper_grid.boundary_membership({0, 0}) == (Side::Left | Side::Bottom));
    CHECK(paper_grid.boundary_membership({50, 20}) == Side::None);
    CHECK(paper_grid.boundary_membership({99, 39}) == (Side::Right | Side::Top));
    CHECK(paper_grid.boundary_membership({0, 39}) == (Side::Left | Side::Top));

    std::size_t boundary = 0;
    for (std::size_t c = 0; c < paper_grid.size(); ++c)
        if (paper_grid.boundary_membership(paper_grid.cell_index(c)) != Side::None) ++boundary;
    CHECK(boundary == 2 * 100 + 2 * 40 - 4);
}

TEST_CASE("explicit stability estimate") {
    const ThermalMaterial steel{};
    // α = 40 / 3.51e6, 1/dx1² + 1/dx2² = 1.1111e5 + 1.6e7
    const double alpha = 40.0 / 3.51e6;
    const double expected = 1.0 / (2.0 * alpha * (1.0 / 9e-6 + 1.0 / 6.25e-8));
    CHECK(stability_limit(paper_grid, steel, 300.0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(stability_limit(paper_grid, steel, 300.0) == doctest::Approx(2.7232758620689655e-3));

    // λ/(ρc) grows between 300 K and 400 K, so the bound tightens
    CHECK(stability_limit(paper_grid, steel, 400.0) < stability_limit(paper_grid, steel, 300.0));
    CHECK(stability_limit(paper_grid, steel, 400.0) == doctest::Approx(2.3722758620689653e-3));

    const Grid unit(PlateGeometry{2.0, 2.0}, 2, 2);
    const ThermalMaterial half{1.0, 1.0, 0.0, 0.5, 0.0};
    CHECK(stability_limit(unit, half, 10.0) == 0.5);

    const Grid fine(PlateGeometry{0.30, 0.01}, 200, 80);
    CHECK(stability_limit(fine, steel, 300.0) ==
          doctest::Approx(stability_limit(paper_grid, steel, 300.0) / 4.0).epsilon(1e-12));
}
