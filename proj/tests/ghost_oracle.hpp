#ifndef HEATPLATE_TESTS_GHOST_ORACLE_HPP
#define HEATPLATE_TESTS_GHOST_ORACLE_HPP

// Brute-force reference for the semi-discrete right-hand side. Ghost cells
// are materialised explicitly from the boundary-flux substitution
//   θ_ghost = θ_cell + Δx·φ / λ_ghost_face
// and the five-point quasi-linear formula is applied in its expanded form
//   [λ₊θ₊ + λ₋θ₋ − (λ₊ + λ₋)θ] / Δx²
// in long double. Shares no code with the solver.

#include <cstddef>
#include <vector>

#include "heatplate/fv_solver.hpp"

namespace oracle {

inline std::vector<double> ghost_cell_rhs(const std::vector<double>& field, std::size_t J,
                                          std::size_t K, double L, double H,
                                          const heatplate::ThermalMaterial& mat,
                                          const heatplate::BoundaryFluxes& f) {
    using R = long double;
    const R dx1 = static_cast<R>(L) / J;
    const R dx2 = static_cast<R>(H) / K;
    auto lam = [&](R theta) { return R(mat.lambda0) + R(mat.lambda1) * theta; };
    auto at = [&](std::size_t j, std::size_t k) -> R { return field[k * J + j]; };

    std::vector<double> out(J * K);
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t j = 0; j < J; ++j) {
            const R t = at(j, k);
            // neighbour temperature and face conductivity in each direction;
            // the ghost face conductivity is arbitrary (it cancels), use λ(θ_cell)
            auto ghost = [&](R dx, R phi, R& theta_n, R& lam_face) {
                lam_face = lam(t);
                theta_n = t + dx * phi / lam_face;
            };
            auto real = [&](R other, R& theta_n, R& lam_face) {
                theta_n = other;
                lam_face = lam((t + other) / 2);
            };
            R tw, lw, te, le, ts, ls, tn, ln;
            if (j == 0) ghost(dx1, f.phi_out_left[k], tw, lw);
            else real(at(j - 1, k), tw, lw);
            if (j == J - 1) ghost(dx1, f.phi_out_right[k], te, le);
            else real(at(j + 1, k), te, le);
            if (k == 0) ghost(dx2, R(f.phi_in[j]) + R(f.phi_out_bottom[j]), ts, ls);
            else real(at(j, k - 1), ts, ls);
            if (k == K - 1) ghost(dx2, f.phi_out_top[j], tn, ln);
            else real(at(j, k + 1), tn, ln);

            const R q1 = (le * te + lw * tw - (le + lw) * t) / (dx1 * dx1);
            const R q2 = (ln * tn + ls * ts - (ln + ls) * t) / (dx2 * dx2);
            const R rho_c = R(mat.rho) * (R(mat.c0) + R(mat.c1) * t);
            out[k * J + j] = static_cast<double>((q1 + q2) / rho_c);
        }
    }
    return out;
}

}  // namespace oracle

#endif
