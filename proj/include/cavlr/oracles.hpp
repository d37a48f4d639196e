// oracles.hpp — Brute-force reference routes, kept independent of the closed
// forms they check. Used by the validate suite and the tests.

#pragma once

#include <Eigen/Dense>

#include "cavlr/frequency.hpp"
#include "cavlr/meanfield.hpp"

namespace cavlr {

// Zero-temperature susceptibility of H = (ω_x σ_x + ω_z σ_z)/2 by explicit
// diagonalization and spectral summation, indices (x, z).
inline Eigen::Matrix2cd oracle_free_spin_susceptibility(SpinFields f, ComplexFrequency w) {
    Eigen::Matrix2cd sx, sz, h;
    sx << 0, 1, 1, 0;
    sz << 1, 0, 0, -1;
    h = 0.5 * (f.omega_x * sx + f.omega_z * sz);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
    const auto& evals = es.eigenvalues();
    const auto& evecs = es.eigenvectors();
    const Eigen::Vector2cd g = evecs.col(0); // ground state
    const cxd wp = w.value();

    const Eigen::Matrix2cd ops[2] = {sx, sz};
    Eigen::Matrix2cd chi = Eigen::Matrix2cd::Zero();
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
            for (int n = 1; n < 2; ++n) {
                const Eigen::Vector2cd xn = evecs.col(n);
                const cxd r0n = g.adjoint() * ops[r] * xn;
                const cxd sn0 = xn.adjoint() * ops[s] * g;
                const cxd rn0 = xn.adjoint() * ops[r] * g;
                const cxd s0n = g.adjoint() * ops[s] * xn;
                const double gap = evals(n) - evals(0);
                chi(r, s) -= r0n * sn0 / (wp - gap) - rn0 * s0n / (wp + gap);
            }
    return chi;
}

} // namespace cavlr
