// bosonization.hpp — Independent polariton oracle: Holstein-Primakoff bosonization
// with macroscopic displacements, two-mode quadratic Hamiltonians, and their
// Bogoliubov normal modes (closed form cross-checked against a 4×4 eigensolve).

#pragma once

#include "cavlr/meanfield.hpp"
#include "cavlr/models.hpp"

namespace cavlr {

// Cavity and spin-mode displacements, stored per √N:
// sqrt_alpha = √(α/N), sqrt_beta = √(β/N), k/N = 1 − β/N.
struct Displacements {
    double sqrt_alpha{0.0};
    double sqrt_beta{0.0};
    bool nontrivial{false};
    double residual{0.0}; // largest |linear-term equation| at the solution

    double beta_fraction() const { return sqrt_beta * sqrt_beta; }
    double k_fraction() const { return 1.0 - beta_fraction(); }
};

// Solves the linear-term elimination equations. Longitudinal family and the
// transverse model with ω_x = 0 use the closed forms (non-trivial branch for
// μ̃ < 1); transverse with ω_x ≠ 0 runs a damped Newton iteration seeded from
// the mean-field state. Throws on non-convergence.
Displacements solve_displacements(const ModelSpec& spec);

// Coefficients of H = ω_A d†d + ω_B (d+d†)² + Ω c†c + ω_C (d+d†)(c+c†).
struct TwoModeQuadratic {
    double omega_a{0.0};
    double omega_b{0.0};
    double omega_c{0.0};
    double cavity_freq{1.0};
};

TwoModeQuadratic build_quadratic(const ModelSpec& spec, const Displacements& disp);

// Closed form: 2Ω±² = ω_A² + 4ω_Aω_B + Ω² ± √((ω_A²+4ω_Aω_B−Ω²)² + 16ω_Aω_C²Ω).
PolaritonPair two_mode_polaritons_closed(const TwoModeQuadratic& q);

// Independent route: eigenvalues of the 4×4 dynamical matrix of the quadratic form.
PolaritonPair two_mode_polaritons_symplectic(const TwoModeQuadratic& q);

// Runs both routes and asserts agreement < 1e−10; returns the closed-form pair.
PolaritonPair two_mode_polaritons(const TwoModeQuadratic& q);

// Convenience: displacements → quadratic → normal modes.
PolaritonPair bosonized_polaritons(const ModelSpec& spec);

} // namespace cavlr
