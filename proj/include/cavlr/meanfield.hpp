// meanfield.hpp — Variational mean-field solver for the effective Hamiltonian and
// the free-spin spectra/susceptibilities on which all spin models stand.

#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cavlr/channel.hpp"
#include "cavlr/frequency.hpp"

namespace cavlr {

struct SpinFields {
    double omega_x{0.0};
    double omega_z{0.0};
};

struct FreeSpinGap {
    double epsilon;    // ε = √(ω_x² + ω_z²)
    double e0;         // ground-state energy −ε/2
    bool degenerate;   // ε = 0
};

FreeSpinGap free_spin_gap(SpinFields fields);

// Closed-form zero-temperature susceptibility of H = (ω_x σ_x + ω_z σ_z)/2,
// indices (x, z). Throws on the degenerate spin ε = 0.
Eigen::Matrix2cd free_spin_susceptibility(SpinFields fields, ComplexFrequency w);

enum class ModelKind { dicke, lmg_longitudinal, lmg_transverse, heisenberg };

struct ModelSpec {
    ModelKind kind{ModelKind::dicke};
    double omega_x{0.0};
    double omega_z{1.0};
    double J{0.0};              // intrinsic collective coupling (ferromagnetic, ≥ 0)
    double z_coord{0.0};        // coordination number (heisenberg energy constant only)
    InteractionChannel channel; // the cavity channel (λ, Ω, ζ)

    void validate() const;

    // Induced-interaction channels seen by the dressing layer: the cavity on x,
    // plus the intrinsic interaction as a static channel (on x for the
    // longitudinal model, on z for the transverse one).
    std::vector<std::pair<InteractionChannel, char>> dressing_channels() const;

    // Static channel strengths entering the variational energy.
    double static_strength_x() const;
    double static_strength_z() const;
};

struct MeanFieldState {
    double m_x{0.0};
    double m_z{0.0};
    double gap{0.0};             // ε of the dressed single-spin Hamiltonian
    double energy_per_site{0.0};
    bool coexistence{false};     // set at first-order degeneracy
};

// Variational energy per site of the fully polarized state
// (m_x, m_z) = (sin θ, cos θ).
double variational_energy(const ModelSpec& spec, double theta);

// Global minimizer of the variational energy. Closed-form piecewise solution for
// the dicke/longitudinal family (cross-checked against the numeric path in tests);
// 1-D multistart minimization over the polarization angle for lmg_transverse.
MeanFieldState solve_mean_field(const ModelSpec& spec);

// Pure numeric route (multistart + golden section), used as the closed-form
// cross-check and by the transverse solver.
MeanFieldState solve_mean_field_numeric(const ModelSpec& spec);

// |m − map(m)| with map the zero-temperature self-consistent map m ↦ −ω̃(m)/ε(m);
// zero at any stationary point.
double self_consistency_residual(const MeanFieldState& state, const ModelSpec& spec);

// |de/dθ| at the state's polarization angle.
double energy_gradient(const ModelSpec& spec, const MeanFieldState& state);

// Effective single-spin fields whose free-spin susceptibility is χ̃_rs,0.
SpinFields dressed_fields(const ModelSpec& spec, const MeanFieldState& state);

} // namespace cavlr
