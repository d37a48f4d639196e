// models.hpp — Model zoo: bare susceptibilities of the spin models at their
// mean-field state, and the closed-form polariton branches they are tested against.

#pragma once

#include "cavlr/bare_susceptibility.hpp"
#include "cavlr/meanfield.hpp"
#include "cavlr/response.hpp"

namespace cavlr {

struct PolaritonPair {
    double minus;
    double plus;
};

// Solves the mean field and binds the Appendix-style free-spin susceptibility at
// the dressed fields. Labels: (x) for dicke/lmg_longitudinal/heisenberg,
// (x, z) for lmg_transverse.
BareSusceptibility spin_model_bare_susceptibility(const ModelSpec& spec);

// As above but reusing an already-solved state.
BareSusceptibility spin_model_bare_susceptibility(const ModelSpec& spec,
                                                  const MeanFieldState& state);

// Exact Dicke polaritons. ζ = 0: piecewise normal/superradiant branches with
// μ = ω_zΩ/(4λ²). ζ > 0: normal branch at the renormalized
// ω̃_z² = ω_z(ω_z + 4ζλ²/Ω) (for ζ = 1 this is the P²-stabilized case; the
// coupling term 16λ²ω_zΩ is ζ-invariant).
PolaritonPair dicke_polaritons(double omega_z, double cavity_freq, double lambda, double zeta);

// Exact longitudinal Dicke-LMG polaritons, branch selected by ω_z ≥ 4J_eff with
// J_eff = λ²/Ω + J (superradiant branch at exact equality).
PolaritonPair lmg_longitudinal_polaritons(double omega_z, double cavity_freq, double lambda,
                                          double J);

// Ordered Heisenberg ferromagnet: the variational problem and the zero-momentum
// magnon response reduce to the Dicke (ζ=0) pipeline; the intrinsic interaction
// only contributes the constant −J·z_coord to the energy.
BareSusceptibility heisenberg_effective_response(const ModelSpec& spec);

// Full dressed response of a spin model at one frequency (photon via the EOM
// closed form, matter via the multichannel dressing).
DressedResponse spin_model_response(const ModelSpec& spec, const MeanFieldState& state,
                                    ComplexFrequency w);

} // namespace cavlr
