// pole_finding.hpp — δ = 0 pole location: denominator sign-change scanning with
// bisection refinement, and the cleared-denominator pole conditions of the
// built-in models (real polynomials in ω², no spurious sign flips).

#pragma once

#include <functional>
#include <vector>

#include "cavlr/meanfield.hpp"
#include "cavlr/qhe.hpp"

namespace cavlr {

// Scans [lo, hi] on a 2048-point grid for sign changes (and exact zeros) of the
// pole condition, refines each bracket by bisection to 1e−10, deduplicates
// within 1e−8 and returns the sorted frequencies. Non-finite evaluations are
// skipped; no sign change yields an empty list.
std::vector<double> find_poles(const std::function<double(double)>& condition, double lo,
                               double hi, int count_hint = 0);

// Cleared-denominator pole condition of a spin model at its mean-field state:
// (ω² − ε²) Π_cavities (ω² − Ω_k²) · det(I + Vχ̃), a polynomial in ω².
// Its roots are the poles of every dressed response (photon and matter alike),
// including the bare lines left by decoupled sectors.
std::function<double(double)> spin_pole_condition(const ModelSpec& spec,
                                                  const MeanFieldState& state);
std::function<double(double)> spin_pole_condition(const ModelSpec& spec);

// (ω² − ω̃²)(ω² − ω_c²) − ω_p²ω_c², the common denominator of the QHE responses.
std::function<double(double)> qhe_pole_condition(const QheSpec& spec);

} // namespace cavlr
