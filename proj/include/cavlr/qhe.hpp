// qhe.hpp — 2D electron gas in a magnetic field coupled to a cavity: current
// response functions (two independent routes), Landau polaritons, conductivities.
//
// Current responses are reported in units of Ne²/m. Conductivities come out in
// reduced units: e²ν/h for the Hall components, the Drude value σ_D = e²ρ/(mδ)
// for the longitudinal ones.

#pragma once

#include <complex>
#include <stdexcept>

#include "cavlr/frequency.hpp"

namespace cavlr {

struct QheSpec {
    double cavity_freq{1.0};    // Ω
    double plasma_freq{0.0};    // ω_p
    double cyclotron_freq{0.0}; // ω_c
    double broadening{1e-3};    // default δ for sweeps and dc evaluations
    double filling{1.0};        // ν, only fixes the Hall unit

    void validate() const {
        if (cavity_freq <= 0.0) throw std::invalid_argument("QheSpec: cavity_freq must be > 0");
        if (cyclotron_freq < 0.0) throw std::invalid_argument("QheSpec: cyclotron_freq must be >= 0");
        if (plasma_freq < 0.0) throw std::invalid_argument("QheSpec: plasma_freq must be >= 0");
    }

    // ω̃ = √(Ω² + ω_p²), the cavity frequency after removing the A² term
    double renormalized_freq() const {
        return std::sqrt(cavity_freq * cavity_freq + plasma_freq * plasma_freq);
    }
};

// Bare current responses of the Landau problem, r, s ∈ {x, y}.
cxd qhe_bare_current_response(const QheSpec& spec, char r, char s, ComplexFrequency w);

// Dressed responses via the implicit route: bare responses composed with
// V_ind(ω) = ω_p² D₀ˢ(ω) at the renormalized frequency, including the
// photon-only additive channel in the xx component.
cxd qhe_dressed_current_response(const QheSpec& spec, char r, char s, ComplexFrequency w);

// The explicit rational forms with common denominator
// (ω₊² − ω̃²)(ω₊² − ω_c²) − ω_p²ω_c².
cxd qhe_closed_form_current_response(const QheSpec& spec, char r, char s, ComplexFrequency w);

struct LandauPolaritons {
    double minus;
    double plus;
};

// 2Ω±² = ω̃² + ω_c² ± √((ω̃² − ω_c²)² + 4ω_c²ω_p²)
LandauPolaritons landau_polaritons(const QheSpec& spec);

struct ConductivityTensor {
    cxd xx, xy, yx, yy; // diagonal in units of σ_D, Hall in units of e²ν/h
};

// Kubo tensor assembled from the dressed responses at ω₊ = ω + iδ.
ConductivityTensor qhe_conductivity(const QheSpec& spec, ComplexFrequency w);

// ω_c = 0 closed form: σ_xx(ω)/σ_D = (iδ/ω₊)(1 + ω_p²/(ω₊² − ω̃²)).
cxd qhe_free_gas_sigma_xx(const QheSpec& spec, ComplexFrequency w);

} // namespace cavlr
