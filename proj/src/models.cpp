#include "cavlr/models.hpp"

#include <cmath>
#include <stdexcept>

namespace cavlr {

namespace {

PolaritonPair sorted_roots(double two_om2_minus, double two_om2_plus) {
    if (two_om2_minus < -1e-12 || two_om2_plus < -1e-12)
        throw std::domain_error("polaritons: negative mode frequency squared (unstable branch)");
    const double a = std::sqrt(std::max(0.0, 0.5 * two_om2_minus));
    const double b = std::sqrt(std::max(0.0, 0.5 * two_om2_plus));
    return {std::min(a, b), std::max(a, b)};
}

// 2Ω±² = A + Ω² ± √((A − Ω²)² + c), the normal-mode pair of a quadratic
// two-oscillator problem with A the squared matter frequency and c the coupling term.
PolaritonPair two_oscillator_modes(double a, double omega2, double coupling) {
    const double s = a + omega2;
    const double disc = (a - omega2) * (a - omega2) + coupling;
    if (disc < 0.0) throw std::domain_error("polaritons: complex discriminant");
    const double r = std::sqrt(disc);
    return sorted_roots(s - r, s + r);
}

} // namespace

BareSusceptibility spin_model_bare_susceptibility(const ModelSpec& spec,
                                                  const MeanFieldState& state) {
    const SpinFields f = dressed_fields(spec, state);
    if (spec.kind == ModelKind::lmg_transverse) {
        return {{'x', 'z'},
                [f](ComplexFrequency w) { return free_spin_susceptibility(f, w); }};
    }
    return {{'x'}, [f](ComplexFrequency w) -> Eigen::MatrixXcd {
                Eigen::MatrixXcd m(1, 1);
                m(0, 0) = free_spin_susceptibility(f, w)(0, 0);
                return m;
            }};
}

BareSusceptibility spin_model_bare_susceptibility(const ModelSpec& spec) {
    return spin_model_bare_susceptibility(spec, solve_mean_field(spec));
}

PolaritonPair dicke_polaritons(double omega_z, double cavity_freq, double lambda, double zeta) {
    const double O = cavity_freq, O2 = O * O, wz2 = omega_z * omega_z;
    const double l2 = lambda * lambda;
    if (zeta == 0.0 && l2 > 0.25 * omega_z * O) {
        const double mu = omega_z * O / (4.0 * l2);
        const double a = wz2 / (mu * mu);
        return two_oscillator_modes(a, O2, 4.0 * wz2 * O2);
    }
    // normal branch; ζ renormalizes the matter frequency but not the coupling term
    const double wz_t2 = omega_z * (omega_z + 4.0 * zeta * l2 / O);
    return two_oscillator_modes(wz_t2, O2, 16.0 * l2 * omega_z * O);
}

PolaritonPair lmg_longitudinal_polaritons(double omega_z, double cavity_freq, double lambda,
                                          double J) {
    const double O = cavity_freq, O2 = O * O;
    const double jeff = lambda * lambda / O + J;
    if (jeff > 0.0 && omega_z < 4.0 * jeff) {
        // superradiant branch, μ̃ = ω_z/(4J_eff)
        const double mu = omega_z / (4.0 * jeff);
        const double a = omega_z * omega_z / (mu * mu) - 4.0 * mu * J * omega_z;
        return two_oscillator_modes(a, O2, 16.0 * lambda * lambda * mu * omega_z * O);
    }
    const double wz_t2 = omega_z * (omega_z - 4.0 * J);
    return two_oscillator_modes(wz_t2, O2, 16.0 * lambda * lambda * omega_z * O);
}

BareSusceptibility heisenberg_effective_response(const ModelSpec& spec) {
    ModelSpec dicke = spec;
    dicke.kind = ModelKind::dicke;
    dicke.J = 0.0;
    return spin_model_bare_susceptibility(dicke);
}

DressedResponse spin_model_response(const ModelSpec& spec, const MeanFieldState& state,
                                    ComplexFrequency w) {
    const BareSusceptibility bare = spin_model_bare_susceptibility(spec, state);
    const auto channels = spec.dressing_channels();
    DressedResponse out;
    out.matter = dress_matter_multichannel(bare, channels, w);

    // photon propagator through the x-coupled cavity; its EOM form takes the
    // matter response already dressed by every *other* channel (the intrinsic
    // static ones), which composes exactly with the cavity dressing
    const int ix = bare.index_of('x');
    const std::vector<std::pair<InteractionChannel, char>> rest(channels.begin() + 1,
                                                                channels.end());
    const Eigen::MatrixXcd partial = dress_matter_multichannel(bare, rest, w);
    const auto [d, dp] = photon_propagators_eom(spec.channel, partial(ix, ix), w);
    out.photon = d;
    out.photon_anomalous = dp;
    return out;
}

} // namespace cavlr
