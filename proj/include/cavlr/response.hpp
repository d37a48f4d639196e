// response.hpp — Model-independent dressing identities: induced interactions, free
// propagators, single- and multi-channel matter dressing, EOM photon propagators.
//
// Everything is evaluated directly at ω₊ = ω + iδ. Exact poles at δ = 0 come out
// as non-finite values (see is_singular) rather than exceptions or throws.

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cavlr/bare_susceptibility.hpp"
#include "cavlr/channel.hpp"
#include "cavlr/frequency.hpp"

namespace cavlr {

// V_ind(ω) = 2λ² (Ω²(ζ−1) − ζω₊²) / (Ω (Ω² − ω₊²)) + static_shift.
// For ζ = 0 and no shift this is (2λ²/Ω) Ω²/(ω₊² − Ω²).
inline cxd induced_interaction(const InteractionChannel& ch, ComplexFrequency w) {
    if (ch.is_static() && ch.zeta == 0.0) return ch.static_shift;
    const cxd wp = w.value();
    const double O = ch.cavity_freq, l2 = ch.lambda * ch.lambda;
    return 2.0 * l2 * (O * O * (ch.zeta - 1.0) - ch.zeta * wp * wp) / (O * (O * O - wp * wp))
           + ch.static_shift;
}

// D₀(ω) = 1/(ω₊ − Ω)
inline cxd free_photon_propagator(double cavity_freq, ComplexFrequency w) {
    return 1.0 / (w.value() - cavity_freq);
}

// D₀ˢ(ω) = 1/(ω₊ − Ω) − 1/(ω₊ + Ω)
inline cxd symmetrized_free_propagator(double cavity_freq, ComplexFrequency w) {
    const cxd wp = w.value();
    return 1.0 / (wp - cavity_freq) - 1.0 / (wp + cavity_freq);
}

// D(ω) = D₀ − λ² D₀ χ_xx D₀, with χ_xx the dressed matter response at the same ω₊.
inline cxd dress_photon(const InteractionChannel& ch, cxd chi_xx, ComplexFrequency w) {
    const cxd d0 = free_photon_propagator(ch.cavity_freq, w);
    return d0 - ch.lambda * ch.lambda * d0 * chi_xx * d0;
}

// Single-channel dressing of the full matter matrix:
//   χ_xr = χ̃_xr,0 / (1 + V χ̃_xx,0),  χ_rx likewise,
//   χ_rs = χ̃_rs,0 − χ̃_rx,0 V χ̃_xs,0 / (1 + V χ̃_xx,0)   (r, s ≠ x).
// A vanishing denominator at δ = 0 is the polariton condition and surfaces as
// non-finite entries.
inline Eigen::MatrixXcd dress_matter_single_channel(const BareSusceptibility& bare,
                                                    const InteractionChannel& ch,
                                                    char coupling_label, ComplexFrequency w) {
    const int x = bare.index_of(coupling_label);
    const Eigen::MatrixXcd chi0 = bare(w);
    const int n = static_cast<int>(chi0.rows());
    const cxd v = induced_interaction(ch, w);
    const cxd den = 1.0 + v * chi0(x, x);
    Eigen::MatrixXcd out(n, n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            if (r == x)
                out(r, s) = chi0(r, s) / den;
            else if (s == x)
                out(r, s) = chi0(r, s) / den;
            else
                out(r, s) = chi0(r, s) - chi0(r, x) * v * chi0(x, s) / den;
        }
    return out;
}

// Multichannel dressing (finite mode count M). Uses the multiplied-through
// system A = I + V χ̃ so that V_ind,k = 0 channels need no V⁻¹:
//   χ = χ̃ − χ̃ (I + Vχ̃)⁻¹ V χ̃   restricted to the channel labels.
inline Eigen::MatrixXcd
dress_matter_multichannel(const BareSusceptibility& bare,
                          std::span<const std::pair<InteractionChannel, char>> channels,
                          ComplexFrequency w) {
    const Eigen::MatrixXcd chi0 = bare(w);
    const int n = static_cast<int>(chi0.rows());
    const int m = static_cast<int>(channels.size());
    if (m == 0) return chi0;

    std::vector<int> idx(m);
    Eigen::VectorXcd v(m);
    for (int k = 0; k < m; ++k) {
        idx[k] = bare.index_of(channels[k].second);
        v(k) = induced_interaction(channels[k].first, w);
    }

    Eigen::MatrixXcd a(m, m);   // A_kp = δ_kp + V_k χ̃_{l_k l_p}
    Eigen::MatrixXcd rows(m, n);
    Eigen::MatrixXcd cols(n, m);
    for (int k = 0; k < m; ++k) {
        for (int p = 0; p < m; ++p)
            a(k, p) = (k == p ? 1.0 : 0.0) + v(k) * chi0(idx[k], idx[p]);
        rows.row(k) = v(k) * chi0.row(idx[k]);
        cols.col(k) = chi0.col(idx[k]);
    }
    const Eigen::MatrixXcd z = a.partialPivLu().solve(rows);
    return chi0 - cols * z;
}

// Photon propagators from the equations of motion, in terms of the BARE
// (mean-field) χ̃_xx,0(ω). Returns (D, D₊).
struct PhotonPropagators {
    cxd normal;     // D(ω)
    cxd anomalous;  // D₊(ω)
};

inline PhotonPropagators photon_propagators_eom(const InteractionChannel& ch, cxd chi_xx0,
                                                ComplexFrequency w) {
    if (ch.lambda == 0.0 || chi_xx0 == 0.0)
        return {free_photon_propagator(ch.cavity_freq, w), 0.0}; // exact decoupling
    const cxd wp = w.value();
    const double O = ch.cavity_freq, l2 = ch.lambda * ch.lambda, z = ch.zeta;
    const cxd num = wp + O + l2 * (2.0 * z * (wp + O) - O) / O * chi_xx0;
    const cxd den = wp * wp - O * O + 2.0 * l2 * (z * (wp * wp - O * O) + O * O) / O * chi_xx0;
    return {num / den, l2 * chi_xx0 / den};
}

// Bundled dressed responses of one model at one frequency.
struct DressedResponse {
    cxd photon;
    cxd photon_anomalous;
    Eigen::MatrixXcd matter;
};

// Computes D along the two routes — (i) dress χ_xx then fold into D₀,
// (ii) the EOM closed form — and returns the largest deviation over the grid.
// The two agree identically in exact arithmetic; the deviation is normalized by
// the largest intermediate of route (i), the backward-error scale near resonances.
inline double verify_pi_eom_equivalence(const InteractionChannel& ch,
                                        const std::function<cxd(ComplexFrequency)>& bare_xx,
                                        std::span<const ComplexFrequency> grid) {
    double worst = 0.0;
    for (const auto& w : grid) {
        const cxd chi0 = bare_xx(w);
        const cxd v = induced_interaction(ch, w);
        const cxd chi_xx = chi0 / (1.0 + v * chi0);
        const cxd d_pi = dress_photon(ch, chi_xx, w);
        const cxd d_eom = photon_propagators_eom(ch, chi0, w).normal;
        const cxd d0 = free_photon_propagator(ch.cavity_freq, w);
        const double scale = std::max({1.0, std::abs(d_eom),
                                       ch.lambda * ch.lambda * std::abs(d0 * d0 * chi_xx)});
        const double dev = std::abs(d_pi - d_eom) / scale;
        if (dev > worst) worst = dev;
    }
    return worst;
}

} // namespace cavlr
