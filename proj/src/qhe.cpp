#include "cavlr/qhe.hpp"

#include <cmath>

#include "cavlr/response.hpp"

namespace cavlr {

namespace {

int axis_index(char r) {
    if (r == 'x') return 0;
    if (r == 'y') return 1;
    throw std::invalid_argument("qhe current response: index must be 'x' or 'y'");
}

} // namespace

cxd qhe_bare_current_response(const QheSpec& spec, char r, char s, ComplexFrequency w) {
    spec.validate();
    const int ir = axis_index(r), is = axis_index(s);
    const double wc = spec.cyclotron_freq;
    if (wc == 0.0) return 0.0;
    const cxd wp = w.value();
    const cxd lp = 1.0 / (wp + wc), lm = 1.0 / (wp - wc);
    if (ir == is) return -wc * 0.5 * (lp - lm);
    const cxd cross = wc * cxd(0.0, 0.5) * (lp + lm);
    return ir == 0 ? cross : -cross; // G⁰_JyJx = −G⁰_JxJy
}

cxd qhe_dressed_current_response(const QheSpec& spec, char r, char s, ComplexFrequency w) {
    spec.validate();
    const double wt = spec.renormalized_freq();
    const double wp2 = spec.plasma_freq * spec.plasma_freq;
    const cxd d0s = symmetrized_free_propagator(wt, w);
    const cxd vind = wp2 * d0s;
    const cxd u = vind / (2.0 * wt); // (ω_p/ω̃)²(ω̃/2)D₀ˢ
    const cxd g0xx = qhe_bare_current_response(spec, 'x', 'x', w);
    const cxd den = 1.0 - vind * g0xx / (2.0 * wt);

    const int ir = axis_index(r), is = axis_index(s);
    if (ir == 0 && is == 0)
        return (1.0 + u) * (1.0 + u) * g0xx / den + u;
    if (ir == 1 && is == 1) {
        const cxd g0yy = g0xx;
        const cxd g0xy = qhe_bare_current_response(spec, 'x', 'y', w);
        const cxd g0yx = -g0xy;
        return (g0yy + vind / (2.0 * wt) * (g0xy * g0yx - g0xx * g0yy)) / den;
    }
    const cxd g0rs = qhe_bare_current_response(spec, r, s, w);
    return (1.0 + u) * g0rs / den;
}

cxd qhe_closed_form_current_response(const QheSpec& spec, char r, char s, ComplexFrequency w) {
    spec.validate();
    const double O2 = spec.cavity_freq * spec.cavity_freq;
    const double wc = spec.cyclotron_freq, wc2 = wc * wc;
    const double wp2 = spec.plasma_freq * spec.plasma_freq;
    const double wt2 = O2 + wp2;
    const cxd wq = w.value() * w.value();
    const cxd den = (wq - wt2) * (wq - wc2) - wp2 * wc2;

    const int ir = axis_index(r), is = axis_index(s);
    if (ir == is) {
        if (ir == 0) return (wc2 + wp2) * (wq - O2 * wc2 / (wc2 + wp2)) / den;
        return wc2 * (wq - O2) / den;
    }
    const cxd cross = cxd(0.0, 1.0) * wc * w.value() * (wq - O2) / den;
    return ir == 0 ? cross : -cross;
}

LandauPolaritons landau_polaritons(const QheSpec& spec) {
    spec.validate();
    const double wc2 = spec.cyclotron_freq * spec.cyclotron_freq;
    const double wp2 = spec.plasma_freq * spec.plasma_freq;
    const double wt2 = spec.cavity_freq * spec.cavity_freq + wp2;
    const double rad = std::sqrt((wt2 - wc2) * (wt2 - wc2) + 4.0 * wc2 * wp2);
    const double lo = 0.5 * (wt2 + wc2 - rad), hi = 0.5 * (wt2 + wc2 + rad);
    return {std::sqrt(std::max(0.0, lo)), std::sqrt(hi)};
}

ConductivityTensor qhe_conductivity(const QheSpec& spec, ComplexFrequency w) {
    const cxd wp = w.value();
    const cxd gxx = qhe_dressed_current_response(spec, 'x', 'x', w);
    const cxd gxy = qhe_dressed_current_response(spec, 'x', 'y', w);
    const cxd gyx = qhe_dressed_current_response(spec, 'y', 'x', w);
    const cxd gyy = qhe_dressed_current_response(spec, 'y', 'y', w);
    const double delta = w.delta;
    const double wc = spec.cyclotron_freq;
    ConductivityTensor t;
    // σ_rr/σ_D = (iδ/ω₊)(1 + g_rr); σ_xy/(e²ν/h) = (iω_c/ω₊) g_xy
    t.xx = cxd(0.0, delta) / wp * (1.0 + gxx);
    t.yy = cxd(0.0, delta) / wp * (1.0 + gyy);
    t.xy = cxd(0.0, wc) / wp * gxy;
    t.yx = cxd(0.0, wc) / wp * gyx;
    return t;
}

cxd qhe_free_gas_sigma_xx(const QheSpec& spec, ComplexFrequency w) {
    const cxd wp = w.value();
    const double wt = spec.renormalized_freq();
    const double wp2 = spec.plasma_freq * spec.plasma_freq;
    return cxd(0.0, w.delta) / wp * (1.0 + wp2 / (wp * wp - wt * wt));
}

} // namespace cavlr
