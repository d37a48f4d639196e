#include "cavlr/pole_finding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cavlr {

namespace {

double bisect(const std::function<double(double)>& f, double a, double b, double fa) {
    for (int i = 0; i < 200 && b - a > 1e-10; ++i) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if (!std::isfinite(fm)) break;
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::vector<double> find_poles(const std::function<double(double)>& condition, double lo,
                               double hi, int count_hint) {
    if (!(hi > lo)) throw std::invalid_argument("find_poles: empty bracket");
    constexpr int n = 2048;
    const double cell = (hi - lo) / (n - 1);
    std::vector<double> fs(n);
    std::vector<double> roots;
    roots.reserve(count_hint > 0 ? static_cast<std::size_t>(count_hint) : 8);

    for (int i = 0; i < n; ++i) fs[static_cast<std::size_t>(i)] = condition(lo + cell * i);

    bool have_prev = false;
    double px = 0.0, pf = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = lo + cell * i;
        const double f = fs[static_cast<std::size_t>(i)];
        if (!std::isfinite(f)) {
            have_prev = false;
            continue;
        }
        if (f == 0.0) {
            roots.push_back(x);
            have_prev = false;
            continue;
        }
        if (have_prev && (f < 0.0) != (pf < 0.0))
            roots.push_back(bisect(condition, px, x, pf));
        px = x;
        pf = f;
        have_prev = true;
    }

    // touching roots (coincident pole pairs) never change sign: look for
    // interior |f| minima whose refined valley bottoms out at rounding level
    const double hd = cell * 1e-2;
    for (int i = 1; i + 1 < n; ++i) {
        const double fl = fs[static_cast<std::size_t>(i - 1)];
        const double fm = fs[static_cast<std::size_t>(i)];
        const double fr = fs[static_cast<std::size_t>(i + 1)];
        if (!std::isfinite(fl) || !std::isfinite(fm) || !std::isfinite(fr)) continue;
        if (fl == 0.0 || fm == 0.0 || fr == 0.0) continue;
        if ((fl < 0.0) != (fm < 0.0) || (fr < 0.0) != (fm < 0.0)) continue;
        if (std::abs(fm) > std::abs(fl) || std::abs(fm) > std::abs(fr)) continue;
        const double scale = std::max(std::abs(fl), std::abs(fr));
        // the interpolating parabola must dive well below the sampled minimum
        // (a smooth non-root minimum fits its own value)
        const double curv = fl - 2.0 * fm + fr;
        if (curv == 0.0) continue;
        const double vertex_val = fm - (fr - fl) * (fr - fl) / (8.0 * curv);
        if ((vertex_val < 0.0) == (fm < 0.0) && std::abs(vertex_val) > 0.25 * std::abs(fm))
            continue;
        // bisect the central-difference slope to locate the valley floor
        auto slope = [&](double t) { return condition(t + hd) - condition(t - hd); };
        double a = lo + cell * (i - 1), b = lo + cell * (i + 1);
        double sa = slope(a);
        if ((sa < 0.0) == (slope(b) < 0.0)) continue;
        for (int it = 0; it < 100 && b - a > 1e-12; ++it) {
            const double mid = 0.5 * (a + b);
            const double sm = slope(mid);
            if (sm == 0.0) {
                a = b = mid;
                break;
            }
            if ((sm < 0.0) == (sa < 0.0)) {
                a = mid;
                sa = sm;
            } else {
                b = mid;
            }
        }
        const double xv = 0.5 * (a + b);
        if (std::abs(condition(xv)) <= 1e-9 * scale) roots.push_back(xv);
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || r - out.back() > 1e-8) out.push_back(r);
    return out;
}

std::function<double(double)> spin_pole_condition(const ModelSpec& spec,
                                                  const MeanFieldState& state) {
    const SpinFields f = dressed_fields(spec, state);
    const double eps = std::hypot(f.omega_x, f.omega_z);
    if (eps <= 0.0)
        throw std::domain_error("spin_pole_condition: degenerate spin at the mean-field state");

    struct Term {
        bool active;    // carries its own cavity factor (ω² − Ω²)
        double omega2;  // Ω² (active only)
        double lambda2, zeta, shift;
        double weight;  // −2a²/ε of the channel's diagonal bare response
    };
    std::vector<Term> terms;
    bool first = true; // the model's cavity line is a pole of D even at λ = 0
    for (const auto& [ch, label] : spec.dressing_channels()) {
        const double a2 = (label == 'x') ? f.omega_z * f.omega_z : f.omega_x * f.omega_x;
        terms.push_back({first || !ch.is_static(), ch.cavity_freq * ch.cavity_freq,
                         ch.lambda * ch.lambda, ch.zeta, ch.static_shift, -2.0 * a2 / eps});
        first = false;
    }
    const double eps2 = eps * eps;

    return [terms, eps2](double omega) {
        const double w2 = omega * omega;
        // Π over active cavity factors, and the same product with one factor held out
        double base = w2 - eps2;
        for (const auto& t : terms)
            if (t.active) base *= w2 - t.omega2;
        double sum = base;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            const Term& t = terms[k];
            double contrib;
            if (t.active) {
                const double o2 = t.omega2;
                const double cleared =
                    -2.0 * t.lambda2 * (o2 * (t.zeta - 1.0) - t.zeta * w2) / std::sqrt(o2)
                    + t.shift * (w2 - o2);
                contrib = cleared * t.weight;
            } else {
                contrib = t.shift * t.weight;
            }
            for (std::size_t j = 0; j < terms.size(); ++j)
                if (j != k && terms[j].active) contrib *= w2 - terms[j].omega2;
            sum += contrib;
        }
        return sum;
    };
}

std::function<double(double)> spin_pole_condition(const ModelSpec& spec) {
    return spin_pole_condition(spec, solve_mean_field(spec));
}

std::function<double(double)> qhe_pole_condition(const QheSpec& spec) {
    spec.validate();
    const double wt2 = spec.renormalized_freq() * spec.renormalized_freq();
    const double wc2 = spec.cyclotron_freq * spec.cyclotron_freq;
    const double wp2 = spec.plasma_freq * spec.plasma_freq;
    return [wt2, wc2, wp2](double omega) {
        const double w2 = omega * omega;
        return (w2 - wt2) * (w2 - wc2) - wp2 * wc2;
    };
}

} // namespace cavlr
