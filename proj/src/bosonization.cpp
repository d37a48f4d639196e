#include "cavlr/bosonization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

namespace cavlr {

namespace {

// The P² term of the Dicke family is a negative intrinsic coupling for the
// bosonization: ζ(λ²/NΩ)(S₊+S₋)² has the structure of −(J/N)(S₊+S₋)² with
// J → −ζλ²/Ω. Longitudinal models then share one code path.
double longitudinal_j(const ModelSpec& s) {
    const double base = (s.kind == ModelKind::lmg_longitudinal) ? s.J : 0.0;
    return base - s.channel.zeta * s.channel.lambda * s.channel.lambda / s.channel.cavity_freq;
}

bool is_longitudinal_family(const ModelSpec& s) {
    return s.kind == ModelKind::dicke || s.kind == ModelKind::heisenberg
           || s.kind == ModelKind::lmg_longitudinal;
}

struct LinearEqs {
    double f1, f2;
};

// Linear-term equations in per-√N variables x = √(α/N), y = √(β/N), κ = 1 − y².
LinearEqs linear_terms(const ModelSpec& s, double x, double y) {
    const double lam = s.channel.lambda, O = s.channel.cavity_freq;
    const double kap = 1.0 - y * y;
    const double sk = std::sqrt(kap);
    const double half = 0.5 - y * y;
    const double f1 = 2.0 * lam * y * sk - O * x;
    double f2;
    if (is_longitudinal_family(s)) {
        f2 = 4.0 * lam * x * half / sk - s.omega_z * y + 8.0 * longitudinal_j(s) * y * half;
    } else {
        f2 = 4.0 * lam * x * half / sk - s.omega_z * y - 8.0 * s.J * y * half
             + s.omega_x * half / sk;
    }
    return {f1, f2};
}

double residual_norm(const ModelSpec& s, double x, double y) {
    const auto [f1, f2] = linear_terms(s, x, y);
    return std::max(std::abs(f1), std::abs(f2));
}

Displacements closed_form_displacements(double mu, double lambda, double cavity_freq) {
    Displacements d;
    if (!(mu < 1.0) || mu < 0.0) return d; // trivial branch
    d.sqrt_alpha = lambda / cavity_freq * std::sqrt(1.0 - mu * mu);
    d.sqrt_beta = std::sqrt(0.5 * (1.0 - mu));
    d.nontrivial = true;
    return d;
}

Displacements newton_displacements(const ModelSpec& s) {
    // seed from the mean-field state, mapped to the oracle's sign convention
    // (the HP displacement picks the m_x ≤ 0, m_z ≤ 0 partner)
    const MeanFieldState mf = solve_mean_field(s);
    const double mz = s.omega_z == 0.0 ? -std::abs(mf.m_z) : mf.m_z;
    const double mx = s.omega_x == 0.0 ? -std::abs(mf.m_x) : mf.m_x;
    double y = std::sqrt(std::max(0.0, 0.5 * (1.0 + mz)));
    double x = -s.channel.lambda * mx / s.channel.cavity_freq;

    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> uy(0.0, 0.95), ux(0.0, 2.0);
    for (int restart = 0; restart <= 16; ++restart) {
        if (restart > 0) {
            y = uy(rng);
            x = ux(rng);
        }
        for (int it = 0; it < 200; ++it) {
            const auto [f1, f2] = linear_terms(s, x, y);
            const double fn = std::max(std::abs(f1), std::abs(f2));
            if (fn < 1e-13) {
                Displacements d;
                d.sqrt_alpha = x;
                d.sqrt_beta = y;
                d.nontrivial = x != 0.0 || y != 0.0;
                d.residual = fn;
                return d;
            }
            const double h = 1e-7;
            const auto fx = linear_terms(s, x + h, y);
            const auto fy = linear_terms(s, x, y + h);
            const double j11 = (fx.f1 - f1) / h, j12 = (fy.f1 - f1) / h;
            const double j21 = (fx.f2 - f2) / h, j22 = (fy.f2 - f2) / h;
            const double det = j11 * j22 - j12 * j21;
            if (std::abs(det) < 1e-300) break;
            double dx = -(j22 * f1 - j12 * f2) / det;
            double dy = -(-j21 * f1 + j11 * f2) / det;
            double step = 1.0;
            while (step > 1e-6) {
                const double xn = x + step * dx, yn = y + step * dy;
                if (yn >= 0.0 && yn < 0.999 && xn >= -1e-12
                    && residual_norm(s, std::max(xn, 0.0), yn) < fn) {
                    x = std::max(xn, 0.0);
                    y = yn;
                    break;
                }
                step *= 0.5;
            }
            if (step <= 1e-6) break;
        }
    }
    throw std::runtime_error("solve_displacements: Newton did not converge");
}

} // namespace

Displacements solve_displacements(const ModelSpec& spec) {
    spec.validate();
    if (spec.omega_x < 0.0 || spec.omega_z < 0.0)
        throw std::invalid_argument("solve_displacements: fields must be >= 0 "
                                    "(the displacement sign convention assumes it)");
    const double lam = spec.channel.lambda, O = spec.channel.cavity_freq;
    Displacements d;
    if (is_longitudinal_family(spec)) {
        const double jeff = longitudinal_j(spec) + lam * lam / O;
        if (jeff > 0.0) {
            const double mu = spec.omega_z / (4.0 * jeff);
            d = closed_form_displacements(mu, lam, O);
        }
    } else if (spec.omega_x == 0.0) {
        const double drive = lam * lam / O - spec.J;
        if (drive > 0.0) {
            const double mu = spec.omega_z / (4.0 * drive);
            d = closed_form_displacements(mu, lam, O);
        }
    } else {
        d = newton_displacements(spec);
    }
    d.residual = residual_norm(spec, d.sqrt_alpha, d.sqrt_beta);
    if (d.residual > 1e-12)
        throw std::runtime_error("solve_displacements: linear-term residual above 1e-12");
    return d;
}

TwoModeQuadratic build_quadratic(const ModelSpec& spec, const Displacements& disp) {
    const double lam = spec.channel.lambda, O = spec.channel.cavity_freq;
    const double x = disp.sqrt_alpha, y = disp.sqrt_beta;
    const double kap = disp.k_fraction();
    if (kap <= 1e-12)
        throw std::runtime_error("build_quadratic: vanishing k/N (displacement out of range)");
    const double sk = std::sqrt(kap);
    const double half = 0.5 - y * y;

    TwoModeQuadratic q;
    q.cavity_freq = O;
    q.omega_c = 2.0 * lam * half / sk;
    const double hopping = 2.0 * lam * x * y / sk; // cavity-displacement shift of d†d
    const double squeeze = lam * x * y * (2.0 * kap + y * y) / (2.0 * kap * sk);
    if (is_longitudinal_family(spec)) {
        const double jb = longitudinal_j(spec);
        q.omega_a = spec.omega_z + hopping + 4.0 * jb * y * y;
        q.omega_b = squeeze + jb * (4.0 * y * y - kap);
    } else {
        q.omega_a = spec.omega_z + 8.0 * spec.J * half + hopping
                    + 0.5 * spec.omega_x * y / sk;
        q.omega_b = -4.0 * spec.J * y * y + squeeze
                    + 0.25 * spec.omega_x * (y / sk) * (1.0 + y * y / (2.0 * kap));
    }
    return q;
}

PolaritonPair two_mode_polaritons_closed(const TwoModeQuadratic& q) {
    const double a = q.omega_a * q.omega_a + 4.0 * q.omega_a * q.omega_b;
    const double O2 = q.cavity_freq * q.cavity_freq;
    if (a < -1e-12)
        throw std::domain_error("two_mode_polaritons: unstable matter quadratic form");
    const double disc = (a - O2) * (a - O2) + 16.0 * q.omega_a * q.omega_c * q.omega_c * q.cavity_freq;
    if (disc < 0.0) throw std::domain_error("two_mode_polaritons: negative discriminant");
    const double r = std::sqrt(disc);
    const double lo = 0.5 * (a + O2 - r), hi = 0.5 * (a + O2 + r);
    if (lo < -1e-10) throw std::domain_error("two_mode_polaritons: imaginary lower mode");
    return {std::sqrt(std::max(0.0, lo)), std::sqrt(hi)};
}

PolaritonPair two_mode_polaritons_symplectic(const TwoModeQuadratic& q) {
    // Heisenberg dynamical matrix in the basis (d, c, d†, c†)
    const double wa = q.omega_a, wb = q.omega_b, wc = q.omega_c, O = q.cavity_freq;
    Eigen::Matrix4d m;
    m << wa + 2.0 * wb, wc, 2.0 * wb, wc,
         wc, O, wc, 0.0,
         -2.0 * wb, -wc, -wa - 2.0 * wb, -wc,
         -wc, 0.0, -wc, -O;
    const Eigen::EigenSolver<Eigen::Matrix4d> es(m);
    std::array<double, 4> re{};
    const double scale = std::max({1.0, std::abs(wa), std::abs(wb), std::abs(wc), O});
    for (int i = 0; i < 4; ++i) {
        const auto ev = es.eigenvalues()(i);
        if (std::abs(ev.imag()) > 1e-8 * scale)
            throw std::domain_error("two_mode_polaritons: imaginary mode (wrong phase?)");
        re[static_cast<std::size_t>(i)] = ev.real();
    }
    std::sort(re.begin(), re.end());
    // spectrum is ±Ω∓; the top two entries are the non-negative pair
    return {std::max(0.0, re[2]), std::max(0.0, re[3])};
}

PolaritonPair two_mode_polaritons(const TwoModeQuadratic& q) {
    const PolaritonPair closed = two_mode_polaritons_closed(q);
    const PolaritonPair symp = two_mode_polaritons_symplectic(q);
    const double tol = 1e-10 * std::max(1.0, closed.plus);
    if (std::abs(closed.minus - symp.minus) > tol || std::abs(closed.plus - symp.plus) > tol)
        throw std::runtime_error("two_mode_polaritons: closed form and symplectic eigensolve disagree");
    return closed;
}

PolaritonPair bosonized_polaritons(const ModelSpec& spec) {
    return two_mode_polaritons(build_quadratic(spec, solve_displacements(spec)));
}

} // namespace cavlr
