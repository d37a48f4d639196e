#include "cavlr/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cavlr {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Strengths {
    double vx, vz; // static channel strengths on x and z
};

Strengths strengths(const ModelSpec& s) {
    return {s.static_strength_x(), s.static_strength_z()};
}

SpinFields dressed_at(const ModelSpec& s, double mx, double mz) {
    const auto [vx, vz] = strengths(s);
    return {s.omega_x + 2.0 * vx * mx, s.omega_z + 2.0 * vz * mz};
}

double energy_at(const ModelSpec& s, double mx, double mz) {
    const auto [vx, vz] = strengths(s);
    double e = 0.5 * s.omega_x * mx + 0.5 * s.omega_z * mz + 0.5 * vx * mx * mx
               + 0.5 * vz * mz * mz;
    if (s.kind == ModelKind::heisenberg) e -= s.J * s.z_coord;
    return e;
}

double energy_theta(const ModelSpec& s, double th) {
    return energy_at(s, std::sin(th), std::cos(th));
}

double gradient_theta(const ModelSpec& s, double th) {
    const double mx = std::sin(th), mz = std::cos(th);
    const auto f = dressed_at(s, mx, mz);
    return 0.5 * (f.omega_x * mz - f.omega_z * mx);
}

double golden_section(const ModelSpec& s, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = energy_theta(s, c), fd = energy_theta(s, d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = energy_theta(s, c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = energy_theta(s, d);
        }
    }
    return 0.5 * (a + b);
}

double curvature_theta(const ModelSpec& s, double th) {
    const auto [vx, vz] = strengths(s);
    return -0.5 * s.omega_x * std::sin(th) - 0.5 * s.omega_z * std::cos(th)
           + (vx - vz) * std::cos(2.0 * th);
}

// Newton on the gradient; golden section alone cannot resolve quartic-flat
// minima past ~1e-5 in double precision. Only descends within a convex basin
// and never accepts an energy increase.
double newton_polish(const ModelSpec& s, double th) {
    double best = th, best_e = energy_theta(s, th), cur = th;
    for (int i = 0; i < 50; ++i) {
        const double g = gradient_theta(s, cur);
        const double gp = curvature_theta(s, cur);
        if (gp <= 0.0) break;
        const double step = g / gp;
        if (!std::isfinite(step) || std::abs(step) > 0.5) break;
        cur -= step;
        const double e = energy_theta(s, cur);
        if (e <= best_e) {
            best = cur;
            best_e = e;
        }
        if (std::abs(step) < 1e-16) break;
    }
    return best;
}

MeanFieldState state_from_angle(const ModelSpec& s, double th) {
    MeanFieldState st;
    st.m_x = std::sin(th);
    st.m_z = std::cos(th);
    // snap angle-rounding residue (sin π etc.) onto the exact pole of the sphere
    if (std::abs(st.m_x) < 1e-12) {
        st.m_x = 0.0;
        st.m_z = st.m_z < 0.0 ? -1.0 : 1.0;
    }
    if (std::abs(st.m_z) < 1e-12) {
        st.m_z = 0.0;
        st.m_x = st.m_x < 0.0 ? -1.0 : 1.0;
    }
    const auto f = dressed_at(s, st.m_x, st.m_z);
    st.gap = std::hypot(f.omega_x, f.omega_z);
    st.energy_per_site = energy_at(s, st.m_x, st.m_z);
    return st;
}

// Two minima are the same physical state up to the symmetries the spec leaves
// unbroken (sign of m_x when ω_x = 0, sign of m_z when ω_z = 0).
bool equivalent_state(const ModelSpec& s, const MeanFieldState& a, const MeanFieldState& b) {
    const double tol = 1e-7;
    const bool flip_x = s.omega_x == 0.0, flip_z = s.omega_z == 0.0;
    const double ax = flip_x ? std::abs(a.m_x) : a.m_x;
    const double bx = flip_x ? std::abs(b.m_x) : b.m_x;
    const double az = flip_z ? std::abs(a.m_z) : a.m_z;
    const double bz = flip_z ? std::abs(b.m_z) : b.m_z;
    return std::abs(ax - bx) < tol && std::abs(az - bz) < tol;
}

void apply_sign_tiebreak(const ModelSpec& s, MeanFieldState& st) {
    if (s.omega_x == 0.0 && st.m_x < 0.0) st.m_x = -st.m_x;
    if (s.omega_z == 0.0 && st.m_z < 0.0) st.m_z = -st.m_z;
}

} // namespace

void ModelSpec::validate() const {
    if (!std::isfinite(omega_x) || !std::isfinite(omega_z) || !std::isfinite(J))
        throw std::invalid_argument("ModelSpec: parameters must be finite");
    if (J < 0.0) throw std::invalid_argument("ModelSpec: J must be >= 0");
    if (channel.cavity_freq <= 0.0)
        throw std::invalid_argument("ModelSpec: cavity_freq must be > 0");
}

std::vector<std::pair<InteractionChannel, char>> ModelSpec::dressing_channels() const {
    switch (kind) {
    case ModelKind::lmg_longitudinal:
        return {{channel, 'x'}, {InteractionChannel(0.0, 1.0, 0.0, -2.0 * J), 'x'}};
    case ModelKind::lmg_transverse:
        return {{channel, 'x'}, {InteractionChannel(0.0, 1.0, 0.0, -2.0 * J), 'z'}};
    case ModelKind::dicke:
    case ModelKind::heisenberg:
    default:
        return {{channel, 'x'}};
    }
}

double ModelSpec::static_strength_x() const {
    double v = channel.static_value();
    if (kind == ModelKind::lmg_longitudinal) v -= 2.0 * J;
    return v;
}

double ModelSpec::static_strength_z() const {
    return kind == ModelKind::lmg_transverse ? -2.0 * J : 0.0;
}

FreeSpinGap free_spin_gap(SpinFields f) {
    const double eps = std::hypot(f.omega_x, f.omega_z);
    return {eps, -0.5 * eps, eps == 0.0};
}

Eigen::Matrix2cd free_spin_susceptibility(SpinFields f, ComplexFrequency w) {
    const double eps2 = f.omega_x * f.omega_x + f.omega_z * f.omega_z;
    if (eps2 == 0.0) throw std::domain_error("free_spin_susceptibility: degenerate spin (eps = 0)");
    const double eps = std::sqrt(eps2);
    const cxd wp = w.value();
    const cxd lorentz = 2.0 * eps / (wp * wp - eps2);
    // rank-1: χ = −(L/ε²) v v^T with v = (ω_z, −ω_x), the transition dipole
    // perpendicular to the field (sign of the cross term fixed by the spectral sum)
    Eigen::Matrix2cd chi;
    chi(0, 0) = -(f.omega_z * f.omega_z / eps2) * lorentz;
    chi(0, 1) = (f.omega_x * f.omega_z / eps2) * lorentz;
    chi(1, 0) = chi(0, 1);
    chi(1, 1) = -(f.omega_x * f.omega_x / eps2) * lorentz;
    return chi;
}

double variational_energy(const ModelSpec& spec, double theta) {
    return energy_theta(spec, theta);
}

// multistart: bracket every local minimum seen on the seed ring, refine each,
// return sorted by energy
std::vector<MeanFieldState> refined_minima(const ModelSpec& spec) {
    constexpr int n_seeds = 64;
    std::vector<double> e(n_seeds);
    for (int i = 0; i < n_seeds; ++i)
        e[i] = energy_theta(spec, 2.0 * kPi * i / n_seeds);

    std::vector<MeanFieldState> minima;
    for (int i = 0; i < n_seeds; ++i) {
        const int l = (i + n_seeds - 1) % n_seeds, r = (i + 1) % n_seeds;
        if (e[i] <= e[l] && e[i] <= e[r]) {
            const double step = 2.0 * kPi / n_seeds;
            const double th0 = 2.0 * kPi * i / n_seeds;
            double th = golden_section(spec, th0 - step, th0 + step, 1e-12);
            th = newton_polish(spec, th);
            minima.push_back(state_from_angle(spec, th));
        }
    }
    if (minima.empty())
        throw std::runtime_error("solve_mean_field: no minimum found after multistart");
    std::sort(minima.begin(), minima.end(),
              [](const MeanFieldState& a, const MeanFieldState& b) {
                  return a.energy_per_site < b.energy_per_site;
              });
    return minima;
}

MeanFieldState solve_mean_field_numeric(const ModelSpec& spec) {
    spec.validate();
    const std::vector<MeanFieldState> minima = refined_minima(spec);

    MeanFieldState best = minima.front();
    bool coexist = false;
    for (std::size_t i = 1; i < minima.size(); ++i) {
        if (minima[i].energy_per_site - best.energy_per_site > 1e-12) break;
        if (!equivalent_state(spec, best, minima[i])) coexist = true;
    }
    if (coexist && spec.channel.lambda > 0.0) {
        // at (near-)degeneracy return the branch continuously connected to the
        // smaller-coupling side: solve at a nudged coupling and re-polish here
        ModelSpec nudged = spec;
        nudged.channel.lambda *= 1.0 - 1e-9;
        const MeanFieldState side = refined_minima(nudged).front();
        const double th = newton_polish(spec, std::atan2(side.m_x, side.m_z));
        best = state_from_angle(spec, th);
    }
    best.coexistence = coexist;
    apply_sign_tiebreak(spec, best);
    return best;
}

MeanFieldState solve_mean_field(const ModelSpec& spec) {
    spec.validate();
    if (spec.kind == ModelKind::lmg_transverse) return solve_mean_field_numeric(spec);

    // dicke / lmg_longitudinal / heisenberg: closed-form piecewise m_x
    const double vx = spec.static_strength_x();
    const double jeff = -0.5 * vx; // λ²(1−ζ)/Ω (+ J for the longitudinal model)
    MeanFieldState st;
    if (jeff <= 0.0 || spec.omega_z >= 4.0 * jeff) {
        st.m_x = 0.0;
        st.m_z = spec.omega_z > 0.0 ? -1.0 : 1.0;
    } else {
        const double mu = spec.omega_z / (4.0 * jeff);
        st.m_x = std::sqrt(1.0 - mu * mu);
        st.m_z = -mu;
    }
    const auto f = dressed_at(spec, st.m_x, st.m_z);
    st.gap = std::hypot(f.omega_x, f.omega_z);
    st.energy_per_site = energy_at(spec, st.m_x, st.m_z);
    apply_sign_tiebreak(spec, st);
    return st;
}

double self_consistency_residual(const MeanFieldState& state, const ModelSpec& spec) {
    const auto f = dressed_at(spec, state.m_x, state.m_z);
    const double eps = std::hypot(f.omega_x, f.omega_z);
    if (eps == 0.0) return std::hypot(state.m_x, state.m_z);
    return std::max(std::abs(state.m_x + f.omega_x / eps),
                    std::abs(state.m_z + f.omega_z / eps));
}

double energy_gradient(const ModelSpec& spec, const MeanFieldState& state) {
    return std::abs(gradient_theta(spec, std::atan2(state.m_x, state.m_z)));
}

SpinFields dressed_fields(const ModelSpec& spec, const MeanFieldState& state) {
    return dressed_at(spec, state.m_x, state.m_z);
}

} // namespace cavlr
