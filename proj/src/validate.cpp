#include "cavlr/validate.hpp"

#include <cmath>
#include <random>

#include "cavlr/bosonization.hpp"
#include "cavlr/models.hpp"
#include "cavlr/oracles.hpp"
#include "cavlr/qhe.hpp"
#include "cavlr/response.hpp"

namespace cavlr {

namespace {

double rel(cxd a, cxd b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double check_pi_eom(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const InteractionChannel ch(2.0 * u(rng), 0.2 + 2.8 * u(rng), -0.5 + 2.0 * u(rng));
        const SpinFields f{0.0, 0.1 + 2.9 * u(rng)};
        auto bare = [f](ComplexFrequency w) { return free_spin_susceptibility(f, w)(0, 0); };
        std::vector<ComplexFrequency> grid;
        for (int k = 0; k < 16; ++k) grid.emplace_back(4.0 * u(rng), 1e-3);
        worst = std::max(worst, verify_pi_eom_equivalence(ch, bare, grid));
    }
    return worst;
}

double check_free_spin(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const SpinFields f{2.0 * u(rng), 2.0 * u(rng)};
        if (f.omega_x == 0.0 && f.omega_z == 0.0) continue;
        const ComplexFrequency w(2.0 * std::abs(u(rng)), 1e-3 + 0.1 * std::abs(u(rng)));
        const Eigen::Matrix2cd a = free_spin_susceptibility(f, w);
        const Eigen::Matrix2cd b = oracle_free_spin_susceptibility(f, w);
        worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
    }
    return worst;
}

double check_two_mode(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        TwoModeQuadratic q;
        q.omega_a = 0.2 + 2.0 * u(rng);
        q.omega_b = -0.2 * q.omega_a + 0.5 * u(rng);
        q.cavity_freq = 0.2 + 2.0 * u(rng);
        q.omega_c = 0.5 * u(rng);
        const double a = q.omega_a * q.omega_a + 4.0 * q.omega_a * q.omega_b;
        if (a <= 0.01) continue;
        const double disc = (a - q.cavity_freq * q.cavity_freq) * (a - q.cavity_freq * q.cavity_freq)
                            + 16.0 * q.omega_a * q.omega_c * q.omega_c * q.cavity_freq;
        if (a + q.cavity_freq * q.cavity_freq - std::sqrt(disc) <= 0.01) continue;
        const PolaritonPair c = two_mode_polaritons_closed(q);
        const PolaritonPair s = two_mode_polaritons_symplectic(q);
        worst = std::max({worst, std::abs(c.minus - s.minus), std::abs(c.plus - s.plus)});
    }
    return worst;
}

double check_multichannel(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const SpinFields f{0.3, 1.1};
    const BareSusceptibility bare{
        {'x', 'z'}, [f](ComplexFrequency w) { return free_spin_susceptibility(f, w); }};
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const InteractionChannel ch(u(rng), 0.2 + 2.0 * u(rng), u(rng), -u(rng));
        const ComplexFrequency w(3.0 * u(rng), 1e-3);
        const std::vector<std::pair<InteractionChannel, char>> one = {{ch, 'x'}};
        const Eigen::MatrixXcd a = dress_matter_single_channel(bare, ch, 'x', w);
        const Eigen::MatrixXcd b = dress_matter_multichannel(bare, one, w);
        const double scale = std::max({1.0, bare(w).cwiseAbs().maxCoeff(),
                                       a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
        worst = std::max(worst, (a - b).cwiseAbs().maxCoeff() / scale);
    }
    return worst;
}

double check_qhe(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        QheSpec q;
        q.cavity_freq = 0.2 + 2.8 * u(rng);
        q.plasma_freq = 3.0 * u(rng);
        q.cyclotron_freq = 3.0 * u(rng);
        const ComplexFrequency w(5.0 * u(rng), 1e-4 + 0.1 * u(rng));
        for (char r : {'x', 'y'})
            for (char s : {'x', 'y'})
                worst = std::max(worst, rel(qhe_dressed_current_response(q, r, s, w),
                                            qhe_closed_form_current_response(q, r, s, w)));
    }
    return worst;
}

double check_hall(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        QheSpec q;
        q.cavity_freq = 0.2 + 2.8 * u(rng);
        q.plasma_freq = 0.1 + 2.0 * u(rng);
        q.cyclotron_freq = 0.1 + 2.0 * u(rng);
        q.broadening = 1e-6;
        const cxd sxy = qhe_conductivity(q, ComplexFrequency(0.0, q.broadening)).xy;
        worst = std::max(worst, std::abs(sxy - 1.0));
    }
    return worst;
}

double check_dicke_oracle() {
    double worst = 0.0;
    for (int i = 0; i <= 24; ++i) {
        const double lam = 1.2 * i / 24.0;
        if (std::abs(lam - 0.5) < 1e-9) continue;
        ModelSpec s;
        s.kind = ModelKind::dicke;
        s.omega_z = 1.0;
        s.channel = InteractionChannel(lam, 1.0, 0.0);
        const PolaritonPair closed = dicke_polaritons(1.0, 1.0, lam, 0.0);
        const PolaritonPair oracle = bosonized_polaritons(s);
        worst = std::max({worst, std::abs(closed.minus - oracle.minus),
                          std::abs(closed.plus - oracle.plus)});
    }
    return worst;
}

} // namespace

std::vector<ValidationResult> run_validation() {
    std::mt19937 rng(20240801);
    std::vector<ValidationResult> out;
    auto add = [&out](const std::string& name, double worst, double budget) {
        out.push_back({name, worst < budget, worst, budget});
    };
    add("pi_eom_equivalence", check_pi_eom(rng), 1e-10);
    add("free_spin_spectral_oracle", check_free_spin(rng), 1e-12);
    add("two_mode_symplectic_oracle", check_two_mode(rng), 1e-10);
    add("multichannel_reduction", check_multichannel(rng), 1e-14);
    add("qhe_implicit_vs_explicit", check_qhe(rng), 1e-10);
    add("hall_dc_quantization", check_hall(rng), 1e-6);
    add("dicke_polaritons_vs_bosonization", check_dicke_oracle(), 1e-8);
    return out;
}

} // namespace cavlr
