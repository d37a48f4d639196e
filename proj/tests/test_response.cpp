#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cavlr/meanfield.hpp"
#include "cavlr/response.hpp"

using namespace cavlr;

namespace {

BareSusceptibility free_spin_bare(double omega_x, double omega_z) {
    const SpinFields f{omega_x, omega_z};
    return {{'x', 'z'}, [f](ComplexFrequency w) { return free_spin_susceptibility(f, w); }};
}

} // namespace

TEST_CASE("domain type invariants") {
    CHECK_THROWS_AS(ComplexFrequency(1.0, -1e-9), std::invalid_argument);
    CHECK_THROWS_AS(InteractionChannel(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(InteractionChannel(-0.1, 1.0), std::invalid_argument);
    CHECK(ComplexFrequency(0.3, 0.2).value() == cxd(0.3, 0.2));
}

TEST_CASE("induced interaction closed form") {
    CHECK(induced_interaction({0.0, 1.0, 0.0}, {0.5, 0.0}) == cxd(0.0, 0.0));
    CHECK(induced_interaction({1.0, 1.0, 0.0}, {0.0, 0.0}).real() == doctest::Approx(-2.0));
    CHECK(std::abs(induced_interaction({1.0, 1.0, 1.0}, {0.0, 0.0})) == doctest::Approx(0.0));
    // static shift rides on top
    CHECK(induced_interaction({1.0, 1.0, 0.0, -0.3}, {0.0, 0.0}).real()
          == doctest::Approx(-2.3));
    // ζ=0 equals (2λ²/Ω)·Ω²/(ω₊²−Ω²)
    const InteractionChannel ch(0.7, 1.3, 0.0);
    const ComplexFrequency w(0.4, 1e-3);
    const cxd wp = w.value();
    const cxd expected = 2.0 * 0.49 / 1.3 * (1.3 * 1.3) / (wp * wp - 1.3 * 1.3);
    CHECK(std::abs(induced_interaction(ch, w) - expected) < 1e-14);
}

TEST_CASE("on-resonance singularity is flagged, not thrown") {
    CHECK(is_singular(induced_interaction({1.0, 1.0, 0.0}, {1.0, 0.0})));
    CHECK(is_singular(free_photon_propagator(1.0, {1.0, 0.0})));
    CHECK(!is_singular(free_photon_propagator(1.0, {1.0, 0.1})));
}

TEST_CASE("free photon propagators") {
    CHECK(free_photon_propagator(1.0, {0.0, 0.0}).real() == doctest::Approx(-1.0));
    CHECK(free_photon_propagator(1.0, {2.0, 0.0}).real() == doctest::Approx(1.0));
    const cxd d = free_photon_propagator(1.0, {1.0, 0.1});
    CHECK(d.real() == doctest::Approx(0.0));
    CHECK(d.imag() == doctest::Approx(-10.0));

    CHECK(symmetrized_free_propagator(1.0, {0.0, 0.0}).real() == doctest::Approx(-2.0));
    CHECK(symmetrized_free_propagator(2.0, {1.0, 0.0}).real() == doctest::Approx(-4.0 / 3.0));
    // 2Ω/ω² decay
    const double tail = std::abs(symmetrized_free_propagator(1.0, {1e3, 0.0}));
    CHECK(tail == doctest::Approx(2.0 / 1e6).epsilon(1e-3));
}

TEST_CASE("photon dressing decoupling limits") {
    const ComplexFrequency w(0.8, 1e-3);
    const cxd d0 = free_photon_propagator(1.0, w);
    CHECK(std::abs(dress_photon({0.0, 1.0, 0.0}, cxd(3.0, -1.0), w) - d0) == 0.0);
    CHECK(std::abs(dress_photon({0.5, 1.0, 0.0}, cxd(0.0, 0.0), w) - d0) == 0.0);
}

TEST_CASE("dicke lower polariton shows up as a |D| peak") {
    // ω_z = Ω = 1, λ = 0.25, ζ = 0: lower polariton at √(1 − 2λ) = √0.5
    const InteractionChannel ch(0.25, 1.0, 0.0);
    const BareSusceptibility bare = free_spin_bare(0.0, 1.0);
    double best_w = 0.0, best = 0.0;
    for (double w = 0.68; w < 0.74; w += 1e-4) {
        const ComplexFrequency wf(w, 1e-3);
        const Eigen::MatrixXcd chi = dress_matter_single_channel(bare, ch, 'x', wf);
        const double mag = std::abs(dress_photon(ch, chi(0, 0), wf));
        if (mag > best) {
            best = mag;
            best_w = w;
        }
    }
    CHECK(best_w == doctest::Approx(std::sqrt(0.5)).epsilon(5e-4));
}

TEST_CASE("single-channel matter dressing") {
    const BareSusceptibility bare = free_spin_bare(0.0, 1.0);
    const ComplexFrequency w0(0.0, 0.0);

    SUBCASE("V = 0 returns the bare matrix exactly") {
        const InteractionChannel off(0.0, 1.0, 0.0);
        const Eigen::MatrixXcd chi = dress_matter_single_channel(bare, off, 'x', w0);
        CHECK((chi - bare(w0)).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("static dressed value") {
        // χ̃_xx(0) = 2 and V_ind(0) = −1/4 for λ² = 1/8 ⇒ χ_xx(0) = 2/(1 − 1/2) = 4
        const InteractionChannel ch(std::sqrt(1.0 / 8.0), 1.0, 0.0);
        CHECK(bare(w0)(0, 0).real() == doctest::Approx(2.0));
        const Eigen::MatrixXcd chi = dress_matter_single_channel(bare, ch, 'x', w0);
        CHECK(chi(0, 0).real() == doctest::Approx(4.0));
    }
    SUBCASE("static pole at the critical coupling") {
        // λ² = ω_zΩ/4 makes 1 + V(0)χ̃(0) = 0: the phase-transition condition
        const InteractionChannel ch(0.5, 1.0, 0.0);
        const Eigen::MatrixXcd chi = dress_matter_single_channel(bare, ch, 'x', w0);
        CHECK(is_singular(chi(0, 0)));
    }
}

TEST_CASE("multichannel dressing") {
    const BareSusceptibility bare = free_spin_bare(0.4, 1.1);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    SUBCASE("M = 1 reduces to the single-channel formula") {
        // deviation is measured against the bare scale: near a pole both routes
        // share an O(|χ̃|) cancellation
        double worst = 0.0;
        for (int i = 0; i < 500; ++i) {
            const InteractionChannel ch(u(rng), 0.3 + 2.0 * u(rng), u(rng), -0.5 * u(rng));
            const ComplexFrequency w(3.0 * u(rng), 1e-3);
            const std::vector<std::pair<InteractionChannel, char>> one = {{ch, 'x'}};
            const Eigen::MatrixXcd a = dress_matter_single_channel(bare, ch, 'x', w);
            const Eigen::MatrixXcd b = dress_matter_multichannel(bare, one, w);
            const double scale = std::max({1.0, bare(w).cwiseAbs().maxCoeff(),
                                           a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
            worst = std::max(worst, (a - b).cwiseAbs().maxCoeff() / scale);
        }
        CHECK(worst < 1e-14);
    }
    SUBCASE("all channels off returns the bare matrix") {
        const std::vector<std::pair<InteractionChannel, char>> chans = {
            {InteractionChannel(0.0, 1.0, 0.0, 0.0), 'x'},
            {InteractionChannel(0.0, 1.0, 0.0, 0.0), 'z'}};
        const ComplexFrequency w(0.7, 1e-3);
        CHECK((dress_matter_multichannel(bare, chans, w) - bare(w)).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("matches the displayed two-channel χ_xx") {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const InteractionChannel cx(0.2 + 0.8 * u(rng), 0.5 + 1.5 * u(rng), 0.0);
            const InteractionChannel cz(0.0, 1.0, 0.0, -2.0 * u(rng));
            const ComplexFrequency w(3.0 * u(rng), 1e-3);
            const std::vector<std::pair<InteractionChannel, char>> chans = {{cx, 'x'}, {cz, 'z'}};
            const Eigen::MatrixXcd full = dress_matter_multichannel(bare, chans, w);
            const Eigen::MatrixXcd x0 = bare(w);
            const cxd vx = induced_interaction(cx, w), vz = induced_interaction(cz, w);
            const cxd det = x0(0, 0) * x0(1, 1) - x0(0, 1) * x0(1, 0);
            const cxd expected = (x0(0, 0) + vz * det)
                                 / (1.0 + vx * x0(0, 0) + vz * x0(1, 1) + vx * vz * det);
            const double scale = std::max({1.0, x0.cwiseAbs().maxCoeff(),
                                           std::abs(full(0, 0)), std::abs(expected)});
            worst = std::max(worst, std::abs(full(0, 0) - expected) / scale);
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("EOM photon propagators") {
    SUBCASE("decoupled limits") {
        const ComplexFrequency w(0.3, 1e-3);
        const cxd d0 = free_photon_propagator(1.0, w);
        auto [d_a, dp_a] = photon_propagators_eom({0.0, 1.0, 0.0}, cxd(1.5, -0.2), w);
        CHECK(std::abs(d_a - d0) < 1e-15);
        CHECK(std::abs(dp_a) == 0.0);
        auto [d_b, dp_b] = photon_propagators_eom({0.7, 1.0, 0.3}, cxd(0.0, 0.0), w);
        CHECK(std::abs(d_b - d0) < 1e-15);
        CHECK(std::abs(dp_b) == 0.0);
    }
    SUBCASE("hand-evaluated dicke point") {
        // ζ=0, ω_z=Ω=1, λ=0.25, ω=0: χ̃=2, numerator 7/8, denominator −3/4, D = −7/6
        auto [d, dp] = photon_propagators_eom({0.25, 1.0, 0.0}, cxd(2.0, 0.0), {0.0, 0.0});
        CHECK(d.real() == doctest::Approx(-7.0 / 6.0));
        CHECK(d.imag() == doctest::Approx(0.0));
        CHECK(dp.real() == doctest::Approx(0.0625 * 2.0 / -0.75));
    }
}

TEST_CASE("path-integral / EOM equivalence") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    SUBCASE("decoupled deviation is at rounding level") {
        const SpinFields f{0.0, 1.0};
        auto bare = [f](ComplexFrequency w) { return free_spin_susceptibility(f, w)(0, 0); };
        const std::vector<ComplexFrequency> grid = {{0.3, 1e-3}, {1.7, 1e-3}};
        CHECK(verify_pi_eom_equivalence({0.0, 1.0, 0.0}, bare, grid) < 1e-15);
    }
    SUBCASE("fractional zeta") {
        const SpinFields f{0.0, 0.8};
        auto bare = [f](ComplexFrequency w) { return free_spin_susceptibility(f, w)(0, 0); };
        std::vector<ComplexFrequency> grid;
        for (int k = 0; k < 64; ++k) grid.emplace_back(0.05 * k, 1e-3);
        CHECK(verify_pi_eom_equivalence({0.6, 1.1, 0.37}, bare, grid) < 1e-10);
    }
    SUBCASE("1000 random parameter sets, arbitrary zeta") {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double zeta = (i % 3 == 0) ? 0.0 : (i % 3 == 1 ? 1.0 : -0.5 + 2.0 * u(rng));
            const InteractionChannel ch(2.0 * u(rng), 0.2 + 2.8 * u(rng), zeta);
            const SpinFields f{0.0, 0.1 + 2.9 * u(rng)};
            auto bare = [f](ComplexFrequency w) { return free_spin_susceptibility(f, w)(0, 0); };
            std::vector<ComplexFrequency> grid;
            for (int k = 0; k < 8; ++k) grid.emplace_back(4.0 * u(rng), 1e-3);
            worst = std::max(worst, verify_pi_eom_equivalence(ch, bare, grid));
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("hermiticity symmetry of diagonal dressed responses") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const BareSusceptibility bare = free_spin_bare(u(rng), 0.2 + u(rng));
        const InteractionChannel ch(u(rng), 0.3 + 2.0 * u(rng), u(rng));
        const double om = 0.1 + 3.0 * u(rng), dl = 1e-3 + 0.05 * u(rng);
        const Eigen::MatrixXcd plus = dress_matter_single_channel(bare, ch, 'x', {om, dl});
        const Eigen::MatrixXcd minus = dress_matter_single_channel(bare, ch, 'x', {-om, dl});
        for (int r = 0; r < 2; ++r)
            worst = std::max(worst, std::abs(minus(r, r) - std::conj(plus(r, r))));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("high-frequency decay") {
    const BareSusceptibility bare = free_spin_bare(0.0, 1.0);
    const InteractionChannel ch(0.6, 1.0, 0.0);
    double prev_d = 1.0, prev_chi = 1.0;
    for (double om : {1e2, 1e4, 1e6}) {
        const ComplexFrequency w(om, 1e-3);
        const Eigen::MatrixXcd chi = dress_matter_single_channel(bare, ch, 'x', w);
        const cxd d = dress_photon(ch, chi(0, 0), w);
        const double tail_d = std::abs(d - 1.0 / w.value());
        const double tail_chi = chi.cwiseAbs().maxCoeff();
        CHECK(tail_d < prev_d);
        CHECK(tail_chi < prev_chi);
        prev_d = tail_d;
        prev_chi = tail_chi;
    }
    CHECK(prev_d < 1e-10);
    CHECK(prev_chi < 1e-5);
}
