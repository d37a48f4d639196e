#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cavlr/models.hpp"
#include "cavlr/sweep.hpp"

using namespace cavlr;

namespace {

RunConfig config_from(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

const char* kDickeMap =
    "model = dicke\n"
    "omega_z = 1.0\n"
    "cavity_freq = 1.0\n"
    "axis = coupling\n"
    "axis_min = 0.0\n"
    "axis_max = 1.2\n"
    "axis_points = 25\n"
    "omega_min = 0.0\n"
    "omega_max = 3.0\n"
    "omega_points = 61\n"
    "delta = 1e-3\n"
    "observables = im_photon, poles\n";

} // namespace

TEST_CASE("config parsing") {
    SUBCASE("round trip of a full spin config") {
        const RunConfig c = config_from(kDickeMap);
        CHECK(!c.is_qhe);
        CHECK(c.spin.kind == ModelKind::dicke);
        CHECK(c.axis == SweepAxis::coupling);
        CHECK(c.axis_points == 25);
        CHECK(c.observables.size() == 2);
    }
    SUBCASE("unknown key is a hard error") {
        CHECK_THROWS_AS(config_from("model = dicke\nlambda_typo = 1\n"), ConfigError);
    }
    SUBCASE("duplicate key is a hard error") {
        CHECK_THROWS_AS(config_from("model = dicke\nomega_z = 1\nomega_z = 2\n"), ConfigError);
    }
    SUBCASE("missing model is a hard error") {
        CHECK_THROWS_AS(config_from("omega_z = 1\n"), ConfigError);
    }
    SUBCASE("observable validity is model-dependent") {
        CHECK_THROWS_AS(config_from("model = dicke\nobservables = conductivity\n"), ConfigError);
        CHECK_THROWS_AS(config_from("model = dicke\nobservables = im_chi_zz\n"), ConfigError);
        CHECK_THROWS_AS(config_from("model = qhe\nobservables = im_photon\n"), ConfigError);
    }
    SUBCASE("axis validity") {
        CHECK_THROWS_AS(config_from("model = qhe\nobservables = conductivity\n"
                                    "axis = coupling\naxis_min = 0\naxis_max = 1\n"
                                    "axis_points = 3\n"),
                        ConfigError);
        CHECK_THROWS_AS(config_from("model = dicke\naxis = coupling\naxis_min = 0\n"
                                    "axis_max = 1\naxis_points = 1\n"),
                        ConfigError);
    }
    SUBCASE("mixing qhe keys into a spin model is rejected") {
        CHECK_THROWS_AS(config_from("model = dicke\nplasma_freq = 1\n"), ConfigError);
        CHECK_THROWS_AS(config_from("model = qhe\nomega_z = 1\nobservables = conductivity\n"),
                        ConfigError);
    }
}

TEST_CASE("dicke coupling map reproduces the softening ridge") {
    const RunConfig c = config_from(kDickeMap);
    const SpectrumTable t = run_sweep(c);
    REQUIRE(t.axis.size() == 25);
    REQUIRE(t.omega.size() == 61);
    REQUIRE(t.series.size() == 1);
    CHECK(t.failed_points.empty());

    // the δ=0 pole rows track the closed-form polaritons
    REQUIRE(t.pole_rows.size() == 25);
    double min_lower = 1e300;
    for (const auto& row : t.pole_rows) {
        REQUIRE(!row.poles.empty());
        min_lower = std::min(min_lower, row.poles.front());
        const auto closed = dicke_polaritons(1.0, 1.0, row.axis_value, 0.0);
        CHECK(row.poles.front() == doctest::Approx(closed.minus).epsilon(1e-7));
    }
    // λ grid contains λ_c = 0.5 (axis point 10): the ridge touches ω = 0
    CHECK(min_lower < 1e-8);

    // pole-map consistency: δ=0 poles match the argmax ridge of the δ>0 map
    const auto& im_d = t.series[0];
    const double dw = t.omega[1] - t.omega[0];
    for (std::size_t ia = 0; ia < t.axis.size(); ia += 6) {
        const double upper = t.pole_rows[ia].poles.back();
        // search the grid row for the local maximum nearest the upper branch
        std::size_t best = 0;
        double best_v = -1.0;
        for (std::size_t iw = 0; iw < t.omega.size(); ++iw) {
            const double v = t.at(im_d, ia, iw).real();
            if (std::abs(t.omega[iw] - upper) < 3.0 * dw && v > best_v) {
                best_v = v;
                best = iw;
            }
        }
        CHECK(std::abs(t.omega[best] - upper) <= dw + 1e-12);
    }
}

TEST_CASE("zeta = 1 map never softens") {
    RunConfig c = config_from(kDickeMap);
    c.spin.channel = InteractionChannel(0.0, 1.0, 1.0);
    const SpectrumTable t = run_sweep(c);
    double min_lower = 1e300;
    for (const auto& row : t.pole_rows) min_lower = std::min(min_lower, row.poles.front());
    CHECK(min_lower > 0.3);
}

TEST_CASE("1x1 grid equals a direct library call") {
    const RunConfig c = config_from(
        "model = dicke\nlambda = 0.25\nomega_min = 0.8\nomega_max = 0.8\n"
        "omega_points = 1\ndelta = 1e-3\nobservables = im_photon\n");
    const SpectrumTable t = run_sweep(c);
    REQUIRE(t.axis.size() == 1);
    REQUIRE(t.omega.size() == 1);
    const ModelSpec s = c.spin;
    const DressedResponse r = spin_model_response(s, solve_mean_field(s), {0.8, 1e-3});
    CHECK(t.series[0].values[0].real() == doctest::Approx(-r.photon.imag()).epsilon(1e-14));
}

TEST_CASE("parallel and serial sweeps agree byte for byte") {
    RunConfig c = config_from(kDickeMap);
    const std::string serial = export_to_string(run_sweep(c, 1), ExportFormat::csv);
    const std::string parallel = export_to_string(run_sweep(c, 8), ExportFormat::csv);
    CHECK(serial == parallel);
    CHECK(export_to_string(run_sweep(c, 1), ExportFormat::csv) == serial); // determinism
}

TEST_CASE("qhe conductivity sweep") {
    const RunConfig c = config_from(
        "model = qhe\ncavity_freq = 1.0\nplasma_freq = 0.5\n"
        "axis = cyclotron_freq\naxis_min = 0.2\naxis_max = 2.0\naxis_points = 7\n"
        "omega_min = 0.0\nomega_max = 3.0\nomega_points = 31\ndelta = 1e-3\n"
        "observables = conductivity, poles\n");
    const SpectrumTable t = run_sweep(c);
    REQUIRE(t.series.size() == 4);
    CHECK(t.series[0].name == "sigma_xx");
    CHECK(t.series[1].name == "sigma_xy");
    // Onsager antisymmetry holds across the table
    for (std::size_t i = 0; i < t.series[1].values.size(); ++i)
        CHECK(std::abs(t.series[1].values[i] + t.series[2].values[i]) < 1e-12);
    // pole rows match the Landau polaritons
    for (const auto& row : t.pole_rows) {
        QheSpec q = c.qhe;
        q.cyclotron_freq = row.axis_value;
        const auto closed = landau_polaritons(q);
        REQUIRE(row.poles.size() == 2);
        CHECK(row.poles[0] == doctest::Approx(closed.minus).epsilon(1e-8));
        CHECK(row.poles[1] == doctest::Approx(closed.plus).epsilon(1e-8));
    }
}

TEST_CASE("export round trips") {
    RunConfig c = config_from(kDickeMap);
    c.axis_points = 5;
    c.omega_points = 7;
    const SpectrumTable t = run_sweep(c);

    SUBCASE("csv") {
        const std::string text = export_to_string(t, ExportFormat::csv);
        CHECK(text.substr(0, 29) == "axis,omega,observable,re,im\n0");
        CHECK(text.back() == '\n');
        std::istringstream in(text);
        const SpectrumTable back = read_table(in, ExportFormat::csv);
        REQUIRE(back.axis.size() == t.axis.size());
        REQUIRE(back.omega.size() == t.omega.size());
        for (std::size_t i = 0; i < t.series[0].values.size(); ++i)
            CHECK(back.series[0].values[i] == t.series[0].values[i]);
        REQUIRE(back.pole_rows.size() == t.pole_rows.size());
        for (std::size_t i = 0; i < t.pole_rows.size(); ++i)
            CHECK(back.pole_rows[i].poles == t.pole_rows[i].poles);
    }
    SUBCASE("structured carries the full metadata echo") {
        const std::string text = export_to_string(t, ExportFormat::structured);
        std::istringstream in(text);
        const SpectrumTable back = read_table(in, ExportFormat::structured);
        // every config field appears in the echo
        for (const auto& [k, v] : c.echo()) {
            bool found = false;
            for (const auto& [bk, bv] : back.metadata) found = found || (bk == k && bv == v);
            CAPTURE(k);
            CHECK(found);
        }
        for (std::size_t i = 0; i < t.series[0].values.size(); ++i)
            CHECK(back.series[0].values[i] == t.series[0].values[i]);
    }
}

TEST_CASE("failed axis points become sentinel rows and the sweep continues") {
    // dicke with omega_z = 0: the lambda = 0 point has a degenerate spin and
    // fails; every other point is in the ordered phase and evaluates fine
    const RunConfig c = config_from(
        "model = dicke\nomega_z = 0.0\naxis = coupling\naxis_min = 0.0\naxis_max = 1.0\n"
        "axis_points = 5\nomega_min = 0.1\nomega_max = 3.0\nomega_points = 9\ndelta = 1e-3\n"
        "observables = im_photon\n");
    const SpectrumTable t = run_sweep(c);
    REQUIRE(t.failed_points == std::vector<int>{0});

    const std::string text = export_to_string(t, ExportFormat::csv);
    CHECK(text.find(",im_photon,,\n") != std::string::npos); // empty value fields
    bool echoed = false;
    for (const auto& [k, v] : t.metadata) echoed = echoed || (k == "failed_axis_points" && v == "0");
    CHECK(echoed);

    // non-failed points carry finite values
    for (std::size_t iw = 0; iw < t.omega.size(); ++iw)
        CHECK(std::isfinite(t.at(t.series[0], 2, iw).real()));

    // the failure survives a csv round trip
    std::istringstream in(text);
    CHECK(read_table(in, ExportFormat::csv).failed_points == std::vector<int>{0});
}

TEST_CASE("a two-by-two table exports four data rows plus header") {
    SpectrumTable t;
    t.axis = {0.0, 1.0};
    t.omega = {0.5, 1.5};
    t.series.push_back({"im_photon", {cxd(1, 0), cxd(2, 0), cxd(3, 0), cxd(4, 0)}});
    const std::string text = export_to_string(t, ExportFormat::csv);
    int rows = 0;
    for (char ch : text) rows += ch == '\n';
    CHECK(rows == 5);
}
