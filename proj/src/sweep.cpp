#include "cavlr/sweep.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "cavlr/models.hpp"
#include "cavlr/pole_finding.hpp"
#include "cavlr/qhe.hpp"

namespace cavlr {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return v;
}

ModelSpec spin_at(const RunConfig& c, double axis_value) {
    ModelSpec s = c.spin;
    if (c.axis == SweepAxis::coupling)
        s.channel = InteractionChannel(axis_value, s.channel.cavity_freq, s.channel.zeta,
                                       s.channel.static_shift);
    else if (c.axis == SweepAxis::cavity_freq)
        s.channel = InteractionChannel(s.channel.lambda, axis_value, s.channel.zeta,
                                       s.channel.static_shift);
    return s;
}

QheSpec qhe_at(const RunConfig& c, double axis_value) {
    QheSpec q = c.qhe;
    q.broadening = c.delta;
    switch (c.axis) {
    case SweepAxis::plasma_freq: q.plasma_freq = axis_value; break;
    case SweepAxis::cyclotron_freq: q.cyclotron_freq = axis_value; break;
    case SweepAxis::cavity_freq: q.cavity_freq = axis_value; break;
    default: break;
    }
    return q;
}

struct PointResult {
    std::vector<cxd> values; // one slab per grid series, ω-major
    std::vector<double> poles;
    bool failed{false};
};

} // namespace

SpectrumTable run_sweep(const RunConfig& config, int threads) {
    SpectrumTable table;
    table.metadata = config.echo();

    const bool fixed_axis = config.axis == SweepAxis::none;
    double fixed_value = 0.0;
    if (fixed_axis) {
        if (config.is_qhe) fixed_value = config.qhe.cyclotron_freq;
        else fixed_value = config.spin.channel.lambda;
    }
    table.axis = fixed_axis ? std::vector<double>{fixed_value}
                            : linspace(config.axis_min, config.axis_max, config.axis_points);
    table.omega = linspace(config.omega_min, config.omega_max, config.omega_points);

    std::vector<std::string> grid_names;
    bool want_poles = false;
    for (const auto& o : config.observables) {
        switch (o) {
        case Observable::im_photon: grid_names.push_back("im_photon"); break;
        case Observable::im_chi_zz: grid_names.push_back("im_chi_zz"); break;
        case Observable::conductivity:
            for (const char* n : {"sigma_xx", "sigma_xy", "sigma_yx", "sigma_yy"})
                grid_names.push_back(n);
            break;
        case Observable::poles: want_poles = true; break;
        }
    }

    const std::size_t na = table.axis.size(), nw = table.omega.size(), ns = grid_names.size();
    std::vector<PointResult> results(na);

    auto evaluate_point = [&](std::size_t ia) {
        PointResult r;
        r.values.assign(ns * nw, cxd(std::numeric_limits<double>::quiet_NaN(), 0.0));
        try {
            if (config.is_qhe) {
                const QheSpec q = qhe_at(config, table.axis[ia]);
                for (std::size_t iw = 0; iw < nw; ++iw) {
                    const ComplexFrequency w(table.omega[iw], config.delta);
                    std::size_t slot = 0;
                    for (const auto& o : config.observables) {
                        if (o != Observable::conductivity) continue;
                        const ConductivityTensor t = qhe_conductivity(q, w);
                        r.values[(slot + 0) * nw + iw] = t.xx;
                        r.values[(slot + 1) * nw + iw] = t.xy;
                        r.values[(slot + 2) * nw + iw] = t.yx;
                        r.values[(slot + 3) * nw + iw] = t.yy;
                        slot += 4;
                    }
                }
                if (want_poles)
                    r.poles = find_poles(qhe_pole_condition(q), config.omega_min, config.omega_max);
            } else {
                const ModelSpec s = spin_at(config, table.axis[ia]);
                const MeanFieldState state = solve_mean_field(s);
                const BareSusceptibility bare = spin_model_bare_susceptibility(s, state);
                const auto channels = s.dressing_channels();
                const std::vector<std::pair<InteractionChannel, char>> rest(channels.begin() + 1,
                                                                            channels.end());
                const int ix = bare.index_of('x');
                for (std::size_t iw = 0; iw < nw; ++iw) {
                    const ComplexFrequency w(table.omega[iw], config.delta);
                    const Eigen::MatrixXcd partial = dress_matter_multichannel(bare, rest, w);
                    std::size_t slot = 0;
                    for (const auto& o : config.observables) {
                        if (o == Observable::im_photon) {
                            const cxd d = photon_propagators_eom(s.channel, partial(ix, ix), w).normal;
                            r.values[slot * nw + iw] = cxd(-d.imag(), 0.0);
                            slot += 1;
                        } else if (o == Observable::im_chi_zz) {
                            const Eigen::MatrixXcd full = dress_matter_multichannel(bare, channels, w);
                            const int iz = bare.index_of('z');
                            r.values[slot * nw + iw] = cxd(-full(iz, iz).imag(), 0.0);
                            slot += 1;
                        }
                    }
                }
                if (want_poles)
                    r.poles = find_poles(spin_pole_condition(s, state), config.omega_min,
                                         config.omega_max);
            }
        } catch (const std::exception&) {
            r.failed = true;
        }
        results[ia] = std::move(r);
    };

    if (threads <= 1 || na == 1) {
        for (std::size_t ia = 0; ia < na; ++ia) evaluate_point(ia);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t ia = next.fetch_add(1); ia < na; ia = next.fetch_add(1))
                evaluate_point(ia);
        };
        std::vector<std::thread> pool;
        const int nt = std::min<int>(threads, static_cast<int>(na));
        pool.reserve(static_cast<std::size_t>(nt));
        for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t si = 0; si < ns; ++si) {
        SpectrumTable::Series s;
        s.name = grid_names[si];
        s.values.resize(na * nw);
        for (std::size_t ia = 0; ia < na; ++ia)
            for (std::size_t iw = 0; iw < nw; ++iw)
                s.values[ia * nw + iw] = results[ia].values[si * nw + iw];
        table.series.push_back(std::move(s));
    }
    for (std::size_t ia = 0; ia < na; ++ia) {
        if (results[ia].failed) table.failed_points.push_back(static_cast<int>(ia));
        if (want_poles && !results[ia].failed)
            table.pole_rows.push_back({table.axis[ia], results[ia].poles});
    }
    std::string failed_summary;
    for (int i : table.failed_points) {
        if (!failed_summary.empty()) failed_summary += ",";
        failed_summary += std::to_string(i);
    }
    table.metadata.emplace_back("failed_axis_points", failed_summary);
    return table;
}

} // namespace cavlr
