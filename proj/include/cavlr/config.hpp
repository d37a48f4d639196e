// config.hpp — Flat key-value run configuration. Unknown or duplicate keys are
// hard errors: a silent typo in a physics parameter is worse than a rejected run.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cavlr/meanfield.hpp"
#include "cavlr/qhe.hpp"

namespace cavlr {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SweepAxis { none, coupling, plasma_freq, cyclotron_freq, cavity_freq };
enum class Observable { im_photon, im_chi_zz, conductivity, poles };
enum class ExportFormat { csv, structured };

struct RunConfig {
    bool is_qhe{false};
    ModelSpec spin;  // valid when !is_qhe
    QheSpec qhe;     // valid when is_qhe

    SweepAxis axis{SweepAxis::none};
    double axis_min{0.0}, axis_max{0.0};
    int axis_points{1};
    double omega_min{0.0}, omega_max{3.0};
    int omega_points{301};
    double delta{1e-3};
    std::vector<Observable> observables{Observable::im_photon};
    std::string output;
    ExportFormat format{ExportFormat::csv};

    // every effective field, in a fixed order, for the metadata echo
    std::vector<std::pair<std::string, std::string>> echo() const;
};

RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::string& path);

std::string to_string(SweepAxis a);
std::string to_string(Observable o);
std::string to_string(ExportFormat f);
std::string to_string(ModelKind k);

} // namespace cavlr
