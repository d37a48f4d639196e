// table.hpp — SpectrumTable container and its byte-deterministic exports
// (long-form CSV and a structured text format carrying the full metadata block).

#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cavlr/config.hpp"
#include "cavlr/frequency.hpp"

namespace cavlr {

inline constexpr const char* kArtifactVersion = "cavlr 1.0.0";

struct SpectrumTable {
    std::vector<double> axis;   // A values
    std::vector<double> omega;  // W values

    struct Series {
        std::string name;
        std::vector<cxd> values; // A×W, row-major in axis
    };
    std::vector<Series> series;

    struct PoleRow {
        double axis_value;
        std::vector<double> poles;
    };
    std::vector<PoleRow> pole_rows; // one per axis point when poles were requested

    std::vector<std::pair<std::string, std::string>> metadata; // ordered config echo
    std::vector<int> failed_points; // axis indices whose evaluation failed

    cxd at(const Series& s, std::size_t ia, std::size_t iw) const {
        return s.values[ia * omega.size() + iw];
    }
    bool failed(std::size_t ia) const {
        for (int i : failed_points)
            if (static_cast<std::size_t>(i) == ia) return true;
        return false;
    }
};

// 17-significant-digit formatting; doubles survive the round trip exactly.
std::string format_double(double x);

void export_table(const SpectrumTable& table, std::ostream& out, ExportFormat format);
void export_table_file(const SpectrumTable& table, const std::string& path, ExportFormat format);
std::string export_to_string(const SpectrumTable& table, ExportFormat format);

// Round-trip readers (metadata is recovered for the structured format; the CSV
// reader recovers the numeric content).
SpectrumTable read_table(std::istream& in, ExportFormat format);

} // namespace cavlr
