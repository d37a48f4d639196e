#include "cavlr/table.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cavlr {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void export_csv(const SpectrumTable& t, std::ostream& out) {
    out << "axis,omega,observable,re,im\n";
    const std::size_t nw = t.omega.size();
    for (const auto& s : t.series) {
        for (std::size_t ia = 0; ia < t.axis.size(); ++ia) {
            const bool bad = t.failed(ia);
            for (std::size_t iw = 0; iw < nw; ++iw) {
                out << format_double(t.axis[ia]) << ',' << format_double(t.omega[iw]) << ','
                    << s.name << ',';
                if (bad) {
                    out << ",";
                } else {
                    const cxd v = t.at(s, ia, iw);
                    out << format_double(v.real()) << ',' << format_double(v.imag());
                }
                out << '\n';
            }
        }
    }
    for (const auto& row : t.pole_rows)
        for (double p : row.poles)
            out << format_double(row.axis_value) << ',' << format_double(p) << ",poles,"
                << format_double(p) << ",0\n";
}

void export_structured(const SpectrumTable& t, std::ostream& out) {
    out << "cavlr-table 1\n";
    out << "meta " << t.metadata.size() + 1 << '\n';
    out << "version = " << kArtifactVersion << '\n';
    for (const auto& [k, v] : t.metadata) out << k << " = " << v << '\n';
    out << "failed " << t.failed_points.size();
    for (int i : t.failed_points) out << ' ' << i;
    out << '\n';
    out << "axis " << t.axis.size() << '\n';
    for (double a : t.axis) out << format_double(a) << '\n';
    out << "omega " << t.omega.size() << '\n';
    for (double w : t.omega) out << format_double(w) << '\n';
    for (const auto& s : t.series) {
        out << "series " << s.name << ' ' << s.values.size() << '\n';
        for (const cxd& v : s.values)
            out << format_double(v.real()) << ' ' << format_double(v.imag()) << '\n';
    }
    out << "poles " << t.pole_rows.size() << '\n';
    for (const auto& row : t.pole_rows) {
        out << format_double(row.axis_value) << ' ' << row.poles.size();
        for (double p : row.poles) out << ' ' << format_double(p);
        out << '\n';
    }
    out << "end\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) parts.push_back(item);
    if (!s.empty() && s.back() == sep) parts.push_back("");
    return parts;
}

SpectrumTable read_csv(std::istream& in) {
    SpectrumTable t;
    std::string line;
    if (!std::getline(in, line) || line != "axis,omega,observable,re,im")
        throw std::runtime_error("read_table: bad CSV header");

    std::map<std::string, std::size_t> series_index;
    std::vector<double> axis_seen, omega_seen;
    struct Cell {
        std::string name;
        double axis, omega;
        cxd value;
        bool empty;
    };
    std::vector<Cell> cells;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 5) throw std::runtime_error("read_table: bad CSV row '" + line + "'");
        Cell c;
        c.axis = std::stod(f[0]);
        c.omega = std::stod(f[1]);
        c.name = f[2];
        c.empty = f[3].empty();
        c.value = c.empty ? cxd(0, 0) : cxd(std::stod(f[3]), std::stod(f[4]));
        if (c.name == "poles") {
            if (t.pole_rows.empty() || t.pole_rows.back().axis_value != c.axis)
                t.pole_rows.push_back({c.axis, {}});
            t.pole_rows.back().poles.push_back(c.value.real());
            continue;
        }
        cells.push_back(c);
        if (axis_seen.empty() || axis_seen.back() != c.axis) {
            bool known = false;
            for (double a : axis_seen) known = known || a == c.axis;
            if (!known) axis_seen.push_back(c.axis);
        }
        bool known = false;
        for (double w : omega_seen) known = known || w == c.omega;
        if (!known) omega_seen.push_back(c.omega);
    }
    t.axis = axis_seen;
    t.omega = omega_seen;
    auto axis_idx = [&](double a) {
        for (std::size_t i = 0; i < t.axis.size(); ++i)
            if (t.axis[i] == a) return i;
        throw std::runtime_error("read_table: axis value not found");
    };
    auto omega_idx = [&](double w) {
        for (std::size_t i = 0; i < t.omega.size(); ++i)
            if (t.omega[i] == w) return i;
        throw std::runtime_error("read_table: omega value not found");
    };
    for (const auto& c : cells) {
        if (!series_index.count(c.name)) {
            series_index[c.name] = t.series.size();
            t.series.push_back({c.name, std::vector<cxd>(t.axis.size() * t.omega.size())});
        }
        auto& s = t.series[series_index[c.name]];
        s.values[axis_idx(c.axis) * t.omega.size() + omega_idx(c.omega)] = c.value;
        if (c.empty) {
            const int ia = static_cast<int>(axis_idx(c.axis));
            if (!t.failed(static_cast<std::size_t>(ia))) t.failed_points.push_back(ia);
        }
    }
    return t;
}

SpectrumTable read_structured(std::istream& in) {
    SpectrumTable t;
    std::string line;
    if (!std::getline(in, line) || line != "cavlr-table 1")
        throw std::runtime_error("read_table: bad structured header");
    std::string tok;
    std::size_t n = 0;
    in >> tok >> n;
    std::getline(in, line);
    if (tok != "meta") throw std::runtime_error("read_table: expected meta block");
    for (std::size_t i = 0; i < n; ++i) {
        std::getline(in, line);
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) throw std::runtime_error("read_table: bad meta line");
        t.metadata.emplace_back(line.substr(0, eq), line.substr(eq + 3));
    }
    in >> tok >> n;
    if (tok != "failed") throw std::runtime_error("read_table: expected failed block");
    for (std::size_t i = 0; i < n; ++i) {
        int idx;
        in >> idx;
        t.failed_points.push_back(idx);
    }
    in >> tok >> n;
    if (tok != "axis") throw std::runtime_error("read_table: expected axis block");
    t.axis.resize(n);
    for (auto& a : t.axis) in >> a;
    in >> tok >> n;
    if (tok != "omega") throw std::runtime_error("read_table: expected omega block");
    t.omega.resize(n);
    for (auto& w : t.omega) in >> w;
    while (in >> tok) {
        if (tok == "series") {
            SpectrumTable::Series s;
            in >> s.name >> n;
            s.values.resize(n);
            for (auto& v : s.values) {
                double re, im;
                in >> re >> im;
                v = {re, im};
            }
            t.series.push_back(std::move(s));
        } else if (tok == "poles") {
            in >> n;
            for (std::size_t i = 0; i < n; ++i) {
                SpectrumTable::PoleRow row;
                std::size_t k;
                in >> row.axis_value >> k;
                row.poles.resize(k);
                for (auto& p : row.poles) in >> p;
                t.pole_rows.push_back(std::move(row));
            }
        } else if (tok == "end") {
            return t;
        } else {
            throw std::runtime_error("read_table: unexpected token '" + tok + "'");
        }
    }
    throw std::runtime_error("read_table: missing end marker");
}

} // namespace

void export_table(const SpectrumTable& table, std::ostream& out, ExportFormat format) {
    if (format == ExportFormat::csv)
        export_csv(table, out);
    else
        export_structured(table, out);
}

void export_table_file(const SpectrumTable& table, const std::string& path, ExportFormat format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("export: cannot open '" + path + "' for writing");
    export_table(table, out, format);
    out.flush();
    if (!out) throw std::runtime_error("export: write to '" + path + "' failed");
}

std::string export_to_string(const SpectrumTable& table, ExportFormat format) {
    std::ostringstream ss;
    export_table(table, ss, format);
    return ss.str();
}

SpectrumTable read_table(std::istream& in, ExportFormat format) {
    return format == ExportFormat::csv ? read_csv(in) : read_structured(in);
}

} // namespace cavlr
