#include "cavlr/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace cavlr {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_number(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects a number, got '" + v + "'");
    }
    if (pos != v.size())
        throw ConfigError("config: trailing garbage in value of '" + key + "': '" + v + "'");
    return x;
}

int parse_int(const std::string& key, const std::string& v) {
    const double x = parse_number(key, v);
    if (x != std::floor(x))
        throw ConfigError("config: key '" + key + "' expects an integer");
    return static_cast<int>(x);
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::string to_string(SweepAxis a) {
    switch (a) {
    case SweepAxis::none: return "none";
    case SweepAxis::coupling: return "coupling";
    case SweepAxis::plasma_freq: return "plasma_freq";
    case SweepAxis::cyclotron_freq: return "cyclotron_freq";
    case SweepAxis::cavity_freq: return "cavity_freq";
    }
    return "?";
}

std::string to_string(Observable o) {
    switch (o) {
    case Observable::im_photon: return "im_photon";
    case Observable::im_chi_zz: return "im_chi_zz";
    case Observable::conductivity: return "conductivity";
    case Observable::poles: return "poles";
    }
    return "?";
}

std::string to_string(ExportFormat f) {
    return f == ExportFormat::csv ? "csv" : "structured";
}

std::string to_string(ModelKind k) {
    switch (k) {
    case ModelKind::dicke: return "dicke";
    case ModelKind::lmg_longitudinal: return "lmg_longitudinal";
    case ModelKind::lmg_transverse: return "lmg_transverse";
    case ModelKind::heisenberg: return "heisenberg";
    }
    return "?";
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("model", is_qhe ? "qhe" : to_string(spin.kind));
    if (is_qhe) {
        e.emplace_back("cavity_freq", fmt(qhe.cavity_freq));
        e.emplace_back("plasma_freq", fmt(qhe.plasma_freq));
        e.emplace_back("cyclotron_freq", fmt(qhe.cyclotron_freq));
        e.emplace_back("filling", fmt(qhe.filling));
    } else {
        e.emplace_back("omega_x", fmt(spin.omega_x));
        e.emplace_back("omega_z", fmt(spin.omega_z));
        e.emplace_back("j", fmt(spin.J));
        e.emplace_back("z_coord", fmt(spin.z_coord));
        e.emplace_back("lambda", fmt(spin.channel.lambda));
        e.emplace_back("cavity_freq", fmt(spin.channel.cavity_freq));
        e.emplace_back("zeta", fmt(spin.channel.zeta));
    }
    e.emplace_back("axis", to_string(axis));
    e.emplace_back("axis_min", fmt(axis_min));
    e.emplace_back("axis_max", fmt(axis_max));
    e.emplace_back("axis_points", std::to_string(axis_points));
    e.emplace_back("omega_min", fmt(omega_min));
    e.emplace_back("omega_max", fmt(omega_max));
    e.emplace_back("omega_points", std::to_string(omega_points));
    e.emplace_back("delta", fmt(delta));
    std::string obs;
    for (const auto& o : observables) {
        if (!obs.empty()) obs += ",";
        obs += to_string(o);
    }
    e.emplace_back("observables", obs);
    e.emplace_back("output", output);
    e.emplace_back("format", to_string(format));
    return e;
}

RunConfig parse_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::transform(key.begin(), key.end(), key.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        const std::string value = trim(t.substr(eq + 1));
        if (kv.count(key))
            throw ConfigError("config: duplicate key '" + key + "'");
        kv[key] = value;
    }

    static const std::vector<std::string> known = {
        "model",       "omega_x",        "omega_z",     "j",           "z_coord",
        "lambda",      "cavity_freq",    "zeta",        "plasma_freq", "cyclotron_freq",
        "filling",     "axis",           "axis_min",    "axis_max",    "axis_points",
        "omega_min",   "omega_max",      "omega_points","delta",       "observables",
        "output",      "format"};
    for (const auto& [k, v] : kv)
        if (std::find(known.begin(), known.end(), k) == known.end())
            throw ConfigError("config: unknown key '" + k + "'");

    auto get = [&](const std::string& k) -> const std::string* {
        auto it = kv.find(k);
        return it == kv.end() ? nullptr : &it->second;
    };
    auto num = [&](const std::string& k, double dflt) {
        const std::string* v = get(k);
        return v ? parse_number(k, *v) : dflt;
    };

    RunConfig c;
    const std::string* model = get("model");
    if (!model) throw ConfigError("config: missing required key 'model'");
    if (*model == "qhe") {
        c.is_qhe = true;
        c.qhe.cavity_freq = num("cavity_freq", 1.0);
        c.qhe.plasma_freq = num("plasma_freq", 0.0);
        c.qhe.cyclotron_freq = num("cyclotron_freq", 0.0);
        c.qhe.filling = num("filling", 1.0);
        for (const char* k : {"omega_x", "omega_z", "j", "z_coord", "lambda", "zeta"})
            if (get(k)) throw ConfigError(std::string("config: key '") + k + "' is not a qhe parameter");
    } else {
        if (*model == "dicke") c.spin.kind = ModelKind::dicke;
        else if (*model == "lmg_longitudinal") c.spin.kind = ModelKind::lmg_longitudinal;
        else if (*model == "lmg_transverse") c.spin.kind = ModelKind::lmg_transverse;
        else if (*model == "heisenberg") c.spin.kind = ModelKind::heisenberg;
        else throw ConfigError("config: unknown model '" + *model + "'");
        c.spin.omega_x = num("omega_x", 0.0);
        c.spin.omega_z = num("omega_z", 1.0);
        c.spin.J = num("j", 0.0);
        c.spin.z_coord = num("z_coord", 0.0);
        c.spin.channel = InteractionChannel(num("lambda", 0.0), num("cavity_freq", 1.0),
                                            num("zeta", 0.0), 0.0);
        for (const char* k : {"plasma_freq", "cyclotron_freq", "filling"})
            if (get(k)) throw ConfigError(std::string("config: key '") + k + "' is a qhe parameter");
    }

    if (const std::string* a = get("axis")) {
        if (*a == "none") c.axis = SweepAxis::none;
        else if (*a == "coupling") c.axis = SweepAxis::coupling;
        else if (*a == "plasma_freq") c.axis = SweepAxis::plasma_freq;
        else if (*a == "cyclotron_freq") c.axis = SweepAxis::cyclotron_freq;
        else if (*a == "cavity_freq") c.axis = SweepAxis::cavity_freq;
        else throw ConfigError("config: unknown axis '" + *a + "'");
    }
    if (c.axis == SweepAxis::coupling && c.is_qhe)
        throw ConfigError("config: axis 'coupling' applies to spin models only");
    if ((c.axis == SweepAxis::plasma_freq || c.axis == SweepAxis::cyclotron_freq) && !c.is_qhe)
        throw ConfigError("config: axis '" + to_string(c.axis) + "' applies to the qhe model only");

    c.axis_min = num("axis_min", 0.0);
    c.axis_max = num("axis_max", 0.0);
    c.axis_points = get("axis_points") ? parse_int("axis_points", *get("axis_points")) : 1;
    c.omega_min = num("omega_min", 0.0);
    c.omega_max = num("omega_max", 3.0);
    c.omega_points = get("omega_points") ? parse_int("omega_points", *get("omega_points")) : 301;
    c.delta = num("delta", 1e-3);

    if (c.axis != SweepAxis::none) {
        if (!(c.axis_max > c.axis_min)) throw ConfigError("config: axis range is empty");
        if (c.axis_points < 2) throw ConfigError("config: axis_points must be >= 2 for a sweep");
    } else {
        c.axis_points = 1;
    }
    if (c.omega_points < 1) throw ConfigError("config: omega_points must be >= 1");
    if (c.omega_points > 1 && !(c.omega_max > c.omega_min))
        throw ConfigError("config: omega range is empty");
    if (!(c.delta > 0.0)) throw ConfigError("config: delta must be > 0");

    if (const std::string* obs = get("observables")) {
        c.observables.clear();
        std::stringstream ss(*obs);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const std::string o = trim(item);
            if (o == "im_photon") c.observables.push_back(Observable::im_photon);
            else if (o == "im_chi_zz") c.observables.push_back(Observable::im_chi_zz);
            else if (o == "conductivity") c.observables.push_back(Observable::conductivity);
            else if (o == "poles") c.observables.push_back(Observable::poles);
            else throw ConfigError("config: unknown observable '" + o + "'");
        }
        if (c.observables.empty()) throw ConfigError("config: empty observables list");
    }
    for (const auto& o : c.observables) {
        if (o == Observable::conductivity && !c.is_qhe)
            throw ConfigError("config: observable 'conductivity' requires model qhe");
        if (o == Observable::im_photon && c.is_qhe)
            throw ConfigError("config: observable 'im_photon' applies to spin models");
        if (o == Observable::im_chi_zz && (c.is_qhe || c.spin.kind != ModelKind::lmg_transverse))
            throw ConfigError("config: observable 'im_chi_zz' requires model lmg_transverse");
    }

    if (const std::string* out = get("output")) c.output = *out;
    if (const std::string* f = get("format")) {
        if (*f == "csv") c.format = ExportFormat::csv;
        else if (*f == "structured") c.format = ExportFormat::structured;
        else throw ConfigError("config: unknown format '" + *f + "'");
    }
    return c;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    return parse_config(in);
}

} // namespace cavlr
