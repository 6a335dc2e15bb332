#include "gainomech/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "gainomech/version.hpp"

namespace gainomech {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& v, int line) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ParseError("line " + std::to_string(line) + ": not a number: '" + v + "'");
    return x;
}

int parse_int(const std::string& v, int line) {
    const double x = parse_number(v, line);
    if (x != std::floor(x))
        throw ParseError("line " + std::to_string(line) + ": not an integer: '" + v + "'");
    return static_cast<int>(x);
}

bool parse_bool(const std::string& v, int line) {
    if (v == "1" || v == "true") return true;
    if (v == "0" || v == "false") return false;
    throw ParseError("line " + std::to_string(line) + ": not a boolean: '" + v + "'");
}

Model parse_model(const std::string& v, int line) {
    if (v == "passive") return Model::Passive;
    if (v == "unseeded-adiabatic") return Model::UnseededAdiabatic;
    if (v == "seeded") return Model::Seeded;
    if (v == "full-polarization") return Model::FullPolarization;
    if (v == "seeded-with-mechanics") return Model::SeededWithMechanics;
    throw ParseError("line " + std::to_string(line) + ": unknown model: '" + v + "'");
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::map<std::string, int> seen;
    std::optional<double> omega_s, n_target;
    std::string drive_kind = "seeded";
    bool drive_key_seen = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
        if (seen.count(key))
            throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key +
                             "' (first on line " + std::to_string(seen[key]) + ")");
        seen[key] = lineno;

        if (key == "gamma_perp") cfg.laser.gamma_perp = parse_number(val, lineno);
        else if (key == "gamma_par") cfg.laser.gamma_par = parse_number(val, lineno);
        else if (key == "kappa") cfg.laser.kappa = parse_number(val, lineno);
        else if (key == "g") cfg.laser.g = parse_number(val, lineno);
        else if (key == "N_g") cfg.laser.N_g = parse_number(val, lineno);
        else if (key == "D0") cfg.laser.D0 = parse_number(val, lineno);
        else if (key == "delta_La") cfg.laser.delta_La = parse_number(val, lineno);
        else if (key == "delta_Lr") cfg.laser.delta_Lr = parse_number(val, lineno);
        else if (key == "n_bb") cfg.laser.n_bb = parse_number(val, lineno);
        else if (key == "omega_m") cfg.mech.omega_m = parse_number(val, lineno);
        else if (key == "Gamma_m") cfg.mech.Gamma_m = parse_number(val, lineno);
        else if (key == "n_th") cfg.mech.n_th = parse_number(val, lineno);
        else if (key == "G") cfg.mech.G = parse_number(val, lineno);
        else if (key == "drive") { drive_kind = val; drive_key_seen = true; }
        else if (key == "omega_s") omega_s = parse_number(val, lineno);
        else if (key == "n_target") n_target = parse_number(val, lineno);
        else if (key == "model") cfg.model = parse_model(val, lineno);
        else if (key == "method") {
            if (val == "matrix") cfg.method = Method::Matrix;
            else if (val == "closed-form") cfg.method = Method::ClosedForm;
            else throw ParseError("line " + std::to_string(lineno) + ": unknown method: '" + val + "'");
        }
        else if (key == "include_fpar") cfg.include_fpar = parse_bool(val, lineno);
        else if (key == "root_index") cfg.root_index = parse_int(val, lineno);
        else if (key == "grid_points") cfg.grid_points = parse_int(val, lineno);
        else if (key == "omega_min") cfg.omega_min = parse_number(val, lineno);
        else if (key == "omega_max") cfg.omega_max = parse_number(val, lineno);
        else if (key == "sweep_param") cfg.sweep_param = val;
        else if (key == "sweep_min") cfg.sweep_min = parse_number(val, lineno);
        else if (key == "sweep_max") cfg.sweep_max = parse_number(val, lineno);
        else if (key == "sweep_points") cfg.sweep_points = parse_int(val, lineno);
        else if (key == "sweep_log") cfg.sweep_log = parse_bool(val, lineno);
        else if (key == "d0_lo") cfg.d0_lo = parse_number(val, lineno);
        else if (key == "d0_hi") cfg.d0_hi = parse_number(val, lineno);
        else if (key == "format") {
            if (val == "csv") cfg.format = OutputFormat::Csv;
            else if (val == "json") cfg.format = OutputFormat::Json;
            else throw ParseError("line " + std::to_string(lineno) + ": unknown format: '" + val + "'");
        }
        else if (key == "output") cfg.output = val;
        else throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }

    if (!drive_key_seen)
        throw ParseError("missing required key 'drive' (unseeded|seeded)");
    if (drive_kind == "unseeded") {
        if (omega_s || n_target)
            throw ValidationError("unseeded drive takes neither omega_s nor n_target");
        cfg.drive = DriveSpec::unseeded();
    } else if (drive_kind == "seeded") {
        cfg.drive.kind = DriveKind::Seeded;
        cfg.drive.omega_s = omega_s;
        cfg.drive.n_target = n_target;
    } else {
        throw ParseError("unknown drive '" + drive_kind + "' (unseeded|seeded)");
    }

    cfg.laser.validate();
    cfg.mech.validate();
    cfg.drive.validate();
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_table(std::ostream& os, const Table& table, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        for (const auto& m : table.metadata) os << "# " << m << "\n";
        for (size_t i = 0; i < table.columns.size(); ++i)
            os << table.columns[i] << (i + 1 < table.columns.size() ? "," : "");
        os << "\n";
        for (const auto& row : table.rows) {
            for (size_t i = 0; i < row.size(); ++i)
                os << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
            os << "\n";
        }
        return;
    }
    nlohmann::json j;
    j["metadata"] = table.metadata;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    os << j.dump(2) << "\n";
}

void write_output(const RunConfig& cfg, const Table& table) {
    if (cfg.output.empty()) {
        write_table(std::cout, table, cfg.format);
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + cfg.output);
    write_table(out, table, cfg.format);
}

namespace {

void append_params(std::vector<std::string>& m, const RunConfig& cfg) {
    const LaserParams& p = cfg.laser;
    m.push_back("gamma_perp = " + format_double(p.gamma_perp));
    m.push_back("gamma_par = " + format_double(p.gamma_par));
    m.push_back("kappa = " + format_double(p.kappa));
    m.push_back("g = " + format_double(p.g));
    m.push_back("N_g = " + format_double(p.N_g));
    m.push_back("D0 = " + format_double(p.D0));
    m.push_back("delta_La = " + format_double(p.delta_La));
    m.push_back("delta_Lr = " + format_double(p.delta_Lr));
    m.push_back("n_bb = " + format_double(p.n_bb));
    m.push_back("omega_m = " + format_double(cfg.mech.omega_m));
    m.push_back("Gamma_m = " + format_double(cfg.mech.Gamma_m));
    m.push_back("n_th = " + format_double(cfg.mech.n_th));
    m.push_back("G = " + format_double(cfg.mech.G));
    if (cfg.drive.kind == DriveKind::Unseeded) {
        m.push_back("drive = unseeded");
    } else {
        m.push_back("drive = seeded");
        if (cfg.drive.omega_s) m.push_back("omega_s = " + format_double(*cfg.drive.omega_s));
        if (cfg.drive.n_target) m.push_back("n_target = " + format_double(*cfg.drive.n_target));
    }
}

WorkingPoint wp_of(const RunConfig& cfg) {
    return derive_working_point(cfg.laser, cfg.mech, cfg.drive, cfg.root_index);
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1.0);
    return g;
}

} // namespace

std::vector<std::string> describe(const RunConfig& cfg, const WorkingPoint& wp) {
    std::vector<std::string> m;
    m.push_back(std::string("gainomech ") + version);
    append_params(m, cfg);
    m.push_back(std::string("model = ") + to_string(cfg.model));
    m.push_back(std::string("method = ") +
                (cfg.method == Method::Matrix ? "matrix" : "closed-form"));
    m.push_back(std::string("include_fpar = ") + (cfg.include_fpar ? "1" : "0"));
    m.push_back("W = " + format_double(wp.W));
    m.push_back("n_sat = " + format_double(wp.n_sat));
    m.push_back("D_th = " + format_double(wp.D_th));
    m.push_back("xi = " + format_double(wp.xi));
    m.push_back("D_bar = " + format_double(wp.D_bar));
    m.push_back("n_bar = " + format_double(wp.n_bar));
    m.push_back("a_bar = " + format_double(wp.a_bar));
    m.push_back("omega_s_resolved = " + format_double(wp.omega_s));
    m.push_back("kappa_tilde = " + format_double(wp.kappa_tilde));
    m.push_back("delta_tilde = " + format_double(wp.delta_tilde));
    m.push_back("omega_plus = " + format_double(wp.omega_plus.real()) + " " +
                format_double(wp.omega_plus.imag()) + "i");
    m.push_back("omega_minus = " + format_double(wp.omega_minus.real()) + " " +
                format_double(wp.omega_minus.imag()) + "i");
    return m;
}

Table cmd_derive(const RunConfig& cfg) {
    const WorkingPoint wp = wp_of(cfg);
    Table t;
    t.metadata = describe(cfg, wp);
    t.columns = {"W", "n_sat", "D_th", "xi", "D_bar", "n_bar", "a_bar", "a_phase",
                 "omega_s", "kappa_tilde", "delta_tilde", "omega_plus_re", "omega_plus_im",
                 "omega_minus_re", "omega_minus_im"};
    t.rows = {{wp.W, wp.n_sat, wp.D_th, wp.xi, wp.D_bar, wp.n_bar, wp.a_bar, wp.a_phase,
               wp.omega_s, wp.kappa_tilde, wp.delta_tilde, wp.omega_plus.real(),
               wp.omega_plus.imag(), wp.omega_minus.real(), wp.omega_minus.imag()}};
    return t;
}

Table cmd_steady_state(const RunConfig& cfg) {
    Table t;
    t.metadata.push_back(std::string("gainomech ") + version);
    append_params(t.metadata, cfg);
    t.columns = {"root", "n_bar", "a_abs", "a_phase"};
    if (cfg.drive.kind == DriveKind::Seeded && cfg.drive.omega_s) {
        const SeededSolution sol = seeded_photon_number(cfg.laser, *cfg.drive.omega_s);
        t.metadata.push_back(std::string("multivalued = ") + (sol.multivalued ? "1" : "0"));
        for (size_t i = 0; i < sol.roots.size(); ++i)
            t.rows.push_back({static_cast<double>(i), sol.roots[i].n_bar,
                              std::abs(sol.roots[i].a_bar), std::arg(sol.roots[i].a_bar)});
        return t;
    }
    const WorkingPoint wp = wp_of(cfg);
    t.metadata.push_back("multivalued = 0");
    t.rows.push_back({0.0, wp.n_bar, wp.a_bar, wp.a_phase});
    return t;
}

Table cmd_spectrum(const RunConfig& cfg) {
    const WorkingPoint wp = wp_of(cfg);
    const DiffusionSet noise = diffusion_coefficients(wp);
    std::vector<double> grid;
    if (cfg.omega_min && cfg.omega_max) {
        grid = linear_grid(*cfg.omega_min, *cfg.omega_max, cfg.grid_points);
    } else {
        grid = default_grid(wp, cfg.grid_points);
        SpectrumResult coarse =
            snn_on_grid(cfg.model, wp, noise, grid, cfg.method, cfg.include_fpar);
        grid = refine_grid_at_peaks(coarse.omega_grid, coarse.values);
    }
    const SpectrumResult res =
        snn_on_grid(cfg.model, wp, noise, grid, cfg.method, cfg.include_fpar);
    Table t;
    t.metadata = describe(cfg, wp);
    t.columns = {"omega", "snn"};
    for (size_t i = 0; i < res.omega_grid.size(); ++i)
        t.rows.push_back({res.omega_grid[i], res.values[i]});
    return t;
}

Table cmd_cooling(const RunConfig& cfg) {
    const WorkingPoint wp = wp_of(cfg);
    const DiffusionSet noise = diffusion_coefficients(wp);
    const CoolingResult r =
        phonon_number_rate(cfg.model, wp, noise, cfg.method, cfg.include_fpar);
    double eq11 = kNaN, eq12 = kNaN, eq13 = kNaN;
    try {
        eq11 = gamma_opt_lorentzian(wp, wp.mech.omega_m);
        eq12 = gamma_opt_max(wp, wp.mech.omega_m);
        eq13 = n_opt_approx(wp);
    } catch (const NearSingularKappa&) {
    }
    Table t;
    t.metadata = describe(cfg, wp);
    t.columns = {"gamma_opt", "n_opt", "n_m", "optical_part", "thermal_part",
                 "t_opt", "vanishing_gamma", "gamma_opt_eq11", "gamma_opt_max_eq12",
                 "n_opt_eq13"};
    t.rows = {{r.gamma_opt, r.n_opt.value_or(kNaN), r.n_m, r.optical_part, r.thermal_part,
               r.t_opt.value_or(kNaN), r.vanishing_gamma ? 1.0 : 0.0, eq11, eq12, eq13}};
    return t;
}

Table cmd_phonon_spectrum(const RunConfig& cfg) {
    const WorkingPoint wp = wp_of(cfg);
    const DiffusionSet noise = diffusion_coefficients(wp);
    const double aG = wp.a_bar * wp.mech.G;
    const double half = std::max(3.0 * aG, 10.0 * wp.mech.Gamma_m);
    const double lo = cfg.omega_min.value_or(-wp.mech.omega_m - half);
    const double hi = cfg.omega_max.value_or(-wp.mech.omega_m + half);
    const std::vector<double> grid = linear_grid(lo, hi, cfg.grid_points);

    Table t;
    t.metadata = describe(cfg, wp);
    const PhononIntegral nm = integrate_phonon_number(wp, noise);
    t.metadata.push_back("n_m_integrated = " + format_double(nm.n_m));
    t.metadata.push_back("n_m_quadrature_error = " + format_double(nm.error_estimate));
    const ModeSplitting ms = mode_splitting(wp, noise);
    t.metadata.push_back("n_peaks = " + std::to_string(ms.peaks.size()));
    for (double p : ms.peaks) t.metadata.push_back("peak = " + format_double(p));
    if (ms.splitting) t.metadata.push_back("splitting = " + format_double(*ms.splitting));

    t.columns = {"omega", "sbb"};
    for (double w : grid) t.rows.push_back({w, sbb(wp, noise, w, cfg.include_fpar)});
    return t;
}

Table cmd_sweep(const RunConfig& cfg) {
    if (cfg.sweep_param.empty())
        throw ValidationError("sweep requires sweep_param (D0|G|omega_m|n_target)");
    if (cfg.sweep_points < 2) throw ValidationError("sweep_points >= 2");
    if (!(cfg.sweep_min < cfg.sweep_max)) throw ValidationError("sweep_min < sweep_max");
    if (cfg.sweep_log && !(cfg.sweep_min > 0.0))
        throw ValidationError("log sweep requires sweep_min > 0");

    std::vector<double> grid(cfg.sweep_points);
    for (int i = 0; i < cfg.sweep_points; ++i) {
        const double f = i / (cfg.sweep_points - 1.0);
        grid[i] = cfg.sweep_log
                      ? std::exp(std::log(cfg.sweep_min) +
                                 f * (std::log(cfg.sweep_max) - std::log(cfg.sweep_min)))
                      : cfg.sweep_min + f * (cfg.sweep_max - cfg.sweep_min);
    }

    Table t;
    t.metadata.push_back(std::string("gainomech ") + version);
    append_params(t.metadata, cfg);
    t.metadata.push_back("sweep_param = " + cfg.sweep_param);
    t.columns = {cfg.sweep_param, "n_bar", "kappa_tilde", "gamma_opt", "n_opt",
                 "n_m", "optical_part", "thermal_part"};
    for (double v : grid) {
        RunConfig c = cfg;
        if (cfg.sweep_param == "D0") c.laser.D0 = v;
        else if (cfg.sweep_param == "G") c.mech.G = v;
        else if (cfg.sweep_param == "omega_m") c.mech.omega_m = v;
        else if (cfg.sweep_param == "n_target") {
            if (c.drive.kind != DriveKind::Seeded || !c.drive.n_target)
                throw ValidationError("n_target sweep requires a seeded n_target drive");
            c.drive.n_target = v;
        } else {
            throw ValidationError("unknown sweep_param '" + cfg.sweep_param + "'");
        }
        const WorkingPoint wp = wp_of(c);
        const DiffusionSet noise = diffusion_coefficients(wp);
        const CoolingResult r =
            phonon_number_rate(c.model, wp, noise, c.method, c.include_fpar);
        t.rows.push_back({v, wp.n_bar, wp.kappa_tilde, r.gamma_opt, r.n_opt.value_or(kNaN),
                          r.n_m, r.optical_part, r.thermal_part});
    }
    return t;
}

Table cmd_optimize_pump(const RunConfig& cfg) {
    if (cfg.drive.kind != DriveKind::Seeded || !cfg.drive.n_target)
        throw ValidationError("optimize-pump requires a seeded n_target drive");
    const double D_th = cfg.laser.D_th();
    const double lo = cfg.d0_lo > 0.0 ? cfg.d0_lo : 0.01 * D_th;
    const double hi = cfg.d0_hi > 0.0 ? cfg.d0_hi : cfg.laser.N_g;
    const PumpOptimum opt =
        optimize_pump(cfg.laser, cfg.mech, *cfg.drive.n_target, lo, hi);
    Table t;
    t.metadata.push_back(std::string("gainomech ") + version);
    append_params(t.metadata, cfg);
    t.columns = {"D0", "D0_over_Dth", "kappa_tilde", "n_m", "kappa_tilde_pred_eq14",
                 "n_m_pred_eq15", "at_bound"};
    t.rows = {{opt.D0, opt.D0 / D_th, opt.kappa_tilde, opt.n_m, opt.kappa_tilde_pred,
               opt.n_m_pred, opt.at_bound ? 1.0 : 0.0}};
    return t;
}

namespace {

Table figure1(const RunConfig& cfg) {
    const WorkingPoint wp = wp_of(cfg);
    const DiffusionSet noise = diffusion_coefficients(wp);
    const double om = cfg.mech.omega_m;
    const double G = cfg.mech.G;
    Table t;
    t.metadata = describe(cfg, wp);
    t.columns = {"omega", "snn_seeded", "snn_passive", "gamma_opt_seeded",
                 "gamma_opt_passive", "ratio"};
    for (double w : linear_grid(0.5 * om, 1.5 * om, 4001)) {
        const double sp = snn(Model::Seeded, wp, noise, w, Method::Matrix);
        const double sm = snn(Model::Seeded, wp, noise, -w, Method::Matrix);
        const double pp = snn_closed_passive(wp, w);
        const double pm = snn_closed_passive(wp, -w);
        const double gs = G * G * (sp - sm);
        const double gp = G * G * (pp - pm);
        t.rows.push_back({w, sp, pp, gs, gp, gp != 0.0 ? gs / gp : kNaN});
    }
    return t;
}

Table figure2(const RunConfig& cfg) {
    const WorkingPoint wp = wp_of(cfg);
    const DiffusionSet noise = diffusion_coefficients(wp);
    Table t;
    t.metadata = describe(cfg, wp);
    t.columns = {"G", "G_over_kappa", "n_m_seeded", "optical_part", "thermal_part",
                 "n_m_passive"};
    for (int i = 0; i < 60; ++i) {
        const double r = std::exp(std::log(1e-5) + (std::log(1e-2) - std::log(1e-5)) * i / 59.0);
        WorkingPoint w = wp;
        w.mech.G = r * cfg.laser.kappa;
        const CoolingResult seeded = phonon_number_rate(Model::Seeded, w, noise);
        const CoolingResult passive = phonon_number_rate(Model::Passive, w, noise);
        t.rows.push_back({w.mech.G, r, seeded.n_m, seeded.optical_part, seeded.thermal_part,
                          passive.n_m});
    }
    return t;
}

Table figure3a(const RunConfig& cfg) {
    const double D_th = cfg.laser.D_th();
    Table t;
    t.metadata.push_back(std::string("gainomech ") + version);
    append_params(t.metadata, cfg);
    t.columns = {"D0", "D0_over_Dth", "kappa_tilde", "gamma_opt", "n_m_rate",
                 "optical_part", "thermal_part", "n_m_integrated"};
    for (double r : linear_grid(0.05, 1.396, 28)) {
        RunConfig c = cfg;
        c.laser.D0 = r * D_th;
        const WorkingPoint wp = wp_of(c);
        const DiffusionSet noise = diffusion_coefficients(wp);
        const CoolingResult cr = phonon_number_rate(Model::Seeded, wp, noise);
        const PhononIntegral nm = integrate_phonon_number(wp, noise);
        t.rows.push_back({c.laser.D0, r, wp.kappa_tilde, cr.gamma_opt, cr.n_m,
                          cr.optical_part, cr.thermal_part, nm.n_m});
    }
    return t;
}

Table figure3b(const RunConfig& cfg) {
    if (cfg.drive.kind != DriveKind::Seeded || !cfg.drive.n_target)
        throw ValidationError("figure 3b requires a seeded n_target drive");
    Table t;
    t.metadata.push_back(std::string("gainomech ") + version);
    append_params(t.metadata, cfg);
    t.columns = {"omega_m", "D0_opt", "D0_over_Dth", "kappa_tilde", "n_m",
                 "n_m_pred_eq15", "n_m_fit"};
    const double D_th = cfg.laser.D_th();
    for (double om : linear_grid(0.5, 2.0, 7)) {
        MechanicsParams mech = cfg.mech;
        mech.omega_m = om;
        const PumpOptimum opt =
            optimize_pump(cfg.laser, mech, *cfg.drive.n_target, 0.01 * D_th, cfg.laser.N_g);
        const double fit =
            opt.n_m_pred * (1.0 + 6.0 * (opt.kappa_tilde / om) * (opt.kappa_tilde / om));
        t.rows.push_back({om, opt.D0, opt.D0 / D_th, opt.kappa_tilde, opt.n_m, opt.n_m_pred,
                          fit});
    }
    return t;
}

Table figure4(const RunConfig& cfg) {
    const double D_th = cfg.laser.D_th();
    Table t;
    t.metadata.push_back(std::string("gainomech ") + version);
    append_params(t.metadata, cfg);
    t.columns = {"D0", "D0_over_Dth", "omega", "sbb", "log10_sbb"};
    for (double r : linear_grid(0.0, 1.396, 30)) {
        RunConfig c = cfg;
        c.laser.D0 = r * D_th;
        const WorkingPoint wp = wp_of(c);
        const DiffusionSet noise = diffusion_coefficients(wp);
        const double aG = wp.a_bar * wp.mech.G;
        for (double w : linear_grid(-wp.mech.omega_m - 3.0 * aG, -wp.mech.omega_m + 3.0 * aG,
                                    201)) {
            const double s = sbb(wp, noise, w);
            t.rows.push_back({c.laser.D0, r, w, s, std::log10(std::max(s, 1e-300))});
        }
    }
    return t;
}

Table figure5(const RunConfig& cfg) {
    const WorkingPoint wp = wp_of(cfg);
    const DiffusionSet noise = diffusion_coefficients(wp);
    Table t;
    t.metadata = describe(cfg, wp);
    t.columns = {"omega", "snn_adiabatic", "snn_fullpol", "asymmetry_fullpol"};
    std::vector<double> grid;
    for (int i = 0; i < 200; ++i) {
        const double w = std::exp(std::log(1e-3) + (std::log(1.0) - std::log(1e-3)) * i / 199.0);
        grid.push_back(-w);
        grid.push_back(w);
    }
    std::sort(grid.begin(), grid.end());
    for (double w : grid) {
        const double ad = snn_closed_unseeded_four_term(wp, noise, w);
        const double fp = snn_full_polarization(wp, noise, w);
        const double fm = snn_full_polarization(wp, noise, -w);
        t.rows.push_back({w, ad, fp, std::abs(fp - fm)});
    }
    return t;
}

} // namespace

Table cmd_figure(const RunConfig& cfg, const std::string& which) {
    if (which == "1") return figure1(cfg);
    if (which == "2") return figure2(cfg);
    if (which == "3a") return figure3a(cfg);
    if (which == "3b") return figure3b(cfg);
    if (which == "4") return figure4(cfg);
    if (which == "5") return figure5(cfg);
    throw ValidationError("unknown figure '" + which + "' (1|2|3a|3b|4|5)");
}

int exit_code_for(const Error& err) {
    const std::string& v = err.variant();
    if (v == "ParseError" || v == "ValidationError") return 2;
    if (v == "NonConvergedQuadrature") return 4;
    return 3;
}

} // namespace gainomech
