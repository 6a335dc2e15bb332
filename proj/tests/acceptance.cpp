// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace gainomech;
using namespace fixtures;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    if (!ok) ++failures;
}

void run(int id, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, detail] = body();
        report(id, ok, detail);
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what());
    }
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

} // namespace

int main() {
    // 1. fig1 caption anchors: xi and kappa/kappa_tilde.
    run(1, [] {
        const RunConfig cfg = parse_config_file(config_path("fig1.cfg"));
        const WorkingPoint wp = derive_working_point(cfg.laser, cfg.mech, cfg.drive);
        const double ratio = wp.laser.kappa / wp.kappa_tilde;
        const bool ok = std::abs(wp.xi - 0.396) <= 0.001 && std::abs(ratio - 7.12) <= 0.01;
        return std::make_pair(ok, fmt("xi = %.6f (0.396 +- 0.001), kappa/kappa_tilde = %.6f "
                                      "(7.12 +- 0.01)", wp.xi, ratio));
    });

    // 2. fig1(a): seeded/passive optical-damping ratio peaks at 6.94 +- 5%.
    run(2, [] {
        const WorkingPoint wp = fig1_wp();
        const DiffusionSet noise = diffusion_coefficients(wp);
        double best = 0.0;
        for (int i = 0; i < 401; ++i) {
            const double w = 0.5 + i / 400.0;
            const double gs = snn(Model::Seeded, wp, noise, w) -
                              snn(Model::Seeded, wp, noise, -w);
            const double gp = snn_closed_passive(wp, w) - snn_closed_passive(wp, -w);
            if (gp > 0.0) best = std::max(best, gs / gp);
        }
        const bool ok = std::abs(best - 6.94) <= 0.05 * 6.94;
        return std::make_pair(ok, fmt("max damping ratio = %.4f (6.94 +- 5%%)", best));
    });

    // 3. unseeded spectra are symmetric: Gamma_opt vanishes relative to G^2 S_nn.
    run(3, [] {
        const WorkingPoint wp = fig5_wp();
        const DiffusionSet noise = diffusion_coefficients(wp);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double w = std::exp(std::log(0.01) + (std::log(1.0) - std::log(0.01)) * i / 19.0);
            const double sp = snn(Model::UnseededAdiabatic, wp, noise, w);
            const double sm = snn(Model::UnseededAdiabatic, wp, noise, -w);
            worst = std::max(worst, std::abs(sp - sm) / sp);
        }
        return std::make_pair(worst < 1e-3,
                              fmt("max |Gamma_opt| / (G^2 S_nn) = %.3g (< 1e-3)", worst));
    });

    // 4. passive oracle at 1e3 frequencies, rtol 1e-10.
    run(4, [] {
        LaserParams p = fig1_laser();
        p.g = 0.0;
        p.D0 = 0.0;
        const WorkingPoint wp =
            derive_working_point(p, fig1_mech(), DriveSpec::seeded_photons(1e5));
        const DiffusionSet noise = diffusion_coefficients(wp);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double w = -5.0 + 10.0 * i / 999.0;
            const double matrix = snn(Model::Passive, wp, noise, w);
            const double closed = snn_closed_passive(wp, w);
            worst = std::max(worst, std::abs(matrix - closed) / closed);
        }
        return std::make_pair(worst < 1e-10, fmt("max rel dev = %.3g (< 1e-10)", worst));
    });

    // 5. closed-form vs matrix equivalences at two working points each.
    run(5, [] {
        double worst_seeded = 0.0;
        for (double n_target : {1e5, 2e5}) {
            const WorkingPoint wp = derive_working_point(
                fig1_laser(), fig1_mech(), DriveSpec::seeded_photons(n_target));
            const LinearLangevinSystem sys = matched_seeded_system(wp);
            for (int i = 0; i < 1000; ++i) {
                const double w = (i < 500 ? -1.0 : 1.0) *
                                 std::exp(std::log(1e-3) +
                                          (std::log(10.0) - std::log(1e-3)) * (i % 500) / 499.0);
                const double matrix = spectrum_matrix(sys, w, "n", "n").real();
                const double closed = snn_closed_seeded(wp, w);
                worst_seeded = std::max(worst_seeded, std::abs(matrix - closed) / closed);
            }
        }
        double worst_unseeded = 0.0;
        for (double D0 : {2.4e6, 2.2e6}) {
            LaserParams p = fig5_laser();
            p.D0 = D0;
            const WorkingPoint wp =
                derive_working_point(p, fig1_mech(0.0), DriveSpec::unseeded());
            const DiffusionSet noise = diffusion_coefficients(wp);
            for (int i = 0; i < 1000; ++i) {
                const double w = (i < 500 ? -1.0 : 1.0) *
                                 std::exp(std::log(1e-3) +
                                          (std::log(1.0) - std::log(1e-3)) * (i % 500) / 499.0);
                const double matrix = snn(Model::UnseededAdiabatic, wp, noise, w);
                const double closed = snn_closed_unseeded_four_term(wp, noise, w);
                worst_unseeded = std::max(worst_unseeded, std::abs(matrix - closed) / closed);
            }
        }
        const bool ok = worst_seeded < 1e-8 && worst_unseeded < 1e-8;
        return std::make_pair(ok, fmt("max rel dev seeded = %.3g, unseeded = %.3g (< 1e-8)",
                                      worst_seeded, worst_unseeded));
    });

    // 6. fig2 sweep: seeded below passive at small G, minimum n_m in [8, 10].
    run(6, [] {
        const WorkingPoint wp = fig1_wp();
        const DiffusionSet noise = diffusion_coefficients(wp);
        double min_nm = 1e300;
        bool below_ok = true;
        for (int i = 0; i < 60; ++i) {
            const double r = std::exp(std::log(1e-5) + (std::log(1e-2) - std::log(1e-5)) * i / 59.0);
            WorkingPoint w = wp;
            w.mech.G = r * wp.laser.kappa;
            const double seeded = phonon_number_rate(Model::Seeded, w, noise).n_m;
            const double passive = phonon_number_rate(Model::Passive, w, noise).n_m;
            min_nm = std::min(min_nm, seeded);
            if (r <= 2e-4 && seeded >= passive) below_ok = false;
        }
        const bool ok = below_ok && min_nm >= 8.0 && min_nm <= 10.0;
        return std::make_pair(ok, fmt("min n_m = %.4f (in [8,10]); seeded < passive for "
                                      "G/kappa <= 2e-4: %.0f", min_nm, below_ok ? 1.0 : 0.0));
    });

    // 7. kappa_tilde zero crossing and pump-optimum closed forms.
    run(7, [] {
        const LaserParams base = fig1_laser();
        const DriveSpec drive = DriveSpec::seeded_photons(1e5);
        auto kt = [&](double ratio) {
            LaserParams p = base;
            p.D0 = ratio * p.D_th();
            return derive_working_point(p, fig1_mech(), drive).kappa_tilde;
        };
        double lo = 1.3, hi = 1.45;
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            (kt(lo) * kt(mid) <= 0.0 ? hi : lo) = mid;
        }
        const double crossing = 0.5 * (lo + hi);

        const PumpOptimum opt = optimize_pump(base, fig1_mech(), 1e5, 1e5, base.N_g);
        const bool ok = std::abs(crossing - 1.396) <= 0.002 &&
                        std::abs(opt.kappa_tilde - 0.0335) <= 0.15 * 0.0335 &&
                        std::abs(opt.n_m - 6.95) <= 0.15 * 6.95;
        return std::make_pair(
            ok, fmt("kappa_tilde zero at D0/D_th = %.4f (1.396 +- 0.002); optimum "
                    "kappa_tilde = %.4f (0.0335 +- 15%%), n_m = %.3f (6.95 +- 15%%)",
                    crossing, opt.kappa_tilde, opt.n_m));
    });

    // 8. integrated vs rate-equation phonon number, D0/D_th <= 1, within 10%.
    run(8, [] {
        double worst = 0.0;
        for (double ratio : {0.25, 0.5, 0.75, 1.0}) {
            LaserParams p = fig1_laser();
            p.D0 = ratio * p.D_th();
            const WorkingPoint wp =
                derive_working_point(p, fig1_mech(), DriveSpec::seeded_photons(1e5));
            const DiffusionSet noise = diffusion_coefficients(wp);
            const double rate = phonon_number_rate(Model::Seeded, wp, noise).n_m;
            const double integ = integrate_phonon_number(wp, noise).n_m;
            worst = std::max(worst, std::abs(integ - rate) / rate);
        }
        return std::make_pair(worst < 0.10, fmt("max rel dev = %.3g (< 0.10)", worst));
    });

    // 9. normal-mode splitting classification and 2 a_bar G separation.
    run(9, [] {
        LaserParams weak = fig1_laser();
        weak.D0 = 0.0;
        const WorkingPoint wp0 =
            derive_working_point(weak, fig1_mech(), DriveSpec::seeded_photons(1e5));
        const ModeSplitting low = mode_splitting(wp0, diffusion_coefficients(wp0));

        LaserParams strong = fig1_laser();
        strong.D0 = 1.396 * strong.D_th();
        const WorkingPoint wp1 =
            derive_working_point(strong, fig1_mech(), DriveSpec::seeded_photons(1e5));
        const ModeSplitting split = mode_splitting(wp1, diffusion_coefficients(wp1));

        const double aG = wp1.a_bar * wp1.mech.G;
        bool ok = low.peaks.size() == 1 && split.peaks.size() == 2 && split.splitting;
        double sep = 0.0, half = 0.0;
        if (ok) {
            sep = *split.splitting;
            half = sep / 2.0;
            ok = std::abs(sep - 2.0 * aG) <= 0.2 * 2.0 * aG &&
                 std::abs(half - 0.01 * wp1.mech.omega_m) <= 0.05 * 0.01 * wp1.mech.omega_m;
        }
        return std::make_pair(
            ok, fmt("peaks 1 then 2; separation = %.5f (2 a_bar G = %.5f +- 20%%), "
                    "half-separation = %.5f (0.01 omega_m +- 5%%)", sep, 2.0 * aG, half));
    });

    // 10. full-polarization vs adiabatic spectra on the fig5 point.
    run(10, [] {
        const WorkingPoint wp = fig5_wp();
        const DiffusionSet noise = diffusion_coefficients(wp);
        double worst_dev = 0.0;
        for (double w : {0.02, 0.05, 0.0607, -0.02, -0.05, -0.0607}) {
            const double full = snn_full_polarization(wp, noise, w);
            const double ad = snn_closed_unseeded_four_term(wp, noise, w);
            worst_dev = std::max(worst_dev, std::abs(full - ad) / ad);
        }
        double worst_asym = 0.0;
        for (int i = 0; i < 30; ++i) {
            const double w =
                std::exp(std::log(5e-3) + (std::log(0.3) - std::log(5e-3)) * i / 29.0);
            const double sp = snn_full_polarization(wp, noise, w);
            const double sm = snn_full_polarization(wp, noise, -w);
            worst_asym = std::max(worst_asym, std::abs(sp - sm) / sp);
        }
        const bool ok = worst_dev < 0.02 && worst_asym < 1e-2;
        return std::make_pair(ok, fmt("max dev near peaks = %.3g (< 0.02), max asymmetry = "
                                      "%.3g (< 1e-2)", worst_dev, worst_asym));
    });

    // 11. property suite.
    run(11, [] {
        std::string notes;
        bool ok = true;

        const WorkingPoint s = fig1_wp();
        const DiffusionSet sn = diffusion_coefficients(s);
        const WorkingPoint u = fig5_wp();
        const DiffusionSet un = diffusion_coefficients(u);
        for (int i = 0; i < 40 && ok; ++i) {
            const double w = (i % 2 ? -1.0 : 1.0) *
                             std::exp(std::log(1e-3) + (std::log(5.0) - std::log(1e-3)) *
                                                           (i / 2) / 19.0);
            if (snn(Model::Seeded, s, sn, w) < 0.0 ||
                snn(Model::SeededWithMechanics, s, sn, w) < 0.0 ||
                snn(Model::UnseededAdiabatic, u, un, w) < 0.0 ||
                snn(Model::FullPolarization, u, un, w) < 0.0 ||
                sbb(s, sn, w) < 0.0) {
                ok = false;
                notes += "negative spectrum; ";
            }
        }

        const CoolingResult r = phonon_number_rate(Model::Seeded, s, sn);
        if (!r.n_opt || r.n_m < std::min(*r.n_opt, s.mech.n_th) ||
            r.n_m > std::max(*r.n_opt, s.mech.n_th)) {
            ok = false;
            notes += "weighted-average bound; ";
        }

        const WorkingPoint g0 =
            derive_working_point(fig1_laser(), fig1_mech(0.0), DriveSpec::seeded_photons(1e5));
        const double nm_thermal = integrate_phonon_number(g0, diffusion_coefficients(g0)).n_m;
        if (std::abs(nm_thermal - g0.mech.n_th) > 1e-6 * g0.mech.n_th) {
            ok = false;
            notes += fmt("thermal limit %.9f; ", nm_thermal);
        }

        const LinearLangevinSystem m2 = build_system(Model::UnseededAdiabatic, u, un, true);
        double det_res = 0.0;
        for (const std::complex<double>& wpm : {u.omega_plus, u.omega_minus}) {
            Eigen::Matrix2cd M = std::complex<double>(0.0, -1.0) * wpm *
                                     Eigen::Matrix2cd::Identity() -
                                 Eigen::Matrix2cd(m2.A);
            det_res = std::max(det_res, std::abs(M.determinant()));
        }
        if (det_res >= 1e-9) {
            ok = false;
            notes += fmt("det residual %.3g; ", det_res);
        }

        const double omega_s = seeding_amplitude(fig1_laser(), 1e5);
        bool round_trip = false;
        for (const auto& root : seeded_photon_number(fig1_laser(), omega_s).roots)
            if (std::abs(root.n_bar - 1e5) <= 1e-9 * 1e5) round_trip = true;
        if (!round_trip) {
            ok = false;
            notes += "seeded round trip; ";
        }

        const double nm48 = integrate_phonon_number(s, sn, 1e-3, 48).n_m;
        const double nm96 = integrate_phonon_number(s, sn, 1e-3, 96).n_m;
        if (std::abs(nm96 - nm48) > 1e-3 * std::abs(nm96)) {
            ok = false;
            notes += "quadrature doubling; ";
        }

        if (ok) notes = "non-negativity, bath bounds, thermal limit, omega_pm roots, "
                        "seeded round trip, quadrature doubling";
        return std::make_pair(ok, notes);
    });

    return failures == 0 ? 0 : 1;
}
