#include "gainomech/cooling.hpp"

#include <cmath>

#include "gainomech/golden_section.hpp"

namespace gainomech {

double kappa_tilde_guard(const WorkingPoint& wp) { return 1e-3 * wp.laser.kappa; }

double gamma_opt(Model model, const WorkingPoint& wp, const DiffusionSet& noise,
                 double omega_m, Method method, bool include_Fpar) {
    if (!(omega_m > 0.0)) throw ValidationError("omega_m > 0");
    const double G = wp.mech.G;
    return G * G * (snn(model, wp, noise, omega_m, method, include_Fpar) -
                    snn(model, wp, noise, -omega_m, method, include_Fpar));
}

double gamma_opt_lorentzian(const WorkingPoint& wp, double omega) {
    const double kt = wp.kappa_tilde;
    if (std::abs(kt) < kappa_tilde_guard(wp))
        throw NearSingularKappa("Lorentzian damping approximation invalid for |kappa_tilde| < " +
                                std::to_string(kappa_tilde_guard(wp)));
    const double dt = wp.delta_tilde;
    const double G = wp.mech.G;
    const double num = -8.0 * G * G * wp.n_bar * omega * dt * kt;
    const double den = (kt * kt + (omega - dt) * (omega - dt)) *
                       (kt * kt + (omega + dt) * (omega + dt));
    return num / den;
}

double gamma_opt_max(const WorkingPoint& wp, double omega_m) {
    const double kt = wp.kappa_tilde;
    if (std::abs(kt) < kappa_tilde_guard(wp))
        throw NearSingularKappa("maximal damping approximation invalid for |kappa_tilde| < " +
                                std::to_string(kappa_tilde_guard(wp)));
    const double G = wp.mech.G;
    const double r = kt / (2.0 * omega_m);
    return 2.0 * G * G * wp.n_bar / std::abs(kt) / (1.0 + r * r);
}

double n_opt_exact(Model model, const WorkingPoint& wp, const DiffusionSet& noise,
                   double omega_m, Method method, bool include_Fpar) {
    const double Sp = snn(model, wp, noise, omega_m, method, include_Fpar);
    const double Sm = snn(model, wp, noise, -omega_m, method, include_Fpar);
    if (!(Sp > Sm))
        throw HeatingConfiguration("S_nn(omega_m) <= S_nn(-omega_m): no cooling bath");
    return 1.0 / (Sp / Sm - 1.0);
}

double n_opt_approx(const WorkingPoint& wp) {
    const double kt = wp.kappa_tilde;
    if (std::abs(kt) < kappa_tilde_guard(wp))
        throw NearSingularKappa("occupation approximation invalid for |kappa_tilde| < " +
                                std::to_string(kappa_tilde_guard(wp)));
    return (wp.W * wp.laser.N_g + 2.0 * (wp.laser.kappa - kt)) / (4.0 * kt);
}

CoolingResult phonon_number_rate(Model model, const WorkingPoint& wp, const DiffusionSet& noise,
                                 Method method, bool include_Fpar) {
    const double omega_m = wp.mech.omega_m;
    const double Gamma_m = wp.mech.Gamma_m;
    const double n_th = wp.mech.n_th;
    const double G = wp.mech.G;
    const double Sp = snn(model, wp, noise, omega_m, method, include_Fpar);
    const double Sm = snn(model, wp, noise, -omega_m, method, include_Fpar);

    CoolingResult r;
    r.gamma_opt = G * G * (Sp - Sm);
    if (std::abs(r.gamma_opt) < 1e-9 * G * G * Sp || G == 0.0) {
        // spectrometer branch: Gamma_opt vanishes, n_opt ill defined
        r.vanishing_gamma = true;
        r.optical_part = G * G * Sm / Gamma_m;
        r.thermal_part = n_th;
        r.n_m = r.optical_part + r.thermal_part;
        return r;
    }
    const double n_opt = 1.0 / (Sp / Sm - 1.0);
    r.n_opt = n_opt;
    r.optical_part = r.gamma_opt * n_opt / (r.gamma_opt + Gamma_m);
    r.thermal_part = Gamma_m * n_th / (r.gamma_opt + Gamma_m);
    r.n_m = r.optical_part + r.thermal_part;
    if (n_opt > 0.0) r.t_opt = omega_m / std::log((n_opt + 1.0) / n_opt);
    return r;
}

PumpOptimum optimize_pump(LaserParams laser, const MechanicsParams& mech, double n_target,
                          double D0_lo, double D0_hi) {
    laser.delta_Lr = -mech.omega_m; // optimal-detuning convention
    const DriveSpec drive = DriveSpec::seeded_photons(n_target);

    const double W = laser.stimulated_rate();
    if (W <= 0.0) throw ZeroGain("pump optimization requires g > 0");
    const double D_th = laser.D_th();
    const double xi = 2.0 * W * n_target / laser.gamma_par;
    // keep kappa_tilde above the near-zero guard
    const double D0_cap = (1.0 + xi) * (1.0 - 1e-3) * D_th;
    D0_hi = std::min(D0_hi, D0_cap);
    if (!(D0_lo < D0_hi))
        throw NoMinimumInBounds("empty D0 bracket after clipping to the kappa_tilde guard");

    auto n_m_of = [&](double D0) {
        LaserParams p = laser;
        p.D0 = D0;
        WorkingPoint wp = derive_working_point(p, mech, drive);
        DiffusionSet noise = diffusion_coefficients(wp);
        return phonon_number_rate(Model::Seeded, wp, noise).n_m;
    };

    const double tol = 1e-4 * D_th;
    const double D0_opt = golden_section_minimize(n_m_of, D0_lo, D0_hi, tol);

    PumpOptimum opt;
    opt.D0 = D0_opt;
    opt.at_bound = (D0_opt - D0_lo < 2.0 * tol) || (D0_hi - D0_opt < 2.0 * tol);
    {
        LaserParams p = laser;
        p.D0 = D0_opt;
        WorkingPoint wp = derive_working_point(p, mech, drive);
        opt.kappa_tilde = wp.kappa_tilde;
        DiffusionSet noise = diffusion_coefficients(wp);
        opt.n_m = phonon_number_rate(Model::Seeded, wp, noise).n_m;
    }
    const double wn = W * laser.N_g + 2.0 * laser.kappa;
    const double G2n = mech.G * mech.G * n_target;
    opt.kappa_tilde_pred = std::sqrt(G2n * wn / (2.0 * mech.Gamma_m * mech.n_th));
    opt.n_m_pred = std::sqrt(wn * mech.Gamma_m * mech.n_th / (2.0 * G2n)) - 0.5;
    return opt;
}

} // namespace gainomech
