// cooling.hpp — optical damping, effective bath occupations, pump optimization
#pragma once

#include <optional>

#include "gainomech/spectra.hpp"

namespace gainomech {

struct CoolingResult {
    double gamma_opt = 0.0;             // optical damping rate [GHz]
    std::optional<double> n_opt;        // effective optical bath occupation
    double n_m = 0.0;                   // steady-state phonon number
    double optical_part = 0.0;          // Gamma_opt n_opt / (Gamma_opt + Gamma_m)
    double thermal_part = 0.0;          // Gamma_m n_th / (Gamma_opt + Gamma_m)
    std::optional<double> t_opt;        // effective temperature, hbar = k_B = 1 [GHz]
    bool vanishing_gamma = false;       // spectrometer branch used
};

// Gamma_opt = G^2 [S_nn(omega_m) - S_nn(-omega_m)]; may be negative (heating).
double gamma_opt(Model model, const WorkingPoint& wp, const DiffusionSet& noise,
                 double omega_m, Method method, bool include_Fpar = true);

// Lorentzian approximation of Gamma_opt(omega) (resolved-sideband seeded form).
// Refuses |kappa_tilde| < kappa_tilde_guard(wp).
double gamma_opt_lorentzian(const WorkingPoint& wp, double omega);

// Maximal optical damping, with the sign logic: kappa_tilde > 0 wants
// delta_tilde = -omega_m, kappa_tilde < 0 wants +omega_m.
double gamma_opt_max(const WorkingPoint& wp, double omega_m);

// Guard below which the Lorentzian approximations refuse to evaluate.
double kappa_tilde_guard(const WorkingPoint& wp);

// Exact occupation from the sideband ratio: (S(om)/S(-om) - 1)^-1.
// Throws HeatingConfiguration when S(omega_m) <= S(-omega_m).
double n_opt_exact(Model model, const WorkingPoint& wp, const DiffusionSet& noise,
                   double omega_m, Method method, bool include_Fpar = true);

// Approximation [W N_g + 2(kappa - kappa_tilde)] / (4 kappa_tilde).
double n_opt_approx(const WorkingPoint& wp);

// Rate-equation phonon number; switches to the spectrometer branch
// n_m = G^2 S_nn(-omega_m)/Gamma_m + n_th when |Gamma_opt| is vanishing.
CoolingResult phonon_number_rate(Model model, const WorkingPoint& wp, const DiffusionSet& noise,
                                 Method method = Method::Matrix, bool include_Fpar = true);

struct PumpOptimum {
    double D0 = 0.0;
    double kappa_tilde = 0.0;
    double n_m = 0.0;
    double kappa_tilde_pred = 0.0; // geometric-mean closed form
    double n_m_pred = 0.0;
    bool at_bound = false;
};

// Bounded scalar minimization of the rate-equation phonon number over D0 at
// fixed n_bar = n_target and delta_Lr = -omega_m. The upper bound is clipped
// so that kappa_tilde stays above the guard.
PumpOptimum optimize_pump(LaserParams laser, const MechanicsParams& mech, double n_target,
                          double D0_lo, double D0_hi);

} // namespace gainomech
