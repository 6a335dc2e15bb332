// phonon.hpp — mechanical back-action: susceptibilities, S_b†b, phonon number
#pragma once

#include <optional>
#include <vector>

#include "gainomech/langevin.hpp"

namespace gainomech {

// Response of b(omega) to the four Langevin forces, b(w) = chi_a F_a +
// chi_adag F_a^dag + chi_b F_Gm + chi_bdag F_Gm^dag, plus the bare
// mechanical and effective cavity responses at the same omega.
struct SusceptibilitySet {
    std::complex<double> chi_a;
    std::complex<double> chi_adag;
    std::complex<double> chi_b;
    std::complex<double> chi_bdag;
    std::complex<double> chi_m; // [i(omega_m - omega) + Gamma_m/2]^-1
    std::complex<double> chi_r; // [i(delta_tilde - omega) + kappa_tilde]^-1
};

SusceptibilitySet susceptibilities(const WorkingPoint& wp, const DiffusionSet& noise,
                                   double omega);

// Closed-form chi_a of the seeded laser (reduces to the unseeded form when
// kappa_tilde = delta_tilde = 0).
std::complex<double> chi_a_closed(const WorkingPoint& wp, double omega);

// Phonon spectrum S_b^dag b(omega) from the 5-variable
// (da, da^dag, dD, b, b^dag) solve with the full DiffusionSet.
double sbb(const WorkingPoint& wp, const DiffusionSet& noise, double omega,
           bool include_Fpar = true);

struct PhononIntegral {
    double n_m = 0.0;
    double error_estimate = 0.0; // |change under panel-density doubling|
};

// n_m = (1/2pi) Integral S_b^dag b(omega) domega via peak-anchored
// Gauss-Legendre panels on [-span, span] plus a 1/omega^2 tail estimate.
// Throws NonConvergedQuadrature when doubling the panel density moves the
// result by more than rtol.
PhononIntegral integrate_phonon_number(const WorkingPoint& wp, const DiffusionSet& noise,
                                       double rtol = 1e-3, int points_per_panel = 48,
                                       double span = 20.0);

struct ModeSplitting {
    std::vector<double> peaks;         // positions near omega = -omega_m [GHz]
    std::optional<double> splitting;   // peak separation when two peaks [GHz]
    bool strong_coupling = false;      // classified by peak count
};

// Local maxima of sbb on a refined grid around -omega_m (quadratic
// interpolation through the three bracketing samples).
ModeSplitting mode_splitting(const WorkingPoint& wp, const DiffusionSet& noise,
                             int grid_points = 4001);

} // namespace gainomech
