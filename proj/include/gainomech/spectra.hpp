// spectra.hpp — photon-number spectra S_nn(omega): matrix route and closed forms
#pragma once

#include <vector>

#include "gainomech/langevin.hpp"

namespace gainomech {

struct SpectrumResult {
    std::vector<double> omega_grid; // GHz
    std::vector<double> values;     // GHz^-1
    Model model = Model::Passive;
    Method method = Method::Matrix;
};

// Closed forms ------------------------------------------------------------

// Passive Lorentzian 2 kappa n_bar / [(omega + Delta_Lr)^2 + kappa^2].
double snn_closed_passive(const WorkingPoint& wp, double omega);

// Unseeded two-mode result, leading term only (exactly even in omega).
double snn_closed_unseeded(const WorkingPoint& wp, double omega);

// Unseeded four-term expression (exact solution of the (dn, dD) system,
// including the inversion force).
double snn_closed_unseeded_four_term(const WorkingPoint& wp, const DiffusionSet& noise,
                                     double omega);

// Seeded closed form with Lambda(omega), Theta(omega) including the
// 2 n_bar W^2 D_bar correction in Theta.
double snn_closed_seeded(const WorkingPoint& wp, double omega);

// Dispatch ----------------------------------------------------------------

// S_nn(omega) for the given model/method. ClosedForm is unavailable for
// FullPolarization (ModelMismatch). For UnseededAdiabatic the closed form
// is the four-term expression when include_Fpar, else the leading term.
double snn(Model model, const WorkingPoint& wp, const DiffusionSet& noise, double omega,
           Method method = Method::Matrix, bool include_Fpar = true);

// S_nn from the 5-variable (da, da^dag, dP, dP^dag, dD) solve with the bare
// polarization correlators. Unseeded above threshold only.
double snn_full_polarization(const WorkingPoint& wp, const DiffusionSet& noise, double omega,
                             bool include_Fpar = true);

// Grids -------------------------------------------------------------------

// Log-symmetric default grid +-[1e-4, 10] * max(|delta_tilde|, gamma_par(1+xi), kappa)
// with `points` samples, never containing omega = 0.
std::vector<double> default_grid(const WorkingPoint& wp, int points = 2048);

// Insert a dense linear refinement (refine_points) across each detected peak
// of `values` sampled on `grid`; returns the merged sorted grid.
std::vector<double> refine_grid_at_peaks(const std::vector<double>& grid,
                                         const std::vector<double>& values,
                                         int refine_points = 401);

SpectrumResult snn_on_grid(Model model, const WorkingPoint& wp, const DiffusionSet& noise,
                           const std::vector<double>& grid, Method method = Method::Matrix,
                           bool include_Fpar = true);

} // namespace gainomech
