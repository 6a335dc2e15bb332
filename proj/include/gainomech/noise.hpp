// noise.hpp — Langevin-force diffusion coefficients
#pragma once

#include <complex>

#include "gainomech/working_point.hpp"

namespace gainomech {

// Delta-correlated force strengths <F_k(t) F_l(t')> = D_kl delta(t-t'), in GHz.
// d_* are the effective (adiabatic-model) correlators; bare_* are the
// polarization/inversion correlators backed out for the full-polarization
// model, whose adiabatic limit reproduces the effective set exactly.
struct DiffusionSet {
    double d_aad = 0.0;             // <F_a F_a^dag>
    double d_ada = 0.0;             // <F_a^dag F_a>
    double d_pp = 0.0;              // <F_par F_par> (effective inversion force)
    std::complex<double> d_apar;    // <F_a F_par>
    std::complex<double> d_adpar;   // <F_a^dag F_par>
    double d_bdb = 0.0;             // Gamma_m n_th
    double d_bbd = 0.0;             // Gamma_m (n_th + 1)

    double bare_pol_aad = 0.0;      // <F_gperp F_gperp^dag>
    double bare_pol_ada = 0.0;      // <F_gperp^dag F_gperp>
    std::complex<double> bare_pol_par;   // <F_gperp F_gpar>
    std::complex<double> bare_pold_par;  // <F_gperp^dag F_gpar>
    double bare_pp = 0.0;           // bare <F_gpar F_gpar>

    // spontaneous-emission parts (no blackbody/cavity contribution)
    double d_se_aad = 0.0;
    double d_se_ada = 0.0;
};

// All diffusion coefficients at a working point. The bare polarization
// correlators require g > 0; with g = 0 they are left at zero and
// bare_pol() below throws.
DiffusionSet diffusion_coefficients(const WorkingPoint& wp);

// Bare polarization correlator pair (<F_gperp^dag F_gperp>, <F_gperp F_gperp^dag>).
// Throws ZeroGain when the working point has g = 0.
std::pair<double, double> bare_pol(const WorkingPoint& wp, const DiffusionSet& noise);

} // namespace gainomech
