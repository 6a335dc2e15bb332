#include "gainomech/noise.hpp"

#include <cmath>

namespace gainomech {

using cd = std::complex<double>;

DiffusionSet diffusion_coefficients(const WorkingPoint& wp) {
    const LaserParams& p = wp.laser;
    DiffusionSet d;

    const double W = wp.W;
    const double D_bar = wp.D_bar;
    const double ratio = p.gamma_par / (2.0 * p.gamma_perp);
    d.d_se_ada = W / 2.0 * ((p.N_g + D_bar) + ratio * (p.D0 - D_bar));
    d.d_se_aad = W / 2.0 * ((p.N_g - D_bar) - ratio * (p.D0 - D_bar));
    d.d_aad = 2.0 * p.kappa * (p.n_bb + 1.0) + d.d_se_aad;
    d.d_ada = 2.0 * p.kappa * p.n_bb + d.d_se_ada;
    d.d_pp = 2.0 * p.gamma_par * (p.N_g - p.D0 * D_bar / p.N_g);

    const cd dm(p.gamma_perp, -p.delta_La); // gamma_perp - i delta_La
    const cd dp(p.gamma_perp, p.delta_La);
    const double a_bar = wp.a_bar;
    d.d_apar = p.gamma_par * p.g * p.g * D_bar * a_bar * (1.0 - p.D0 / p.N_g) / (dm * dm);
    d.d_adpar = -p.gamma_par * p.g * p.g * D_bar * a_bar * (1.0 + p.D0 / p.N_g) / (dp * dp);

    d.d_bdb = wp.mech.Gamma_m * wp.mech.n_th;
    d.d_bbd = wp.mech.Gamma_m * (wp.mech.n_th + 1.0);

    if (p.g > 0.0) {
        // Bare polarization correlators from F_a = F_kappa - ig F_gperp / (gperp - i dLa).
        d.bare_pol_ada = (2.0 * p.gamma_perp / W) * d.d_se_ada;
        d.bare_pol_aad = (2.0 * p.gamma_perp / W) * d.d_se_aad;
        // The adiabatic F_gpar is the bare inversion force plus filtered F_gperp
        // terms; invert that relation so the eliminated limit reproduces the
        // effective correlators exactly.
        const double wg = W / p.gamma_perp;
        d.bare_pol_par = cd(0.0, 1.0) * dm * (d.d_apar + wg * a_bar * d.bare_pol_aad) / p.g;
        d.bare_pold_par = cd(0.0, -1.0) * dp * (d.d_adpar + wg * a_bar * d.bare_pol_ada) / p.g;
        const cd i2ga(0.0, 2.0 * p.g * a_bar);
        const cd cross = i2ga * (std::conj(d.bare_pold_par) / dm - std::conj(d.bare_pol_par) / dp) +
                         i2ga * (d.bare_pol_par / dm - d.bare_pold_par / dp);
        const double quad = 2.0 * wg * wp.n_bar * (d.bare_pol_aad + d.bare_pol_ada);
        d.bare_pp = d.d_pp - cross.real() - quad;
    }
    return d;
}

std::pair<double, double> bare_pol(const WorkingPoint& wp, const DiffusionSet& noise) {
    if (wp.laser.g <= 0.0)
        throw ZeroGain("bare polarization correlators require g > 0");
    return {noise.bare_pol_ada, noise.bare_pol_aad};
}

} // namespace gainomech
