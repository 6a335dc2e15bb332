#include "gainomech/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace gainomech {

using cd = std::complex<double>;

double snn_closed_passive(const WorkingPoint& wp, double omega) {
    const double k = wp.laser.kappa;
    const double d = wp.laser.delta_Lr;
    return 2.0 * k * wp.n_bar / ((omega + d) * (omega + d) + k * k);
}

double snn_closed_unseeded(const WorkingPoint& wp, double omega) {
    const double Gamma = wp.laser.gamma_par * (1.0 + wp.xi);
    const cd q = (omega * omega - wp.omega_plus * wp.omega_plus) *
                 (omega * omega - wp.omega_minus * wp.omega_minus);
    return (omega * omega + Gamma * Gamma) / q.real() * wp.W * wp.laser.N_g * wp.n_bar;
}

double snn_closed_unseeded_four_term(const WorkingPoint& wp, const DiffusionSet& noise,
                                     double omega) {
    const double gpar = wp.laser.gamma_par;
    const double xi = wp.xi;
    const double Gamma = gpar * (1.0 + xi);
    const double q = ((omega * omega - wp.omega_plus * wp.omega_plus) *
                      (omega * omega - wp.omega_minus * wp.omega_minus))
                         .real();
    const cd sum = noise.d_apar + noise.d_adpar;
    const double t1 = (omega * omega + Gamma * Gamma) / q * wp.n_bar * (noise.d_aad + noise.d_ada);
    const double t2 = gpar * gpar * xi * xi / (4.0 * q) * noise.d_pp;
    const double t3 = (1.0 + xi) * xi * gpar * gpar * wp.a_bar / q * sum.real();
    const double t4 = omega * xi * gpar * wp.a_bar / q * sum.imag();
    return t1 + t2 + t3 + t4;
}

double snn_closed_seeded(const WorkingPoint& wp, double omega) {
    const LaserParams& p = wp.laser;
    const double kt = wp.kappa_tilde;
    const double dt = wp.delta_tilde;
    const double Gamma = p.gamma_par * (1.0 + wp.xi);
    const cd miw(0.0, -omega);
    const cd Theta = p.gamma_perp * ((miw + kt) * (miw + kt) + dt * dt) * (miw + Gamma) -
                     2.0 * wp.n_bar * wp.W * wp.W * wp.D_bar *
                         (p.delta_La * dt - p.gamma_perp * (kt + miw));
    const double Lambda =
        wp.n_bar * p.gamma_perp * p.gamma_perp * (omega * omega + Gamma * Gamma) / std::norm(Theta);
    return Lambda * ((omega * omega + dt * dt + kt * kt) * (wp.W * p.N_g + 2.0 * p.kappa) -
                     4.0 * omega * dt * kt);
}

double snn_full_polarization(const WorkingPoint& wp, const DiffusionSet& noise, double omega,
                             bool include_Fpar) {
    LinearLangevinSystem sys = build_system(Model::FullPolarization, wp, noise, include_Fpar);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(5);
    v(0) = wp.a_bar;
    v(1) = wp.a_bar;
    return spectrum_quadratic(sys, omega, v).real();
}

double snn(Model model, const WorkingPoint& wp, const DiffusionSet& noise, double omega,
           Method method, bool include_Fpar) {
    if (method == Method::ClosedForm) {
        switch (model) {
            case Model::Passive:
                return snn_closed_passive(wp, omega);
            case Model::UnseededAdiabatic:
                return include_Fpar ? snn_closed_unseeded_four_term(wp, noise, omega)
                                    : snn_closed_unseeded(wp, omega);
            case Model::Seeded:
                return snn_closed_seeded(wp, omega);
            default:
                throw ModelMismatch(std::string("no closed-form spectrum for model ") +
                                    to_string(model));
        }
    }
    switch (model) {
        case Model::Passive: {
            LinearLangevinSystem sys = build_system(model, wp, noise, include_Fpar);
            Eigen::VectorXcd v(2);
            v << wp.a_bar, wp.a_bar;
            return spectrum_quadratic(sys, omega, v).real();
        }
        case Model::UnseededAdiabatic:
        case Model::Seeded: {
            LinearLangevinSystem sys = build_system(model, wp, noise, include_Fpar);
            return spectrum_matrix(sys, omega, "n", "n").real();
        }
        case Model::FullPolarization:
            return snn_full_polarization(wp, noise, omega, include_Fpar);
        case Model::SeededWithMechanics: {
            LinearLangevinSystem sys = build_system(model, wp, noise, include_Fpar);
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(5);
            v(0) = wp.a_bar;
            v(1) = wp.a_bar;
            return spectrum_quadratic(sys, omega, v).real();
        }
    }
    throw ModelMismatch("unknown model");
}

std::vector<double> default_grid(const WorkingPoint& wp, int points) {
    const double scale = std::max({std::abs(wp.delta_tilde),
                                   wp.laser.gamma_par * (1.0 + wp.xi), wp.laser.kappa});
    const int half = std::max(points / 2, 2);
    std::vector<double> grid;
    grid.reserve(2 * half);
    const double lo = std::log(1e-4 * scale);
    const double hi = std::log(10.0 * scale);
    for (int i = 0; i < half; ++i) {
        const double w = std::exp(lo + (hi - lo) * i / (half - 1.0));
        grid.push_back(w);
        grid.push_back(-w);
    }
    std::sort(grid.begin(), grid.end());
    return grid;
}

std::vector<double> refine_grid_at_peaks(const std::vector<double>& grid,
                                         const std::vector<double>& values,
                                         int refine_points) {
    std::vector<double> merged = grid;
    for (size_t i = 1; i + 1 < values.size(); ++i) {
        if (values[i] > values[i - 1] && values[i] > values[i + 1]) {
            const double a = grid[i - 1];
            const double b = grid[i + 1];
            for (int j = 0; j < refine_points; ++j)
                merged.push_back(a + (b - a) * j / (refine_points - 1.0));
        }
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged;
}

SpectrumResult snn_on_grid(Model model, const WorkingPoint& wp, const DiffusionSet& noise,
                           const std::vector<double>& grid, Method method, bool include_Fpar) {
    SpectrumResult res;
    res.omega_grid = grid;
    res.model = model;
    res.method = method;
    res.values.reserve(grid.size());
    for (double w : grid) res.values.push_back(snn(model, wp, noise, w, method, include_Fpar));
    return res;
}

} // namespace gainomech
