#include "gainomech/working_point.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace gainomech {

namespace {

using cd = std::complex<double>;

// Gain bracket of the seeded steady-state relation: A + B/(1+xi), with
// A = (i delta_Lr - kappa)(gamma_perp - i delta_La), B = g^2 D0.
cd gain_bracket(const LaserParams& p, double xi) {
    const cd A = (cd(0.0, p.delta_Lr) - p.kappa) * (p.gamma_perp - cd(0.0, p.delta_La));
    return A + p.g * p.g * p.D0 / (1.0 + xi);
}

// Real roots of c3 x^3 + c2 x^2 + c1 x + c0 via the companion matrix,
// degrading gracefully through the degenerate degrees.
std::vector<double> real_roots(double c3, double c2, double c1, double c0) {
    std::vector<cd> roots;
    if (c3 != 0.0) {
        Eigen::Matrix3d C = Eigen::Matrix3d::Zero();
        C(1, 0) = 1.0;
        C(2, 1) = 1.0;
        C(0, 2) = -c0 / c3;
        C(1, 2) = -c1 / c3;
        C(2, 2) = -c2 / c3;
        Eigen::EigenSolver<Eigen::Matrix3d> es(C, false);
        for (int i = 0; i < 3; ++i) roots.push_back(es.eigenvalues()(i));
    } else if (c2 != 0.0) {
        const cd disc = std::sqrt(cd(c1 * c1 - 4.0 * c2 * c0, 0.0));
        roots.push_back((-c1 + disc) / (2.0 * c2));
        roots.push_back((-c1 - disc) / (2.0 * c2));
    } else if (c1 != 0.0) {
        roots.emplace_back(-c0 / c1, 0.0);
    } else if (c0 == 0.0) {
        roots.emplace_back(0.0, 0.0);
    }
    std::vector<double> out;
    for (const cd& r : roots) {
        if (std::abs(r.imag()) >= 1e-10 * std::max(1.0, std::abs(r))) continue;
        if (r.real() < 0.0) continue; // tiny negatives rejected, not clipped
        out.push_back(r.real());
    }
    std::sort(out.begin(), out.end());
    // collapse numerically duplicated roots (e.g. near-degenerate pairs)
    std::vector<double> uniq;
    for (double r : out) {
        if (!uniq.empty() && std::abs(r - uniq.back()) <= 1e-8 * std::max(1.0, std::abs(r)))
            continue;
        uniq.push_back(r);
    }
    return uniq;
}

} // namespace

double line_pulling_frequency(double omega_r, double omega_a, double kappa, double gamma_perp) {
    return (gamma_perp * omega_r + kappa * omega_a) / (gamma_perp + kappa);
}

bool line_pulling_consistent(double delta_La, double delta_Lr, double kappa,
                             double gamma_perp, double rtol) {
    const double lhs = gamma_perp * delta_Lr + kappa * delta_La;
    const double scale = std::max(std::abs(gamma_perp * delta_Lr), std::abs(kappa * delta_La));
    if (scale == 0.0) return true;
    return std::abs(lhs) <= rtol * scale;
}

std::pair<double, double> unseeded_steady_state(const LaserParams& laser) {
    if (laser.g <= 0.0) throw ZeroGain("unseeded steady state requires g > 0");
    const double D_th = laser.D_th();
    if (!(laser.D0 > D_th))
        throw BelowThreshold("D0 <= D_th: no lasing steady state to linearize around");
    const double n_bar = laser.n_sat() * (laser.D0 / D_th - 1.0);
    return {D_th, n_bar};
}

SeededSolution seeded_photon_number(const LaserParams& laser, double omega_s) {
    if (!(omega_s >= 0.0)) throw ValidationError("omega_s >= 0");
    const LaserParams& p = laser;
    const cd A = (cd(0.0, p.delta_Lr) - p.kappa) * (p.gamma_perp - cd(0.0, p.delta_La));
    const double B = p.g * p.g * p.D0;
    const double s = 2.0 * p.stimulated_rate() / p.gamma_par; // 1/n_sat, 0 for g = 0
    const double C =
        omega_s * omega_s * (p.gamma_perp * p.gamma_perp + p.delta_La * p.delta_La);
    const double A2 = std::norm(A);
    const double c3 = A2 * s * s;
    const double c2 = 2.0 * s * A2 + 2.0 * B * A.real() * s - C * s * s;
    const double c1 = A2 + 2.0 * B * A.real() + B * B - 2.0 * C * s;
    const double c0 = -C;

    SeededSolution sol;
    for (double n : real_roots(c3, c2, c1, c0)) {
        SeededRoot root;
        root.n_bar = n;
        if (omega_s > 0.0) {
            root.a_bar = cd(0.0, omega_s) * (p.gamma_perp - cd(0.0, p.delta_La)) /
                         gain_bracket(p, n * s);
        } else {
            root.a_bar = std::sqrt(n); // free-running phase; pick real
        }
        sol.roots.push_back(root);
    }
    sol.multivalued = sol.roots.size() > 1;
    return sol;
}

double seeding_amplitude(const LaserParams& laser, double n_target) {
    if (!(n_target > 0.0)) throw ValidationError("n_target > 0");
    const double xi = 2.0 * laser.stimulated_rate() * n_target / laser.gamma_par;
    const double denom =
        std::sqrt(laser.gamma_perp * laser.gamma_perp + laser.delta_La * laser.delta_La);
    return std::sqrt(n_target) * std::abs(gain_bracket(laser, xi)) / denom;
}

WorkingPoint derive_working_point(const LaserParams& laser, const MechanicsParams& mech,
                                  const DriveSpec& drive, std::optional<int> root_index) {
    laser.validate();
    mech.validate();
    drive.validate();

    WorkingPoint wp;
    wp.laser = laser;
    wp.mech = mech;
    wp.drive = drive;
    wp.W = laser.stimulated_rate();

    cd a_complex;
    if (drive.kind == DriveKind::Unseeded) {
        if (laser.g <= 0.0) throw ZeroGain("unseeded operation requires g > 0");
        auto [D_bar, n_bar] = unseeded_steady_state(laser);
        wp.D_bar = D_bar;
        wp.n_bar = n_bar;
        wp.xi = laser.D0 / D_bar - 1.0;
        wp.omega_s = 0.0;
        a_complex = std::sqrt(n_bar);
    } else if (drive.n_target) {
        wp.n_bar = *drive.n_target;
        wp.xi = 2.0 * wp.W * wp.n_bar / laser.gamma_par;
        wp.D_bar = laser.D0 / (1.0 + wp.xi);
        wp.omega_s = seeding_amplitude(laser, wp.n_bar);
        a_complex = cd(0.0, wp.omega_s) * (laser.gamma_perp - cd(0.0, laser.delta_La)) /
                    gain_bracket(laser, wp.xi);
    } else {
        wp.omega_s = *drive.omega_s;
        SeededSolution sol = seeded_photon_number(laser, wp.omega_s);
        if (sol.roots.empty())
            throw ValidationError("seeded steady-state relation has no non-negative root");
        int idx = 0;
        if (sol.multivalued) {
            if (!root_index)
                throw AmbiguousSteadyState("seeded steady state has " +
                                           std::to_string(sol.roots.size()) +
                                           " roots; select one with a root index");
            idx = *root_index;
        } else if (root_index) {
            idx = *root_index;
        }
        if (idx < 0 || idx >= static_cast<int>(sol.roots.size()))
            throw ValidationError("root index out of range");
        wp.n_bar = sol.roots[idx].n_bar;
        wp.xi = 2.0 * wp.W * wp.n_bar / laser.gamma_par;
        wp.D_bar = laser.D0 / (1.0 + wp.xi);
        a_complex = sol.roots[idx].a_bar;
    }

    wp.n_sat = (wp.W > 0.0) ? laser.gamma_par / (2.0 * wp.W)
                            : std::numeric_limits<double>::infinity();
    wp.D_th = (wp.W > 0.0) ? 2.0 * laser.kappa / wp.W
                           : std::numeric_limits<double>::infinity();
    wp.a_bar = std::sqrt(wp.n_bar);
    wp.a_phase = (std::abs(a_complex) > 0.0) ? std::arg(a_complex) : 0.0;
    wp.kappa_tilde = laser.kappa - wp.W * wp.D_bar / 2.0;
    wp.delta_tilde = laser.delta_Lr + (wp.W * wp.D_bar / (2.0 * laser.gamma_perp)) * laser.delta_La;

    const cd rad =
        std::sqrt(cd((1.0 + wp.xi) * (1.0 + wp.xi) - 8.0 * wp.xi * laser.kappa / laser.gamma_par,
                     0.0));
    wp.omega_plus = cd(0.0, -laser.gamma_par / 2.0) * ((1.0 + wp.xi) + rad);
    wp.omega_minus = cd(0.0, -laser.gamma_par / 2.0) * ((1.0 + wp.xi) - rad);
    return wp;
}

} // namespace gainomech
