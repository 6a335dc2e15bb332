#include "gainomech/phonon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace gainomech {

using cd = std::complex<double>;

namespace {

cd chi_m_of(const WorkingPoint& wp, double omega) {
    return 1.0 / (cd(0.0, wp.mech.omega_m - omega) + wp.mech.Gamma_m / 2.0);
}

cd chi_r_of(const WorkingPoint& wp, double omega) {
    return 1.0 / (cd(0.0, wp.delta_tilde - omega) + wp.kappa_tilde);
}

} // namespace

SusceptibilitySet susceptibilities(const WorkingPoint& wp, const DiffusionSet& noise,
                                   double omega) {
    LinearLangevinSystem sys = build_system(Model::SeededWithMechanics, wp, noise, true);
    const int n = static_cast<int>(sys.A.rows());
    Eigen::MatrixXcd M = cd(0.0, -omega) * Eigen::MatrixXcd::Identity(n, n) - sys.A;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
    if (!lu.isInvertible())
        throw SingularResponse("response matrix singular at omega = " + std::to_string(omega));
    const Eigen::MatrixXcd Minv = lu.inverse();
    const int b = sys.index("b");
    SusceptibilitySet chi;
    chi.chi_a = Minv(b, sys.index("a"));
    chi.chi_adag = Minv(b, sys.index("adag"));
    chi.chi_b = Minv(b, b);
    chi.chi_bdag = Minv(b, sys.index("bdag"));
    chi.chi_m = chi_m_of(wp, omega);
    chi.chi_r = chi_r_of(wp, omega);
    return chi;
}

std::complex<double> chi_a_closed(const WorkingPoint& wp, double omega) {
    const LaserParams& p = wp.laser;
    const double G = wp.mech.G;
    const cd crm = std::conj(chi_r_of(wp, -omega));
    const cd cr = chi_r_of(wp, omega);
    const cd cm = chi_m_of(wp, omega);
    const cd cmm = std::conj(chi_m_of(wp, -omega));
    const cd num = cd(0.0, 1.0) * wp.a_bar * G * crm * cm;
    const cd den =
        1.0 + 4.0 * wp.n_bar * G * G * wp.mech.omega_m * wp.delta_tilde * crm * cr * cmm * cm +
        cd(0.0, 2.0) * wp.n_bar * wp.W * wp.D_bar * p.g * p.g /
            (omega + cd(0.0, (1.0 + wp.xi) * p.gamma_par)) *
            (crm / (p.gamma_perp - cd(0.0, p.delta_La)) +
             cr / (p.gamma_perp + cd(0.0, p.delta_La)));
    return num / den;
}

double sbb(const WorkingPoint& wp, const DiffusionSet& noise, double omega, bool include_Fpar) {
    LinearLangevinSystem sys = build_system(Model::SeededWithMechanics, wp, noise, include_Fpar);
    return spectrum_matrix(sys, omega, "bdag", "b").real();
}

namespace {

// Peak-anchored quadrature over [-span, span]: panels between sorted anchor
// points, each half subdivided geometrically toward its peaked endpoint,
// Gauss-Legendre within each sub-panel.
double integrate_anchored(const std::function<double(double)>& f,
                          std::vector<double> anchors, double span, int n_gauss) {
    // Gauss-Legendre nodes by Newton iteration on Legendre polynomials.
    std::vector<double> x(n_gauss), w(n_gauss);
    for (int i = 0; i < n_gauss; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n_gauss + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n_gauss; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n_gauss * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n_gauss; ++k) {
            const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n_gauss * (t * p1 - p0) / (t * t - 1.0);
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    auto gauss = [&](double a, double b) {
        double s = 0.0;
        for (int i = 0; i < n_gauss; ++i)
            s += w[i] * f(0.5 * (b - a) * x[i] + 0.5 * (a + b));
        return 0.5 * (b - a) * s;
    };

    anchors.push_back(-span);
    anchors.push_back(span);
    std::sort(anchors.begin(), anchors.end());
    std::vector<double> pts;
    for (double a : anchors) {
        if (a < -span || a > span) continue;
        if (pts.empty() || a - pts.back() > 1e-12) pts.push_back(a);
    }

    double total = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const double lo = pts[i];
        const double hi = pts[i + 1];
        const double mid = 0.5 * (lo + hi);
        for (int side = 0; side < 2; ++side) {
            const double a0 = side == 0 ? lo : mid;
            const double b0 = side == 0 ? mid : hi;
            const double width = b0 - a0;
            if (width <= 0.0) continue;
            // sub-panel edges shrinking geometrically toward the peaked end
            std::vector<double> edges{0.0, width};
            double scale = width;
            while (scale > 1e-7 * std::max(1.0, width)) {
                scale *= 0.25;
                edges.push_back(scale);
            }
            std::sort(edges.begin(), edges.end());
            std::vector<double> xs;
            for (double e : edges)
                xs.push_back(side == 0 ? a0 + e : b0 - e);
            std::sort(xs.begin(), xs.end());
            for (size_t j = 0; j + 1 < xs.size(); ++j) total += gauss(xs[j], xs[j + 1]);
        }
    }
    return total;
}

} // namespace

PhononIntegral integrate_phonon_number(const WorkingPoint& wp, const DiffusionSet& noise,
                                       double rtol, int points_per_panel, double span) {
    LinearLangevinSystem sys = build_system(Model::SeededWithMechanics, wp, noise, true);
    if (!sys.stable())
        throw UnstableSystem("drift matrix has a growing mode; phonon spectrum undefined");
    const int ib = sys.index("b");
    const int ibd = sys.index("bdag");
    const int n = static_cast<int>(sys.A.rows());
    auto f = [&](double omega) {
        Eigen::MatrixXcd Mp = cd(0.0, -omega) * Eigen::MatrixXcd::Identity(n, n) - sys.A;
        Eigen::MatrixXcd Mm = cd(0.0, omega) * Eigen::MatrixXcd::Identity(n, n) - sys.A;
        const Eigen::MatrixXcd S =
            Mp.fullPivLu().inverse() * sys.D * Mm.fullPivLu().inverse().transpose();
        return S(ibd, ib).real();
    };

    const double om = wp.mech.omega_m;
    const double aG = wp.a_bar * wp.mech.G;
    std::vector<double> anchors{-om, om, wp.delta_tilde, -wp.delta_tilde, -om - aG, -om + aG};
    // exact resonance positions: det(-i omega I - A) = 0 at omega = -Im(eig)
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(sys.A, false);
    for (int i = 0; i < n; ++i) {
        anchors.push_back(-es.eigenvalues()(i).imag());
        anchors.push_back(es.eigenvalues()(i).imag());
    }

    const double tail = (f(span) + f(-span)) * span; // 1/omega^2 falloff beyond the span
    const double coarse =
        (integrate_anchored(f, anchors, span, points_per_panel) + tail) / (2.0 * M_PI);
    const double fine =
        (integrate_anchored(f, anchors, span, 2 * points_per_panel) + tail) / (2.0 * M_PI);
    const double err = std::abs(fine - coarse);
    if (err > rtol * std::abs(fine))
        throw NonConvergedQuadrature("phonon-number quadrature moved by " + std::to_string(err) +
                                     " under panel doubling");
    return {fine, err};
}

ModeSplitting mode_splitting(const WorkingPoint& wp, const DiffusionSet& noise,
                             int grid_points) {
    const double om = wp.mech.omega_m;
    const double aG = wp.a_bar * wp.mech.G;
    const double half = std::max(3.0 * aG, 10.0 * wp.mech.Gamma_m);
    LinearLangevinSystem sys = build_system(Model::SeededWithMechanics, wp, noise, true);

    std::vector<double> grid(grid_points), val(grid_points);
    for (int i = 0; i < grid_points; ++i) {
        grid[i] = -om - half + 2.0 * half * i / (grid_points - 1.0);
        val[i] = spectrum_matrix(sys, grid[i], "bdag", "b").real();
    }

    ModeSplitting ms;
    for (int i = 1; i + 1 < grid_points; ++i) {
        if (val[i] > val[i - 1] && val[i] > val[i + 1]) {
            const double denom = val[i - 1] - 2.0 * val[i] + val[i + 1];
            const double shift = denom != 0.0 ? 0.5 * (val[i - 1] - val[i + 1]) / denom : 0.0;
            ms.peaks.push_back(grid[i] + shift * (grid[1] - grid[0]));
        }
    }
    if (ms.peaks.size() == 2) ms.splitting = ms.peaks[1] - ms.peaks[0];
    ms.strong_coupling = ms.peaks.size() >= 2;
    return ms;
}

} // namespace gainomech
