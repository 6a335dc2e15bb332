#include "gainomech/langevin.hpp"

#include <algorithm>
#include <limits>

namespace gainomech {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

const char* to_string(Model m) {
    switch (m) {
        case Model::Passive: return "passive";
        case Model::UnseededAdiabatic: return "unseeded-adiabatic";
        case Model::Seeded: return "seeded";
        case Model::FullPolarization: return "full-polarization";
        case Model::SeededWithMechanics: return "seeded-with-mechanics";
    }
    return "?";
}

int LinearLangevinSystem::index(const std::string& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw ValidationError("unknown variable label '" + label + "' for model " +
                              to_string(model));
    return static_cast<int>(it - labels.begin());
}

namespace {

double max_real_eigenvalue(const Mat& A) {
    Eigen::ComplexEigenSolver<Mat> es(A, false);
    double m = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < A.rows(); ++i) m = std::max(m, es.eigenvalues()(i).real());
    return m;
}

} // namespace

LinearLangevinSystem build_system(Model model, const WorkingPoint& wp,
                                  const DiffusionSet& noise, bool include_Fpar) {
    const LaserParams& p = wp.laser;
    const double W = wp.W;
    const double xi = wp.xi;
    const double D_bar = wp.D_bar;
    const double n_bar = wp.n_bar;
    const double a_bar = wp.a_bar;
    const double Gamma = p.gamma_par * (1.0 + xi);
    const cd I(0.0, 1.0);

    LinearLangevinSystem sys;
    sys.model = model;

    switch (model) {
        case Model::Passive: {
            sys.labels = {"a", "adag"};
            sys.A = Mat::Zero(2, 2);
            sys.A(0, 0) = I * p.delta_Lr - p.kappa;
            sys.A(1, 1) = -I * p.delta_Lr - p.kappa;
            sys.D = Mat::Zero(2, 2);
            sys.D(0, 1) = 2.0 * p.kappa * (p.n_bb + 1.0);
            sys.D(1, 0) = 2.0 * p.kappa * p.n_bb;
            break;
        }
        case Model::UnseededAdiabatic: {
            if (wp.drive.kind != DriveKind::Unseeded)
                throw ModelMismatch("unseeded-adiabatic model requires an unseeded working point");
            sys.labels = {"n", "D"};
            sys.A = Mat::Zero(2, 2);
            sys.A(0, 1) = xi * p.gamma_par / 2.0;
            sys.A(1, 0) = -2.0 * W * D_bar;
            sys.A(1, 1) = -Gamma;
            sys.D = Mat::Zero(2, 2);
            sys.D(0, 0) = n_bar * (noise.d_aad + noise.d_ada);
            if (include_Fpar) {
                const cd c = a_bar * (noise.d_apar + noise.d_adpar);
                sys.D(0, 1) = c;
                sys.D(1, 0) = std::conj(c);
                sys.D(1, 1) = noise.d_pp;
            }
            break;
        }
        case Model::Seeded: {
            sys.labels = {"n", "u", "D"};
            sys.A = Mat::Zero(3, 3);
            sys.A(0, 0) = -wp.kappa_tilde;
            sys.A(0, 1) = I * wp.delta_tilde;
            sys.A(0, 2) = W * n_bar;
            sys.A(1, 0) = I * wp.delta_tilde;
            sys.A(1, 1) = -wp.kappa_tilde;
            sys.A(1, 2) = I * W * n_bar * p.delta_La / p.gamma_perp;
            sys.A(2, 0) = -2.0 * W * D_bar;
            sys.A(2, 2) = -Gamma;
            sys.D = Mat::Zero(3, 3);
            const double Sig = noise.d_aad + noise.d_ada;
            const double dlt = noise.d_ada - noise.d_aad;
            sys.D(0, 0) = n_bar * Sig;
            sys.D(0, 1) = n_bar * dlt;
            sys.D(1, 0) = -n_bar * dlt;
            sys.D(1, 1) = -n_bar * Sig;
            if (include_Fpar) {
                const cd sum = noise.d_apar + noise.d_adpar;
                const cd dif = noise.d_apar - noise.d_adpar;
                sys.D(0, 2) = a_bar * sum;
                sys.D(2, 0) = a_bar * std::conj(sum);
                sys.D(1, 2) = a_bar * dif;
                sys.D(2, 1) = -a_bar * std::conj(dif);
                sys.D(2, 2) = noise.d_pp;
            }
            break;
        }
        case Model::FullPolarization: {
            if (wp.drive.kind != DriveKind::Unseeded)
                throw ModelMismatch("full-polarization model requires an unseeded working point");
            if (p.g <= 0.0) throw ZeroGain("full-polarization model requires g > 0");
            sys.labels = {"a", "adag", "P", "Pdag", "D"};
            const cd P_bar = I * p.g * a_bar * D_bar / (p.gamma_perp - I * p.delta_La);
            sys.A = Mat::Zero(5, 5);
            sys.A(0, 0) = I * p.delta_Lr - p.kappa;
            sys.A(0, 2) = -I * p.g;
            sys.A(1, 1) = -I * p.delta_Lr - p.kappa;
            sys.A(1, 3) = I * p.g;
            sys.A(2, 2) = I * p.delta_La - p.gamma_perp;
            sys.A(2, 0) = I * p.g * D_bar;
            sys.A(2, 4) = I * p.g * a_bar;
            sys.A(3, 3) = -I * p.delta_La - p.gamma_perp;
            sys.A(3, 1) = -I * p.g * D_bar;
            sys.A(3, 4) = -I * p.g * a_bar;
            sys.A(4, 4) = -p.gamma_par;
            sys.A(4, 2) = 2.0 * I * p.g * a_bar;
            sys.A(4, 3) = -2.0 * I * p.g * a_bar;
            sys.A(4, 0) = -2.0 * I * p.g * std::conj(P_bar);
            sys.A(4, 1) = 2.0 * I * p.g * P_bar;
            sys.D = Mat::Zero(5, 5);
            sys.D(0, 1) = 2.0 * p.kappa * (p.n_bb + 1.0);
            sys.D(1, 0) = 2.0 * p.kappa * p.n_bb;
            sys.D(2, 3) = noise.bare_pol_aad;
            sys.D(3, 2) = noise.bare_pol_ada;
            if (include_Fpar) {
                sys.D(2, 4) = noise.bare_pol_par;
                sys.D(3, 4) = noise.bare_pold_par;
                sys.D(4, 2) = std::conj(noise.bare_pold_par);
                sys.D(4, 3) = std::conj(noise.bare_pol_par);
                sys.D(4, 4) = noise.bare_pp;
            }
            break;
        }
        case Model::SeededWithMechanics: {
            sys.labels = {"a", "adag", "D", "b", "bdag"};
            const double G = wp.mech.G;
            const cd Ca = p.g * p.g * a_bar / (p.gamma_perp - I * p.delta_La);
            sys.A = Mat::Zero(5, 5);
            sys.A(0, 0) = I * wp.delta_tilde - wp.kappa_tilde;
            sys.A(0, 2) = Ca;
            sys.A(0, 3) = I * G * a_bar;
            sys.A(0, 4) = I * G * a_bar;
            sys.A(1, 1) = -I * wp.delta_tilde - wp.kappa_tilde;
            sys.A(1, 2) = std::conj(Ca);
            sys.A(1, 3) = -I * G * a_bar;
            sys.A(1, 4) = -I * G * a_bar;
            sys.A(2, 0) = -2.0 * W * D_bar * a_bar;
            sys.A(2, 1) = -2.0 * W * D_bar * a_bar;
            sys.A(2, 2) = -Gamma;
            sys.A(3, 0) = I * G * a_bar;
            sys.A(3, 1) = I * G * a_bar;
            sys.A(3, 3) = -I * wp.mech.omega_m - wp.mech.Gamma_m / 2.0;
            sys.A(4, 0) = -I * G * a_bar;
            sys.A(4, 1) = -I * G * a_bar;
            sys.A(4, 4) = I * wp.mech.omega_m - wp.mech.Gamma_m / 2.0;
            sys.D = Mat::Zero(5, 5);
            sys.D(0, 1) = noise.d_aad;
            sys.D(1, 0) = noise.d_ada;
            if (include_Fpar) {
                sys.D(0, 2) = noise.d_apar;
                sys.D(1, 2) = noise.d_adpar;
                sys.D(2, 0) = std::conj(noise.d_adpar);
                sys.D(2, 1) = std::conj(noise.d_apar);
                sys.D(2, 2) = noise.d_pp;
            }
            sys.D(3, 4) = noise.d_bbd;
            sys.D(4, 3) = noise.d_bdb;
            break;
        }
    }

    sys.max_re_eig = max_real_eigenvalue(sys.A);
    return sys;
}

namespace {

Mat inverse_response(const LinearLangevinSystem& sys, double omega) {
    const int n = static_cast<int>(sys.A.rows());
    Mat M = cd(0.0, -omega) * Mat::Identity(n, n) - sys.A;
    Eigen::FullPivLU<Mat> lu(M);
    if (!lu.isInvertible())
        throw SingularResponse("response matrix singular at omega = " + std::to_string(omega));
    return lu.inverse();
}

} // namespace

Eigen::MatrixXcd spectrum_matrix_full(const LinearLangevinSystem& sys, double omega) {
    if (!sys.stable())
        throw UnstableSystem("drift matrix has a growing mode (max Re eig = " +
                             std::to_string(sys.max_re_eig) + ")");
    const Mat Gp = inverse_response(sys, omega);
    const Mat Gm = inverse_response(sys, -omega);
    return Gp * sys.D * Gm.transpose();
}

std::complex<double> spectrum_matrix(const LinearLangevinSystem& sys, double omega,
                                     const std::string& row, const std::string& col) {
    return spectrum_matrix_full(sys, omega)(sys.index(row), sys.index(col));
}

std::complex<double> spectrum_quadratic(const LinearLangevinSystem& sys, double omega,
                                        const Eigen::VectorXcd& coeff) {
    const Mat S = spectrum_matrix_full(sys, omega);
    return (coeff.transpose() * S * coeff)(0, 0);
}

} // namespace gainomech
