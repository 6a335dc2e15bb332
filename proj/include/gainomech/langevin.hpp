// langevin.hpp — frequency-domain solver for linear Langevin systems
#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gainomech/noise.hpp"

namespace gainomech {

enum class Model { Passive, UnseededAdiabatic, Seeded, FullPolarization, SeededWithMechanics };
enum class Method { Matrix, ClosedForm };

const char* to_string(Model m);

// d/dt dx = A dx + F, with <F_k(t) F_l(t')> = D_kl delta(t-t').
// Immutable once built; any number of threads may evaluate spectra from one
// instance concurrently.
struct LinearLangevinSystem {
    std::vector<std::string> labels;
    Eigen::MatrixXcd A;
    Eigen::MatrixXcd D;
    Model model = Model::Passive;
    double max_re_eig = 0.0;

    // Stable when no eigenvalue of A has positive real part (marginal
    // zero modes allowed).
    bool stable(double tol = 1e-9) const { return max_re_eig <= tol; }
    int index(const std::string& label) const;
};

// Drift + diffusion matrices for one of the paper's five fluctuation models.
// include_Fpar toggles the inversion-force row/column of D.
LinearLangevinSystem build_system(Model model, const WorkingPoint& wp,
                                  const DiffusionSet& noise, bool include_Fpar);

// Full spectral matrix S(omega) = M(omega)^-1 D M(-omega)^-T with
// M(omega) = -i omega I - A. Throws SingularResponse when M(omega) is
// numerically singular, UnstableSystem when the drift has a growing mode.
Eigen::MatrixXcd spectrum_matrix_full(const LinearLangevinSystem& sys, double omega);

// Single element of the spectral matrix by variable labels.
std::complex<double> spectrum_matrix(const LinearLangevinSystem& sys, double omega,
                                     const std::string& row, const std::string& col);

// v^T S(omega) v for a coefficient vector over the system's variables
// (used for composite observables such as dn = a_bar (da + da^dag)).
std::complex<double> spectrum_quadratic(const LinearLangevinSystem& sys, double omega,
                                        const Eigen::VectorXcd& coeff);

} // namespace gainomech
