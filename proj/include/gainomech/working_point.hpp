// working_point.hpp — steady states and derived operating-point quantities
#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "gainomech/params.hpp"

namespace gainomech {

// Derived steady-state quantities. Immutable after construction; safe to
// share between threads.
struct WorkingPoint {
    LaserParams laser;
    MechanicsParams mech;
    DriveSpec drive;

    double W = 0.0;        // stimulated emission rate
    double n_sat = 0.0;    // saturation photon number (inf for g = 0)
    double D_th = 0.0;     // threshold inversion (inf for g = 0)
    double xi = 0.0;       // saturation factor n_bar / n_sat
    double D_bar = 0.0;    // saturated inversion
    double n_bar = 0.0;    // mean photon number
    double a_bar = 0.0;    // field amplitude, re-phased real >= 0
    double a_phase = 0.0;  // phase removed from the complex steady-state field
    double omega_s = 0.0;  // resolved seed amplitude (0 for unseeded)

    double kappa_tilde = 0.0;  // effective cavity decay
    double delta_tilde = 0.0;  // effective detuning

    std::complex<double> omega_plus;   // complex relaxation frequencies
    std::complex<double> omega_minus;
};

// Laser frequency from the line-pulling balance gamma_perp*Delta_Lr + kappa*Delta_La = 0.
double line_pulling_frequency(double omega_r, double omega_a, double kappa, double gamma_perp);

// Check that a (delta_La, delta_Lr) pair satisfies the line-pulling identity.
bool line_pulling_consistent(double delta_La, double delta_Lr, double kappa,
                             double gamma_perp, double rtol = 1e-9);

// Above-threshold clamped steady state: returns (D_bar, n_bar).
// Throws BelowThreshold for D0 <= D_th, ZeroGain for g = 0.
std::pair<double, double> unseeded_steady_state(const LaserParams& laser);

struct SeededRoot {
    double n_bar = 0.0;
    std::complex<double> a_bar; // before re-phasing
};

struct SeededSolution {
    std::vector<SeededRoot> roots; // sorted ascending in n_bar
    bool multivalued = false;
};

// All real non-negative photon-number roots of the seeded steady-state cubic.
SeededSolution seeded_photon_number(const LaserParams& laser, double omega_s);

// Seed amplitude that targets a given mean photon number (forward evaluation
// of the steady-state relation with xi = n_target/n_sat).
double seeding_amplitude(const LaserParams& laser, double n_target);

// Full working point. For a Seeded drive given by omega_s with multiple
// steady-state roots, root_index selects one; absent, AmbiguousSteadyState
// is thrown.
WorkingPoint derive_working_point(const LaserParams& laser, const MechanicsParams& mech,
                                  const DriveSpec& drive,
                                  std::optional<int> root_index = std::nullopt);

} // namespace gainomech
