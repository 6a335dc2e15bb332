// params.hpp — physical input parameters (angular rates, GHz)
#pragma once

#include <cmath>
#include <optional>

#include "gainomech/errors.hpp"

namespace gainomech {

// Gain medium + cavity inputs. All rates/frequencies are angular, in GHz.
struct LaserParams {
    double gamma_perp = 0.0; // polarization decay rate
    double gamma_par = 0.0;  // inversion decay rate
    double kappa = 0.0;      // cavity field decay rate
    double g = 0.0;          // single-atom coupling
    double N_g = 0.0;        // total number of gain atoms
    double D0 = 0.0;         // unsaturated inversion (pump strength), may be negative
    double delta_La = 0.0;   // omega_L - omega_a
    double delta_Lr = 0.0;   // omega_L - omega_r
    double n_bb = 0.0;       // blackbody photon number

    void validate() const;

    // stimulated emission rate W = 2 g^2 gamma_perp / (gamma_perp^2 + delta_La^2)
    double stimulated_rate() const {
        return 2.0 * g * g * gamma_perp / (gamma_perp * gamma_perp + delta_La * delta_La);
    }
    // saturation photon number gamma_par / 2W (infinite for g = 0)
    double n_sat() const { return gamma_par / (2.0 * stimulated_rate()); }
    // threshold inversion 2 kappa / W (infinite for g = 0)
    double D_th() const { return 2.0 * kappa / stimulated_rate(); }
};

struct MechanicsParams {
    double omega_m = 1.0;  // mechanical frequency
    double Gamma_m = 0.0;  // mechanical energy damping rate
    double n_th = 0.0;     // thermal phonon number
    double G = 0.0;        // optomechanical coupling omega_r x_zpf / L

    void validate() const;
};

enum class DriveKind { Unseeded, Seeded };

// Seeded drives carry exactly one of {omega_s, n_target}.
struct DriveSpec {
    DriveKind kind = DriveKind::Unseeded;
    std::optional<double> omega_s;
    std::optional<double> n_target;

    static DriveSpec unseeded() { return {}; }
    static DriveSpec seeded_amplitude(double omega_s) {
        return {DriveKind::Seeded, omega_s, std::nullopt};
    }
    static DriveSpec seeded_photons(double n_target) {
        return {DriveKind::Seeded, std::nullopt, n_target};
    }

    void validate() const;
};

} // namespace gainomech
