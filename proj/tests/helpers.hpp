// shared fixtures for the unit and acceptance suites
#pragma once

#include <string>

#include "gainomech/cooling.hpp"
#include "gainomech/io.hpp"
#include "gainomech/phonon.hpp"

namespace fixtures {

using namespace gainomech;

// Near-threshold seeded laser in the bad-cavity regime (fig1 configuration).
inline LaserParams fig1_laser() {
    LaserParams p;
    p.gamma_perp = 10.0;
    p.gamma_par = 0.1;
    p.kappa = 0.1;
    p.g = 1e-3;
    p.N_g = 1515000.0;
    p.D0 = 1212000.0;
    p.delta_La = 1.0;
    p.delta_Lr = -1.0;
    return p;
}

inline MechanicsParams fig1_mech(double G = 3e-5) {
    MechanicsParams m;
    m.omega_m = 1.0;
    m.Gamma_m = 2e-5;
    m.n_th = 1000.0;
    m.G = G;
    return m;
}

inline WorkingPoint fig1_wp() {
    return derive_working_point(fig1_laser(), fig1_mech(), DriveSpec::seeded_photons(1e5));
}

// Unseeded laser above threshold with resolvable relaxation oscillations
// (fig5 configuration), xi = 0.2.
inline LaserParams fig5_laser() {
    LaserParams p;
    p.gamma_perp = 10.0;
    p.gamma_par = 0.1;
    p.kappa = 0.1;
    p.g = 1e-3;
    p.N_g = 2e7;
    p.D0 = 2.4e6;
    p.delta_La = 10.0;
    p.delta_Lr = -0.1;
    return p;
}

inline WorkingPoint fig5_wp() {
    return derive_working_point(fig5_laser(), fig1_mech(0.0), DriveSpec::unseeded());
}

inline std::string config_path(const std::string& name) {
    return std::string(GAINOMECH_SOURCE_DIR) + "/configs/" + name;
}

// Matched-noise M3 system for comparison against the closed form: symmetric
// field noise (W N_g + 2 kappa)/2 +- kappa_tilde, inversion force off.
inline LinearLangevinSystem matched_seeded_system(const WorkingPoint& wp) {
    DiffusionSet noise = diffusion_coefficients(wp);
    const double half = (wp.W * wp.laser.N_g + 2.0 * wp.laser.kappa) / 2.0;
    noise.d_aad = half + wp.kappa_tilde;
    noise.d_ada = half - wp.kappa_tilde;
    return build_system(Model::Seeded, wp, noise, false);
}

} // namespace fixtures
