#include <doctest.h>

#include "helpers.hpp"

using namespace gainomech;
using namespace fixtures;

TEST_CASE("matrix susceptibility matches the closed form") {
    const WorkingPoint wp = fig1_wp();
    const DiffusionSet noise = diffusion_coefficients(wp);
    for (double w : {-1.2, -1.0, -0.99, -0.5, 0.3, 1.0}) {
        const SusceptibilitySet chi = susceptibilities(wp, noise, w);
        const std::complex<double> closed = chi_a_closed(wp, w);
        CHECK(std::abs(chi.chi_a - closed) <= 1e-10 * std::abs(closed));
        CHECK(chi.chi_m == std::complex<double>(1.0) /
                               (std::complex<double>(0.0, wp.mech.omega_m - w) +
                                wp.mech.Gamma_m / 2.0));
    }
}

TEST_CASE("phonon spectrum is non-negative and peaked near -omega_m") {
    const WorkingPoint wp = fig1_wp();
    const DiffusionSet noise = diffusion_coefficients(wp);
    const double at_peak = sbb(wp, noise, -wp.mech.omega_m);
    const double off_peak = sbb(wp, noise, -0.5 * wp.mech.omega_m);
    CHECK(at_peak >= 0.0);
    CHECK(off_peak >= 0.0);
    CHECK(at_peak > 100.0 * off_peak);
}

TEST_CASE("integrated occupation agrees with the rate equation") {
    const WorkingPoint wp = fig1_wp();
    const DiffusionSet noise = diffusion_coefficients(wp);
    const CoolingResult rate = phonon_number_rate(Model::Seeded, wp, noise);
    const PhononIntegral integ = integrate_phonon_number(wp, noise);
    CHECK(integ.n_m == doctest::Approx(rate.n_m).epsilon(0.10));
    CHECK(integ.error_estimate <= 1e-3 * integ.n_m);
}

TEST_CASE("decoupled mechanics integrates to the thermal occupation") {
    const WorkingPoint wp =
        derive_working_point(fig1_laser(), fig1_mech(0.0), DriveSpec::seeded_photons(1e5));
    const DiffusionSet noise = diffusion_coefficients(wp);
    const PhononIntegral integ = integrate_phonon_number(wp, noise);
    CHECK(integ.n_m == doctest::Approx(wp.mech.n_th).epsilon(1e-6));
}

TEST_CASE("quadrature is stable under panel-density doubling") {
    const WorkingPoint wp = fig1_wp();
    const DiffusionSet noise = diffusion_coefficients(wp);
    const PhononIntegral coarse = integrate_phonon_number(wp, noise, 1e-3, 48);
    const PhononIntegral fine = integrate_phonon_number(wp, noise, 1e-3, 96);
    CHECK(fine.n_m == doctest::Approx(coarse.n_m).epsilon(1e-3));
}

TEST_CASE("mode splitting classifies weak and strong coupling") {
    LaserParams weak = fig1_laser();
    weak.D0 = 0.0;
    const WorkingPoint wp0 =
        derive_working_point(weak, fig1_mech(), DriveSpec::seeded_photons(1e5));
    const ModeSplitting low = mode_splitting(wp0, diffusion_coefficients(wp0));
    CHECK(low.peaks.size() == 1);
    CHECK_FALSE(low.strong_coupling);
    CHECK(low.peaks[0] == doctest::Approx(-1.0).epsilon(1e-3));

    LaserParams strong = fig1_laser();
    strong.D0 = 1.396 * strong.D_th();
    const WorkingPoint wp1 =
        derive_working_point(strong, fig1_mech(), DriveSpec::seeded_photons(1e5));
    const ModeSplitting split = mode_splitting(wp1, diffusion_coefficients(wp1));
    CHECK(split.peaks.size() == 2);
    CHECK(split.strong_coupling);
    REQUIRE(split.splitting.has_value());
    const double aG = wp1.a_bar * wp1.mech.G;
    CHECK(*split.splitting == doctest::Approx(2.0 * aG).epsilon(0.2));
}
