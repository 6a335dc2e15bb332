#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gainomech/cooling.hpp"
#include "gainomech/io.hpp"
#include "gainomech/phonon.hpp"
#include "gainomech/version.hpp"

namespace py = pybind11;
using namespace gainomech;

PYBIND11_MODULE(gainomech, m) {
    m.doc() = "gain-assisted optomechanical cooling calculator";
    m.attr("__version__") = version;

    static py::exception<Error> exc(m, "GainomechError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    py::enum_<Model>(m, "Model")
        .value("Passive", Model::Passive)
        .value("UnseededAdiabatic", Model::UnseededAdiabatic)
        .value("Seeded", Model::Seeded)
        .value("FullPolarization", Model::FullPolarization)
        .value("SeededWithMechanics", Model::SeededWithMechanics);

    py::enum_<Method>(m, "Method")
        .value("Matrix", Method::Matrix)
        .value("ClosedForm", Method::ClosedForm);

    py::class_<LaserParams>(m, "LaserParams")
        .def(py::init([](double gamma_perp, double gamma_par, double kappa, double g,
                         double N_g, double D0, double delta_La, double delta_Lr,
                         double n_bb) {
                 LaserParams p{gamma_perp, gamma_par, kappa, g, N_g, D0, delta_La,
                               delta_Lr, n_bb};
                 p.validate();
                 return p;
             }),
             py::arg("gamma_perp"), py::arg("gamma_par"), py::arg("kappa"), py::arg("g"),
             py::arg("N_g"), py::arg("D0"), py::arg("delta_La"), py::arg("delta_Lr"),
             py::arg("n_bb") = 0.0)
        .def_readwrite("gamma_perp", &LaserParams::gamma_perp)
        .def_readwrite("gamma_par", &LaserParams::gamma_par)
        .def_readwrite("kappa", &LaserParams::kappa)
        .def_readwrite("g", &LaserParams::g)
        .def_readwrite("N_g", &LaserParams::N_g)
        .def_readwrite("D0", &LaserParams::D0)
        .def_readwrite("delta_La", &LaserParams::delta_La)
        .def_readwrite("delta_Lr", &LaserParams::delta_Lr)
        .def_readwrite("n_bb", &LaserParams::n_bb)
        .def("stimulated_rate", &LaserParams::stimulated_rate)
        .def("n_sat", &LaserParams::n_sat)
        .def("D_th", &LaserParams::D_th);

    py::class_<MechanicsParams>(m, "MechanicsParams")
        .def(py::init([](double omega_m, double Gamma_m, double n_th, double G) {
                 MechanicsParams p{omega_m, Gamma_m, n_th, G};
                 p.validate();
                 return p;
             }),
             py::arg("omega_m"), py::arg("Gamma_m"), py::arg("n_th") = 0.0,
             py::arg("G") = 0.0)
        .def_readwrite("omega_m", &MechanicsParams::omega_m)
        .def_readwrite("Gamma_m", &MechanicsParams::Gamma_m)
        .def_readwrite("n_th", &MechanicsParams::n_th)
        .def_readwrite("G", &MechanicsParams::G);

    py::class_<DriveSpec>(m, "DriveSpec")
        .def_static("unseeded", &DriveSpec::unseeded)
        .def_static("seeded_amplitude", &DriveSpec::seeded_amplitude, py::arg("omega_s"))
        .def_static("seeded_photons", &DriveSpec::seeded_photons, py::arg("n_target"));

    py::class_<WorkingPoint>(m, "WorkingPoint")
        .def_readonly("W", &WorkingPoint::W)
        .def_readonly("n_sat", &WorkingPoint::n_sat)
        .def_readonly("D_th", &WorkingPoint::D_th)
        .def_readonly("xi", &WorkingPoint::xi)
        .def_readonly("D_bar", &WorkingPoint::D_bar)
        .def_readonly("n_bar", &WorkingPoint::n_bar)
        .def_readonly("a_bar", &WorkingPoint::a_bar)
        .def_readonly("a_phase", &WorkingPoint::a_phase)
        .def_readonly("omega_s", &WorkingPoint::omega_s)
        .def_readonly("kappa_tilde", &WorkingPoint::kappa_tilde)
        .def_readonly("delta_tilde", &WorkingPoint::delta_tilde)
        .def_readonly("omega_plus", &WorkingPoint::omega_plus)
        .def_readonly("omega_minus", &WorkingPoint::omega_minus);

    py::class_<DiffusionSet>(m, "DiffusionSet")
        .def_readonly("d_aad", &DiffusionSet::d_aad)
        .def_readonly("d_ada", &DiffusionSet::d_ada)
        .def_readonly("d_pp", &DiffusionSet::d_pp)
        .def_readonly("d_apar", &DiffusionSet::d_apar)
        .def_readonly("d_adpar", &DiffusionSet::d_adpar)
        .def_readonly("d_bdb", &DiffusionSet::d_bdb)
        .def_readonly("d_bbd", &DiffusionSet::d_bbd)
        .def_readonly("d_se_aad", &DiffusionSet::d_se_aad)
        .def_readonly("d_se_ada", &DiffusionSet::d_se_ada);

    py::class_<CoolingResult>(m, "CoolingResult")
        .def_readonly("gamma_opt", &CoolingResult::gamma_opt)
        .def_readonly("n_opt", &CoolingResult::n_opt)
        .def_readonly("n_m", &CoolingResult::n_m)
        .def_readonly("optical_part", &CoolingResult::optical_part)
        .def_readonly("thermal_part", &CoolingResult::thermal_part)
        .def_readonly("t_opt", &CoolingResult::t_opt)
        .def_readonly("vanishing_gamma", &CoolingResult::vanishing_gamma);

    py::class_<PumpOptimum>(m, "PumpOptimum")
        .def_readonly("D0", &PumpOptimum::D0)
        .def_readonly("kappa_tilde", &PumpOptimum::kappa_tilde)
        .def_readonly("n_m", &PumpOptimum::n_m)
        .def_readonly("kappa_tilde_pred", &PumpOptimum::kappa_tilde_pred)
        .def_readonly("n_m_pred", &PumpOptimum::n_m_pred)
        .def_readonly("at_bound", &PumpOptimum::at_bound);

    py::class_<PhononIntegral>(m, "PhononIntegral")
        .def_readonly("n_m", &PhononIntegral::n_m)
        .def_readonly("error_estimate", &PhononIntegral::error_estimate);

    py::class_<ModeSplitting>(m, "ModeSplitting")
        .def_readonly("peaks", &ModeSplitting::peaks)
        .def_readonly("splitting", &ModeSplitting::splitting)
        .def_readonly("strong_coupling", &ModeSplitting::strong_coupling);

    m.def("derive_working_point", &derive_working_point, py::arg("laser"), py::arg("mech"),
          py::arg("drive"), py::arg("root_index") = std::nullopt);
    m.def("unseeded_steady_state", &unseeded_steady_state, py::arg("laser"));
    m.def(
        "seeded_photon_number",
        [](const LaserParams& laser, double omega_s) {
            const SeededSolution sol = seeded_photon_number(laser, omega_s);
            std::vector<std::pair<double, std::complex<double>>> roots;
            for (const auto& r : sol.roots) roots.emplace_back(r.n_bar, r.a_bar);
            return py::make_tuple(roots, sol.multivalued);
        },
        py::arg("laser"), py::arg("omega_s"));
    m.def("seeding_amplitude", &seeding_amplitude, py::arg("laser"), py::arg("n_target"));
    m.def("diffusion_coefficients", &diffusion_coefficients, py::arg("wp"));
    m.def("snn", &snn, py::arg("model"), py::arg("wp"), py::arg("noise"), py::arg("omega"),
          py::arg("method") = Method::Matrix, py::arg("include_fpar") = true);
    m.def("gamma_opt", &gamma_opt, py::arg("model"), py::arg("wp"), py::arg("noise"),
          py::arg("omega_m"), py::arg("method") = Method::Matrix,
          py::arg("include_fpar") = true);
    m.def("phonon_number_rate", &phonon_number_rate, py::arg("model"), py::arg("wp"),
          py::arg("noise"), py::arg("method") = Method::Matrix,
          py::arg("include_fpar") = true);
    m.def("optimize_pump", &optimize_pump, py::arg("laser"), py::arg("mech"),
          py::arg("n_target"), py::arg("D0_lo"), py::arg("D0_hi"));
    m.def("sbb", &sbb, py::arg("wp"), py::arg("noise"), py::arg("omega"),
          py::arg("include_fpar") = true);
    m.def("integrate_phonon_number", &integrate_phonon_number, py::arg("wp"), py::arg("noise"),
          py::arg("rtol") = 1e-3, py::arg("points_per_panel") = 48, py::arg("span") = 20.0);
    m.def("mode_splitting", &mode_splitting, py::arg("wp"), py::arg("noise"),
          py::arg("grid_points") = 4001);
}
