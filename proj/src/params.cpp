#include "gainomech/params.hpp"

namespace gainomech {

void LaserParams::validate() const {
    if (!(gamma_perp > 0.0)) throw ValidationError("gamma_perp > 0");
    if (!(gamma_par > 0.0)) throw ValidationError("gamma_par > 0");
    if (!(kappa > 0.0)) throw ValidationError("kappa > 0");
    if (!(g >= 0.0)) throw ValidationError("g >= 0");
    if (!(N_g > 0.0)) throw ValidationError("N_g > 0");
    if (!(n_bb >= 0.0)) throw ValidationError("n_bb >= 0");
    if (!(std::abs(D0) <= N_g)) throw ValidationError("|D0| <= N_g");
}

void MechanicsParams::validate() const {
    if (!(omega_m > 0.0)) throw ValidationError("omega_m > 0");
    if (!(Gamma_m > 0.0)) throw ValidationError("Gamma_m > 0");
    if (!(n_th >= 0.0)) throw ValidationError("n_th >= 0");
    if (!(G >= 0.0)) throw ValidationError("G >= 0");
}

void DriveSpec::validate() const {
    if (kind == DriveKind::Unseeded) {
        if (omega_s || n_target)
            throw ValidationError("unseeded drive takes neither omega_s nor n_target");
        return;
    }
    if (omega_s.has_value() == n_target.has_value())
        throw ValidationError("seeded drive takes exactly one of omega_s, n_target");
    if (omega_s && !(*omega_s >= 0.0)) throw ValidationError("omega_s >= 0");
    if (n_target && !(*n_target > 0.0)) throw ValidationError("n_target > 0");
}

} // namespace gainomech
