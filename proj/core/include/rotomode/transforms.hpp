#ifndef ROTOMODE_TRANSFORMS_HPP
#define ROTOMODE_TRANSFORMS_HPP

#include <utility>
#include <vector>

#include "rotomode/modes.hpp"

namespace rotomode {

// Rotating-mode families. 'a' is a plain monochromatic mode; b..f are the
// equal-weight rotating superpositions (zero average angular momentum);
// g and h are the theta-weighted pairs carrying +-Delta/omega angular
// momentum per photon.
enum class Family { a, b, c, d, e, f, g, h };
enum class PairSign { plus, minus };

// Unit-norm superposition of registered monochromatic modes. Coefficients are
// the single-photon state amplitudes: the creation operator of the mode is
// sum_k coeff_k a_k^dagger, its annihilation operator sum_k conj(coeff_k) a_k.
struct SuperpositionMode {
  std::vector<Complex> coefficients;  // dense, indexed by registry index
  double nominal_omega = 0.0;
  Family family = Family::a;
  PairSign sign = PairSign::plus;
  double rotation_rate = 0.0;   // Omega
  double rotation_rate2 = 0.0;  // Omega' (family e only)

  double norm() const;
};

struct ModePair {
  SuperpositionMode plus;
  SuperpositionMode minus;
};

// Single monochromatic mode as a (family 'a') superposition; registers the
// label if absent.
SuperpositionMode build_single(ModeBasis& basis, const ModeLabel& label);

SuperpositionMode from_coefficients(
    const ModeBasis& basis,
    const std::vector<std::pair<std::size_t, Complex>>& entries);

// Equal-weight families. Each builder auto-registers the two labels it needs
// and returns orthonormal (plus, minus) rows.
//
//   b+- = (a_{w+Os, m, s}  +- a_{w-Os, m, -s}) / sqrt(2)     rotating polarization
//   c+- = (a_{w+Om, m, s}  +- a_{w-Om, -m, s}) / sqrt(2)     rotating pattern, m != 0
//   d+- = (a_{w+O(m+s), m, s} +- a_{w-O(m+s), -m, -s}) / sqrt(2)
//   e+- = (a_{w+Om+O's, m, s} +- a_{w-Om-O's, -m, -s}) / sqrt(2)
//   f+- = (a_{w+O, +1, -1} +- a_{w-O, -1, +1}) / sqrt(2)
ModePair build_b_pair(ModeBasis& basis, double omega, double Omega, int m,
                      int s, const TransverseIndex& transverse,
                      Site site = Site::None);
ModePair build_c_pair(ModeBasis& basis, double omega, double Omega, int m,
                      int s, const TransverseIndex& transverse,
                      Site site = Site::None);
ModePair build_d_pair(ModeBasis& basis, double omega, double Omega, int m,
                      int s, const TransverseIndex& transverse,
                      Site site = Site::None);
ModePair build_e_pair(ModeBasis& basis, double omega, double Omega,
                      double OmegaPrime, int m, int s,
                      const TransverseIndex& transverse,
                      Site site = Site::None);
ModePair build_f_pair(ModeBasis& basis, double omega, double Omega,
                      const TransverseIndex& transverse,
                      Site site = Site::None);

// Theta-weighted families:
//   g+ = sin(th) a_{w+Os, m, s} + cos(th) a_{w-Os, m, -s}
//   g- = cos(th) a_{w+Os, m, s} - sin(th) a_{w-Os, m, -s}
// with theta_weights(omega, Omega*s); h is the orbital analog with
// theta_weights(omega, Omega*m) and labels (w+-Om, +-m, s), m != 0.
ModePair build_g_pair(ModeBasis& basis, double omega, double Omega, int m,
                      int s, const TransverseIndex& transverse,
                      Site site = Site::None);
ModePair build_h_pair(ModeBasis& basis, double omega, double Omega, int m,
                      int s, const TransverseIndex& transverse,
                      Site site = Site::None);

// Stroboscopic maps of rotating mode inverters. A half-wave plate spinning at
// omega_plate maps (w, m, s) -> (w - s*Omega, m, -s) with Omega = 2*omega_plate;
// the orbital converter maps (w, m, s) -> (w - m*Omega, -m, s).
ModeLabel inverter_map_polarization(const ModeLabel& label, double omega_plate);
ModeLabel inverter_map_orbital(const ModeLabel& label, double omega_plate);

// Termwise application of the inverter maps to a superposition; mapped labels
// are auto-registered.
SuperpositionMode apply_inverter_polarization(ModeBasis& basis,
                                              const SuperpositionMode& mode,
                                              double omega_plate);
SuperpositionMode apply_inverter_orbital(ModeBasis& basis,
                                         const SuperpositionMode& mode,
                                         double omega_plate);

// <u|v> = sum_k conj(u_k) v_k.
Complex mode_overlap(const SuperpositionMode& u, const SuperpositionMode& v);

// Finite-registry surrogate of the equal-time commutator [u, v^dagger],
// evaluated as sum_k u_k conj(v_k); equals delta_{uv} for orthonormal modes.
Complex commutator_surrogate(const SuperpositionMode& u,
                             const SuperpositionMode& v);

// Free evolution by tau: each coefficient picks up exp(-i omega_k tau).
SuperpositionMode time_shifted(const ModeBasis& basis,
                               const SuperpositionMode& mode, double tau);

struct UnitaryModeMap {
  std::vector<SuperpositionMode> rows;
};

// Max |Gram - I| entry over the rows.
double verify_unitary(const UnitaryModeMap& map);

}  // namespace rotomode

#endif  // ROTOMODE_TRANSFORMS_HPP
