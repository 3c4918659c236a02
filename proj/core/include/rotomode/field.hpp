#ifndef ROTOMODE_FIELD_HPP
#define ROTOMODE_FIELD_HPP

#include <vector>

#include "rotomode/modes.hpp"
#include "rotomode/transforms.hpp"

namespace rotomode {

// Which single-mode weight multiplies the transverse profile: sqrt(omega) for
// the electric field, -i/sqrt(omega) for the Coulomb-gauge vector potential.
enum class FieldKind { Electric, VectorPotential };

enum class IntensityComponent { X, Y, Total };

struct FieldOptions {
  FieldKind kind = FieldKind::Electric;
  // Global field normalization constant multiplying every mode weight; only
  // relative amplitudes enter any result, so 1 is the working default.
  double scale = 1.0;
  // Disc radius over which Bessel profiles are normalized; <= 0 picks 4/k_T.
  double bessel_norm_radius = 0.0;
};

// Complex transverse field (E_x, E_y) at one point.
struct Jones {
  Complex x{0.0, 0.0};
  Complex y{0.0, 0.0};
};

// Conversion between the Cartesian components and the amplitudes of the
// circular unit vectors e_± = (e_x ± i e_y)/sqrt(2); the two functions are
// exact inverses of each other.
Jones from_helicity(Complex plus, Complex minus);
struct HelicityAmplitudes {
  Complex plus;
  Complex minus;
};
HelicityAmplitudes to_helicity(const Jones& field);

double default_bessel_norm_radius(double kT);

// Normalization constant of the transverse profile, 1/sqrt of the profile's
// squared integral over the transverse plane (a finite disc for Bessel modes,
// which are not square-integrable over the whole plane).
double transverse_norm_constant(const TransverseIndex& transverse, int m,
                                const FieldOptions& options = {});

// Scalar transverse profile F(rho, z) of a mode, normalized as above; depends
// on |m| only. Bessel profiles carry exp(i k_z (z - z0)) and may be evaluated
// in any plane; LG profiles are defined in the reference plane only.
Complex mode_function(const ModeLabel& label, double rho, double z,
                      double z0 = 0.0, const FieldOptions& options = {});

// Single-photon detection amplitude <vac| E(x,y,z,t) |1_mode>, as a Jones
// vector: sum_k coeff_k * w(omega_k) * exp(i m_k phi) * exp(-i omega_k t)
// * F_k(rho, z) * e_{s_k} with e_± = (e_x ± i e_y)/sqrt(2).
Jones detection_amplitude(const ModeBasis& basis, const SuperpositionMode& mode,
                          double x, double y, double z, double t,
                          const FieldOptions& options = {});

struct GridSpec {
  int n = 129;          // points per axis
  double extent = 0.0;  // half-width; <= 0 picks 4/k_T (Bessel) or 4w (LG)
};

struct EllipseAngles {
  double psi;  // orientation in (-pi/2, pi/2]
  double chi;  // ellipticity in [-pi/4, pi/4]; 0 iff linear
};

// Orientation and ellipticity of the polarization ellipse from the Stokes
// parameters of (E_x, E_y).
EllipseAngles polarization_ellipse(Complex ex, Complex ey);

struct FieldSnapshot {
  GridSpec grid;
  double t = 0.0;
  double z = 0.0;
  // Row-major arrays of size n*n, index iy*n + ix.
  std::vector<Complex> ex, ey;
  std::vector<double> intensity;  // |E_x|^2 + |E_y|^2
  std::vector<double> psi, chi;   // 0 where the field vanishes

  double coordinate(int i) const;  // i-th grid coordinate along either axis
  double component_intensity(std::size_t index, IntensityComponent c) const;
};

double default_extent(const TransverseIndex& transverse);

FieldSnapshot snapshot(const ModeBasis& basis, const SuperpositionMode& mode,
                       const GridSpec& grid, double t,
                       const FieldOptions& options = {});
FieldSnapshot snapshot(const ModeBasis& basis, const SuperpositionMode& mode,
                       const GridSpec& grid, double t, double z,
                       const FieldOptions& options = {});

// Signed rotation rate of the transverse intensity pattern between two
// snapshots: azimuthal cross-correlation (256 bins, quadratic sub-bin
// interpolation), returns delta_phi / dt. Requires azimuthal structure and
// |rate * dt| below half the pattern's angular period.
double estimate_pattern_rotation(const FieldSnapshot& first,
                                 const FieldSnapshot& second,
                                 IntensityComponent component);

// Signed rotation rate of the local polarization ellipse at a fixed point:
// least-squares slope of the unwrapped orientation over the sample times.
double estimate_polarization_rotation(const ModeBasis& basis,
                                      const SuperpositionMode& mode, double x,
                                      double y,
                                      const std::vector<double>& times,
                                      const FieldOptions& options = {});

// Distinguishes a mode seen from a rotating frame,
// exp(i Omega (m+s) t) a_{w,m,s}(t), from the frequency-shifted mode
// a_{w-Omega(m+s),m,s}(t): the two phases agree at every t, but the mode
// functions differ unless the labels coincide.
struct FramePhaseCheck {
  Complex phase_frame;
  Complex phase_shifted;
  bool mode_functions_equal;
};

FramePhaseCheck frame_rotation_phase_check(const ModeLabel& label, double Omega,
                                           double t);

}  // namespace rotomode

#endif  // ROTOMODE_FIELD_HPP
