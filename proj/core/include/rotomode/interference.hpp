#ifndef ROTOMODE_INTERFERENCE_HPP
#define ROTOMODE_INTERFERENCE_HPP

#include <functional>
#include <utility>
#include <vector>

#include "rotomode/field.hpp"
#include "rotomode/modes.hpp"
#include "rotomode/transforms.hpp"

namespace rotomode {

// Normalized spectral envelope F(omega) of a wavepacket together with its
// time-domain transform F~(t) = (2 pi)^{-1/2} int F(omega) e^{-i omega t}.
struct SpectralAmplitude {
  enum class Shape { Gaussian, Sampled };

  Shape shape = Shape::Gaussian;
  double omega0 = 0.0;  // Gaussian center
  double sigma = 0.0;   // Gaussian rms width of |F|^2
  std::vector<std::pair<double, Complex>> samples;  // ascending in omega

  Complex value(double omega) const;
  Complex time_envelope(double t) const;
  double center() const;

  double spectral_norm() const;  // int |F|^2 domega, by quadrature
  double temporal_norm() const;  // int |F~|^2 dt, by quadrature
  double time_fwhm() const;      // FWHM of |F~(t)|^2
};

// Gaussian spectrum with |F|^2 a normalized Gaussian of rms width sigma; the
// time envelope is Gaussian with rms width 1/(2 sigma). Requires
// omega0 - 5 sigma > 0 so the support stays at positive frequencies.
SpectralAmplitude make_gaussian_spectrum(double omega0, double sigma);

// Sampled spectrum on an ascending grid; rescaled to unit norm (trapezoid).
SpectralAmplitude make_sampled_spectrum(
    std::vector<std::pair<double, Complex>> samples);

// F~(t) times the rotating linear polarization (cos Omega t, sin Omega t).
Jones wavepacket_amplitude(const SpectralAmplitude& spectrum, double Omega,
                           double t);

// |int F~*(t) F~(t + tau) dt|^2, in [0, 1].
double envelope_overlap(const SpectralAmplitude& spectrum, double tau);

// True when the packet is long enough to show a full polarization turn:
// FWHM of |F~|^2 exceeds 2 pi / Omega.
bool rotation_resolvable(const SpectralAmplitude& spectrum, double Omega);

struct HomResult {
  double tau = 0.0;
  double modulation = 0.0;            // cos^2(Omega tau)
  double polarization_overlap = 0.0;  // sin^4 + cos^4 + 2 sin^2 cos^2 cos(2 Omega tau)
  double envelope_overlap = 1.0;
  double coincidence = 0.0;  // (1 - modulation * envelope_overlap) / 2
};

// Closed-form Hong-Ou-Mandel coincidence for two rotating-polarization
// photons delayed by tau. The polarization-overlap value is reported
// alongside; it coincides with the modulation factor only at theta = pi/4.
HomResult hom_analytic(double Omega, double theta, double tau,
                       double envelope_overlap = 1.0);

using PairBuilder = std::function<ModePair(ModeBasis&, Site)>;

// Brute-force two-photon beam-splitter computation in the truncated Fock
// space: one photon in the pair's '+' mode at port A, one in the tau-delayed
// '+' mode at port B, mixed on a symmetric 50/50 splitter applied per
// monochromatic mode; returns the probability of one photon per output port.
double hom_bruteforce(const PairBuilder& builder, double tau);

// Convenience wrapper for the rotating-polarization pair.
double hom_bruteforce_b(double omega, double Omega, int m, int s, double tau);

}  // namespace rotomode

#endif  // ROTOMODE_INTERFERENCE_HPP
