#ifndef ROTOMODE_ATOM_HPP
#define ROTOMODE_ATOM_HPP

#include "rotomode/interference.hpp"
#include "rotomode/modes.hpp"

namespace rotomode {

struct AtomConfig {
  double omega_A = 0.0;        // two-photon Raman resonance frequency
  double gamma = 0.0;          // effective decay width, > 0
  double z_prime = 0.0;        // atom position relative to the focal plane
  double p0 = 0.0;             // non-absorption probability, in [0, 1)
  double motional_sigma = 0.0; // energy-space width of the motional state
};

// Absorption amplitude P(omega) = 1 / (omega - omega_A - i Gamma), up to a
// fixed constant.
Complex raman_amplitude(double omega, const AtomConfig& config);

struct StorageResult {
  Complex c_plus;               // amplitude of |+1>_A, absorbed branch
  Complex c_minus;              // amplitude of |-1>_A
  double motional_overlap = 1.0;       // <E - Omega | E + Omega>
  double entanglement_entropy = 0.0;   // base-2, internal reduced state
};

// Final internal-state amplitudes after a rotating-polarization wavepacket is
// absorbed: c± ∝ P(w0 ± Omega) F(w0 ± Omega) e^{± i Omega z'}, renormalized
// over the absorbed branch. Magnitudes are independent of z'.
StorageResult absorb(const SpectralAmplitude& spectrum, double Omega,
                     const AtomConfig& config);

// Overlap of motional states displaced by ±Omega in energy, modeled as
// Gaussians of width motional_sigma: exp(-Omega^2 / (2 sigma^2)).
double motional_overlap(double Omega, const AtomConfig& config);

// Base-2 von Neumann entropy of the 2x2 internal reduced density matrix with
// off-diagonal c+ conj(c-) * overlap.
double stored_entanglement(const StorageResult& result);

}  // namespace rotomode

#endif  // ROTOMODE_ATOM_HPP
