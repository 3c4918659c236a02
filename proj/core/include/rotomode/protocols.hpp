#ifndef ROTOMODE_PROTOCOLS_HPP
#define ROTOMODE_PROTOCOLS_HPP

#include <array>
#include <cstdint>

#include "rotomode/fock.hpp"
#include "rotomode/modes.hpp"
#include "rotomode/transforms.hpp"

namespace rotomode {

enum class SingletFlavor { Polarization, Orbital };

struct SingletSpec {
  SingletFlavor flavor = SingletFlavor::Polarization;
  double omega = 1.0;
  double Omega = 0.01;
  int m = 0;   // common m (polarization) or the +-m pair (orbital)
  int s = +1;  // family s parameter (polarization) or common s (orbital)
  TransverseIndex transverse = TransverseIndex::bessel(0.02);
};

// Two-photon antisymmetric state, one photon at site A and one at site B:
// (x+_A^dag x-_B^dag - x-_A^dag x+_B^dag)/sqrt(2) |vac>. The basis choice x
// is g, b or a for the polarization flavor and h, c or a for the orbital one;
// all choices give the same state up to a global sign.
FockState build_singlet(ModeBasis& basis, const SingletSpec& spec,
                        Family basis_choice, int n_max = 2);

// The two modes the singlet is written in for a given basis choice, at one
// site (used for projections).
ModePair singlet_pair(ModeBasis& basis, const SingletSpec& spec,
                      Family basis_choice, Site site);

struct ConditionalCorrelation {
  double probability = 0.0;
  double remote_sz = 0.0;
  double remote_lz = 0.0;
  double remote_energy = 0.0;
  // Signed rotation rate of the detected mode and of the remote photon's
  // conditional mode: polarization rate for the polarization flavor, pattern
  // rate for the orbital one. Zero when Omega = 0.
  double local_rotation_rate = 0.0;
  double remote_rotation_rate = 0.0;
};

ConditionalCorrelation conditional_correlations(const ModeBasis& basis,
                                                const FockState& singlet,
                                                const SingletSpec& spec,
                                                const SuperpositionMode& mode);

struct Bb84Config {
  double omega = 1.0;
  double Omega = 0.01;
  int m = 0;
  TransverseIndex transverse = TransverseIndex::bessel(0.02);
  long trials = 100000;
  std::uint64_t seed = 1;
  enum class Eavesdrop { None, InterceptResend } eavesdrop = Eavesdrop::None;
  int eve_basis = 0;  // 0: rotating pair {b+, b-}, 1: frequency pair
};

struct MubReport {
  std::array<std::array<double, 2>, 2> cross;  // |<basis1_i|basis2_j>|^2
  std::array<std::array<double, 2>, 2> within_basis1;
  std::array<std::array<double, 2>, 2> within_basis2;
};

// Overlap matrices of the two bases: the rotating pair {b+, b-} against the
// frequency eigenstates {a_{w+O,+}, a_{w-O,-}}.
MubReport mub_overlap_matrix(const Bb84Config& config);

struct Bb84Stats {
  long trials = 0;
  long sifted = 0;
  long errors = 0;
  double sifted_fraction = 0.0;
  double qber = 0.0;
};

// Seeded Monte-Carlo prepare-and-measure run with random basis choices and an
// optional fixed-basis intercept-resend eavesdropper.
Bb84Stats bb84_simulate(const Bb84Config& config);

struct ComplementarityReport {
  double frequency_threshold = 0.0;          // Omega
  double timing_threshold = 0.0;             // pi / (4 Omega)
  double basis2_frequency_separation = 0.0;  // 2 Omega
  double time_shift = 0.0;                   // pi / (2 Omega) maps b+ <-> b-
  // Max coefficient deviation of the delayed b+ from the phase-matched b-.
  double time_shift_residual = 0.0;
};

// The conjugate-variable structure of the two bases: frequency resolution
// better than Omega separates the frequency pair, timing better than
// pi/(4 Omega) separates the rotating pair.
ComplementarityReport measurement_complementarity(const Bb84Config& config);

}  // namespace rotomode

#endif  // ROTOMODE_PROTOCOLS_HPP
