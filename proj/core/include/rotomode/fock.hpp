#ifndef ROTOMODE_FOCK_HPP
#define ROTOMODE_FOCK_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rotomode/modes.hpp"
#include "rotomode/transforms.hpp"

namespace rotomode {

// Occupation configuration: (registry index, photon count) pairs, sorted by
// index, zero counts omitted. The empty configuration is the vacuum.
using Occupation = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

int total_photons(const Occupation& occ);

// State in the truncated Fock space over a mode registry: a sparse map from
// occupation configurations (total photon number <= n_max) to amplitudes.
// std::map keeps a fixed iteration order so reductions are bit-stable.
struct FockState {
  const ModeBasis* basis = nullptr;
  int n_max = 2;
  std::map<Occupation, Complex> amplitudes;

  static FockState vacuum(const ModeBasis& basis, int n_max = 2);
  double norm() const;
};

enum class ObservableKind { Energy, Sz, Lz, Jz, Number };

// Diagonal one-body observable: eigenvalue per photon in mode k is omega_k
// (Energy), s_k (Sz), m_k (Lz), m_k + s_k (Jz), or 1 (Number).
struct ObservableSpec {
  ObservableKind kind = ObservableKind::Energy;
};

double mode_eigenvalue(const ModeLabel& label, ObservableKind kind);

struct CreationResult {
  FockState state;     // renormalized
  double norm_before;  // norm prior to renormalization
};

// Applies sum_k coeff_k a_k^dagger with bosonic sqrt(n+1) factors.
CreationResult create(const FockState& state, const SuperpositionMode& mode);

struct AnnihilationResult {
  FockState state;  // NOT normalized; may be the zero vector
  double norm;
};

// Applies sum_k conj(coeff_k) a_k with bosonic sqrt(n) factors.
AnnihilationResult annihilate(const FockState& state,
                              const SuperpositionMode& mode);

double expect(const FockState& state, const ObservableSpec& observable);
double expect(const FockState& state, ObservableKind kind);

// <a|b>, conjugate in the first argument.
Complex inner(const FockState& a, const FockState& b);

struct ProjectionResult {
  double probability;
  FockState conditional;
};

// Destructive single-photon detection in `mode`: probability is the squared
// norm of the annihilated state, the conditional state its normalization.
ProjectionResult project_mode(const FockState& state,
                              const SuperpositionMode& mode);

// Reads a pure single-photon state back as a superposition mode.
SuperpositionMode as_single_photon_mode(const FockState& state);

}  // namespace rotomode

#endif  // ROTOMODE_FOCK_HPP
