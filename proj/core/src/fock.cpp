#include "rotomode/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rotomode {

namespace {

constexpr double kNormTolerance = 1e-8;
constexpr double kZeroBranch = 1e-15;

// Returns a copy of occ with the count at `index` changed by `delta`
// (delta = +1 or -1); the prior count is written to `count_before`.
Occupation with_count_changed(const Occupation& occ, std::uint32_t index,
                              int delta, std::uint32_t* count_before) {
  Occupation out;
  out.reserve(occ.size() + 1);
  *count_before = 0;
  bool placed = false;
  for (const auto& [idx, count] : occ) {
    if (idx == index) {
      *count_before = count;
      const int next = static_cast<int>(count) + delta;
      if (next > 0) out.emplace_back(idx, static_cast<std::uint32_t>(next));
      placed = true;
    } else {
      if (!placed && idx > index && delta > 0) {
        out.emplace_back(index, 1u);
        placed = true;
      }
      out.emplace_back(idx, count);
    }
  }
  if (!placed && delta > 0) out.emplace_back(index, 1u);
  return out;
}

void require_same_space(const FockState& a, const FockState& b) {
  if (a.basis != b.basis || a.n_max != b.n_max)
    throw BasisMismatch("Fock states live over different registries or n_max");
}

}  // namespace

int total_photons(const Occupation& occ) {
  int n = 0;
  for (const auto& [idx, count] : occ) n += static_cast<int>(count);
  return n;
}

FockState FockState::vacuum(const ModeBasis& basis, int n_max) {
  if (n_max < 1) throw BadArgument("n_max must be >= 1");
  FockState st;
  st.basis = &basis;
  st.n_max = n_max;
  st.amplitudes[Occupation{}] = Complex(1.0, 0.0);
  return st;
}

double FockState::norm() const {
  double s = 0.0;
  for (const auto& [occ, amp] : amplitudes) s += std::norm(amp);
  return std::sqrt(s);
}

double mode_eigenvalue(const ModeLabel& label, ObservableKind kind) {
  switch (kind) {
    case ObservableKind::Energy: return label.omega;
    case ObservableKind::Sz: return static_cast<double>(label.s);
    case ObservableKind::Lz: return static_cast<double>(label.m);
    case ObservableKind::Jz: return static_cast<double>(label.m + label.s);
    case ObservableKind::Number: return 1.0;
  }
  throw BadArgument("unknown observable kind");
}

CreationResult create(const FockState& state, const SuperpositionMode& mode) {
  if (state.basis == nullptr) throw BadArgument("uninitialized Fock state");
  FockState out;
  out.basis = state.basis;
  out.n_max = state.n_max;
  for (const auto& [occ, amp] : state.amplitudes) {
    if (amp == Complex(0.0, 0.0)) continue;
    if (total_photons(occ) + 1 > state.n_max)
      throw TruncationOverflow("creation would exceed n_max = " +
                               std::to_string(state.n_max));
    for (std::size_t k = 0; k < mode.coefficients.size(); ++k) {
      const Complex c = mode.coefficients[k];
      if (c == Complex(0.0, 0.0)) continue;
      std::uint32_t n_before = 0;
      Occupation next = with_count_changed(occ, static_cast<std::uint32_t>(k),
                                           +1, &n_before);
      out.amplitudes[std::move(next)] +=
          amp * c * std::sqrt(static_cast<double>(n_before) + 1.0);
    }
  }
  const double norm_before = out.norm();
  if (norm_before > 0.0) {
    for (auto& [occ, amp] : out.amplitudes) amp /= norm_before;
  }
  return CreationResult{std::move(out), norm_before};
}

AnnihilationResult annihilate(const FockState& state,
                              const SuperpositionMode& mode) {
  if (state.basis == nullptr) throw BadArgument("uninitialized Fock state");
  FockState out;
  out.basis = state.basis;
  out.n_max = state.n_max;
  for (const auto& [occ, amp] : state.amplitudes) {
    if (amp == Complex(0.0, 0.0)) continue;
    for (const auto& [idx, count] : occ) {
      if (idx >= mode.coefficients.size()) continue;
      const Complex c = mode.coefficients[idx];
      if (c == Complex(0.0, 0.0)) continue;
      std::uint32_t n_before = 0;
      Occupation next = with_count_changed(occ, idx, -1, &n_before);
      out.amplitudes[std::move(next)] +=
          amp * std::conj(c) * std::sqrt(static_cast<double>(n_before));
    }
  }
  const double norm = out.norm();
  return AnnihilationResult{std::move(out), norm};
}

double expect(const FockState& state, const ObservableSpec& observable) {
  if (state.basis == nullptr) throw BadArgument("uninitialized Fock state");
  const double n2 = state.norm() * state.norm();
  if (std::abs(n2 - 1.0) > kNormTolerance)
    throw UnnormalizedState("expect requires a normalized state, |psi|^2 = " +
                            std::to_string(n2));
  double acc = 0.0;
  for (const auto& [occ, amp] : state.amplitudes) {
    const double w = std::norm(amp);
    if (w == 0.0) continue;
    double value = 0.0;
    for (const auto& [idx, count] : occ)
      value += count * mode_eigenvalue(state.basis->label(idx), observable.kind);
    acc += w * value;
  }
  return acc;
}

double expect(const FockState& state, ObservableKind kind) {
  return expect(state, ObservableSpec{kind});
}

Complex inner(const FockState& a, const FockState& b) {
  require_same_space(a, b);
  Complex acc(0.0, 0.0);
  for (const auto& [occ, amp] : a.amplitudes) {
    auto it = b.amplitudes.find(occ);
    if (it == b.amplitudes.end()) continue;
    acc += std::conj(amp) * it->second;
  }
  return acc;
}

ProjectionResult project_mode(const FockState& state,
                              const SuperpositionMode& mode) {
  AnnihilationResult dropped = annihilate(state, mode);
  const double probability = dropped.norm * dropped.norm;
  if (probability < kZeroBranch)
    throw ZeroProbabilityBranch(
        "detection probability vanishes; conditional state undefined");
  for (auto& [occ, amp] : dropped.state.amplitudes) amp /= dropped.norm;
  return ProjectionResult{probability, std::move(dropped.state)};
}

SuperpositionMode as_single_photon_mode(const FockState& state) {
  if (state.basis == nullptr) throw BadArgument("uninitialized Fock state");
  SuperpositionMode mode;
  mode.coefficients.assign(state.basis->size(), Complex(0.0, 0.0));
  for (const auto& [occ, amp] : state.amplitudes) {
    if (total_photons(occ) == 1) {
      mode.coefficients[occ.front().first] = amp;
    } else if (std::abs(amp) > 1e-10) {
      throw BadArgument("state is not a pure single-photon state");
    }
  }
  return mode;
}

}  // namespace rotomode
