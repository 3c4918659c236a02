#include "rotomode/protocols.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "rotomode/field.hpp"

namespace rotomode {

namespace {

constexpr double kPi = std::numbers::pi;

FockState superpose(const FockState& u, Complex cu, const FockState& v,
                    Complex cv) {
  if (u.basis != v.basis || u.n_max != v.n_max)
    throw BasisMismatch("cannot superpose states over different registries");
  FockState out;
  out.basis = u.basis;
  out.n_max = u.n_max;
  for (const auto& [occ, amp] : u.amplitudes) out.amplitudes[occ] += cu * amp;
  for (const auto& [occ, amp] : v.amplitudes) out.amplitudes[occ] += cv * amp;
  return out;
}

}  // namespace

ModePair singlet_pair(ModeBasis& basis, const SingletSpec& spec,
                      Family basis_choice, Site site) {
  const bool polarization = spec.flavor == SingletFlavor::Polarization;
  switch (basis_choice) {
    case Family::g:
      if (!polarization) break;
      return build_g_pair(basis, spec.omega, spec.Omega, spec.m, spec.s,
                          spec.transverse, site);
    case Family::b:
      if (!polarization) break;
      return build_b_pair(basis, spec.omega, spec.Omega, spec.m, spec.s,
                          spec.transverse, site);
    case Family::h:
      if (polarization) break;
      return build_h_pair(basis, spec.omega, spec.Omega, spec.m, spec.s,
                          spec.transverse, site);
    case Family::c:
      if (polarization) break;
      return build_c_pair(basis, spec.omega, spec.Omega, spec.m, spec.s,
                          spec.transverse, site);
    case Family::a: {
      // The underlying frequency eigenmodes of the rotating pair.
      const double shift =
          polarization ? spec.Omega * spec.s : spec.Omega * spec.m;
      const int m_hi = spec.m;
      const int m_lo = polarization ? spec.m : -spec.m;
      const int s_hi = spec.s;
      const int s_lo = polarization ? -spec.s : spec.s;
      ModePair pair;
      pair.plus = build_single(basis, make_mode_label(spec.omega + shift, m_hi,
                                                      s_hi, spec.transverse,
                                                      site));
      pair.minus = build_single(basis, make_mode_label(spec.omega - shift, m_lo,
                                                       s_lo, spec.transverse,
                                                       site));
      return pair;
    }
    default:
      break;
  }
  throw BadArgument("basis choice does not match the singlet flavor");
}

FockState build_singlet(ModeBasis& basis, const SingletSpec& spec,
                        Family basis_choice, int n_max) {
  const ModePair at_a = singlet_pair(basis, spec, basis_choice, Site::A);
  const ModePair at_b = singlet_pair(basis, spec, basis_choice, Site::B);

  const FockState vac = FockState::vacuum(basis, n_max);
  const FockState plus_minus =
      create(create(vac, at_a.plus).state, at_b.minus).state;
  const FockState minus_plus =
      create(create(vac, at_a.minus).state, at_b.plus).state;

  const double r = 1.0 / std::sqrt(2.0);
  FockState singlet = superpose(plus_minus, r, minus_plus, -r);
  const double norm = singlet.norm();
  for (auto& [occ, amp] : singlet.amplitudes) amp /= norm;
  return singlet;
}

namespace {

double polarization_rate(const ModeBasis& basis, const SuperpositionMode& mode,
                         double Omega) {
  if (Omega == 0.0) return 0.0;
  double extent = 0.0;
  for (std::size_t k = 0; k < mode.coefficients.size(); ++k) {
    if (mode.coefficients[k] != Complex(0.0, 0.0)) {
      extent = default_extent(basis.label(k).transverse);
      break;
    }
  }
  const double period = 2.0 * kPi / std::abs(Omega);
  std::vector<double> times;
  for (int i = 0; i < 5; ++i) times.push_back(i * period / 8.0);
  return estimate_polarization_rotation(basis, mode, 0.3 * extent, 0.0, times);
}

double pattern_rate(const ModeBasis& basis, const SuperpositionMode& mode,
                    double Omega, int m) {
  if (Omega == 0.0 || m == 0) return 0.0;
  const double dt = kPi / (5.0 * std::abs(m) * std::abs(Omega));
  GridSpec grid;
  grid.n = 65;
  const FieldSnapshot s0 = snapshot(basis, mode, grid, 0.0);
  const FieldSnapshot s1 = snapshot(basis, mode, grid, dt);
  try {
    return estimate_pattern_rotation(s0, s1, IntensityComponent::Total);
  } catch (const NoAzimuthalStructure&) {
    // Single-frequency modes have stationary patterns.
    return 0.0;
  }
}

}  // namespace

ConditionalCorrelation conditional_correlations(const ModeBasis& basis,
                                                const FockState& singlet,
                                                const SingletSpec& spec,
                                                const SuperpositionMode& mode) {
  const ProjectionResult proj = project_mode(singlet, mode);
  const SuperpositionMode remote = as_single_photon_mode(proj.conditional);

  ConditionalCorrelation out;
  out.probability = proj.probability;
  out.remote_sz = expect(proj.conditional, ObservableKind::Sz);
  out.remote_lz = expect(proj.conditional, ObservableKind::Lz);
  out.remote_energy = expect(proj.conditional, ObservableKind::Energy);
  if (spec.flavor == SingletFlavor::Polarization) {
    out.local_rotation_rate = polarization_rate(basis, mode, spec.Omega);
    out.remote_rotation_rate = polarization_rate(basis, remote, spec.Omega);
  } else {
    out.local_rotation_rate = pattern_rate(basis, mode, spec.Omega, spec.m);
    out.remote_rotation_rate = pattern_rate(basis, remote, spec.Omega, spec.m);
  }
  return out;
}

namespace {

struct Bb84States {
  ModeBasis basis;
  std::vector<FockState> states;  // 4 states: basis*2 + bit
};

Bb84States prepare_bb84_states(const Bb84Config& config) {
  Bb84States prep;
  const ModePair rotating = build_b_pair(prep.basis, config.omega, config.Omega,
                                         config.m, +1, config.transverse);
  const SuperpositionMode hi = build_single(
      prep.basis, make_mode_label(config.omega + config.Omega, config.m, +1,
                                  config.transverse));
  const SuperpositionMode lo = build_single(
      prep.basis, make_mode_label(config.omega - config.Omega, config.m, -1,
                                  config.transverse));
  const FockState vac = FockState::vacuum(prep.basis, 1);
  prep.states.push_back(create(vac, rotating.plus).state);
  prep.states.push_back(create(vac, rotating.minus).state);
  prep.states.push_back(create(vac, hi).state);
  prep.states.push_back(create(vac, lo).state);
  return prep;
}

}  // namespace

MubReport mub_overlap_matrix(const Bb84Config& config) {
  const Bb84States prep = prepare_bb84_states(config);
  MubReport report;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      report.cross[i][j] = std::norm(inner(prep.states[i], prep.states[2 + j]));
      report.within_basis1[i][j] =
          std::norm(inner(prep.states[i], prep.states[j]));
      report.within_basis2[i][j] =
          std::norm(inner(prep.states[2 + i], prep.states[2 + j]));
    }
  }
  return report;
}

Bb84Stats bb84_simulate(const Bb84Config& config) {
  if (config.trials < 1) throw BadArgument("trials must be >= 1");
  if (config.eve_basis != 0 && config.eve_basis != 1)
    throw BadArgument("eavesdropper basis must be 0 or 1");
  const Bb84States prep = prepare_bb84_states(config);

  // Measurement table: prob[state][basis] = probability of outcome 0 when the
  // given prepared state is measured projectively in the given basis.
  double prob0[4][2];
  for (int st = 0; st < 4; ++st) {
    for (int ba = 0; ba < 2; ++ba) {
      prob0[st][ba] =
          std::norm(inner(prep.states[2 * ba], prep.states[st]));
    }
  }

  std::mt19937_64 rng(config.seed);
  const auto next_double = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  const auto next_bit = [&]() { return next_double() < 0.5 ? 0 : 1; };

  Bb84Stats stats;
  stats.trials = config.trials;
  for (long trial = 0; trial < config.trials; ++trial) {
    const int alice_basis = next_bit();
    const int alice_bit = next_bit();
    int state = 2 * alice_basis + alice_bit;

    if (config.eavesdrop == Bb84Config::Eavesdrop::InterceptResend) {
      const int eve_outcome =
          next_double() < prob0[state][config.eve_basis] ? 0 : 1;
      state = 2 * config.eve_basis + eve_outcome;
    }

    const int bob_basis = next_bit();
    const int bob_bit = next_double() < prob0[state][bob_basis] ? 0 : 1;

    if (bob_basis == alice_basis) {
      ++stats.sifted;
      if (bob_bit != alice_bit) ++stats.errors;
    }
  }
  stats.sifted_fraction =
      static_cast<double>(stats.sifted) / static_cast<double>(stats.trials);
  stats.qber = stats.sifted > 0 ? static_cast<double>(stats.errors) /
                                      static_cast<double>(stats.sifted)
                                : 0.0;
  return stats;
}

ComplementarityReport measurement_complementarity(const Bb84Config& config) {
  if (config.Omega <= 0.0)
    throw BadArgument("complementarity thresholds need Omega > 0");
  ModeBasis basis;
  const ModePair rotating = build_b_pair(basis, config.omega, config.Omega,
                                         config.m, +1, config.transverse);
  const double tau = kPi / (2.0 * config.Omega);
  const SuperpositionMode delayed = time_shifted(basis, rotating.plus, tau);
  const Complex phase =
      Complex(0.0, -1.0) * std::exp(Complex(0.0, -kPi * config.omega /
                                                     (2.0 * config.Omega)));
  double residual = 0.0;
  for (std::size_t k = 0; k < delayed.coefficients.size(); ++k) {
    residual = std::max(residual,
                        std::abs(delayed.coefficients[k] -
                                 phase * rotating.minus.coefficients[k]));
  }

  ComplementarityReport report;
  report.frequency_threshold = config.Omega;
  report.timing_threshold = kPi / (4.0 * config.Omega);
  report.basis2_frequency_separation = 2.0 * config.Omega;
  report.time_shift = tau;
  report.time_shift_residual = residual;
  return report;
}

}  // namespace rotomode
