#include "rotomode/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rotomode {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_shift(double omega, double shift) {
  if (omega - std::abs(shift) <= 0.0)
    throw ShiftExceedsFrequency("shift " + std::to_string(shift) +
                                " leaves no positive frequency at omega = " +
                                std::to_string(omega));
}

SuperpositionMode two_term_mode(ModeBasis& basis, const ModeLabel& first,
                                const ModeLabel& second, Complex c1, Complex c2,
                                double nominal_omega, Family family,
                                PairSign sign, double Omega, double Omega2) {
  const std::size_t i = basis.register_label(first);
  const std::size_t j = basis.register_label(second);
  SuperpositionMode mode;
  mode.coefficients.assign(basis.size(), Complex(0.0, 0.0));
  mode.coefficients[i] += c1;
  mode.coefficients[j] += c2;
  mode.nominal_omega = nominal_omega;
  mode.family = family;
  mode.sign = sign;
  mode.rotation_rate = Omega;
  mode.rotation_rate2 = Omega2;
  return mode;
}

ModePair equal_weight_pair(ModeBasis& basis, const ModeLabel& first,
                           const ModeLabel& second, double omega,
                           Family family, double Omega, double Omega2 = 0.0) {
  ModePair pair;
  pair.plus = two_term_mode(basis, first, second, kInvSqrt2, kInvSqrt2, omega,
                            family, PairSign::plus, Omega, Omega2);
  pair.minus = two_term_mode(basis, first, second, kInvSqrt2, -kInvSqrt2,
                             omega, family, PairSign::minus, Omega, Omega2);
  return pair;
}

ModePair theta_weighted_pair(ModeBasis& basis, const ModeLabel& first,
                             const ModeLabel& second, double omega,
                             double delta, Family family, double Omega) {
  const ThetaWeights th = theta_weights(omega, delta);
  ModePair pair;
  pair.plus = two_term_mode(basis, first, second, th.sin_theta, th.cos_theta,
                            omega, family, PairSign::plus, Omega, 0.0);
  pair.minus = two_term_mode(basis, first, second, th.cos_theta,
                             -th.sin_theta, omega, family, PairSign::minus,
                             Omega, 0.0);
  return pair;
}

}  // namespace

double SuperpositionMode::norm() const {
  double s = 0.0;
  for (const auto& c : coefficients) s += std::norm(c);
  return std::sqrt(s);
}

SuperpositionMode build_single(ModeBasis& basis, const ModeLabel& label) {
  const std::size_t i = basis.register_label(label);
  SuperpositionMode mode;
  mode.coefficients.assign(basis.size(), Complex(0.0, 0.0));
  mode.coefficients[i] = 1.0;
  mode.nominal_omega = label.omega;
  mode.family = Family::a;
  return mode;
}

SuperpositionMode from_coefficients(
    const ModeBasis& basis,
    const std::vector<std::pair<std::size_t, Complex>>& entries) {
  SuperpositionMode mode;
  mode.coefficients.assign(basis.size(), Complex(0.0, 0.0));
  for (const auto& [index, value] : entries) {
    if (index >= basis.size()) throw BadArgument("coefficient index out of range");
    mode.coefficients[index] += value;
  }
  return mode;
}

ModePair build_b_pair(ModeBasis& basis, double omega, double Omega, int m,
                      int s, const TransverseIndex& transverse, Site site) {
  require_shift(omega, Omega * s);
  const ModeLabel hi = make_mode_label(omega + Omega * s, m, s, transverse, site);
  const ModeLabel lo = make_mode_label(omega - Omega * s, m, -s, transverse, site);
  return equal_weight_pair(basis, hi, lo, omega, Family::b, Omega);
}

ModePair build_c_pair(ModeBasis& basis, double omega, double Omega, int m,
                      int s, const TransverseIndex& transverse, Site site) {
  if (m == 0)
    throw DegenerateOrbitalPair("c pair needs m != 0: both labels coincide");
  require_shift(omega, Omega * m);
  const ModeLabel hi = make_mode_label(omega + Omega * m, m, s, transverse, site);
  const ModeLabel lo = make_mode_label(omega - Omega * m, -m, s, transverse, site);
  return equal_weight_pair(basis, hi, lo, omega, Family::c, Omega);
}

ModePair build_d_pair(ModeBasis& basis, double omega, double Omega, int m,
                      int s, const TransverseIndex& transverse, Site site) {
  if (m + s == 0)
    throw DegeneratePair("d pair with m + s = 0 has vanishing frequency shift");
  require_shift(omega, Omega * (m + s));
  const ModeLabel hi =
      make_mode_label(omega + Omega * (m + s), m, s, transverse, site);
  const ModeLabel lo =
      make_mode_label(omega - Omega * (m + s), -m, -s, transverse, site);
  return equal_weight_pair(basis, hi, lo, omega, Family::d, Omega);
}

ModePair build_e_pair(ModeBasis& basis, double omega, double Omega,
                      double OmegaPrime, int m, int s,
                      const TransverseIndex& transverse, Site site) {
  const double shift = Omega * m + OmegaPrime * s;
  if (shift == 0.0)
    throw DegeneratePair("e pair with Omega*m + Omega'*s = 0 has vanishing shift");
  require_shift(omega, shift);
  const ModeLabel hi = make_mode_label(omega + shift, m, s, transverse, site);
  const ModeLabel lo = make_mode_label(omega - shift, -m, -s, transverse, site);
  ModePair pair = equal_weight_pair(basis, hi, lo, omega, Family::e, Omega,
                                    OmegaPrime);
  return pair;
}

ModePair build_f_pair(ModeBasis& basis, double omega, double Omega,
                      const TransverseIndex& transverse, Site site) {
  require_shift(omega, Omega);
  const ModeLabel hi = make_mode_label(omega + Omega, +1, -1, transverse, site);
  const ModeLabel lo = make_mode_label(omega - Omega, -1, +1, transverse, site);
  return equal_weight_pair(basis, hi, lo, omega, Family::f, Omega);
}

ModePair build_g_pair(ModeBasis& basis, double omega, double Omega, int m,
                      int s, const TransverseIndex& transverse, Site site) {
  require_shift(omega, Omega * s);
  const ModeLabel hi = make_mode_label(omega + Omega * s, m, s, transverse, site);
  const ModeLabel lo = make_mode_label(omega - Omega * s, m, -s, transverse, site);
  return theta_weighted_pair(basis, hi, lo, omega, Omega * s, Family::g, Omega);
}

ModePair build_h_pair(ModeBasis& basis, double omega, double Omega, int m,
                      int s, const TransverseIndex& transverse, Site site) {
  if (m == 0)
    throw DegenerateOrbitalPair("h pair needs m != 0: both labels coincide");
  require_shift(omega, Omega * m);
  const ModeLabel hi = make_mode_label(omega + Omega * m, m, s, transverse, site);
  const ModeLabel lo = make_mode_label(omega - Omega * m, -m, s, transverse, site);
  return theta_weighted_pair(basis, hi, lo, omega, Omega * m, Family::h, Omega);
}

ModeLabel inverter_map_polarization(const ModeLabel& label, double omega_plate) {
  const double Omega = 2.0 * omega_plate;
  const double out_omega = label.omega - label.s * Omega;
  if (out_omega <= 0.0)
    throw NonPositiveFrequency("inverted mode frequency " +
                               std::to_string(out_omega) + " is not positive");
  return make_mode_label(out_omega, label.m, -label.s, label.transverse,
                         label.site);
}

ModeLabel inverter_map_orbital(const ModeLabel& label, double omega_plate) {
  const double Omega = 2.0 * omega_plate;
  const double out_omega = label.omega - label.m * Omega;
  if (out_omega <= 0.0)
    throw NonPositiveFrequency("inverted mode frequency " +
                               std::to_string(out_omega) + " is not positive");
  return make_mode_label(out_omega, -label.m, label.s, label.transverse,
                         label.site);
}

namespace {

template <typename MapFn>
SuperpositionMode apply_termwise(ModeBasis& basis,
                                 const SuperpositionMode& mode,
                                 const MapFn& map_label) {
  std::vector<std::pair<std::size_t, Complex>> entries;
  for (std::size_t k = 0; k < mode.coefficients.size(); ++k) {
    const Complex c = mode.coefficients[k];
    if (c == Complex(0.0, 0.0)) continue;
    const ModeLabel mapped = map_label(basis.label(k));
    entries.emplace_back(basis.register_label(mapped), c);
  }
  SuperpositionMode out = from_coefficients(basis, entries);
  out.nominal_omega = mode.nominal_omega;
  out.family = mode.family;
  out.sign = mode.sign;
  out.rotation_rate = mode.rotation_rate;
  out.rotation_rate2 = mode.rotation_rate2;
  return out;
}

}  // namespace

SuperpositionMode apply_inverter_polarization(ModeBasis& basis,
                                              const SuperpositionMode& mode,
                                              double omega_plate) {
  return apply_termwise(basis, mode, [&](const ModeLabel& l) {
    return inverter_map_polarization(l, omega_plate);
  });
}

SuperpositionMode apply_inverter_orbital(ModeBasis& basis,
                                         const SuperpositionMode& mode,
                                         double omega_plate) {
  return apply_termwise(basis, mode, [&](const ModeLabel& l) {
    return inverter_map_orbital(l, omega_plate);
  });
}

Complex mode_overlap(const SuperpositionMode& u, const SuperpositionMode& v) {
  const std::size_t n = std::min(u.coefficients.size(), v.coefficients.size());
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    acc += std::conj(u.coefficients[k]) * v.coefficients[k];
  return acc;
}

Complex commutator_surrogate(const SuperpositionMode& u,
                             const SuperpositionMode& v) {
  const std::size_t n = std::min(u.coefficients.size(), v.coefficients.size());
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    acc += u.coefficients[k] * std::conj(v.coefficients[k]);
  return acc;
}

SuperpositionMode time_shifted(const ModeBasis& basis,
                               const SuperpositionMode& mode, double tau) {
  SuperpositionMode out = mode;
  for (std::size_t k = 0; k < out.coefficients.size(); ++k) {
    if (out.coefficients[k] == Complex(0.0, 0.0)) continue;
    const double omega_k = basis.label(k).omega;
    out.coefficients[k] *= std::exp(Complex(0.0, -omega_k * tau));
  }
  return out;
}

double verify_unitary(const UnitaryModeMap& map) {
  double residual = 0.0;
  for (std::size_t i = 0; i < map.rows.size(); ++i) {
    for (std::size_t j = 0; j < map.rows.size(); ++j) {
      const Complex gram = mode_overlap(map.rows[i], map.rows[j]);
      const Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      residual = std::max(residual, std::abs(gram - expected));
    }
  }
  return residual;
}

}  // namespace rotomode
