#include "rotomode/modes.hpp"

#include <cmath>
#include <string>

namespace rotomode {

TransverseIndex TransverseIndex::bessel(double kT) {
  if (kT <= 0.0) throw BadArgument("Bessel transverse wavenumber must be > 0");
  TransverseIndex t;
  t.family = TransverseFamily::Bessel;
  t.kT = kT;
  return t;
}

TransverseIndex TransverseIndex::laguerre_gauss(int nT, double waist) {
  if (nT < 0) throw BadArgument("LG radial node count must be >= 0");
  if (waist <= 0.0) throw BadArgument("LG beam waist must be > 0");
  TransverseIndex t;
  t.family = TransverseFamily::LaguerreGauss;
  t.nT = nT;
  t.waist = waist;
  return t;
}

namespace {
auto transverse_key(const TransverseIndex& t) {
  return std::make_tuple(static_cast<int>(t.family), t.kT, t.nT, t.waist);
}
auto label_key(const ModeLabel& l) {
  return std::make_tuple(l.omega, l.m, l.s, transverse_key(l.transverse),
                         static_cast<int>(l.site));
}
}  // namespace

bool TransverseIndex::operator==(const TransverseIndex& other) const {
  return transverse_key(*this) == transverse_key(other);
}
bool TransverseIndex::operator<(const TransverseIndex& other) const {
  return transverse_key(*this) < transverse_key(other);
}

bool ModeLabel::operator==(const ModeLabel& other) const {
  return label_key(*this) == label_key(other);
}
bool ModeLabel::operator<(const ModeLabel& other) const {
  return label_key(*this) < label_key(other);
}

ModeLabel make_mode_label(double omega, int m, int s,
                          const TransverseIndex& transverse, Site site,
                          double eps_par) {
  if (omega <= 0.0)
    throw NonPositiveFrequency("mode frequency must be > 0, got " +
                               std::to_string(omega));
  if (s != +1 && s != -1)
    throw BadHelicity("helicity must be +1 or -1, got " + std::to_string(s));
  if (transverse.family == TransverseFamily::Bessel) {
    if (transverse.kT <= 0.0)
      throw BadArgument("Bessel transverse wavenumber must be > 0");
    if (transverse.kT > eps_par * omega)
      throw ParaxialityViolated("k_T = " + std::to_string(transverse.kT) +
                                " exceeds " + std::to_string(eps_par) +
                                " * omega = " + std::to_string(eps_par * omega));
  } else {
    if (transverse.nT < 0) throw BadArgument("LG radial node count must be >= 0");
    if (transverse.waist <= 0.0) throw BadArgument("LG beam waist must be > 0");
  }
  ModeLabel label;
  label.omega = omega;
  label.m = m;
  label.s = s;
  label.transverse = transverse;
  label.site = site;
  return label;
}

double ThetaWeights::a_plus() const {
  return (cos_theta + sin_theta) / std::sqrt(2.0);
}
double ThetaWeights::a_minus() const {
  return (cos_theta - sin_theta) / std::sqrt(2.0);
}

ThetaWeights theta_weights(double omega, double delta) {
  if (omega <= 0.0)
    throw NonPositiveFrequency("theta_weights requires omega > 0");
  if (std::abs(delta) > omega)
    throw ShiftExceedsFrequency("frequency shift |" + std::to_string(delta) +
                                "| exceeds omega = " + std::to_string(omega));
  ThetaWeights w;
  w.omega = omega;
  w.delta = delta;
  w.cos_theta = std::sqrt((omega + delta) / (2.0 * omega));
  w.sin_theta = std::sqrt((omega - delta) / (2.0 * omega));
  return w;
}

std::size_t ModeBasis::register_label(const ModeLabel& label) {
  auto it = index_.find(label);
  if (it != index_.end()) return it->second;
  const std::size_t idx = labels_.size();
  labels_.push_back(label);
  index_.emplace(label, idx);
  return idx;
}

std::optional<std::size_t> ModeBasis::find(const ModeLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const ModeLabel& ModeBasis::label(std::size_t index) const {
  if (index >= labels_.size()) throw BadArgument("mode index out of range");
  return labels_[index];
}

}  // namespace rotomode
