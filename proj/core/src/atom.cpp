#include "rotomode/atom.hpp"

#include <algorithm>
#include <cmath>

namespace rotomode {

namespace {

void validate(const AtomConfig& config) {
  if (config.gamma <= 0.0) throw BadArgument("decay width must be > 0");
  if (config.p0 < 0.0 || config.p0 >= 1.0)
    throw BadArgument("non-absorption probability must lie in [0, 1)");
}

double entropy_bits(double p) {
  double h = 0.0;
  for (double lambda : {p, 1.0 - p}) {
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h;
}

}  // namespace

Complex raman_amplitude(double omega, const AtomConfig& config) {
  validate(config);
  return 1.0 / Complex(omega - config.omega_A, -config.gamma);
}

StorageResult absorb(const SpectralAmplitude& spectrum, double Omega,
                     const AtomConfig& config) {
  validate(config);
  const double omega0 = spectrum.center();
  const Complex p_plus = raman_amplitude(omega0 + Omega, config);
  const Complex p_minus = raman_amplitude(omega0 - Omega, config);
  const Complex f_plus = spectrum.value(omega0 + Omega);
  const Complex f_minus = spectrum.value(omega0 - Omega);
  // The time integral against the envelope reduces to the spectral amplitude
  // at the shifted frequency; the atom position only contributes the
  // phases e^{± i Omega z'}.
  Complex c_plus =
      p_plus * f_plus * std::exp(Complex(0.0, Omega * config.z_prime));
  Complex c_minus =
      p_minus * f_minus * std::exp(Complex(0.0, -Omega * config.z_prime));
  const double norm =
      std::sqrt(std::norm(c_plus) + std::norm(c_minus));
  if (norm < 1e-300)
    throw ZeroAbsorption("both absorption amplitudes vanish");
  c_plus /= norm;
  c_minus /= norm;

  StorageResult result;
  result.c_plus = c_plus;
  result.c_minus = c_minus;
  result.motional_overlap = motional_overlap(Omega, config);
  result.entanglement_entropy = stored_entanglement(result);
  return result;
}

double motional_overlap(double Omega, const AtomConfig& config) {
  if (config.motional_sigma <= 0.0)
    throw BadArgument("motional width must be > 0");
  const double x = Omega / config.motional_sigma;
  return std::exp(-0.5 * x * x);
}

double stored_entanglement(const StorageResult& result) {
  const double p = std::norm(result.c_plus);
  const double q = std::norm(result.c_minus);
  const double off = std::abs(result.c_plus * std::conj(result.c_minus) *
                              result.motional_overlap);
  // Eigenvalues of [[p, off], [off*, q]], normalized to unit trace.
  const double trace = p + q;
  if (trace <= 0.0) throw BadArgument("storage result carries no amplitude");
  const double mid = 0.5 * trace;
  const double radius = std::sqrt(0.25 * (p - q) * (p - q) + off * off);
  const double lambda = std::clamp((mid + radius) / trace, 0.0, 1.0);
  return entropy_bits(lambda);
}

}  // namespace rotomode
