#include "rotomode/interference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rotomode/fock.hpp"

namespace rotomode {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTrapezoidPoints = 2048;

template <typename F>
Complex trapezoid(const F& f, double lo, double hi, int points) {
  const double h = (hi - lo) / (points - 1);
  Complex acc = 0.5 * (f(lo) + f(hi));
  for (int i = 1; i < points - 1; ++i) acc += f(lo + i * h);
  return acc * h;
}

}  // namespace

Complex SpectralAmplitude::value(double omega) const {
  if (shape == Shape::Gaussian) {
    const double d = omega - omega0;
    return std::pow(2.0 * kPi * sigma * sigma, -0.25) *
           std::exp(-d * d / (4.0 * sigma * sigma));
  }
  // Linear interpolation on the sample grid, zero outside.
  if (samples.empty() || omega < samples.front().first ||
      omega > samples.back().first)
    return Complex(0.0, 0.0);
  auto it = std::lower_bound(
      samples.begin(), samples.end(), omega,
      [](const auto& s, double w) { return s.first < w; });
  if (it == samples.begin()) return it->second;
  const auto& [w1, f1] = *it;
  const auto& [w0, f0] = *(it - 1);
  if (w1 == w0) return f1;
  const double t = (omega - w0) / (w1 - w0);
  return f0 + t * (f1 - f0);
}

Complex SpectralAmplitude::time_envelope(double t) const {
  if (shape == Shape::Gaussian) {
    return std::pow(2.0 * sigma * sigma / kPi, 0.25) *
           std::exp(-sigma * sigma * t * t) *
           std::exp(Complex(0.0, -omega0 * t));
  }
  const double lo = samples.front().first;
  const double hi = samples.back().first;
  return trapezoid(
             [&](double w) {
               return value(w) * std::exp(Complex(0.0, -w * t));
             },
             lo, hi, kTrapezoidPoints) /
         std::sqrt(2.0 * kPi);
}

double SpectralAmplitude::center() const {
  if (shape == Shape::Gaussian) return omega0;
  const double lo = samples.front().first;
  const double hi = samples.back().first;
  const Complex mean = trapezoid(
      [&](double w) { return Complex(w * std::norm(value(w)), 0.0); }, lo, hi,
      kTrapezoidPoints);
  return mean.real();  // unit norm by construction
}

double SpectralAmplitude::spectral_norm() const {
  double lo, hi;
  if (shape == Shape::Gaussian) {
    lo = omega0 - 10.0 * sigma;
    hi = omega0 + 10.0 * sigma;
  } else {
    lo = samples.front().first;
    hi = samples.back().first;
  }
  return trapezoid([&](double w) { return Complex(std::norm(value(w)), 0.0); },
                   lo, hi, kTrapezoidPoints)
      .real();
}

double SpectralAmplitude::temporal_norm() const {
  const double spread =
      shape == Shape::Gaussian
          ? 10.0 / (2.0 * sigma)
          : 10.0 / (samples.back().first - samples.front().first) * 2.0 * kPi;
  return trapezoid(
             [&](double t) { return Complex(std::norm(time_envelope(t)), 0.0); },
             -spread, spread, kTrapezoidPoints)
      .real();
}

double SpectralAmplitude::time_fwhm() const {
  if (shape == Shape::Gaussian) return std::sqrt(2.0 * std::log(2.0)) / sigma;
  // Scan |F~|^2 outward from its peak at t = 0 grid.
  const double span = 20.0 * kPi / (samples.back().first - samples.front().first);
  const int n = 4096;
  double peak = 0.0, t_peak = 0.0;
  std::vector<double> ts(n), vals(n);
  for (int i = 0; i < n; ++i) {
    ts[i] = -span + 2.0 * span * i / (n - 1);
    vals[i] = std::norm(time_envelope(ts[i]));
    if (vals[i] > peak) {
      peak = vals[i];
      t_peak = ts[i];
    }
  }
  double left = t_peak, right = t_peak;
  for (int i = 0; i < n; ++i) {
    if (vals[i] >= 0.5 * peak) {
      left = std::min(left, ts[i]);
      right = std::max(right, ts[i]);
    }
  }
  return right - left;
}

SpectralAmplitude make_gaussian_spectrum(double omega0, double sigma) {
  if (omega0 <= 0.0) throw NonPositiveFrequency("spectrum center must be > 0");
  if (sigma <= 0.0) throw BadArgument("spectral width must be > 0");
  if (omega0 - 5.0 * sigma <= 0.0)
    throw SupportCrossesZero("spectrum support reaches non-positive frequencies");
  SpectralAmplitude s;
  s.shape = SpectralAmplitude::Shape::Gaussian;
  s.omega0 = omega0;
  s.sigma = sigma;
  return s;
}

SpectralAmplitude make_sampled_spectrum(
    std::vector<std::pair<double, Complex>> samples) {
  if (samples.size() < 2) throw BadArgument("need at least two samples");
  if (!std::is_sorted(samples.begin(), samples.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; }))
    throw BadArgument("samples must ascend in frequency");
  if (samples.front().first <= 0.0)
    throw SupportCrossesZero("sampled support reaches non-positive frequencies");
  SpectralAmplitude s;
  s.shape = SpectralAmplitude::Shape::Sampled;
  s.samples = std::move(samples);
  const double norm = s.spectral_norm();
  if (norm <= 0.0) throw BadArgument("sampled spectrum has zero norm");
  const double rescale = 1.0 / std::sqrt(norm);
  for (auto& [w, f] : s.samples) f *= rescale;
  return s;
}

Jones wavepacket_amplitude(const SpectralAmplitude& spectrum, double Omega,
                           double t) {
  const Complex envelope = spectrum.time_envelope(t);
  Jones out;
  out.x = envelope * std::cos(Omega * t);
  out.y = envelope * std::sin(Omega * t);
  return out;
}

double envelope_overlap(const SpectralAmplitude& spectrum, double tau) {
  if (spectrum.shape == SpectralAmplitude::Shape::Gaussian) {
    const double s = spectrum.sigma;
    return std::exp(-s * s * tau * tau);
  }
  // int F~*(t) F~(t+tau) dt = int |F(w)|^2 e^{-i w tau} dw.
  const double lo = spectrum.samples.front().first;
  const double hi = spectrum.samples.back().first;
  const Complex corr = trapezoid(
      [&](double w) {
        return std::norm(spectrum.value(w)) * std::exp(Complex(0.0, -w * tau));
      },
      lo, hi, kTrapezoidPoints);
  return std::min(1.0, std::norm(corr));
}

bool rotation_resolvable(const SpectralAmplitude& spectrum, double Omega) {
  if (Omega == 0.0) return false;
  return spectrum.time_fwhm() > 2.0 * kPi / std::abs(Omega);
}

HomResult hom_analytic(double Omega, double theta, double tau,
                       double envelope_overlap) {
  if (envelope_overlap < 0.0 || envelope_overlap > 1.0)
    throw BadArgument("envelope overlap must lie in [0, 1]");
  const double c = std::cos(Omega * tau);
  const double st2 = std::sin(theta) * std::sin(theta);
  const double ct2 = std::cos(theta) * std::cos(theta);
  HomResult r;
  r.tau = tau;
  r.modulation = c * c;
  r.polarization_overlap =
      st2 * st2 + ct2 * ct2 + 2.0 * st2 * ct2 * std::cos(2.0 * Omega * tau);
  r.envelope_overlap = envelope_overlap;
  r.coincidence = 0.5 * (1.0 - r.modulation * envelope_overlap);
  return r;
}

double hom_bruteforce(const PairBuilder& builder, double tau) {
  ModeBasis basis;
  const ModePair port_a = builder(basis, Site::A);
  const ModePair port_b = builder(basis, Site::B);
  const SuperpositionMode delayed = time_shifted(basis, port_b.plus, tau);

  FockState vac = FockState::vacuum(basis, 2);
  FockState input = create(create(vac, port_a.plus).state, delayed).state;

  // Match each site-A label with its site-B twin.
  std::vector<std::pair<std::size_t, std::size_t>> channels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.label(i).site != Site::A) continue;
    ModeLabel twin = basis.label(i);
    twin.site = Site::B;
    const auto j = basis.find(twin);
    if (!j) throw BadArgument("port B misses a label present at port A");
    channels.emplace_back(i, *j);
  }

  // Symmetric 50/50 splitter per monochromatic channel:
  //   out1 = (a_A + i a_B)/sqrt(2), out2 = (i a_A + a_B)/sqrt(2).
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<SuperpositionMode> out1, out2;
  for (const auto& [ia, ib] : channels) {
    out1.push_back(from_coefficients(basis, {{ia, Complex(r, 0.0)},
                                             {ib, Complex(0.0, -r)}}));
    out2.push_back(from_coefficients(basis, {{ia, Complex(0.0, -r)},
                                             {ib, Complex(r, 0.0)}}));
  }

  // Sum over all ways of finding one photon in each output port.
  double coincidence = 0.0;
  for (const auto& u : out1) {
    const AnnihilationResult first = annihilate(input, u);
    for (const auto& v : out2) {
      const AnnihilationResult second = annihilate(first.state, v);
      coincidence += second.norm * second.norm;
    }
  }
  return coincidence;
}

double hom_bruteforce_b(double omega, double Omega, int m, int s, double tau) {
  const TransverseIndex transverse = TransverseIndex::bessel(0.02 * omega);
  return hom_bruteforce(
      [=](ModeBasis& basis, Site site) {
        return build_b_pair(basis, omega, Omega, m, s, transverse, site);
      },
      tau);
}

}  // namespace rotomode
