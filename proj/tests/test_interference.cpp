#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rotomode/field.hpp"
#include "rotomode/interference.hpp"

using namespace rotomode;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gaussian spectrum: normalization and Parseval by quadrature") {
  const SpectralAmplitude spec = make_gaussian_spectrum(100.0, 0.1);

  // Independent trapezoid oracles over wide supports.
  const int n = 40001;
  double freq_norm = 0.0;
  {
    const double lo = 100.0 - 1.5, hi = 100.0 + 1.5, h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
      const double w = std::norm(spec.value(lo + i * h));
      freq_norm += w * ((i == 0 || i == n - 1) ? 0.5 : 1.0) * h;
    }
  }
  double time_norm = 0.0;
  {
    const double span = 80.0, h = 2.0 * span / (n - 1);
    for (int i = 0; i < n; ++i) {
      const double w = std::norm(spec.time_envelope(-span + i * h));
      time_norm += w * ((i == 0 || i == n - 1) ? 0.5 : 1.0) * h;
    }
  }
  CHECK(std::abs(freq_norm - 1.0) < 1e-10);
  CHECK(std::abs(time_norm - 1.0) < 1e-10);
  CHECK(std::abs(spec.spectral_norm() - 1.0) < 1e-8);
  CHECK(std::abs(spec.temporal_norm() - 1.0) < 1e-8);
}

TEST_CASE("halving the spectral width doubles the temporal spread") {
  const SpectralAmplitude wide = make_gaussian_spectrum(100.0, 0.1);
  const SpectralAmplitude narrow = make_gaussian_spectrum(100.0, 0.05);
  CHECK(narrow.time_fwhm() ==
        doctest::Approx(2.0 * wide.time_fwhm()).epsilon(1e-12));
}

TEST_CASE("rotation visibility needs a packet longer than the rotation period") {
  const SpectralAmplitude spec = make_gaussian_spectrum(100.0, 0.01);
  CHECK(rotation_resolvable(spec, 1.0));
  CHECK_FALSE(rotation_resolvable(spec, 0.001));
}

TEST_CASE("support must stay at positive frequencies") {
  CHECK_THROWS_AS(make_gaussian_spectrum(1.0, 0.3), SupportCrossesZero);
  CHECK_THROWS_AS(make_gaussian_spectrum(-1.0, 0.1), NonPositiveFrequency);
}

TEST_CASE("wavepacket amplitude is the envelope times a rotating direction") {
  const SpectralAmplitude spec = make_gaussian_spectrum(100.0, 0.01);
  const double Omega = 1.0;
  SUBCASE("t = 0 points along x") {
    const Jones at0 = wavepacket_amplitude(spec, Omega, 0.0);
    CHECK(std::abs(at0.x - spec.time_envelope(0.0)) < 1e-14);
    CHECK(std::abs(at0.y) < 1e-14);
  }
  SUBCASE("|amplitude| = |envelope| and psi = Omega t") {
    for (double t : {-20.0, 0.3, 1.7, 40.0}) {
      const Jones a = wavepacket_amplitude(spec, Omega, t);
      const double mag = std::sqrt(std::norm(a.x) + std::norm(a.y));
      CHECK(std::abs(mag - std::abs(spec.time_envelope(t))) < 1e-14);
      const EllipseAngles angles = polarization_ellipse(a.x, a.y);
      double want = std::fmod(Omega * t, kPi);
      if (want > kPi / 2) want -= kPi;
      if (want <= -kPi / 2) want += kPi;
      CHECK(std::abs(angles.psi - want) < 1e-12);
    }
  }
}

TEST_CASE("sampled spectra reject bad grids") {
  using Samples = std::vector<std::pair<double, Complex>>;
  CHECK_THROWS_AS(make_sampled_spectrum(Samples{{1.0, Complex(1.0)}}),
                  BadArgument);
  CHECK_THROWS_AS(
      make_sampled_spectrum(Samples{{2.0, Complex(1.0)}, {1.0, Complex(1.0)}}),
      BadArgument);
  CHECK_THROWS_AS(
      make_sampled_spectrum(Samples{{-1.0, Complex(1.0)}, {1.0, Complex(1.0)}}),
      SupportCrossesZero);
  CHECK_THROWS_AS(
      make_sampled_spectrum(Samples{{1.0, Complex(0.0)}, {2.0, Complex(0.0)}}),
      BadArgument);
}

TEST_CASE("sampled spectra normalize and keep Parseval") {
  std::vector<std::pair<double, Complex>> samples;
  for (int i = 0; i <= 400; ++i) {
    const double w = 90.0 + i * 0.05;
    samples.emplace_back(w, Complex(std::exp(-(w - 100.0) * (w - 100.0) / 8.0)));
  }
  const SpectralAmplitude spec = make_sampled_spectrum(samples);
  CHECK(std::abs(spec.spectral_norm() - 1.0) < 1e-8);
  CHECK(std::abs(spec.temporal_norm() - 1.0) < 1e-4);
  CHECK(spec.center() == doctest::Approx(100.0).epsilon(1e-6));
}

TEST_CASE("analytic HOM coincidence") {
  SUBCASE("zero delay: full dip") {
    const HomResult r = hom_analytic(1.0, kPi / 4, 0.0, 1.0);
    CHECK(r.coincidence == 0.0);
    CHECK(r.modulation == 1.0);
  }
  SUBCASE("quarter rotation: orthogonal photons") {
    const HomResult r = hom_analytic(1.0, kPi / 4, kPi / 2, 1.0);
    CHECK(std::abs(r.modulation) < 1e-14);
    CHECK(r.coincidence == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("polarization overlap equals modulation only at theta = pi/4") {
    const double Omega = 1.0;
    for (double tau : {0.1, 0.7, 2.0}) {
      const HomResult balanced = hom_analytic(Omega, kPi / 4, tau, 1.0);
      CHECK(std::abs(balanced.polarization_overlap - balanced.modulation) <
            1e-14);
      const ThetaWeights th = theta_weights(100.0, 1.0);
      const double theta = std::atan2(th.sin_theta, th.cos_theta);
      const HomResult skew = hom_analytic(Omega, theta, tau, 1.0);
      const double st2 = th.sin_theta * th.sin_theta;
      const double ct2 = th.cos_theta * th.cos_theta;
      const double want =
          st2 * st2 + ct2 * ct2 + 2.0 * st2 * ct2 * std::cos(2.0 * Omega * tau);
      CHECK(std::abs(skew.polarization_overlap - want) < 1e-12);
      CHECK(std::abs(skew.polarization_overlap - skew.modulation) > 1e-9);
    }
  }
  SUBCASE("envelope overlap bounds") {
    CHECK_THROWS_AS(hom_analytic(1.0, kPi / 4, 0.0, 1.5), BadArgument);
  }
}

TEST_CASE("brute-force HOM against the closed form") {
  const double omega = 1.0, Omega = 0.01;
  SUBCASE("zero delay") {
    CHECK(hom_bruteforce_b(omega, Omega, 0, +1, 0.0) < 1e-12);
  }
  SUBCASE("quarter rotation gives 1/2") {
    const double tau = kPi / (2.0 * Omega);
    CHECK(std::abs(hom_bruteforce_b(omega, Omega, 0, +1, tau) - 0.5) < 1e-12);
  }
  SUBCASE("64-delay sweep matches (1 - cos^2)/2 and oscillates at 2 Omega") {
    const int points = 64;
    const double span = 2.0 * kPi / Omega;
    std::vector<double> series(points);
    double max_dev = 0.0;
    for (int i = 0; i < points; ++i) {
      const double tau = span * i / points;
      const double brute = hom_bruteforce_b(omega, Omega, 0, +1, tau);
      const HomResult analytic = hom_analytic(Omega, kPi / 4, tau, 1.0);
      series[i] = brute;
      max_dev = std::max(max_dev, std::abs(brute - analytic.coincidence));
    }
    CHECK(max_dev < 1e-10);

    // DFT peak (excluding DC) sits at two cycles per window, i.e. 2 Omega.
    int peak_bin = 0;
    double peak_power = 0.0;
    for (int k = 1; k <= points / 2; ++k) {
      Complex acc(0.0, 0.0);
      for (int i = 0; i < points; ++i) {
        acc += series[i] * std::exp(Complex(0.0, -2.0 * kPi * k * i / points));
      }
      if (std::norm(acc) > peak_power) {
        peak_power = std::norm(acc);
        peak_bin = k;
      }
    }
    const double peak_frequency = 2.0 * kPi * peak_bin / span;
    CHECK(peak_frequency == doctest::Approx(2.0 * Omega).epsilon(1e-12));
  }
}

TEST_CASE("gaussian envelope overlap: closed form vs quadrature oracle") {
  const SpectralAmplitude spec = make_gaussian_spectrum(100.0, 0.05);
  for (double tau : {0.0, 3.0, 11.0}) {
    const double got = envelope_overlap(spec, tau);
    // Oracle: |int F~*(t) F~(t+tau) dt|^2 by trapezoid.
    const int n = 20001;
    const double span = 160.0, h = 2.0 * span / (n - 1);
    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
      const double t = -span + i * h;
      const Complex term =
          std::conj(spec.time_envelope(t)) * spec.time_envelope(t + tau);
      acc += term * ((i == 0 || i == n - 1) ? 0.5 : 1.0) * h;
    }
    CHECK(std::abs(got - std::norm(acc)) < 1e-9);
    CHECK(std::abs(got - std::exp(-0.05 * 0.05 * tau * tau)) < 1e-12);
  }
}
