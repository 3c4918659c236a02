#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rotomode/transforms.hpp"

using namespace rotomode;

namespace {

constexpr double kPi = std::numbers::pi;
const TransverseIndex kBessel = TransverseIndex::bessel(0.02);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Complex coeff_at(const ModeBasis& basis, const SuperpositionMode& mode,
                 const ModeLabel& label) {
  const auto idx = basis.find(label);
  REQUIRE(idx.has_value());
  REQUIRE(*idx < mode.coefficients.size());
  return mode.coefficients[*idx];
}

double max_coeff_deviation(const SuperpositionMode& u,
                           const SuperpositionMode& v) {
  const std::size_t n = std::max(u.coefficients.size(), v.coefficients.size());
  double dev = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = k < u.coefficients.size() ? u.coefficients[k] : 0.0;
    const Complex b = k < v.coefficients.size() ? v.coefficients[k] : 0.0;
    dev = std::max(dev, std::abs(a - b));
  }
  return dev;
}

}  // namespace

TEST_CASE("b pair: equal weights on the frequency-shifted opposite helicities") {
  ModeBasis basis;
  const ModePair b = build_b_pair(basis, 1.0, 0.01, 0, +1, kBessel);
  const ModeLabel hi = make_mode_label(1.01, 0, +1, kBessel);
  const ModeLabel lo = make_mode_label(0.99, 0, -1, kBessel);
  CHECK(std::abs(coeff_at(basis, b.plus, hi) - Complex(kInvSqrt2)) < 1e-15);
  CHECK(std::abs(coeff_at(basis, b.plus, lo) - Complex(kInvSqrt2)) < 1e-15);
  CHECK(std::abs(coeff_at(basis, b.minus, hi) - Complex(kInvSqrt2)) < 1e-15);
  CHECK(std::abs(coeff_at(basis, b.minus, lo) + Complex(kInvSqrt2)) < 1e-15);

  CHECK(std::abs(mode_overlap(b.plus, b.minus)) < 1e-15);
  CHECK(std::abs(b.plus.norm() - 1.0) < 1e-15);
  CHECK(std::abs(b.minus.norm() - 1.0) < 1e-15);
}

TEST_CASE("b pair at Omega = 0 reduces to linear-polarization superpositions") {
  ModeBasis basis;
  const ModePair b = build_b_pair(basis, 1.0, 0.0, 2, +1, kBessel);
  const ModeLabel plus_hel = make_mode_label(1.0, 2, +1, kBessel);
  const ModeLabel minus_hel = make_mode_label(1.0, 2, -1, kBessel);
  CHECK(std::abs(coeff_at(basis, b.plus, plus_hel) - Complex(kInvSqrt2)) < 1e-15);
  CHECK(std::abs(coeff_at(basis, b.plus, minus_hel) - Complex(kInvSqrt2)) < 1e-15);
  CHECK(std::abs(coeff_at(basis, b.minus, minus_hel) + Complex(kInvSqrt2)) < 1e-15);
}

TEST_CASE("c pair: opposite orbital indices at shifted frequencies") {
  ModeBasis basis;
  const ModePair c = build_c_pair(basis, 1.0, 0.01, 2, +1, kBessel);
  const ModeLabel hi = make_mode_label(1.02, 2, +1, kBessel);
  const ModeLabel lo = make_mode_label(0.98, -2, +1, kBessel);
  CHECK(std::abs(coeff_at(basis, c.plus, hi) - Complex(kInvSqrt2)) < 1e-15);
  CHECK(std::abs(coeff_at(basis, c.plus, lo) - Complex(kInvSqrt2)) < 1e-15);
  CHECK(std::abs(mode_overlap(c.plus, c.minus)) < 1e-15);

  CHECK_THROWS_AS(build_c_pair(basis, 1.0, 0.01, 0, +1, kBessel),
                  DegenerateOrbitalPair);
}

TEST_CASE("d, e, f pairs") {
  ModeBasis basis;
  SUBCASE("f: fixed (m, s) = (+1, -1) / (-1, +1) at omega +- Omega") {
    const ModePair f = build_f_pair(basis, 1.0, 0.01, kBessel);
    const ModeLabel hi = make_mode_label(1.01, +1, -1, kBessel);
    const ModeLabel lo = make_mode_label(0.99, -1, +1, kBessel);
    CHECK(std::abs(coeff_at(basis, f.plus, hi) - Complex(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(coeff_at(basis, f.plus, lo) - Complex(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(mode_overlap(f.plus, f.minus)) < 1e-15);
  }
  SUBCASE("e with Omega' = Omega reproduces d coefficient by coefficient") {
    ModeBasis b1, b2;
    const ModePair d = build_d_pair(b1, 1.0, 0.003, 2, +1, kBessel);
    const ModePair e = build_e_pair(b2, 1.0, 0.003, 0.003, 2, +1, kBessel);
    CHECK(max_coeff_deviation(d.plus, e.plus) < 1e-15);
    CHECK(max_coeff_deviation(d.minus, e.minus) < 1e-15);
  }
  SUBCASE("d with m = 1, s = -1 has zero shift and is rejected") {
    CHECK_THROWS_AS(build_d_pair(basis, 1.0, 0.01, 1, -1, kBessel),
                    DegeneratePair);
    CHECK_THROWS_AS(build_e_pair(basis, 1.0, 0.01, 0.01, 1, -1, kBessel),
                    DegeneratePair);
  }
  SUBCASE("shift bounds") {
    CHECK_THROWS_AS(build_d_pair(basis, 1.0, 0.6, 1, +1, kBessel),
                    ShiftExceedsFrequency);
    CHECK_THROWS_AS(build_f_pair(basis, 1.0, 1.5, kBessel),
                    ShiftExceedsFrequency);
  }
}

TEST_CASE("g pair: theta-weighted rows") {
  SUBCASE("Omega = 0 coincides with the b pair") {
    ModeBasis b1, b2;
    const ModePair g = build_g_pair(b1, 1.0, 0.0, 0, +1, kBessel);
    const ModePair b = build_b_pair(b2, 1.0, 0.0, 0, +1, kBessel);
    CHECK(max_coeff_deviation(g.plus, b.plus) < 1e-15);
    CHECK(max_coeff_deviation(g.minus, b.minus) < 1e-15);
  }
  SUBCASE("weights at omega=100, Omega=1 are sin^2 = 99/200, cos^2 = 101/200") {
    ModeBasis basis;
    const ModePair g = build_g_pair(basis, 100.0, 1.0, 0, +1, kBessel);
    const ModeLabel hi = make_mode_label(101.0, 0, +1, kBessel);
    const ModeLabel lo = make_mode_label(99.0, 0, -1, kBessel);
    CHECK(std::abs(std::norm(coeff_at(basis, g.plus, hi)) - 99.0 / 200.0) <
          1e-14);
    CHECK(std::abs(std::norm(coeff_at(basis, g.plus, lo)) - 101.0 / 200.0) <
          1e-14);
    CHECK(std::abs(mode_overlap(g.plus, g.minus)) < 1e-15);
  }
}

TEST_CASE("h pair: orbital theta weights") {
  ModeBasis basis;
  const ModePair h = build_h_pair(basis, 100.0, 1.0, 2, +1, kBessel);
  const ModeLabel hi = make_mode_label(102.0, 2, +1, kBessel);
  const ModeLabel lo = make_mode_label(98.0, -2, +1, kBessel);
  CHECK(std::abs(std::norm(coeff_at(basis, h.plus, hi)) - 98.0 / 200.0) < 1e-14);
  CHECK(std::abs(std::norm(coeff_at(basis, h.plus, lo)) - 102.0 / 200.0) < 1e-14);
  CHECK(std::abs(mode_overlap(h.plus, h.minus)) < 1e-15);

  SUBCASE("m -> -m moves the sin-theta weight to the other label") {
    ModeBasis flipped_basis;
    const ModePair flipped = build_h_pair(flipped_basis, 100.0, 1.0, -2, +1,
                                          kBessel);
    // The label at 98 with m = -2 now carries sin^2 = 102/200.
    CHECK(std::abs(std::norm(coeff_at(flipped_basis, flipped.plus,
                                      make_mode_label(98.0, -2, +1, kBessel))) -
                   102.0 / 200.0) < 1e-14);
    // As a vector the mode is unchanged.
    ModeBasis common;
    const ModePair h1 = build_h_pair(common, 100.0, 1.0, 2, +1, kBessel);
    const ModePair h2 = build_h_pair(common, 100.0, 1.0, -2, +1, kBessel);
    CHECK(std::abs(std::abs(mode_overlap(h1.plus, h2.plus)) - 1.0) < 1e-14);
  }
  CHECK_THROWS_AS(build_h_pair(basis, 1.0, 0.01, 0, +1, kBessel),
                  DegenerateOrbitalPair);
}

TEST_CASE("polarization inverter map") {
  const ModeLabel in = make_mode_label(1.0, 0, +1, kBessel);
  // Plate spinning at 0.01 inverts with an effective Omega = 0.02.
  const ModeLabel out = inverter_map_polarization(in, 0.01);
  CHECK(out.omega == doctest::Approx(0.98).epsilon(1e-15));
  CHECK(out.m == 0);
  CHECK(out.s == -1);

  SUBCASE("negative helicity gains frequency") {
    const ModeLabel gain =
        inverter_map_polarization(make_mode_label(1.0, 0, -1, kBessel), 0.01);
    CHECK(gain.omega == doctest::Approx(1.02).epsilon(1e-15));
    CHECK(gain.s == +1);
  }
  SUBCASE("frequency must stay positive") {
    CHECK_THROWS_AS(inverter_map_polarization(in, 0.5), NonPositiveFrequency);
  }
  SUBCASE("termwise map of a linear superposition gives b+") {
    ModeBasis basis;
    const SuperpositionMode linear = from_coefficients(
        basis,
        {{basis.register_label(make_mode_label(1.0, 0, +1, kBessel)),
          Complex(kInvSqrt2)},
         {basis.register_label(make_mode_label(1.0, 0, -1, kBessel)),
          Complex(kInvSqrt2)}});
    const SuperpositionMode mapped =
        apply_inverter_polarization(basis, linear, 0.01);
    const ModePair b = build_b_pair(basis, 1.0, 0.02, 0, +1, kBessel);
    CHECK(max_coeff_deviation(mapped, b.plus) < 1e-15);
  }
}

TEST_CASE("orbital inverter map") {
  const ModeLabel in = make_mode_label(1.0, 1, +1, kBessel);
  const ModeLabel out = inverter_map_orbital(in, 0.01);
  CHECK(out.omega == doctest::Approx(0.98).epsilon(1e-15));
  CHECK(out.m == -1);
  CHECK(out.s == +1);

  SUBCASE("m = 0 is a fixed point") {
    const ModeLabel still =
        inverter_map_orbital(make_mode_label(1.0, 0, +1, kBessel), 0.01);
    CHECK(still == make_mode_label(1.0, 0, +1, kBessel));
  }
  SUBCASE("termwise map of an orbital superposition gives c+") {
    ModeBasis basis;
    const SuperpositionMode superpos = from_coefficients(
        basis,
        {{basis.register_label(make_mode_label(1.0, 1, +1, kBessel)),
          Complex(kInvSqrt2)},
         {basis.register_label(make_mode_label(1.0, -1, +1, kBessel)),
          Complex(kInvSqrt2)}});
    const SuperpositionMode mapped = apply_inverter_orbital(basis, superpos, 0.01);
    const ModePair c = build_c_pair(basis, 1.0, 0.02, 1, +1, kBessel);
    CHECK(max_coeff_deviation(mapped, c.plus) < 1e-15);
  }
}

TEST_CASE("verify_unitary") {
  ModeBasis basis;
  SUBCASE("every built pair is orthonormal") {
    for (const ModePair& pair :
         {build_b_pair(basis, 1.0, 0.01, 0, +1, kBessel),
          build_c_pair(basis, 1.0, 0.01, 1, +1, kBessel),
          build_d_pair(basis, 1.0, 0.01, 1, +1, kBessel),
          build_e_pair(basis, 1.0, 0.01, 0.007, 1, +1, kBessel),
          build_f_pair(basis, 1.0, 0.01, kBessel),
          build_g_pair(basis, 100.0, 1.0, 0, +1, kBessel),
          build_h_pair(basis, 100.0, 1.0, 2, +1, kBessel)}) {
      UnitaryModeMap map;
      map.rows = {pair.plus, pair.minus};
      CHECK(verify_unitary(map) < 1e-12);
    }
  }
  SUBCASE("repeated rows fail") {
    const std::size_t i =
        basis.register_label(make_mode_label(1.0, 0, +1, kBessel));
    const SuperpositionMode row =
        from_coefficients(basis, {{i, Complex(1.0)}});
    UnitaryModeMap map;
    map.rows = {row, row};
    CHECK(verify_unitary(map) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("commutator surrogate vanishes across a pair") {
  ModeBasis basis;
  const ModePair b = build_b_pair(basis, 1.0, 0.01, 0, +1, kBessel);
  const ModePair g = build_g_pair(basis, 100.0, 1.0, 0, +1, kBessel);
  for (const ModePair& pair : {b, g}) {
    CHECK(std::abs(commutator_surrogate(pair.plus, pair.minus)) < 1e-12);
    CHECK(std::abs(commutator_surrogate(pair.plus, pair.plus) -
                   Complex(1.0)) < 1e-12);
    CHECK(std::abs(commutator_surrogate(pair.minus, pair.minus) -
                   Complex(1.0)) < 1e-12);
  }
}

TEST_CASE("time shift by pi/(2 Omega) swaps b+ and b- up to the fixed phase") {
  ModeBasis basis;
  const double omega = 1.0, Omega = 0.01;
  const ModePair b = build_b_pair(basis, omega, Omega, 0, +1, kBessel);
  const double tau = kPi / (2.0 * Omega);
  const Complex phase =
      Complex(0.0, -1.0) * std::exp(Complex(0.0, -kPi * omega / (2.0 * Omega)));

  const SuperpositionMode shifted_plus = time_shifted(basis, b.plus, tau);
  const SuperpositionMode shifted_minus = time_shifted(basis, b.minus, tau);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    CHECK(std::abs(shifted_plus.coefficients[k] -
                   phase * b.minus.coefficients[k]) < 1e-12);
    CHECK(std::abs(shifted_minus.coefficients[k] -
                   phase * b.plus.coefficients[k]) < 1e-12);
  }
}

TEST_CASE("time shift by pi/(2 m Omega) swaps c+ and c-") {
  ModeBasis basis;
  const double omega = 1.0, Omega = 0.01;
  const int m = 2;
  const ModePair c = build_c_pair(basis, omega, Omega, m, +1, kBessel);
  const double tau = kPi / (2.0 * m * Omega);
  const Complex phase = Complex(0.0, -1.0) *
                        std::exp(Complex(0.0, -kPi * omega / (2.0 * m * Omega)));
  const SuperpositionMode shifted = time_shifted(basis, c.plus, tau);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    CHECK(std::abs(shifted.coefficients[k] - phase * c.minus.coefficients[k]) <
          1e-12);
  }
}

TEST_CASE("delayed b+ decomposes with cos and sin weights on the pair") {
  ModeBasis basis;
  const double omega = 1.0, Omega = 0.01;
  const ModePair b = build_b_pair(basis, omega, Omega, 0, +1, kBessel);
  for (double tau : {3.0, 17.0, 130.0}) {
    const SuperpositionMode shifted = time_shifted(basis, b.plus, tau);
    const Complex global = std::exp(Complex(0.0, -omega * tau));
    const Complex on_plus = mode_overlap(b.plus, shifted);
    const Complex on_minus = mode_overlap(b.minus, shifted);
    CHECK(std::abs(on_plus - global * std::cos(Omega * tau)) < 1e-12);
    // The orthogonal component carries weight sin(Omega tau) with an extra
    // quarter-wave phase.
    CHECK(std::abs(on_minus -
                   global * Complex(0.0, -1.0) * std::sin(Omega * tau)) < 1e-12);
    CHECK(std::abs(std::abs(on_minus) - std::abs(std::sin(Omega * tau))) <
          1e-12);
  }
}

TEST_CASE("randomized parameter sweep: every pair is an orthonormal row set") {
  // Hand-rolled generator, deterministic across runs.
  unsigned state = 20260808u;
  const auto next = [&state]() {
    state = state * 1664525u + 1013904223u;
    return static_cast<double>(state % 100000) / 100000.0;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const double omega = 0.5 + 99.5 * next();
    const int m = 1 + static_cast<int>(next() * 3.0);
    const int s = next() < 0.5 ? -1 : +1;
    const double Omega = (next() - 0.5) * 0.2 * omega / (m + 1);
    const double Omega2 = (next() - 0.5) * 0.1 * omega / (m + 1);
    const TransverseIndex transverse = TransverseIndex::bessel(0.01 * omega);

    ModeBasis basis;
    std::vector<ModePair> pairs;
    pairs.push_back(build_b_pair(basis, omega, Omega, m, s, transverse));
    pairs.push_back(build_c_pair(basis, omega, Omega, m, s, transverse));
    if (m + s != 0)
      pairs.push_back(build_d_pair(basis, omega, Omega, m, s, transverse));
    if (Omega * m + Omega2 * s != 0.0)
      pairs.push_back(
          build_e_pair(basis, omega, Omega, Omega2, m, s, transverse));
    pairs.push_back(build_f_pair(basis, omega, Omega, transverse));
    pairs.push_back(build_g_pair(basis, omega, Omega, m, s, transverse));
    pairs.push_back(build_h_pair(basis, omega, Omega, m, s, transverse));

    for (const ModePair& pair : pairs) {
      UnitaryModeMap map;
      map.rows = {pair.plus, pair.minus};
      CHECK(verify_unitary(map) < 1e-12);
      CHECK(std::abs(commutator_surrogate(pair.plus, pair.minus)) < 1e-12);
      CHECK(std::abs(pair.plus.norm() - 1.0) < 1e-12);
      CHECK(std::abs(pair.minus.norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("equal-weight families have |coeff| = 1/sqrt(2) exactly") {
  ModeBasis basis;
  for (const ModePair& pair :
       {build_b_pair(basis, 2.0, 0.05, 1, -1, kBessel),
        build_c_pair(basis, 2.0, 0.05, 3, -1, kBessel),
        build_d_pair(basis, 2.0, 0.05, 2, -1, kBessel),
        build_e_pair(basis, 2.0, 0.05, 0.02, 1, +1, kBessel),
        build_f_pair(basis, 2.0, 0.05, kBessel)}) {
    for (const SuperpositionMode* mode : {&pair.plus, &pair.minus}) {
      int nonzero = 0;
      for (const Complex& c : mode->coefficients) {
        if (c == Complex(0.0, 0.0)) continue;
        ++nonzero;
        CHECK(std::abs(std::abs(c) - kInvSqrt2) < 1e-15);
      }
      CHECK(nonzero == 2);
    }
  }
}
