#include "rotomode/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rotomode/parallel.hpp"

namespace rotomode {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Integer-order Bessel function of the first kind, any sign of the order.
double bessel_j_int(int n, double x) {
  const int a = std::abs(n);
  const double v = std::cyl_bessel_j(static_cast<double>(a), x);
  return (n < 0 && (a % 2 != 0)) ? -v : v;
}

// Lommel: int_0^R J_nu(k rho)^2 rho drho
//       = R^2/2 [J_nu(kR)^2 - J_{nu-1}(kR) J_{nu+1}(kR)].
double bessel_disc_energy(int nu, double kT, double radius) {
  const double x = kT * radius;
  const double jn = bessel_j_int(nu, x);
  const double jm = bessel_j_int(nu - 1, x);
  const double jp = bessel_j_int(nu + 1, x);
  return 0.5 * radius * radius * (jn * jn - jm * jp);
}

double factorial_ratio(int num, int den) {
  // num! / den! for num >= den >= 0
  double r = 1.0;
  for (int k = den + 1; k <= num; ++k) r *= k;
  return r;
}

}  // namespace

double default_bessel_norm_radius(double kT) { return 4.0 / kT; }

double transverse_norm_constant(const TransverseIndex& transverse, int m,
                                const FieldOptions& options) {
  const int am = std::abs(m);
  if (transverse.family == TransverseFamily::Bessel) {
    const double radius = options.bessel_norm_radius > 0.0
                              ? options.bessel_norm_radius
                              : default_bessel_norm_radius(transverse.kT);
    const double energy = 2.0 * kPi * bessel_disc_energy(am, transverse.kT, radius);
    return 1.0 / std::sqrt(energy);
  }
  // LG_{n}^{|m|} at the waist: N = sqrt(2 n! / (pi (n+|m|)!)) / w.
  const double w = transverse.waist;
  return std::sqrt(2.0 / (kPi * factorial_ratio(transverse.nT + am,
                                                transverse.nT))) /
         w;
}

Complex mode_function(const ModeLabel& label, double rho, double z, double z0,
                      const FieldOptions& options) {
  const int am = std::abs(label.m);
  const double norm = transverse_norm_constant(label.transverse, am, options);
  if (label.transverse.family == TransverseFamily::Bessel) {
    const double kT = label.transverse.kT;
    const double kz = std::sqrt(label.omega * label.omega - kT * kT);
    const double radial = norm * bessel_j_int(am, kT * rho);
    return radial * std::exp(Complex(0.0, kz * (z - z0)));
  }
  if (z != z0)
    throw LgOffFocalPlane("LG profiles are defined in the reference plane only");
  const double w = label.transverse.waist;
  const double u = 2.0 * rho * rho / (w * w);
  const double radial = norm * std::pow(std::sqrt(2.0) * rho / w, am) *
                        std::assoc_laguerre(static_cast<unsigned>(label.transverse.nT),
                                            static_cast<unsigned>(am), u) *
                        std::exp(-rho * rho / (w * w));
  return Complex(radial, 0.0);
}

Jones from_helicity(Complex plus, Complex minus) {
  Jones out;
  out.x = (plus + minus) * kInvSqrt2;
  out.y = (plus - minus) * Complex(0.0, 1.0) * kInvSqrt2;
  return out;
}

HelicityAmplitudes to_helicity(const Jones& field) {
  HelicityAmplitudes out;
  out.plus = (field.x - Complex(0.0, 1.0) * field.y) * kInvSqrt2;
  out.minus = (field.x + Complex(0.0, 1.0) * field.y) * kInvSqrt2;
  return out;
}

Jones detection_amplitude(const ModeBasis& basis, const SuperpositionMode& mode,
                          double x, double y, double z, double t,
                          const FieldOptions& options) {
  const double rho = std::hypot(x, y);
  const double phi = std::atan2(y, x);
  Jones out;
  for (std::size_t k = 0; k < mode.coefficients.size(); ++k) {
    const Complex c = mode.coefficients[k];
    if (c == Complex(0.0, 0.0)) continue;
    const ModeLabel& label = basis.label(k);
    const Complex weight = options.kind == FieldKind::Electric
                               ? Complex(std::sqrt(label.omega), 0.0)
                               : Complex(0.0, -1.0 / std::sqrt(label.omega));
    const Complex profile = mode_function(label, rho, z, basis.z0(), options);
    const Complex amp = c * weight * options.scale * profile *
                        std::exp(Complex(0.0, label.m * phi - label.omega * t));
    const Jones term = label.s > 0 ? from_helicity(amp, Complex(0.0, 0.0))
                                   : from_helicity(Complex(0.0, 0.0), amp);
    out.x += term.x;
    out.y += term.y;
  }
  return out;
}

EllipseAngles polarization_ellipse(Complex ex, Complex ey) {
  const double s0 = std::norm(ex) + std::norm(ey);
  if (s0 < 1e-300) throw NullField("polarization undefined for a null field");
  const double s1 = std::norm(ex) - std::norm(ey);
  const Complex cross = std::conj(ex) * ey;
  const double s2 = 2.0 * cross.real();
  const double s3 = 2.0 * cross.imag();
  EllipseAngles angles;
  angles.psi = 0.5 * std::atan2(s2, s1);
  angles.chi = 0.5 * std::asin(std::clamp(s3 / s0, -1.0, 1.0));
  return angles;
}

double FieldSnapshot::coordinate(int i) const {
  const double h = 2.0 * grid.extent / (grid.n - 1);
  return -grid.extent + i * h;
}

double FieldSnapshot::component_intensity(std::size_t index,
                                          IntensityComponent c) const {
  switch (c) {
    case IntensityComponent::X: return std::norm(ex[index]);
    case IntensityComponent::Y: return std::norm(ey[index]);
    case IntensityComponent::Total: return intensity[index];
  }
  return 0.0;
}

double default_extent(const TransverseIndex& transverse) {
  return transverse.family == TransverseFamily::Bessel
             ? 4.0 / transverse.kT
             : 4.0 * transverse.waist;
}

namespace {

GridSpec resolve_grid(const ModeBasis& basis, const SuperpositionMode& mode,
                      GridSpec grid) {
  if (grid.n < 2) throw BadArgument("snapshot grid needs at least 2x2 points");
  if (grid.extent <= 0.0) {
    for (std::size_t k = 0; k < mode.coefficients.size(); ++k) {
      if (mode.coefficients[k] != Complex(0.0, 0.0)) {
        grid.extent = default_extent(basis.label(k).transverse);
        break;
      }
    }
    if (grid.extent <= 0.0) throw BadArgument("mode has no support");
  }
  return grid;
}

}  // namespace

FieldSnapshot snapshot(const ModeBasis& basis, const SuperpositionMode& mode,
                       const GridSpec& grid, double t,
                       const FieldOptions& options) {
  return snapshot(basis, mode, grid, t, basis.z0(), options);
}

FieldSnapshot snapshot(const ModeBasis& basis, const SuperpositionMode& mode,
                       const GridSpec& grid, double t, double z,
                       const FieldOptions& options) {
  FieldSnapshot snap;
  snap.grid = resolve_grid(basis, mode, grid);
  snap.t = t;
  snap.z = z;
  const int n = snap.grid.n;
  const std::size_t total = static_cast<std::size_t>(n) * n;
  snap.ex.resize(total);
  snap.ey.resize(total);
  snap.intensity.resize(total);
  snap.psi.resize(total);
  snap.chi.resize(total);
  parallel_for(total, [&](std::size_t begin, std::size_t end) {
    for (std::size_t p = begin; p < end; ++p) {
      const int ix = static_cast<int>(p % n);
      const int iy = static_cast<int>(p / n);
      const Jones field = detection_amplitude(
          basis, mode, snap.coordinate(ix), snap.coordinate(iy), z, t, options);
      snap.ex[p] = field.x;
      snap.ey[p] = field.y;
      const double s0 = std::norm(field.x) + std::norm(field.y);
      snap.intensity[p] = s0;
      if (s0 < 1e-300) {
        snap.psi[p] = 0.0;
        snap.chi[p] = 0.0;
      } else {
        const EllipseAngles angles = polarization_ellipse(field.x, field.y);
        snap.psi[p] = angles.psi;
        snap.chi[p] = angles.chi;
      }
    }
  });
  return snap;
}

namespace {

constexpr int kAzimuthBins = 256;
constexpr int kRingCount = 16;

double bilinear_component(const FieldSnapshot& snap, double x, double y,
                          IntensityComponent component) {
  const int n = snap.grid.n;
  const double h = 2.0 * snap.grid.extent / (n - 1);
  double fx = (x + snap.grid.extent) / h;
  double fy = (y + snap.grid.extent) / h;
  fx = std::clamp(fx, 0.0, static_cast<double>(n - 1));
  fy = std::clamp(fy, 0.0, static_cast<double>(n - 1));
  const int ix = std::min(static_cast<int>(fx), n - 2);
  const int iy = std::min(static_cast<int>(fy), n - 2);
  const double tx = fx - ix;
  const double ty = fy - iy;
  auto at = [&](int jx, int jy) {
    return snap.component_intensity(static_cast<std::size_t>(jy) * n + jx,
                                    component);
  };
  return (1.0 - tx) * (1.0 - ty) * at(ix, iy) + tx * (1.0 - ty) * at(ix + 1, iy) +
         (1.0 - tx) * ty * at(ix, iy + 1) + tx * ty * at(ix + 1, iy + 1);
}

std::vector<double> azimuthal_profile(const FieldSnapshot& snap,
                                      IntensityComponent component) {
  std::vector<double> profile(kAzimuthBins, 0.0);
  const double extent = snap.grid.extent;
  for (int j = 0; j < kRingCount; ++j) {
    const double r = (0.15 + 0.75 * j / (kRingCount - 1)) * extent;
    for (int i = 0; i < kAzimuthBins; ++i) {
      const double phi = 2.0 * kPi * i / kAzimuthBins;
      profile[i] +=
          bilinear_component(snap, r * std::cos(phi), r * std::sin(phi), component);
    }
  }
  return profile;
}

double wrap_to_pm_pi(double angle) {
  while (angle > kPi) angle -= 2.0 * kPi;
  while (angle <= -kPi) angle += 2.0 * kPi;
  return angle;
}

}  // namespace

double estimate_pattern_rotation(const FieldSnapshot& first,
                                 const FieldSnapshot& second,
                                 IntensityComponent component) {
  if (first.grid.n != second.grid.n || first.grid.extent != second.grid.extent)
    throw BadArgument("snapshots must share a grid");
  const double dt = second.t - first.t;
  if (dt == 0.0) throw BadArgument("snapshots must differ in time");

  const std::vector<double> a = azimuthal_profile(first, component);
  const std::vector<double> b = azimuthal_profile(second, component);
  // Rotating two-term patterns modulate at order one; modulation below 2% of
  // the peak is indistinguishable from bilinear interpolation noise, which
  // reaches ~1% on coarse grids.
  for (const auto& profile : {a, b}) {
    const auto [lo, hi] = std::minmax_element(profile.begin(), profile.end());
    if (*hi - *lo <= 2e-2 * std::max(*hi, 1e-300))
      throw NoAzimuthalStructure(
          "intensity has no azimuthal structure to track");
  }

  std::vector<double> corr(kAzimuthBins, 0.0);
  for (int d = 0; d < kAzimuthBins; ++d) {
    double c = 0.0;
    for (int i = 0; i < kAzimuthBins; ++i)
      c += a[i] * b[(i + d) % kAzimuthBins];
    corr[d] = c;
  }

  const auto [lo_it, hi_it] = std::minmax_element(corr.begin(), corr.end());
  const double cmax = *hi_it;
  const double band = 1e-9 * (cmax - *lo_it) + 1e-300;
  // Patterns with discrete rotational symmetry produce several equal peaks;
  // take the one closest to zero shift.
  const double bin = 2.0 * kPi / kAzimuthBins;
  int best = -1;
  double best_abs = 0.0;
  for (int d = 0; d < kAzimuthBins; ++d) {
    if (corr[d] < cmax - band) continue;
    const double shift = std::abs(wrap_to_pm_pi(d * bin));
    if (best < 0 || shift < best_abs) {
      best = d;
      best_abs = shift;
    }
  }

  const double cm = corr[(best + kAzimuthBins - 1) % kAzimuthBins];
  const double c0 = corr[best];
  const double cp = corr[(best + 1) % kAzimuthBins];
  double refine = 0.0;
  const double curvature = cm - 2.0 * c0 + cp;
  if (curvature != 0.0) refine = 0.5 * (cm - cp) / curvature;

  const double dphi = wrap_to_pm_pi((best + refine) * bin);
  return dphi / dt;
}

double estimate_polarization_rotation(const ModeBasis& basis,
                                      const SuperpositionMode& mode, double x,
                                      double y,
                                      const std::vector<double>& times,
                                      const FieldOptions& options) {
  if (times.size() < 2)
    throw BadArgument("need at least two sample times to estimate a rate");
  std::vector<double> unwrapped;
  unwrapped.reserve(times.size());
  double prev_raw = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const Jones field = detection_amplitude(basis, mode, x, y, basis.z0(),
                                            times[i], options);
    const EllipseAngles angles = polarization_ellipse(field.x, field.y);
    if (unwrapped.empty()) {
      unwrapped.push_back(angles.psi);
    } else {
      // psi is defined modulo pi; keep successive steps in (-pi/2, pi/2].
      double step = angles.psi - prev_raw;
      while (step > 0.5 * kPi) step -= kPi;
      while (step <= -0.5 * kPi) step += kPi;
      unwrapped.push_back(unwrapped.back() + step);
    }
    prev_raw = angles.psi;
  }
  double t_mean = 0.0, p_mean = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    t_mean += times[i];
    p_mean += unwrapped[i];
  }
  t_mean /= times.size();
  p_mean /= times.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    num += (times[i] - t_mean) * (unwrapped[i] - p_mean);
    den += (times[i] - t_mean) * (times[i] - t_mean);
  }
  if (den == 0.0) throw BadArgument("sample times must not coincide");
  return num / den;
}

FramePhaseCheck frame_rotation_phase_check(const ModeLabel& label, double Omega,
                                           double t) {
  const double j = static_cast<double>(label.m + label.s);
  const double shifted_omega = label.omega - Omega * j;
  if (shifted_omega <= 0.0)
    throw NonPositiveFrequency("rotating-frame companion frequency " +
                               std::to_string(shifted_omega) +
                               " is not positive");
  FramePhaseCheck check;
  check.phase_frame =
      std::exp(Complex(0.0, Omega * j * t)) * std::exp(Complex(0.0, -label.omega * t));
  check.phase_shifted = std::exp(Complex(0.0, -shifted_omega * t));
  check.mode_functions_equal = (Omega * j == 0.0);
  return check;
}

}  // namespace rotomode
