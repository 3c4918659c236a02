#ifndef ROTOMODE_MODES_HPP
#define ROTOMODE_MODES_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "rotomode/errors.hpp"

namespace rotomode {

using Complex = std::complex<double>;

constexpr double kDefaultParaxialityBound = 0.1;

enum class TransverseFamily { Bessel, LaguerreGauss };

// Location tag for bipartite protocol states; part of a mode's identity.
enum class Site { None, A, B };

// Remaining transverse quantum number of a paraxial mode: the transverse
// wavenumber k_T for a Bessel mode, or the radial node count n_T plus beam
// waist for a Laguerre-Gauss mode in the reference plane. Only the fields of
// the active family are meaningful.
struct TransverseIndex {
  TransverseFamily family = TransverseFamily::Bessel;
  double kT = 0.0;
  int nT = 0;
  double waist = 0.0;

  static TransverseIndex bessel(double kT);
  static TransverseIndex laguerre_gauss(int nT, double waist);

  bool operator==(const TransverseIndex& other) const;
  bool operator<(const TransverseIndex& other) const;
};

// One monochromatic basis mode (omega, m, s) plus transverse index and
// optional site tag.
struct ModeLabel {
  double omega = 0.0;  // angular frequency, > 0
  int m = 0;           // orbital angular momentum index
  int s = +1;          // helicity, exactly +1 or -1
  TransverseIndex transverse;
  Site site = Site::None;

  bool operator==(const ModeLabel& other) const;
  bool operator<(const ModeLabel& other) const;
};

// Validating constructor. The paraxiality gate k_T <= eps_par * omega applies
// to Bessel transverse indices (k_T << omega is assumed throughout).
ModeLabel make_mode_label(double omega, int m, int s,
                          const TransverseIndex& transverse,
                          Site site = Site::None,
                          double eps_par = kDefaultParaxialityBound);

// Weights of the unbalanced rotating superpositions:
//   cos_theta = sqrt((omega + delta) / (2 omega))
//   sin_theta = sqrt((omega - delta) / (2 omega))
// with delta the signed frequency shift.
struct ThetaWeights {
  double omega = 0.0;
  double delta = 0.0;
  double cos_theta = 0.0;
  double sin_theta = 0.0;

  // Weights of the co- and counter-rotating parts of the elliptical
  // polarization vector of an equal-weight rotating mode.
  double a_plus() const;   // (cos + sin)/sqrt(2)
  double a_minus() const;  // (cos - sin)/sqrt(2)
};

ThetaWeights theta_weights(double omega, double delta);

// Ordered set of distinct mode labels sharing one reference plane z = z0.
// Indices are stable; registration is idempotent.
class ModeBasis {
 public:
  explicit ModeBasis(double z0 = 0.0) : z0_(z0) {}

  // Appends the label if absent and returns its stable index.
  std::size_t register_label(const ModeLabel& label);

  std::optional<std::size_t> find(const ModeLabel& label) const;
  const ModeLabel& label(std::size_t index) const;
  std::size_t size() const { return labels_.size(); }
  double z0() const { return z0_; }

 private:
  double z0_;
  std::vector<ModeLabel> labels_;
  std::map<ModeLabel, std::size_t> index_;
};

}  // namespace rotomode

#endif  // ROTOMODE_MODES_HPP
