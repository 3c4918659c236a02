#ifndef ROTOMODE_ERRORS_HPP
#define ROTOMODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rotomode {

// Base class for every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct BadArgument : Error { using Error::Error; };
struct NonPositiveFrequency : Error { using Error::Error; };
struct BadHelicity : Error { using Error::Error; };
struct ParaxialityViolated : Error { using Error::Error; };
struct ShiftExceedsFrequency : Error { using Error::Error; };
struct DegenerateOrbitalPair : Error { using Error::Error; };
struct DegeneratePair : Error { using Error::Error; };
struct TruncationOverflow : Error { using Error::Error; };
struct BasisMismatch : Error { using Error::Error; };
struct UnnormalizedState : Error { using Error::Error; };
struct ZeroProbabilityBranch : Error { using Error::Error; };
struct LgOffFocalPlane : Error { using Error::Error; };
struct NullField : Error { using Error::Error; };
struct NoAzimuthalStructure : Error { using Error::Error; };
struct SupportCrossesZero : Error { using Error::Error; };
struct ZeroAbsorption : Error { using Error::Error; };

}  // namespace rotomode

#endif  // ROTOMODE_ERRORS_HPP
