#pragma once

#include <stdexcept>
#include <string>

namespace teich {

// All library errors derive from Error so callers can catch the whole family.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedIsometry : Error { using Error::Error; };
struct NotHyperbolic : Error { using Error::Error; };
struct CrossingGeodesics : Error { using Error::Error; };

struct NoSuchHexagon : Error { using Error::Error; };
struct NoSuchPentagon : Error { using Error::Error; };
struct CuspEndpoint : Error { using Error::Error; };
struct CuspMismatch : Error { using Error::Error; };

struct NonHyperbolicType : Error { using Error::Error; };
struct NoBoundary : Error { using Error::Error; };

struct NotHyperbolicClass : Error { using Error::Error; };
struct CrossingAxes : Error { using Error::Error; };
struct NumericalDegeneracy : Error { using Error::Error; };

struct UncertifiedFamily : Error { using Error::Error; };
struct IsPants : Error { using Error::Error; };
struct NotInThickPart : Error { using Error::Error; };

struct ConfigError : Error { using Error::Error; };

}  // namespace teich
