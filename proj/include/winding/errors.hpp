#pragma once

#include <stdexcept>
#include <string>

namespace winding {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WINDING_DEFINE_ERROR(Name)        \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// Geometry and polylines.
WINDING_DEFINE_ERROR(InvalidPolyline);
WINDING_DEFINE_ERROR(EndpointMismatch);
WINDING_DEFINE_ERROR(ZeroPower);
WINDING_DEFINE_ERROR(PointOnCurve);

// Graphs and drawings.
WINDING_DEFINE_ERROR(InvalidGraph);
WINDING_DEFINE_ERROR(NotACycle);
WINDING_DEFINE_ERROR(NotAlmostEmbedding);
WINDING_DEFINE_ERROR(SamplerExhausted);

// Constructions.
WINDING_DEFINE_ERROR(DegenerateTriangle);
WINDING_DEFINE_ERROR(ConstructionFailure);
WINDING_DEFINE_ERROR(SeparationFailure);
WINDING_DEFINE_ERROR(InputsIntersect);
WINDING_DEFINE_ERROR(PathNotFound);
WINDING_DEFINE_ERROR(NotSimple);
WINDING_DEFINE_ERROR(ParityViolation);

// Persistence.
WINDING_DEFINE_ERROR(SchemaError);
WINDING_DEFINE_ERROR(BadRational);

#undef WINDING_DEFINE_ERROR

/// Raised when f(j) lies on the image of the cycle whose winding is requested.
class WindingUndefined : public Error {
 public:
  explicit WindingUndefined(int vertex)
      : Error("winding number undefined: vertex " + std::to_string(vertex) +
              " lies on the image of the cycle"),
        vertex_(vertex) {}

  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

}  // namespace winding
