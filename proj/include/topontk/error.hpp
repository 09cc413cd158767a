#pragma once

#include <stdexcept>
#include <string>

namespace topontk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TOPONTK_DEFINE_ERROR(Name)                    \
  class Name : public Error {                         \
   public:                                            \
    explicit Name(const std::string& what_arg)        \
        : Error(std::string(#Name ": ") + what_arg) {} \
  }

// complex
TOPONTK_DEFINE_ERROR(ClosureViolation);
TOPONTK_DEFINE_ERROR(IndexOutOfRange);
TOPONTK_DEFINE_ERROR(TooSmall);
// hodge / learn
TOPONTK_DEFINE_ERROR(DegenerateRank);
TOPONTK_DEFINE_ERROR(DimensionMismatch);
TOPONTK_DEFINE_ERROR(SolveFailure);
// activations / ntk
TOPONTK_DEFINE_ERROR(NegativeVariance);
TOPONTK_DEFINE_ERROR(ZeroVarianceDerivative);
TOPONTK_DEFINE_ERROR(FeatureDimMismatch);
// experiments
TOPONTK_DEFINE_ERROR(DegenerateSubspace);
// dblp
TOPONTK_DEFINE_ERROR(FormatError);
TOPONTK_DEFINE_ERROR(InsufficientCandidates);
// generic argument validation
TOPONTK_DEFINE_ERROR(InvalidArgument);

#undef TOPONTK_DEFINE_ERROR

}  // namespace topontk
