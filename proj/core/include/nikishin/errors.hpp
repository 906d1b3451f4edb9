#pragma once

#include <stdexcept>
#include <string>

namespace nikishin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgumentError : Error {
  using Error::Error;
};

// Raised when two BigFloat values carrying different precisions meet.
struct PrecisionMismatch : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  SingularMatrix(const std::string& what, int rank_found) : Error(what), rank(rank_found) {}
  int rank;
};

struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, double worst_residual)
      : Error(what), worst(worst_residual) {}
  double worst;
};

// Evaluation on a branch cut without a side, or too close to a branch point.
struct BranchError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

}  // namespace nikishin
