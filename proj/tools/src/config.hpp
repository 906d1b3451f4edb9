#pragma once

#include <string>
#include <vector>

#include "nikishin/bigfloat.hpp"

namespace nikishin::cli {

enum class Format { Csv, Json };

struct RunConfig {
  unsigned precision_bits = 256;
  bool precision_given = false;  // otherwise n-dependent precision is used where it matters
  std::vector<int> n_list{4, 8, 16};
  int m1 = 48, m2 = 48;
  double tol = 1e-8;
  std::string out_dir = ".";
  Format format = Format::Csv;
  unsigned long seed = 20141016;
  int threads = 1;
  bool to_stdout = false;

  PrecCtx ctx() const { return PrecCtx(precision_bits); }
  // working precision for index n
  PrecCtx ctx_for(int n) const;
};

// exit codes
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kIoError = 2;
constexpr int kNoConvergence = 3;
constexpr int kCheckFailed = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nikishin::cli
