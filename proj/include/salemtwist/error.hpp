#pragma once

#include <stdexcept>
#include <string>

namespace salemtwist {

enum class ErrorCode {
  invalid_argument,
  rank_mismatch,
  index_out_of_range,
  inexact_division,
  no_real_root,
  zero_polynomial,
  parse_error,
  no_convention,
  invalid_permutation,
};

// All library failures are reported through this exception; the C API maps
// the code onto st_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace salemtwist
