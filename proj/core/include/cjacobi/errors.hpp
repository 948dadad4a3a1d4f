#pragma once

#include <stdexcept>
#include <string>

namespace cjacobi {

// Machine-readable failure codes; the CLI maps these onto its error JSON
// and onto exit status 1 (input/validation) or 2 (numerical failure).
enum class errc {
  shape_error,
  zero_off_diagonal,
  arg_mismatch,
  svd_failure,
  zero_weight_atom,
  ill_conditioned,
  phase_out_of_range,
  degenerate_start,
  gauge_violation,
  moment_inconsistency,
  too_large,
  depth_error,
  mismatch_error,
  not_self_adjoint_data,
  domain_error,
  quadrature_failure,
  io_error,
};

const char* to_string(errc code);

// True for codes that indicate bad input rather than a numerical failure.
bool is_validation_error(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace cjacobi
