#pragma once

#include <stdexcept>
#include <string>

namespace npick {

enum class ErrorCode {
  invalid_argument,
  pole_at_point,
  level_out_of_range,
  bad_params,
  ill_conditioned,
  not_strictly_solvable,
  step_blowup,
  bad_weight,
  resolution_exceeded,
  quadrature_non_convergent,
  non_integrable_declaration,
  contour_open,
  grid_too_coarse,
  divergence,
  bad_input,
  internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace npick
