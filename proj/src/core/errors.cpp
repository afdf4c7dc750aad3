#include "errors.hpp"

namespace npick {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::pole_at_point: return "PoleAtPoint";
    case ErrorCode::level_out_of_range: return "LevelOutOfRange";
    case ErrorCode::bad_params: return "BadParams";
    case ErrorCode::ill_conditioned: return "IllConditioned";
    case ErrorCode::not_strictly_solvable: return "NotStrictlySolvable";
    case ErrorCode::step_blowup: return "StepBlowup";
    case ErrorCode::bad_weight: return "BadWeight";
    case ErrorCode::resolution_exceeded: return "ResolutionExceeded";
    case ErrorCode::quadrature_non_convergent: return "QuadratureNonConvergent";
    case ErrorCode::non_integrable_declaration: return "NonIntegrableDeclaration";
    case ErrorCode::contour_open: return "ContourOpen";
    case ErrorCode::grid_too_coarse: return "GridTooCoarse";
    case ErrorCode::divergence: return "Divergence";
    case ErrorCode::bad_input: return "BadInput";
    case ErrorCode::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace npick
