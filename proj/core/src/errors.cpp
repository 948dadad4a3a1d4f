#include "cjacobi/errors.hpp"

namespace cjacobi {

const char* to_string(errc code) {
  switch (code) {
    case errc::shape_error: return "ShapeError";
    case errc::zero_off_diagonal: return "ZeroOffDiagonal";
    case errc::arg_mismatch: return "ArgMismatch";
    case errc::svd_failure: return "SvdFailure";
    case errc::zero_weight_atom: return "ZeroWeightAtom";
    case errc::ill_conditioned: return "IllConditioned";
    case errc::phase_out_of_range: return "PhaseOutOfRange";
    case errc::degenerate_start: return "DegenerateStart";
    case errc::gauge_violation: return "GaugeViolation";
    case errc::moment_inconsistency: return "MomentInconsistency";
    case errc::too_large: return "TooLarge";
    case errc::depth_error: return "DepthError";
    case errc::mismatch_error: return "MismatchError";
    case errc::not_self_adjoint_data: return "NotSelfAdjointData";
    case errc::domain_error: return "DomainError";
    case errc::quadrature_failure: return "QuadratureFailure";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

bool is_validation_error(errc code) {
  switch (code) {
    case errc::shape_error:
    case errc::zero_off_diagonal:
    case errc::arg_mismatch:
    case errc::zero_weight_atom:
    case errc::phase_out_of_range:
    case errc::too_large:
    case errc::depth_error:
    case errc::mismatch_error:
    case errc::not_self_adjoint_data:
    case errc::domain_error:
    case errc::io_error:
      return true;
    default:
      return false;
  }
}

}  // namespace cjacobi
