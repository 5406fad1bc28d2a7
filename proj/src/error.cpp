#include "plab/error.hpp"

#include <sstream>

namespace plab {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ok: return "Ok";
    case ErrorCode::empty_element: return "EmptyElement";
    case ErrorCode::point_out_of_range: return "PointOutOfRange";
    case ErrorCode::not_functional: return "NotFunctional";
    case ErrorCode::not_injective: return "NotInjective";
    case ErrorCode::missing_identity: return "MissingIdentity";
    case ErrorCode::duplicate_element: return "DuplicateElement";
    case ErrorCode::unique_extension_violated: return "UniqueExtensionViolated";
    case ErrorCode::ground_set_mismatch: return "GroundSetMismatch";
    case ErrorCode::identity_not_preserved: return "IdentityNotPreserved";
    case ErrorCode::equivariance_violated: return "EquivarianceViolated";
    case ErrorCode::composition_not_preserved: return "CompositionNotPreserved";
    case ErrorCode::ground_set_too_large: return "GroundSetTooLarge";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::unknown_generator: return "UnknownGenerator";
    case ErrorCode::bad_exponent: return "BadExponent";
    case ErrorCode::empty_generator_list: return "EmptyGeneratorList";
    case ErrorCode::out_of_bounds: return "OutOfBounds";
    case ErrorCode::backend_inconclusive: return "BackendInconclusive";
    case ErrorCode::precondition_radius: return "PreconditionRadius";
    case ErrorCode::relator_not_killed: return "RelatorNotKilled";
    case ErrorCode::closure_cap_exceeded: return "ClosureCapExceeded";
    case ErrorCode::bad_group_table: return "BadGroupTable";
    case ErrorCode::not_extending: return "NotExtending";
    case ErrorCode::composition_broken: return "CompositionBroken";
    case ErrorCode::identity_not_full: return "IdentityNotFull";
    case ErrorCode::invalid_source: return "InvalidSource";
    case ErrorCode::not_a_permutation: return "NotAPermutation";
    case ErrorCode::not_rigid: return "NotRigid";
    case ErrorCode::not_free: return "NotFree";
    case ErrorCode::not_an_action: return "NotAnAction";
    case ErrorCode::group_closure_cap_exceeded: return "GroupClosureCapExceeded";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::internal: return "Internal";
  }
  return "Unknown";
}

void raise(ErrorCode code, std::vector<std::int64_t> indices, const std::string& detail) {
  std::ostringstream msg;
  msg << error_name(code);
  if (!indices.empty()) {
    msg << '(';
    for (std::size_t i = 0; i < indices.size(); ++i) msg << (i ? "," : "") << indices[i];
    msg << ')';
  }
  if (!detail.empty()) msg << ": " << detail;
  throw Error(code, msg.str(), std::move(indices));
}

}  // namespace plab
