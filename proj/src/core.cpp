#include "ssg/core.hpp"

namespace ssg {

  char const* error_code_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::duplicate_id: return "DuplicateId";
      case ErrorCode::dangling_edge: return "DanglingEdge";
      case ErrorCode::non_composable: return "NonComposable";
      case ErrorCode::backend_mismatch: return "BackendMismatch";
      case ErrorCode::domain_mismatch: return "DomainMismatch";
      case ErrorCode::not_automorphism: return "NotAutomorphism";
      case ErrorCode::standing_hypothesis_violated:
        return "StandingHypothesisViolated";
      case ErrorCode::not_a_group: return "NotAGroup";
      case ErrorCode::not_idempotent: return "NotIdempotent";
      case ErrorCode::not_a_g_circuit: return "NotAGCircuit";
      case ErrorCode::wrong_shape: return "WrongShape";
      case ErrorCode::non_composable_germs: return "NonComposableGerms";
      case ErrorCode::condition0_violated: return "Condition0Violated";
      case ErrorCode::shape_mismatch: return "ShapeMismatch";
      case ErrorCode::abelianization_inconsistent:
        return "AbelianizationInconsistent";
      case ErrorCode::not_a_source: return "NotASource";
      case ErrorCode::not_infinite_receiver: return "NotInfiniteReceiver";
      case ErrorCode::orbit_not_computable: return "OrbitNotComputable";
      case ErrorCode::parse_error: return "ParseError";
      case ErrorCode::system_mismatch: return "SystemMismatch";
      case ErrorCode::invalid_argument: return "InvalidArgument";
    }
    return "Error";
  }

  bool is_validation_error(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::duplicate_id:
      case ErrorCode::dangling_edge:
      case ErrorCode::not_automorphism:
      case ErrorCode::standing_hypothesis_violated:
      case ErrorCode::not_a_group:
      case ErrorCode::condition0_violated:
      case ErrorCode::parse_error:
      case ErrorCode::abelianization_inconsistent:
        return true;
      default: return false;
    }
  }

  char const* answer_name(Answer a) noexcept {
    switch (a) {
      case Answer::yes: return "Yes";
      case Answer::no: return "No";
      case Answer::unknown: return "Unknown";
    }
    return "Unknown";
  }

}  // namespace ssg
