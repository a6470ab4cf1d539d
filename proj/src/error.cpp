#include "tap/error.hpp"

namespace tap {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedTree: return "disconnected_tree";
    case ErrorCode::CycleDetected: return "cycle_detected";
    case ErrorCode::UnknownVertex: return "unknown_vertex";
    case ErrorCode::UnknownEdge: return "unknown_edge";
    case ErrorCode::UnknownLink: return "unknown_link";
    case ErrorCode::NegativeCost: return "negative_cost";
    case ErrorCode::SelfLoopLink: return "self_loop_link";
    case ErrorCode::DuplicateId: return "duplicate_id";
    case ErrorCode::UncoverableEdge: return "uncoverable_edge";
    case ErrorCode::EvenBoundary: return "even_boundary";
    case ErrorCode::TooLarge: return "too_large";
    case ErrorCode::MalformedProblem: return "malformed_problem";
    case ErrorCode::NotFeasible: return "not_feasible";
    case ErrorCode::NotStarShaped: return "not_star_shaped";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::LevelOutOfRange: return "level_out_of_range";
    case ErrorCode::NotLeafToLeaf: return "not_leaf_to_leaf";
    case ErrorCode::ParseError: return "parse_error";
  }
  return "unknown_error";
}

}  // namespace tap
