#include "expdom/error.hpp"

namespace expdom {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedHeader: return "malformed_header";
    case ErrorKind::MalformedEdge: return "malformed_edge";
    case ErrorKind::MalformedGraph6: return "malformed_graph6";
    case ErrorKind::MalformedSet: return "malformed_set";
    case ErrorKind::VertexOutOfRange: return "vertex_out_of_range";
    case ErrorKind::DuplicateEdge: return "duplicate_edge";
    case ErrorKind::Loop: return "loop";
    case ErrorKind::Io: return "io";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotATree: return "not_a_tree";
    case ErrorKind::NotSubcubic: return "not_subcubic";
    case ErrorKind::NotCubic: return "not_cubic";
    case ErrorKind::Guard: return "guard";
    case ErrorKind::BudgetExhausted: return "budget_exhausted";
    case ErrorKind::StaleStep: return "stale_step";
    case ErrorKind::NotACover: return "not_a_cover";
    case ErrorKind::NotDominating: return "not_dominating";
    case ErrorKind::AlreadyDominating: return "already_dominating";
    case ErrorKind::UnknownName: return "unknown_name";
    case ErrorKind::BoundViolation: return "bound_violation";
    case ErrorKind::Integrity: return "integrity";
  }
  return "unknown";
}

}  // namespace expdom
