#include "matchflip/error.hpp"

namespace matchflip {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::InvalidFlip: return "InvalidFlip";
    case ErrorCode::InvalidSlide: return "InvalidSlide";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::NotPerfect: return "NotPerfect";
    case ErrorCode::OrderInvalid: return "OrderInvalid";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::NotOuterplanar: return "NotOuterplanar";
    case ErrorCode::NotACograph: return "NotACograph";
    case ErrorCode::CycleInDifference: return "CycleInDifference";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::MalformedMachine: return "MalformedMachine";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::UnbalancedSides: return "UnbalancedSides";
    case ErrorCode::KOdd: return "KOdd";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace matchflip
