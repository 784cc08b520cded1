#include "rigidlift/error.hpp"

namespace rigidlift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorKind::MissingBaseEdge: return "MissingBaseEdge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::NotTwoEdgeConnected: return "NotTwoEdgeConnected";
    case ErrorKind::NotTwoConnected: return "NotTwoConnected";
    case ErrorKind::NoCommonCycle: return "NoCommonCycle";
    case ErrorKind::BaseEdgeInArch: return "BaseEdgeInArch";
    case ErrorKind::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::NotInCycleSpace: return "NotInCycleSpace";
    case ErrorKind::NonIntegralClass: return "NonIntegralClass";
    case ErrorKind::BiorientedPresent: return "BiorientedPresent";
    case ErrorKind::InvalidMove: return "InvalidMove";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::QIsEffective: return "QIsEffective";
    case ErrorKind::NotFullyOriented: return "NotFullyOriented";
    case ErrorKind::NotBijection: return "NotBijection";
    case ErrorKind::BaseNotPreserved: return "BaseNotPreserved";
    case ErrorKind::InvalidCyclicBijection: return "InvalidCyclicBijection";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::MorphismIsRigid: return "MorphismIsRigid";
    case ErrorKind::MorphismNotRigid: return "MorphismNotRigid";
    case ErrorKind::NotLiftable: return "NotLiftable";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::LoopEdge:
    case ErrorKind::Disconnected:
    case ErrorKind::DuplicateEdgeId:
    case ErrorKind::MissingBaseEdge:
    case ErrorKind::UnknownVertex:
    case ErrorKind::UnknownEdge:
    case ErrorKind::NotBijection:
    case ErrorKind::BaseNotPreserved:
    case ErrorKind::InvalidCyclicBijection:
    case ErrorKind::WrongDegree:
    case ErrorKind::DegreeMismatch:
    case ErrorKind::DegreeTooHigh:
    case ErrorKind::BiorientedPresent:
    case ErrorKind::NotTwoEdgeConnected:
    case ErrorKind::NotTwoConnected:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace rigidlift
