#include "densbench/error.hpp"

namespace densbench {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSymbol: return "unknown-symbol";
    case ErrorKind::UnsupportedStructure: return "unsupported-structure";
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidConfiguration: return "invalid-configuration";
    case ErrorKind::DegenerateState: return "degenerate-state";
  }
  return "error";
}

}  // namespace densbench
