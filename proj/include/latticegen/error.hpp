#pragma once

#include <stdexcept>
#include <string>

namespace latticegen {

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void expects(bool condition, const char* what) {
  if (!condition) throw ContractViolation(what);
}

inline void expects(bool condition, const std::string& what) {
  if (!condition) throw ContractViolation(what);
}

}  // namespace latticegen
