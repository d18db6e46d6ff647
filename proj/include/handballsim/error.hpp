#pragma once

#include <stdexcept>

namespace hbsim {

// A tournament structure was violated at run time (impossible pairing, a pair
// asked to meet a third time, malformed wiring). Distinct from argument errors
// so callers can tell configuration mistakes from engine defects.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hbsim
