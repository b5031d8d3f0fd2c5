#ifndef NILREAL_ERRORS_HPP
#define NILREAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilreal {

/// Raised when a requested conjugator provably does not exist.
class ObstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotReal : public ObstructionError {
 public:
  using ObstructionError::ObstructionError;
};

class NotStronglyReal : public ObstructionError {
 public:
  using ObstructionError::ObstructionError;
};

class NotRealInIdentityComponent : public ObstructionError {
 public:
  using ObstructionError::ObstructionError;
};

/// The requested check has no meaning for this family.
class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nilreal

#endif  // NILREAL_ERRORS_HPP
