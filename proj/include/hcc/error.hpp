#pragma once

#include <stdexcept>
#include <string>

namespace hcc {

/// Malformed input: bad text, wrong modulus, inconsistent arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction would exceed the configured matrix/group size cap.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A homomorphism does not send every relator to the identity.
class IncompatibleHomomorphism : public InputError {
 public:
  IncompatibleHomomorphism(std::string msg, std::size_t relator)
      : InputError(std::move(msg)), relator_(relator) {}
  std::size_t relator() const noexcept { return relator_; }

 private:
  std::size_t relator_;
};

}  // namespace hcc
