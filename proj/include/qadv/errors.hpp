#pragma once

#include <stdexcept>
#include <string>

namespace qadv {

// Raised when an input violates a documented invariant (non-Hermitian
// matrix, trace != 1, dimension mismatch, malformed file, ...).
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an iteration produces non-finite values. Carries the epoch
// at which the failure was detected (-1 if not applicable).
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what, long epoch = -1)
        : std::runtime_error(what), epoch_(epoch) {}

    long epoch() const noexcept { return epoch_; }

  private:
    long epoch_;
};

}  // namespace qadv
