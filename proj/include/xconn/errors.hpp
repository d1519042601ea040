#pragma once

#include <stdexcept>
#include <string>

namespace xconn {

/// Parameters fall outside the region where a closed form is asserted.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive search ran out of budget before reaching a conclusion.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xconn
