#pragma once

#include <stdexcept>
#include <string>

namespace ellsl2 {

// Raised whenever an operation's precondition or parameter domain is
// violated (nonzero constant term under composition, k = 1 for K(k),
// non-invertible image of J+, ...). The CLI maps this to exit status 3.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace ellsl2
