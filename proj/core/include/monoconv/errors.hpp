#ifndef MONOCONV_ERRORS_HPP_
#define MONOCONV_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace monoconv {

// A requested size (n, m, depth) is over the configured enumeration bound.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Input fails a structural precondition (sign string, pairing, basis tuple, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A complex or real argument lies outside the region where a transform is defined.
class NumericalDomainError : public std::domain_error {
 public:
  NumericalDomainError(const std::string& what, int stage = -1)
      : std::domain_error(what), stage_(stage) {}

  // Composition stage at which the value left the domain, or -1.
  int stage() const noexcept { return stage_; }

 private:
  int stage_;
};

// Cross-checks that must hold by construction did not (interpolant, quadrature, ...).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monoconv

#endif  // MONOCONV_ERRORS_HPP_
