#ifndef QGAUSS_ERRORS_HPP
#define QGAUSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgauss {

// Polynomial long division left a nonzero remainder. Quotients in this
// library are always claimed-exact, so this signals a falsified identity
// rather than a recoverable condition.
struct NotDivisibleError : std::runtime_error {
  explicit NotDivisibleError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration request beyond the brute-force bound.
struct TooLargeError : std::domain_error {
  explicit TooLargeError(const std::string& what) : std::domain_error(what) {}
};

// (a, b, c, d) violates 0 < a <= b < c <= d or ad != bc.
struct BadQuadrupleError : std::invalid_argument {
  explicit BadQuadrupleError(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter tuple outside an operation's stated domain.
struct BadParamsError : std::invalid_argument {
  explicit BadParamsError(const std::string& what) : std::invalid_argument(what) {}
};

// The closed forms that are supposed to produce the same coefficient
// disagreed at some instance.
struct FormMismatchError : std::runtime_error {
  explicit FormMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// check-identity was asked for a name that is not registered.
struct UnknownIdentityError : std::invalid_argument {
  explicit UnknownIdentityError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qgauss

#endif
