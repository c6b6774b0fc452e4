#ifndef QGAUSS_INTPOLY_HPP
#define QGAUSS_INTPOLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qgauss/numeric.hpp"

namespace qgauss {

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. Index j of the coefficient vector holds the coefficient
/// of q^j. Canonical form: the last stored coefficient is nonzero, or the
/// vector is empty (the zero polynomial). The zero polynomial has no
/// degree; degree() returns nullopt for it rather than a sentinel like -1.
///
/// Values are immutable in spirit: every operation returns a fresh
/// polynomial, so instances can be shared freely across scan workers.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return constant(1); }
  static IntPoly constant(BigInt c);
  /// c * q^exp, exp >= 0.
  static IntPoly monomial(long exp, BigInt c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<long> degree() const;
  /// Coefficient of q^j; zero outside the stored range (j may be any value).
  const BigInt& coeff(long j) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Multiply by q^m, m >= 0.
  IntPoly shifted(long m) const;
  /// Sum of coefficients, i.e. the polynomial evaluated at q = 1.
  BigInt eval_at_one() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& r);
  IntPoly& operator-=(const IntPoly& r);

  friend IntPoly operator+(const IntPoly& p, const IntPoly& r);
  friend IntPoly operator-(const IntPoly& p, const IntPoly& r);
  friend IntPoly operator*(const IntPoly& p, const IntPoly& r);
  friend bool operator==(const IntPoly& p, const IntPoly& r) { return p.coeffs_ == r.coeffs_; }
  friend bool operator!=(const IntPoly& p, const IntPoly& r) { return !(p == r); }

  /// Sparse human-readable form, e.g. "1 + 2q^2 - q^5". Dense JSON
  /// serialization lives with the report code.
  std::string to_string() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact quotient p / d. Throws NotDivisibleError if the division leaves a
/// remainder; throws std::invalid_argument if d is zero. A nonzero
/// remainder is never truncated silently: callers rely on this to detect
/// falsified divisibility claims.
IntPoly exact_div(const IntPoly& p, const IntPoly& d);

struct NonnegVerdict {
  bool ok = true;
  /// Least exponent with a negative coefficient, present iff !ok.
  std::optional<long> first_negative;
};

/// Coefficientwise non-negativity.
NonnegVerdict is_nonneg(const IntPoly& p);

/// Palindromicity about the polynomial's own degree. The zero polynomial
/// is symmetric.
bool is_symmetric(const IntPoly& p);

/// Palindromicity about a fixed ambient degree: coeff(j) == coeff(D - j)
/// for 0 <= j <= D, with implicit zeros above the stored degree. Needed
/// when low and high coefficients of a difference cancel and the stored
/// degree no longer matches the degree both operands shared.
bool is_symmetric(const IntPoly& p, long ambient_degree);

struct UnimodalVerdict {
  bool ok = true;
  /// First exponent where the sequence strictly increases after a strict
  /// decrease, present iff !ok.
  std::optional<long> first_violation;
};

/// A sequence is unimodal when it never strictly increases after a strict
/// decrease.
UnimodalVerdict is_unimodal(const IntPoly& p);

} // namespace qgauss

#endif
