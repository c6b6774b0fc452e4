#ifndef QGAUSS_IDENTITIES_HPP
#define QGAUSS_IDENTITIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "qgauss/intpoly.hpp"
#include "qgauss/qkernel.hpp"
#include "qgauss/ratfun.hpp"

namespace qgauss {

/// Named parameters of one check instance, in display order.
using Params = std::vector<std::pair<std::string, long>>;

/// Two independently computed polynomial sides. Both sides are kept so a
/// failing check can show its witness instead of a bare boolean.
struct IdentityCheck {
  std::string name;
  Params params;
  IntPoly lhs;
  IntPoly rhs;
  bool equal = false;
};

/// Same, over exact integers (the q = 1 checks run on the independent
/// integer kernel, never through polynomial evaluation).
struct IntIdentityCheck {
  std::string name;
  Params params;
  BigInt lhs;
  BigInt rhs;
  bool equal = false;
};

/// A coefficientwise non-negativity claim with its witness polynomial.
struct NonnegCheck {
  std::string name;
  Params params;
  IntPoly diff;
  NonnegVerdict verdict;
};

/// Two sides compared as rational functions by cross-multiplication.
struct RatIdentityCheck {
  std::string name;
  Params params;
  RatFun lhs;
  RatFun rhs;
  bool equal = false;
};

/// q-Vandermonde-Chu,
///   sum_j [X choose Z-j]_q [Y choose j]_q q^{j(X-Z+j)} = [X+Y choose Z]_q.
IdentityCheck vandermonde_form_j(long x, long y, long z);

/// The same convolution with the complementary summand,
///   sum_k q^{(Z-k)(X-k)} [X choose k]_q [Y choose Z-k]_q = [X+Y choose Z]_q.
IdentityCheck vandermonde_form_k(long x, long y, long z);

/// For a quadruple with ad = bc, the square-weighted expansions of both
/// sides of the Gaussian-binomial inequality:
///   [b+c choose b]_q = sum_{k=0}^{b} [b choose k]_q [c choose k]_q q^{k^2}
/// and the analogous expansion of [a+d choose a]_q.
/// Throws BadQuadrupleError when ad != bc.
std::pair<IdentityCheck, IdentityCheck> remark1_expansion(long a, long b, long c, long d);

struct CkCoefficient {
  long i = 0;
  long k = 0;
  BigInt value;
};

/// The expansion coefficient c_k(i), computed three ways and asserted
/// identical (FormMismatchError otherwise):
///   (A) C(i+k-1, 2k) + 2 C(i+k-1, 2k-1) - C(i, k)
///   (B) (i+3k)/(i+k) * C(i+k, 2k) - C(i, k)   (division exact)
///   (C) C(i+k, 2k) + C(i+k-1, 2k-1) - C(i, k)
/// c_0(i) = 0 for every i.
CkCoefficient ck_coefficient(long i, long k);

/// Triangle of c_k(i) values, rows i = 1..max_i, entries k = 1..i.
std::vector<std::vector<BigInt>> ck_table(long max_i);

/// The i = 1 base identity C(3a+1, a+1) - C(3a+2, a) = C(3a+1, a-1).
IntIdentityCheck i1_special_case(long a);

/// C(3a+2i, a) = sum_k C(i, k) C(3a+i, a-k).
IntIdentityCheck lemma1_check(long a, long i);

/// C(3a+i, a+i) = sum_k (i+3k)/(i+k) C(i+k, 2k) C(3a+i, a-k), with the
/// prefactor handled in exact integer arithmetic (divisibility asserted)
/// and the bracket restatement
///   sum_k [C(i+k, 2k) + C(i+k-1, 2k-1)] C(3a+i, a-k)
/// computed as well; equal is true only when all three agree.
IntIdentityCheck lemma2_check(long a, long i);

/// C(3a+i, a+i) - C(3a+2i, a) = sum_{k>=1} c_k(i) C(3a+i, a-k).
IntIdentityCheck theorem2_check(long a, long i);

/// [3a+2i choose a]_q = sum_k q^{(a-k)(i-k)} [i choose k]_q [3a+i choose a-k]_q.
IdentityCheck lemma4_check(long a, long i);

/// [3a+i choose a+i]_q = sum_k q^{(a-k)(i-k)}
///     ([i+k choose 2k]_q + q^{a+i} [i+k-1 choose 2k-1]_q) [3a+i choose a-k]_q.
IdentityCheck lemma5_check(long a, long i);

/// [i+k choose 2k]_q = [i choose k]_q + sum_{r=1}^{k} q^{k+r} [i+r-1 choose k+r]_q.
/// Holds (vacuously, both sides zero) for k > i as well, so only
/// i >= 1, k >= 1 is required.
IdentityCheck lemma6_check(long i, long k);

/// [i+k choose i-k]_q - [i choose i-k]_q has non-negative coefficients,
/// for 0 <= k <= i.
NonnegCheck lemma7_check(long i, long k);

/// The bracket [i+k choose 2k]_q + q^{a+i} [i+k-1 choose 2k-1]_q
/// - [i choose k]_q has non-negative coefficients.
NonnegCheck theorem3_bracket(long a, long i, long k);

/// Term i of the partial-fraction expansion below.
RatFun lemma8_rhs_term(long a, long b, long k, long i);

/// Partial-fraction identity, for 0 <= k <= a < b:
///   1/[a+k choose k]_q - 1/[b+k choose k]_q
///     = sum_{i=1}^{k} q^{a+i} (1-q^{b-a})/(1-q^{b+i})
///         prod_{j=i}^{k} (1-q^j)/(1-q^{a+j})
///         prod_{j=1}^{i-1} (1-q^j)/(1-q^{b+j}).
/// Empty products are 1; the k = 0 instance is 0 = 0.
RatIdentityCheck lemma8_check(long a, long b, long k);

struct Lemma9Check {
  long n = 0;
  long k = 0;
  /// [n choose k]_q - [n choose k-1]_q.
  IntPoly diff;
  NonnegVerdict nonneg;
  /// Writing n = alpha*k + d with 0 <= d < k, the difference must equal
  ///   q^k U (1 + q^k + ... + q^{(alpha-3)k})
  ///   + q^{(alpha-1)k} * exact_div(U (1 - q^{d+1}), 1 - q^k)
  /// with U = [n choose k-1]_q; the quotient's exactness is part of the
  /// claim (NotDivisibleError propagates on failure).
  bool decomposition_exact = false;
  bool u_symmetric = false;
  bool u_unimodal = false;
  bool ok() const { return nonneg.ok && decomposition_exact && u_symmetric && u_unimodal; }
};

/// The ladder inequality [n choose k]_q >= [n choose k-1]_q for
/// 1 <= k, 2k <= n, plus the exact decomposition that proves it.
Lemma9Check lemma9_check(long n, long k);

} // namespace qgauss

#endif
