#include "qgauss/identities.hpp"

#include <string>

#include "qgauss/errors.hpp"

namespace qgauss {

namespace {

// 1 - q^m. m = 0 gives the zero polynomial.
IntPoly one_minus_qpow(long m) {
  return IntPoly::one() - IntPoly::monomial(m);
}

// 1 + q^k + q^{2k} + ... + q^{(m-1)k}, the expanded form of
// (1 - q^{mk})/(1 - q^k); empty (zero) when m = 0.
IntPoly geometric_qpow_sum(long m, long k) {
  IntPoly out;
  for (long t = 0; t < m; ++t) out += IntPoly::monomial(t * k);
  return out;
}

std::string at(const Params& params) {
  std::string s;
  for (const auto& [name, value] : params) s += " " + name + "=" + std::to_string(value);
  return s;
}

} // namespace

IdentityCheck vandermonde_form_j(long x, long y, long z) {
  if (x < 0 || y < 0 || z < 0)
    throw BadParamsError("vandermonde_form_j: parameters must be non-negative");
  IntPoly lhs;
  for (long j = 0; j <= z; ++j) {
    IntPoly term = q_binomial(x, z - j) * q_binomial(y, j);
    if (term.is_zero()) continue; // surviving terms have x - z + j >= 0
    lhs += term.shifted(j * (x - z + j));
  }
  IntPoly rhs = q_binomial(x + y, z);
  bool equal = lhs == rhs;
  return {"vandermonde-j", {{"x", x}, {"y", y}, {"z", z}}, std::move(lhs), std::move(rhs), equal};
}

IdentityCheck vandermonde_form_k(long x, long y, long z) {
  if (x < 0 || y < 0 || z < 0)
    throw BadParamsError("vandermonde_form_k: parameters must be non-negative");
  IntPoly lhs;
  for (long k = 0; k <= z; ++k) {
    IntPoly term = q_binomial(x, k) * q_binomial(y, z - k);
    if (term.is_zero()) continue;
    lhs += term.shifted((z - k) * (x - k));
  }
  IntPoly rhs = q_binomial(x + y, z);
  bool equal = lhs == rhs;
  return {"vandermonde-k", {{"x", x}, {"y", y}, {"z", z}}, std::move(lhs), std::move(rhs), equal};
}

namespace {

IdentityCheck square_weight_expansion(long u, long v) {
  IntPoly rhs;
  for (long k = 0; k <= u; ++k) {
    IntPoly term = q_binomial(u, k) * q_binomial(v, k);
    if (term.is_zero()) continue;
    rhs += term.shifted(k * k);
  }
  IntPoly lhs = q_binomial(u + v, u);
  bool equal = lhs == rhs;
  return {"remark1", {{"u", u}, {"v", v}}, std::move(lhs), std::move(rhs), equal};
}

} // namespace

std::pair<IdentityCheck, IdentityCheck> remark1_expansion(long a, long b, long c, long d) {
  if (a < 0 || b < 0 || c < 0 || d < 0 || a * d != b * c)
    throw BadQuadrupleError("remark1_expansion: need ad = bc, got a=" + std::to_string(a) +
                            " b=" + std::to_string(b) + " c=" + std::to_string(c) +
                            " d=" + std::to_string(d));
  return {square_weight_expansion(b, c), square_weight_expansion(a, d)};
}

CkCoefficient ck_coefficient(long i, long k) {
  if (i < 1 || k < 0) throw BadParamsError("ck_coefficient: need i >= 1, k >= 0");
  BigInt form_a = binomial(i + k - 1, 2 * k) + 2 * binomial(i + k - 1, 2 * k - 1) - binomial(i, k);

  BigInt contracted_num = (i + 3 * k) * binomial(i + k, 2 * k);
  if (contracted_num % (i + k) != 0)
    throw FormMismatchError("ck_coefficient: (i+3k) C(i+k,2k) not divisible by i+k at i=" +
                            std::to_string(i) + " k=" + std::to_string(k));
  BigInt form_b = contracted_num / (i + k) - binomial(i, k);

  BigInt form_c = binomial(i + k, 2 * k) + binomial(i + k - 1, 2 * k - 1) - binomial(i, k);

  if (form_a != form_b || form_a != form_c)
    throw FormMismatchError("ck_coefficient: closed forms disagree at i=" + std::to_string(i) +
                            " k=" + std::to_string(k) + ": " + form_a.str() + ", " +
                            form_b.str() + ", " + form_c.str());
  return {i, k, std::move(form_a)};
}

std::vector<std::vector<BigInt>> ck_table(long max_i) {
  if (max_i < 1) throw BadParamsError("ck_table: need max_i >= 1");
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(static_cast<size_t>(max_i));
  for (long i = 1; i <= max_i; ++i) {
    std::vector<BigInt> row;
    row.reserve(static_cast<size_t>(i));
    for (long k = 1; k <= i; ++k) row.push_back(ck_coefficient(i, k).value);
    rows.push_back(std::move(row));
  }
  return rows;
}

IntIdentityCheck i1_special_case(long a) {
  if (a < 1) throw BadParamsError("i1_special_case: need a >= 1");
  BigInt lhs = binomial(3 * a + 1, a + 1) - binomial(3 * a + 2, a);
  BigInt rhs = binomial(3 * a + 1, a - 1);
  bool equal = lhs == rhs;
  return {"i1-special", {{"a", a}}, std::move(lhs), std::move(rhs), equal};
}

IntIdentityCheck lemma1_check(long a, long i) {
  if (a < 1 || i < 1) throw BadParamsError("lemma1_check: need a, i >= 1");
  BigInt lhs = binomial(3 * a + 2 * i, a);
  BigInt rhs = 0;
  for (long k = 0; k <= a; ++k) rhs += binomial(i, k) * binomial(3 * a + i, a - k);
  bool equal = lhs == rhs;
  return {"lemma1", {{"a", a}, {"i", i}}, std::move(lhs), std::move(rhs), equal};
}

IntIdentityCheck lemma2_check(long a, long i) {
  if (a < 1 || i < 1) throw BadParamsError("lemma2_check: need a, i >= 1");
  BigInt lhs = binomial(3 * a + i, a + i);
  BigInt rhs = 0;
  BigInt rhs_bracket = 0;
  for (long k = 0; k <= a; ++k) {
    BigInt outer = binomial(3 * a + i, a - k);
    BigInt num = (i + 3 * k) * binomial(i + k, 2 * k);
    if (num % (i + k) != 0)
      throw NotDivisibleError("lemma2_check: (i+3k) C(i+k,2k) not divisible by i+k at" +
                              at({{"a", a}, {"i", i}, {"k", k}}));
    rhs += num / (i + k) * outer;
    rhs_bracket += (binomial(i + k, 2 * k) + binomial(i + k - 1, 2 * k - 1)) * outer;
  }
  // The statement and its restatement must both match; any split between
  // them is reported as a failure of this instance.
  bool equal = lhs == rhs && rhs == rhs_bracket;
  return {"lemma2", {{"a", a}, {"i", i}}, std::move(lhs), std::move(rhs), equal};
}

IntIdentityCheck theorem2_check(long a, long i) {
  if (a < 1 || i < 1) throw BadParamsError("theorem2_check: need a, i >= 1");
  BigInt lhs = binomial(3 * a + i, a + i) - binomial(3 * a + 2 * i, a);
  BigInt rhs = 0;
  for (long k = 1; k <= a; ++k) rhs += ck_coefficient(i, k).value * binomial(3 * a + i, a - k);
  bool equal = lhs == rhs;
  return {"theorem2", {{"a", a}, {"i", i}}, std::move(lhs), std::move(rhs), equal};
}

IdentityCheck lemma4_check(long a, long i) {
  if (a < 1 || i < 1) throw BadParamsError("lemma4_check: need a, i >= 1");
  IntPoly lhs = q_binomial(3 * a + 2 * i, a);
  IntPoly rhs;
  for (long k = 0; k <= a; ++k) {
    IntPoly term = q_binomial(i, k) * q_binomial(3 * a + i, a - k);
    if (term.is_zero()) continue; // surviving terms have k <= min(a, i)
    rhs += term.shifted((a - k) * (i - k));
  }
  bool equal = lhs == rhs;
  return {"lemma4", {{"a", a}, {"i", i}}, std::move(lhs), std::move(rhs), equal};
}

IdentityCheck lemma5_check(long a, long i) {
  if (a < 1 || i < 1) throw BadParamsError("lemma5_check: need a, i >= 1");
  IntPoly lhs = q_binomial(3 * a + i, a + i);
  IntPoly rhs;
  for (long k = 0; k <= a; ++k) {
    IntPoly bracket =
        q_binomial(i + k, 2 * k) + q_binomial(i + k - 1, 2 * k - 1).shifted(a + i);
    IntPoly term = bracket * q_binomial(3 * a + i, a - k);
    if (term.is_zero()) continue;
    rhs += term.shifted((a - k) * (i - k));
  }
  bool equal = lhs == rhs;
  return {"lemma5", {{"a", a}, {"i", i}}, std::move(lhs), std::move(rhs), equal};
}

IdentityCheck lemma6_check(long i, long k) {
  if (i < 1 || k < 1) throw BadParamsError("lemma6_check: need i, k >= 1");
  IntPoly lhs = q_binomial(i + k, 2 * k);
  IntPoly rhs = q_binomial(i, k);
  for (long r = 1; r <= k; ++r) rhs += q_binomial(i + r - 1, k + r).shifted(k + r);
  bool equal = lhs == rhs;
  return {"lemma6", {{"i", i}, {"k", k}}, std::move(lhs), std::move(rhs), equal};
}

NonnegCheck lemma7_check(long i, long k) {
  if (k < 0 || k > i) throw BadParamsError("lemma7_check: need 0 <= k <= i");
  IntPoly diff = q_binomial(i + k, i - k) - q_binomial(i, i - k);
  NonnegVerdict verdict = is_nonneg(diff);
  return {"lemma7", {{"i", i}, {"k", k}}, std::move(diff), verdict};
}

NonnegCheck theorem3_bracket(long a, long i, long k) {
  if (a < 1 || i < 1 || k < 1) throw BadParamsError("theorem3_bracket: need a, i, k >= 1");
  IntPoly bracket = q_binomial(i + k, 2 * k) +
                    q_binomial(i + k - 1, 2 * k - 1).shifted(a + i) - q_binomial(i, k);
  NonnegVerdict verdict = is_nonneg(bracket);
  return {"theorem3-bracket", {{"a", a}, {"i", i}, {"k", k}}, std::move(bracket), verdict};
}

RatFun lemma8_rhs_term(long a, long b, long k, long i) {
  if (i < 1 || i > k) throw BadParamsError("lemma8_rhs_term: need 1 <= i <= k");
  IntPoly num = one_minus_qpow(b - a).shifted(a + i);
  IntPoly den = one_minus_qpow(b + i);
  for (long j = i; j <= k; ++j) {
    num = num * one_minus_qpow(j);
    den = den * one_minus_qpow(a + j);
  }
  for (long j = 1; j <= i - 1; ++j) {
    num = num * one_minus_qpow(j);
    den = den * one_minus_qpow(b + j);
  }
  return RatFun(std::move(num), std::move(den));
}

RatIdentityCheck lemma8_check(long a, long b, long k) {
  if (k < 0 || k > a || a >= b) throw BadParamsError("lemma8_check: need 0 <= k <= a < b");
  RatFun lhs = rat_sub(RatFun(IntPoly::one(), q_binomial(a + k, k)),
                       RatFun(IntPoly::one(), q_binomial(b + k, k)));
  RatFun rhs = RatFun::zero();
  for (long i = 1; i <= k; ++i) rhs = rat_add(rhs, lemma8_rhs_term(a, b, k, i));
  bool equal = rat_equal(lhs, rhs);
  return {"lemma8", {{"a", a}, {"b", b}, {"k", k}}, std::move(lhs), std::move(rhs), equal};
}

Lemma9Check lemma9_check(long n, long k) {
  if (k < 1 || 2 * k > n) throw BadParamsError("lemma9_check: need 1 <= k and 2k <= n");
  const IntPoly u = q_binomial(n, k - 1);
  IntPoly diff = q_binomial(n, k) - u;

  const long alpha = n / k;
  const long d = n % k; // n = alpha*k + d, 0 <= d < k, alpha >= 2
  IntPoly first = (u * geometric_qpow_sum(alpha - 2, k)).shifted(k);
  IntPoly second_quotient = exact_div(u * one_minus_qpow(d + 1), one_minus_qpow(k));
  IntPoly second = second_quotient.shifted((alpha - 1) * k);

  Lemma9Check out;
  out.n = n;
  out.k = k;
  out.nonneg = is_nonneg(diff);
  out.decomposition_exact = first + second == diff;
  out.u_symmetric = is_symmetric(u);
  out.u_unimodal = is_unimodal(u).ok;
  out.diff = std::move(diff);
  return out;
}

} // namespace qgauss
