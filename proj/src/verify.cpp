#include "qgauss/verify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qgauss/errors.hpp"
#include "qgauss/qkernel.hpp"

namespace qgauss {

bool ConjectureInstance::passes() const {
  switch (which) {
    case Conjecture::C1: return symmetric && nonneg.ok;
    case Conjecture::C2: return symmetric && nonneg.ok && unimodal.ok;
    case Conjecture::C3: return nonneg.ok;
    case Conjecture::C4: return nonneg.ok && forms_equivalent;
  }
  return false;
}

namespace {

// Admission is deliberately one notch wider than the strict chain
// a <= b < c <= d: instances with b = c (such as (1,2,2,4), the smallest
// quadruple with a nonzero difference) are well-formed and scanned too.
void require_quadruple(long a, long b, long c, long d) {
  if (a < 1 || a > b || b > c || c > d || a * d != b * c)
    throw BadQuadrupleError("need 0 < a <= b <= c <= d with ad = bc, got a=" +
                            std::to_string(a) + " b=" + std::to_string(b) + " c=" +
                            std::to_string(c) + " d=" + std::to_string(d));
}

} // namespace

IntPoly bergeron_diff(long a, long b, long c, long d) {
  require_quadruple(a, b, c, d);
  return q_binomial(b + c, b) - q_binomial(a + d, a);
}

ConjectureInstance check_c1_c2(long a, long b, long c, long d, Conjecture which) {
  if (which != Conjecture::C1 && which != Conjecture::C2)
    throw BadParamsError("check_c1_c2: which must be C1 or C2");
  ConjectureInstance inst;
  inst.which = which;
  inst.params = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
  inst.diff = bergeron_diff(a, b, c, d);
  inst.ambient_degree = a * d;
  inst.nonneg = is_nonneg(inst.diff);
  inst.symmetric = is_symmetric(inst.diff, inst.ambient_degree);
  inst.unimodal = is_unimodal(inst.diff);
  inst.degenerate = a == b;
  return inst;
}

std::vector<Quadruple> quadruples_with_product(long n) {
  std::vector<Quadruple> out;
  if (n < 1) return out;
  std::vector<long> divisors;
  for (long v = 1; v <= n; ++v)
    if (n % v == 0) divisors.push_back(v);
  for (long a : divisors) {
    if (a * a >= n) break; // a < d, which drops only the all-equal tuple
    for (long b : divisors) {
      if (b < a || b * b > n) continue; // b <= c = n/b; c <= d holds since a <= b
      out.push_back({a, b, n / b, n / a, n, a == b});
    }
  }
  return out;
}

std::vector<Quadruple> enumerate_quadruples(long max_n) {
  std::vector<Quadruple> out;
  for (long n = 1; n <= max_n; ++n) {
    auto slice = quadruples_with_product(n);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

ConjectureInstance check_c3(long a, long b, long beta) {
  if (a < 1 || a >= b || beta < 1)
    throw BadParamsError("check_c3: need 0 < a < b and beta >= 1");
  ConjectureInstance inst;
  inst.which = Conjecture::C3;
  inst.params = {{"a", a}, {"b", b}, {"beta", beta}};
  inst.diff = q_binomial(b + beta * a, b) - q_binomial(a + beta * b, a);
  inst.ambient_degree = beta * a * b;
  inst.nonneg = is_nonneg(inst.diff);
  inst.symmetric = is_symmetric(inst.diff, inst.ambient_degree);
  inst.unimodal = is_unimodal(inst.diff);
  return inst;
}

ConjectureInstance check_c4(long a, long b, long k) {
  if (k < 0 || k > a || a >= b)
    throw BadParamsError("check_c4: need 0 <= k <= a < b");
  ConjectureInstance inst;
  inst.which = Conjecture::C4;
  inst.params = {{"a", a}, {"b", b}, {"k", k}};
  IntPoly larger = q_binomial(a, k) * q_binomial(a + b, b - k);
  IntPoly smaller = q_binomial(b, k) * q_binomial(a + b, a - k);
  inst.diff = larger - smaller;
  // The two products have different degrees for k >= 1; judge ambient
  // quantities about the larger one.
  inst.ambient_degree = a * b + k * b - 2 * k * k;
  inst.nonneg = is_nonneg(inst.diff);
  inst.symmetric = is_symmetric(inst.diff, inst.ambient_degree);
  inst.unimodal = is_unimodal(inst.diff);

  // Second stated form, compared by cross-multiplication.
  RatFun form2 = rat_mul(
      RatFun::from_poly(q_binomial(a, k) * q_binomial(b, k) * q_binomial(a + b, b)),
      rat_sub(RatFun(IntPoly::one(), q_binomial(a + k, k)),
              RatFun(IntPoly::one(), q_binomial(b + k, k))));
  inst.forms_equivalent = rat_equal(RatFun::from_poly(inst.diff), form2);
  return inst;
}

IntPoly theorem3_expansion(long a, long i) {
  if (a < 1 || i < 1) throw BadParamsError("theorem3_expansion: need a, i >= 1");
  IntPoly out;
  for (long k = 1; k <= a; ++k) {
    IntPoly term = theorem3_bracket(a, i, k).diff * q_binomial(3 * a + i, a - k);
    if (term.is_zero()) continue;
    out += term.shifted((a - k) * (i - k));
  }
  return out;
}

std::pair<long, long> wz_default_k_range(long a, long i) {
  return {-1, std::min(a, i) + 2};
}

BigRat wz_f_q1(long a, long i, long k) {
  if (a < 1 || i < 1) throw BadParamsError("wz_f_q1: need a, i >= 1");
  if (k < 0) return 0;
  BigInt inner = binomial(i + k, 2 * k);
  BigInt outer = binomial(3 * a + i, a - k);
  if (inner == 0 || outer == 0) return 0;
  // i + k > 0 whenever the term survives, so the prefactor is safe.
  return BigRat(i + 3 * k, i + k) * BigRat(inner * outer, binomial(3 * a + i, a + i));
}

BigRat wz_g_q1(long a, long i, long k) {
  if (a < 1 || i < 1) throw BadParamsError("wz_g_q1: need a, i >= 1");
  if (k < 1) return 0;
  BigInt inner = binomial(i + k - 1, 2 * k - 2);
  BigInt outer = binomial(3 * a + i, a - k);
  if (inner == 0 || outer == 0) return 0;
  return -BigRat(inner * outer, binomial(3 * a + i, a + i));
}

WZCheck wz_check_q1(long a, long i, long k_min, long k_max) {
  if (a < 1 || i < 1) throw BadParamsError("wz_check_q1: need a, i >= 1");
  WZCheck out;
  out.variant = WZVariant::q1;
  out.a = a;
  out.i = i;
  out.k_min = k_min;
  out.k_max = k_max;

  out.relation_ok = true;
  BigRat telescope = 0;
  for (long k = k_min; k <= k_max; ++k) {
    BigRat gap = (wz_f_q1(a, i + 1, k) - wz_f_q1(a, i, k)) -
                 (wz_g_q1(a, i, k + 1) - wz_g_q1(a, i, k));
    if (gap != 0) {
      out.relation_ok = false;
      if (out.residual.is_zero()) out.residual = IntPoly::constant(numerator(gap));
    }
    telescope += wz_f_q1(a, i, k);
  }
  out.telescope_ok = telescope == 1;
  if (!out.telescope_ok && out.residual.is_zero())
    out.residual = IntPoly::constant(numerator(BigRat(telescope - 1)));
  // No displayed certificate ratios in the q = 1 variant.
  out.certificate_ok = true;
  return out;
}

WZCheck wz_check_q1(long a, long i) {
  auto [lo, hi] = wz_default_k_range(a, i);
  return wz_check_q1(a, i, lo, hi);
}

namespace {

// Minimal Laurent-polynomial helper for assembling the displayed
// certificate ratios, whose factors (1 - q^e) can carry a negative e that
// cancels against a vanishing companion factor. Exponent -> coefficient,
// zero coefficients dropped.
using Laurent = std::map<long, BigInt>;

Laurent laurent_monomial(long e, BigInt c = 1) {
  Laurent out;
  if (c != 0) out[e] = std::move(c);
  return out;
}

// 1 - q^e for any integer e; e = 0 collapses to zero.
Laurent laurent_one_minus(long e) {
  Laurent out;
  out[0] += 1;
  out[e] -= 1;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Laurent laurent_mul(const Laurent& x, const Laurent& y) {
  Laurent out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) {
      auto it = out.emplace(ex + ey, 0).first;
      it->second += cx * cy;
      if (it->second == 0) out.erase(it);
    }
  return out;
}

Laurent laurent_prod(std::initializer_list<Laurent> factors) {
  Laurent out = laurent_monomial(0);
  for (const Laurent& f : factors) out = laurent_mul(out, f);
  return out;
}

IntPoly laurent_to_poly(const Laurent& x, long shift_up) {
  IntPoly out;
  for (const auto& [e, c] : x) out += IntPoly::monomial(e + shift_up, c);
  return out;
}

// num/den as a RatFun. Both sides are scaled by the same power of q, just
// enough to clear negative exponents.
RatFun laurent_ratio(const Laurent& num, const Laurent& den) {
  if (den.empty()) throw std::invalid_argument("laurent_ratio: zero denominator");
  long den_min = den.begin()->first;
  if (num.empty()) return RatFun(IntPoly::zero(), laurent_to_poly(den, std::max(0L, -den_min)));
  long num_min = num.begin()->first;
  long common = std::max({0L, -num_min, -den_min});
  return RatFun(laurent_to_poly(num, common), laurent_to_poly(den, common));
}

} // namespace

RatFun wz_f_q(long a, long i, long k) {
  if (a < 1 || i < 1) throw BadParamsError("wz_f_q: need a, i >= 1");
  if (k < 0) return RatFun::zero();
  IntPoly inner = q_binomial(i + k, 2 * k);
  IntPoly outer = q_binomial(3 * a + i, a - k);
  if (inner.is_zero() || outer.is_zero()) return RatFun::zero();
  // Surviving terms have 0 <= k <= min(a, i), so the exponent is >= 0.
  IntPoly bracket_num = IntPoly::one() - IntPoly::monomial(i + k) +
                        IntPoly::monomial(a + i) - IntPoly::monomial(a + i + 2 * k);
  IntPoly num = (bracket_num * inner * outer).shifted((a - k) * (i - k));
  IntPoly den = (IntPoly::one() - IntPoly::monomial(i + k)) * q_binomial(3 * a + i, a + i);
  return RatFun(std::move(num), std::move(den));
}

RatFun wz_g_q(long a, long i, long k) {
  if (a < 1 || i < 1) throw BadParamsError("wz_g_q: need a, i >= 1");
  if (k < 1) return RatFun::zero();
  IntPoly inner = q_binomial(i + k - 1, 2 * k - 2);
  IntPoly outer = q_binomial(3 * a + i, a - k);
  if (inner.is_zero() || outer.is_zero()) return RatFun::zero();
  IntPoly num = -(inner * outer).shifted((a - k + 1) * (i - k + 1));
  return RatFun(std::move(num), q_binomial(3 * a + i, a + i));
}

RatFun wz_certificate_a(long a, long i, long k) {
  Laurent num = laurent_prod({laurent_monomial(a - k),
                              laurent_one_minus(i + k),
                              laurent_one_minus(a + i + 1),
                              [&] {
                                Laurent t;
                                t[0] += 1;
                                t[i + k + 1] -= 1;
                                t[a + i + 1] += 1;
                                t[a + i + 2 * k + 1] -= 1;
                                return t;
                              }()});
  Laurent den = laurent_prod({laurent_one_minus(i - k + 1),
                              laurent_one_minus(2 * a + i + k + 1),
                              [&] {
                                Laurent t;
                                t[0] += 1;
                                t[i + k] -= 1;
                                t[a + i] += 1;
                                t[a + i + 2 * k] -= 1;
                                return t;
                              }()});
  return rat_sub(laurent_ratio(num, den), RatFun::one());
}

RatFun wz_certificate_b(long a, long i, long k) {
  RatFun piece1 = laurent_ratio(laurent_mul(laurent_monomial(0, -1), laurent_one_minus(a - k)),
                                laurent_one_minus(2 * a + i + k + 1));
  RatFun piece2 = laurent_ratio(
      laurent_prod({laurent_monomial(a + i - 2 * k + 1),
                    laurent_one_minus(2 * k),
                    laurent_one_minus(2 * k - 1)}),
      laurent_mul(laurent_one_minus(i + k), laurent_one_minus(i - k + 1)));
  RatFun tail = laurent_ratio(laurent_one_minus(i + k), [&] {
    Laurent t;
    t[0] += 1;
    t[i + k] -= 1;
    t[a + i] += 1;
    t[a + i + 2 * k] -= 1;
    return t;
  }());
  return rat_mul(rat_add(piece1, piece2), tail);
}

WZCheck wz_check_q(long a, long i, long k_min, long k_max) {
  if (a < 1 || i < 1) throw BadParamsError("wz_check_q: need a, i >= 1");
  WZCheck out;
  out.variant = WZVariant::q;
  out.a = a;
  out.i = i;
  out.k_min = k_min;
  out.k_max = k_max;

  out.relation_ok = true;
  out.certificate_ok = true;
  RatFun telescope = RatFun::zero();
  auto note_residual = [&](const RatFun& x, const RatFun& y) {
    if (out.residual.is_zero()) out.residual = x.num * y.den - y.num * x.den;
  };
  for (long k = k_min; k <= k_max; ++k) {
    RatFun f_ik = wz_f_q(a, i, k);
    RatFun lhs = rat_sub(wz_f_q(a, i + 1, k), f_ik);
    RatFun rhs = rat_sub(wz_g_q(a, i, k + 1), wz_g_q(a, i, k));
    if (!rat_equal(lhs, rhs)) {
      out.relation_ok = false;
      note_residual(lhs, rhs);
    }
    telescope = rat_add(telescope, f_ik);

    // The displayed ratios only make sense where F(i,k) is nonzero.
    if (!f_ik.is_zero() && k <= std::min(a, i)) {
      RatFun cert_a = wz_certificate_a(a, i, k);
      RatFun cert_b = wz_certificate_b(a, i, k);
      if (!rat_equal(cert_a, cert_b)) {
        out.certificate_ok = false;
        note_residual(cert_a, cert_b);
      }
      // A = F(i+1,k)/F(i,k) - 1 and B = (G(i,k+1) - G(i,k))/F(i,k),
      // checked multiplied through by F(i,k).
      RatFun a_side = rat_mul(rat_add(cert_a, RatFun::one()), f_ik);
      RatFun f_next = wz_f_q(a, i + 1, k);
      if (!rat_equal(a_side, f_next)) {
        out.certificate_ok = false;
        note_residual(a_side, f_next);
      }
      RatFun b_side = rat_mul(cert_b, f_ik);
      if (!rat_equal(b_side, rhs)) {
        out.certificate_ok = false;
        note_residual(b_side, rhs);
      }
    }
  }
  out.telescope_ok = rat_equal(telescope, RatFun::one());
  if (!out.telescope_ok) note_residual(telescope, RatFun::one());
  return out;
}

WZCheck wz_check_q(long a, long i) {
  auto [lo, hi] = wz_default_k_range(a, i);
  return wz_check_q(a, i, lo, hi);
}

} // namespace qgauss
