#ifndef QGAUSS_RATFUN_HPP
#define QGAUSS_RATFUN_HPP

#include "qgauss/intpoly.hpp"

namespace qgauss {

/// Quotient of two integer polynomials. Never reduced to lowest terms:
/// equality is decided by cross-multiplication, so no polynomial GCD is
/// needed anywhere. Degree growth under +,-,* is bounded at the scales
/// this library works at.
struct RatFun {
  IntPoly num;
  IntPoly den;

  RatFun() : num(), den(IntPoly::one()) {}
  RatFun(IntPoly n, IntPoly d);

  static RatFun zero() { return RatFun(); }
  static RatFun one() { return from_poly(IntPoly::one()); }
  static RatFun from_poly(IntPoly p) { return RatFun(std::move(p), IntPoly::one()); }

  bool is_zero() const { return num.is_zero(); }
};

/// x == y iff x.num * y.den == y.num * x.den.
bool rat_equal(const RatFun& x, const RatFun& y);

RatFun rat_add(const RatFun& x, const RatFun& y);
RatFun rat_sub(const RatFun& x, const RatFun& y);
RatFun rat_mul(const RatFun& x, const RatFun& y);
RatFun rat_neg(const RatFun& x);

/// Value at q = 1 as an exact rational. Common factors of (1 - q) are
/// cancelled first, so quotients whose numerator and denominator both
/// vanish at 1 still evaluate; a genuine pole throws std::domain_error.
BigRat rat_eval_at_one(const RatFun& x);

} // namespace qgauss

#endif
