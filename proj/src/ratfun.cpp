#include "qgauss/ratfun.hpp"

#include <stdexcept>

namespace qgauss {

RatFun::RatFun(IntPoly n, IntPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
}

bool rat_equal(const RatFun& x, const RatFun& y) {
  return x.num * y.den == y.num * x.den;
}

RatFun rat_add(const RatFun& x, const RatFun& y) {
  return RatFun(x.num * y.den + y.num * x.den, x.den * y.den);
}

RatFun rat_sub(const RatFun& x, const RatFun& y) {
  return RatFun(x.num * y.den - y.num * x.den, x.den * y.den);
}

RatFun rat_mul(const RatFun& x, const RatFun& y) {
  return RatFun(x.num * y.num, x.den * y.den);
}

RatFun rat_neg(const RatFun& x) {
  return RatFun(-x.num, x.den);
}

BigRat rat_eval_at_one(const RatFun& x) {
  // p(1) == 0 iff (1 - q) divides p over the integers, so stripping the
  // shared factor one power at a time terminates and stays exact.
  static const IntPoly one_minus_q{1, -1};
  IntPoly num = x.num;
  IntPoly den = x.den;
  while (den.eval_at_one() == 0) {
    if (num.eval_at_one() != 0)
      throw std::domain_error("rat_eval_at_one: pole at q = 1");
    den = exact_div(den, one_minus_q);
    num = exact_div(num, one_minus_q);
  }
  return BigRat(num.eval_at_one(), den.eval_at_one());
}

} // namespace qgauss
