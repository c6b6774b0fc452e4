#include "qgauss/intpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "qgauss/errors.hpp"

namespace qgauss {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(BigInt c) {
  IntPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(long exp, BigInt c) {
  if (exp < 0) throw std::invalid_argument("IntPoly::monomial: negative exponent");
  IntPoly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<size_t>(exp) + 1, 0);
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<long> IntPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<long>(coeffs_.size()) - 1;
}

const BigInt& IntPoly::coeff(long j) const {
  if (j < 0 || j >= static_cast<long>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(j)];
}

IntPoly IntPoly::shifted(long m) const {
  if (m < 0) throw std::invalid_argument("IntPoly::shifted: negative shift");
  if (is_zero() || m == 0) return m == 0 ? *this : IntPoly();
  IntPoly out;
  out.coeffs_.assign(static_cast<size_t>(m), 0);
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

BigInt IntPoly::eval_at_one() const {
  BigInt s = 0;
  for (const BigInt& c : coeffs_) s += c;
  return s;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (BigInt& c : out.coeffs_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& r) {
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size(), 0);
  for (size_t j = 0; j < r.coeffs_.size(); ++j) coeffs_[j] += r.coeffs_[j];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& r) {
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size(), 0);
  for (size_t j = 0; j < r.coeffs_.size(); ++j) coeffs_[j] -= r.coeffs_[j];
  trim();
  return *this;
}

IntPoly operator+(const IntPoly& p, const IntPoly& r) {
  IntPoly out = p;
  out += r;
  return out;
}

IntPoly operator-(const IntPoly& p, const IntPoly& r) {
  IntPoly out = p;
  out -= r;
  return out;
}

// Schoolbook convolution. Degrees stay in the low thousands here, so this
// is the whole multiplication story; a faster kernel could slot in behind
// this signature if that ever changes.
IntPoly operator*(const IntPoly& p, const IntPoly& r) {
  if (p.is_zero() || r.is_zero()) return IntPoly();
  IntPoly out;
  out.coeffs_.assign(p.coeffs_.size() + r.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < r.coeffs_.size(); ++j) {
      if (r.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += p.coeffs_[i] * r.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    const BigInt& c = coeffs_[j];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || j == 0) os << mag.str();
    if (j >= 1) {
      os << "q";
      if (j >= 2) os << "^" << j;
    }
  }
  return os.str();
}

IntPoly exact_div(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
  if (p.is_zero()) return IntPoly();
  const long dp = *p.degree();
  const long dd = *d.degree();
  if (dp < dd)
    throw NotDivisibleError("exact_div: degree of dividend below divisor, remainder " + p.to_string());

  // Long division from the top. If p = t*d for some integer polynomial t,
  // every leading-coefficient division below is exact and the remainder
  // vanishes; any failure certifies non-divisibility over the integers.
  std::vector<BigInt> rem(p.coeffs());
  std::vector<BigInt> quot(static_cast<size_t>(dp - dd) + 1, 0);
  const BigInt& lead_d = d.coeff(dd);
  for (long pos = dp; pos >= dd; --pos) {
    BigInt& top = rem[static_cast<size_t>(pos)];
    if (top == 0) continue;
    BigInt q = top / lead_d;
    if (q * lead_d != top)
      throw NotDivisibleError("exact_div: leading coefficient " + top.str() +
                              " not divisible by " + lead_d.str());
    quot[static_cast<size_t>(pos - dd)] = q;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(pos - dd + j)] -= q * d.coeff(j);
  }
  for (const BigInt& c : rem)
    if (c != 0) throw NotDivisibleError("exact_div: nonzero remainder");
  return IntPoly(std::move(quot));
}

NonnegVerdict is_nonneg(const IntPoly& p) {
  const auto& c = p.coeffs();
  for (size_t j = 0; j < c.size(); ++j)
    if (c[j] < 0) return {false, static_cast<long>(j)};
  return {};
}

bool is_symmetric(const IntPoly& p) {
  if (p.is_zero()) return true;
  return is_symmetric(p, *p.degree());
}

bool is_symmetric(const IntPoly& p, long ambient_degree) {
  if (ambient_degree < 0) throw std::invalid_argument("is_symmetric: negative ambient degree");
  if (auto d = p.degree(); d && *d > ambient_degree)
    throw std::invalid_argument("is_symmetric: polynomial degree exceeds ambient degree");
  for (long j = 0; 2 * j <= ambient_degree; ++j)
    if (p.coeff(j) != p.coeff(ambient_degree - j)) return false;
  return true;
}

UnimodalVerdict is_unimodal(const IntPoly& p) {
  const auto& c = p.coeffs();
  bool seen_decrease = false;
  for (size_t j = 1; j < c.size(); ++j) {
    if (c[j] > c[j - 1] && seen_decrease) return {false, static_cast<long>(j)};
    if (c[j] < c[j - 1]) seen_decrease = true;
  }
  return {};
}

} // namespace qgauss
