#include "qgauss/acceptance.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "qgauss/identities.hpp"
#include "qgauss/qkernel.hpp"
#include "qgauss/verify.hpp"

namespace qgauss {

namespace {

// The reference triangle of c_k(i), 1 <= k <= i <= 8.
const long long kCkTriangle[8][8] = {
    {1, 0, 0, 0, 0, 0, 0, 0},
    {3, 1, 0, 0, 0, 0, 0, 0},
    {6, 6, 1, 0, 0, 0, 0, 0},
    {10, 19, 9, 1, 0, 0, 0, 0},
    {15, 45, 39, 12, 1, 0, 0, 0},
    {21, 90, 120, 66, 15, 1, 0, 0},
    {28, 161, 301, 250, 100, 18, 1, 0},
    {36, 266, 658, 755, 450, 141, 21, 1},
};

void note(std::string& detail, const std::string& what) {
  if (!detail.empty()) detail += "; ";
  detail += what;
}

bool criterion_table(std::string& detail) {
  auto table = ck_table(8);
  bool ok = table.size() == 8;
  for (size_t i = 0; ok && i < table.size(); ++i) {
    if (table[i].size() != i + 1) ok = false;
    for (size_t k = 0; ok && k < table[i].size(); ++k)
      if (table[i][k] != kCkTriangle[i][k]) {
        note(detail, "cell i=" + std::to_string(i + 1) + " k=" + std::to_string(k + 1) +
                         " got " + table[i][k].str());
        ok = false;
      }
  }
  if (!ok && detail.empty()) note(detail, "table shape wrong");
  return ok;
}

bool criterion_kernel_oracles(std::string& detail) {
  bool ok = true;
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= n; ++k) {
      IntPoly fast = q_binomial(n, k);
      if (fast != brute_force_qbinomial(n, k, BruteForceMode::inversion) ||
          fast != brute_force_qbinomial(n, k, BruteForceMode::area)) {
        note(detail, "enumeration disagrees at n=" + std::to_string(n) + " k=" + std::to_string(k));
        ok = false;
      }
    }
  for (long n = 0; n <= 30; ++n)
    for (long k = 0; k <= n; ++k) {
      IntPoly quotient = exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
      if (quotient != q_binomial(n, k)) {
        note(detail, "factorial route disagrees at n=" + std::to_string(n) + " k=" + std::to_string(k));
        ok = false;
      }
    }
  return ok;
}

bool criterion_vandermonde(std::string& detail) {
  bool ok = true;
  for (long x = 0; x <= 8; ++x)
    for (long y = 0; y <= 8; ++y)
      for (long z = 0; z <= x + y; ++z) {
        if (!vandermonde_form_j(x, y, z).equal) {
          note(detail, "j-form fails at x=" + std::to_string(x) + " y=" + std::to_string(y) +
                           " z=" + std::to_string(z));
          ok = false;
        }
        if (!vandermonde_form_k(x, y, z).equal) {
          note(detail, "k-form fails at x=" + std::to_string(x) + " y=" + std::to_string(y) +
                           " z=" + std::to_string(z));
          ok = false;
        }
      }
  return ok;
}

bool criterion_q1_suite(std::string& detail) {
  bool ok = true;
  for (long a = 1; a <= 20; ++a)
    if (!i1_special_case(a).equal) {
      note(detail, "i=1 identity fails at a=" + std::to_string(a));
      ok = false;
    }
  for (long a = 1; a <= 10; ++a)
    for (long i = 1; i <= 10; ++i) {
      if (!lemma1_check(a, i).equal || !lemma2_check(a, i).equal || !theorem2_check(a, i).equal) {
        note(detail, "q=1 expansion fails at a=" + std::to_string(a) + " i=" + std::to_string(i));
        ok = false;
      }
    }
  for (long i = 1; i <= 12; ++i)
    for (long k = 1; k <= i; ++k) {
      // ck_coefficient itself throws if the three closed forms split.
      if (ck_coefficient(i, k).value < 0) {
        note(detail, "negative c_k(i) at i=" + std::to_string(i) + " k=" + std::to_string(k));
        ok = false;
      }
    }
  return ok;
}

bool criterion_q_suite(std::string& detail) {
  bool ok = true;
  for (long a = 1; a <= 8; ++a)
    for (long i = 1; i <= 8; ++i) {
      if (!lemma4_check(a, i).equal) {
        note(detail, "convolution form fails at a=" + std::to_string(a) + " i=" + std::to_string(i));
        ok = false;
      }
      if (!lemma5_check(a, i).equal) {
        note(detail, "bracket form fails at a=" + std::to_string(a) + " i=" + std::to_string(i));
        ok = false;
      }
      for (long k = 1; k <= i; ++k)
        if (!theorem3_bracket(a, i, k).verdict.ok) {
          note(detail, "bracket negative at a=" + std::to_string(a) + " i=" + std::to_string(i) +
                           " k=" + std::to_string(k));
          ok = false;
        }
      IntPoly p = q_binomial(3 * a + i, a + i) - q_binomial(3 * a + 2 * i, a);
      if (!is_nonneg(p).ok || p != theorem3_expansion(a, i)) {
        note(detail, "difference expansion fails at a=" + std::to_string(a) + " i=" + std::to_string(i));
        ok = false;
      }
    }
  for (long i = 1; i <= 8; ++i) {
    for (long k = 1; k <= i; ++k)
      if (!lemma6_check(i, k).equal) {
        note(detail, "ladder identity fails at i=" + std::to_string(i) + " k=" + std::to_string(k));
        ok = false;
      }
    for (long k = 0; k <= i; ++k)
      if (!lemma7_check(i, k).verdict.ok) {
        note(detail, "word-split inequality fails at i=" + std::to_string(i) + " k=" + std::to_string(k));
        ok = false;
      }
  }
  return ok;
}

bool criterion_c1_c2_scan(std::string& detail) {
  bool ok = true;
  long scanned = 0;
  for (const auto& t : enumerate_quadruples(64)) {
    ++scanned;
    auto inst = check_c1_c2(t.a, t.b, t.c, t.d, Conjecture::C2);
    if (!inst.symmetric || !inst.nonneg.ok || !inst.unimodal.ok) {
      note(detail, "counterexample at (" + std::to_string(t.a) + "," + std::to_string(t.b) +
                       "," + std::to_string(t.c) + "," + std::to_string(t.d) + ")");
      ok = false;
    }
  }
  if (scanned == 0) {
    note(detail, "empty scan");
    ok = false;
  }
  return ok;
}

bool criterion_c3_scan(std::string& detail) {
  bool ok = true;
  for (long beta = 2; beta <= 3; ++beta)
    for (long a = 1; a <= 8; ++a)
      for (long b = a + 1; b <= 9; ++b)
        if (!check_c3(a, b, beta).nonneg.ok) {
          note(detail, "counterexample at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                           " beta=" + std::to_string(beta));
          ok = false;
        }
  for (long a = 1; a <= 8; ++a)
    for (long b = a + 1; b <= 9; ++b)
      if (!check_c3(a, b, 1).diff.is_zero()) {
        note(detail, "beta=1 difference not identically zero at a=" + std::to_string(a) +
                         " b=" + std::to_string(b));
        ok = false;
      }
  return ok;
}

bool criterion_c4_scan(std::string& detail) {
  bool ok = true;
  for (long b = 2; b <= 10; ++b)
    for (long a = 1; a < b; ++a)
      for (long k = 0; k <= a; ++k) {
        auto inst = check_c4(a, b, k);
        if (!inst.nonneg.ok || !inst.forms_equivalent) {
          note(detail, "fails at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                           " k=" + std::to_string(k));
          ok = false;
        }
      }
  return ok;
}

bool criterion_wz(std::string& detail) {
  bool ok = true;
  for (long a = 1; a <= 8; ++a)
    for (long i = 1; i <= 8; ++i) {
      auto check = wz_check_q1(a, i);
      if (!check.ok()) {
        note(detail, "q=1 pair fails at a=" + std::to_string(a) + " i=" + std::to_string(i));
        ok = false;
      }
    }
  // The i = 1 anchor evaluates to (a+1)/(2a+1) + a/(2a+1) = 1 termwise.
  for (long a = 1; a <= 8; ++a) {
    if (wz_f_q1(a, 1, 0) != BigRat(a + 1, 2 * a + 1) || wz_f_q1(a, 1, 1) != BigRat(a, 2 * a + 1)) {
      note(detail, "q=1 anchor terms fail at a=" + std::to_string(a));
      ok = false;
    }
  }
  for (long a = 1; a <= 5; ++a)
    for (long i = 1; i <= 5; ++i) {
      auto check = wz_check_q(a, i);
      if (!check.ok()) {
        note(detail, "q pair fails at a=" + std::to_string(a) + " i=" + std::to_string(i));
        ok = false;
      }
    }
  // q-analogue anchor: F(1,0) = q^a (1-q^{a+1})/(1-q^{2a+1}) and
  // F(1,1) = (1-q^a)/(1-q^{2a+1}), summing to 1.
  for (long a = 1; a <= 5; ++a) {
    RatFun term0((IntPoly::one() - IntPoly::monomial(a + 1)).shifted(a),
                 IntPoly::one() - IntPoly::monomial(2 * a + 1));
    RatFun term1(IntPoly::one() - IntPoly::monomial(a),
                 IntPoly::one() - IntPoly::monomial(2 * a + 1));
    if (!rat_equal(wz_f_q(a, 1, 0), term0) || !rat_equal(wz_f_q(a, 1, 1), term1) ||
        !rat_equal(rat_add(term0, term1), RatFun::one())) {
      note(detail, "q anchor terms fail at a=" + std::to_string(a));
      ok = false;
    }
  }
  return ok;
}

// The displayed k = 1, 2, 3 partial-fraction expansions, transcribed
// independently of lemma8_rhs_term.
RatFun display_term(long a, long b, std::vector<long> num_exps, long num_shift,
                    std::vector<long> den_exps) {
  IntPoly num = IntPoly::monomial(num_shift);
  for (long e : num_exps) num = num * (IntPoly::one() - IntPoly::monomial(e));
  IntPoly den = IntPoly::one();
  for (long e : den_exps) den = den * (IntPoly::one() - IntPoly::monomial(e));
  return RatFun(std::move(num), std::move(den));
}

bool criterion_partial_fractions(std::string& detail) {
  bool ok = true;
  for (long a = 1; a <= 7; ++a)
    for (long b = a + 1; b <= 8; ++b)
      for (long k = 1; k <= a; ++k)
        if (!lemma8_check(a, b, k).equal) {
          note(detail, "expansion fails at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                           " k=" + std::to_string(k));
          ok = false;
        }
  for (long a = 1; a <= 7; ++a)
    for (long b = a + 1; b <= 8; ++b) {
      // k = 1: q^{a+1}(1-q)(1-q^{b-a}) / ((1-q^{a+1})(1-q^{b+1}))
      bool terms_ok = rat_equal(lemma8_rhs_term(a, b, 1, 1),
                                display_term(a, b, {1, b - a}, a + 1, {a + 1, b + 1}));
      if (a >= 2) {
        // k = 2, terms i = 1, 2.
        terms_ok = terms_ok &&
                   rat_equal(lemma8_rhs_term(a, b, 2, 1),
                             display_term(a, b, {1, 2, b - a}, a + 1, {a + 1, a + 2, b + 1})) &&
                   rat_equal(lemma8_rhs_term(a, b, 2, 2),
                             display_term(a, b, {1, 2, b - a}, a + 2, {a + 2, b + 1, b + 2}));
      }
      if (a >= 3) {
        // k = 3, terms i = 1, 2, 3.
        terms_ok =
            terms_ok &&
            rat_equal(lemma8_rhs_term(a, b, 3, 1),
                      display_term(a, b, {1, 2, 3, b - a}, a + 1, {a + 1, a + 2, a + 3, b + 1})) &&
            rat_equal(lemma8_rhs_term(a, b, 3, 2),
                      display_term(a, b, {1, 2, 3, b - a}, a + 2, {a + 2, a + 3, b + 1, b + 2})) &&
            rat_equal(lemma8_rhs_term(a, b, 3, 3),
                      display_term(a, b, {1, 2, 3, b - a}, a + 3, {a + 3, b + 1, b + 2, b + 3}));
      }
      if (!terms_ok) {
        note(detail, "displayed terms mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b));
        ok = false;
      }
    }
  return ok;
}

bool criterion_ladder(std::string& detail) {
  bool ok = true;
  for (long n = 2; n <= 30; ++n)
    for (long k = 1; 2 * k <= n; ++k) {
      auto check = lemma9_check(n, k);
      if (!check.nonneg.ok || !check.decomposition_exact) {
        note(detail, "fails at n=" + std::to_string(n) + " k=" + std::to_string(k));
        ok = false;
      }
    }
  return ok;
}

} // namespace

std::vector<AcceptanceCriterion> acceptance_criteria() {
  return {
      {1, "c_k(i) table reproduction (rows 1..8)", 1.0, criterion_table},
      {2, "kernel vs enumeration oracles (n <= 10) and factorial route (n <= 30)", 10.0,
       criterion_kernel_oracles},
      {3, "q-Vandermonde-Chu, both parametrizations (X, Y <= 8)", 30.0, criterion_vandermonde},
      {4, "q = 1 suite: i = 1 identity, expansions, c_k(i) forms", 10.0, criterion_q1_suite},
      {5, "q-analogue suite: expansions and bracket positivity (a, i <= 8)", 120.0,
       criterion_q_suite},
      {6, "conjecture 1/2 quadruple scan (ad = bc <= 64)", 300.0, criterion_c1_c2_scan},
      {7, "conjecture 3 scan (beta in {1, 2, 3}, a < b <= 9)", 120.0, criterion_c3_scan},
      {8, "conjecture 4 scan with form equivalence (a < b <= 10)", 300.0, criterion_c4_scan},
      {9, "WZ certification, q = 1 (a, i <= 8) and q-analogue (a, i <= 5)", 120.0, criterion_wz},
      {10, "partial-fraction expansion and displayed k = 1, 2, 3 forms (b <= 8)", 60.0,
       criterion_partial_fractions},
      {11, "ladder inequality and exact decomposition (2k <= n <= 30)", 60.0, criterion_ladder},
  };
}

int run_acceptance(std::ostream& out) {
  int failures = 0;
  for (const auto& criterion : acceptance_criteria()) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      note(detail, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.budget_seconds) {
      note(detail, "time budget " + std::to_string(criterion.budget_seconds) + " s exceeded");
      ok = false;
    }
    if (!ok) ++failures;
    out << (ok ? "[PASS] " : "[FAIL] ") << criterion.id << ". " << criterion.label
        << " (" << std::fixed << std::setprecision(3) << seconds << " s)"
        << std::defaultfloat << "\n";
    if (!ok && !detail.empty()) out << "       " << detail << "\n";
  }
  out << (failures == 0 ? "acceptance: all criteria passed"
                        : "acceptance: " + std::to_string(failures) + " criteria FAILED")
      << "\n";
  return failures;
}

} // namespace qgauss
