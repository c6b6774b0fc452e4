#ifndef QGAUSS_VERIFY_HPP
#define QGAUSS_VERIFY_HPP

#include <vector>

#include "qgauss/identities.hpp"
#include "qgauss/intpoly.hpp"
#include "qgauss/ratfun.hpp"

namespace qgauss {

enum class Conjecture { C1 = 1, C2 = 2, C3 = 3, C4 = 4 };

/// One scanned parameter tuple with its difference polynomial and verdict
/// flags. A false verdict is not an error: it is the counterexample the
/// scan exists to find, reported with the witness polynomial attached.
struct ConjectureInstance {
  Conjecture which = Conjecture::C1;
  Params params;
  IntPoly diff;
  /// Common degree of the two compared products. Symmetry is judged about
  /// this degree, not the stored degree of the canonical difference, since
  /// the extreme coefficients of the difference typically cancel.
  long ambient_degree = 0;
  NonnegVerdict nonneg;
  bool symmetric = false;
  UnimodalVerdict unimodal;
  /// Quadruples with a = b force c = d and a zero difference; they are
  /// scanned but tagged.
  bool degenerate = false;
  /// Cross-multiplied equivalence of the two stated forms; always true
  /// outside conjecture 4, where no second form exists.
  bool forms_equivalent = true;

  /// What "this instance upholds the conjecture" means per conjecture:
  /// C1 symmetric + non-negative, C2 additionally unimodal, C3
  /// non-negative, C4 non-negative + forms equivalent.
  bool passes() const;
};

/// [b+c choose b]_q - [a+d choose a]_q for 0 < a <= b < c <= d with
/// ad = bc. Throws BadQuadrupleError otherwise.
IntPoly bergeron_diff(long a, long b, long c, long d);

/// Full verdict for one quadruple; `which` selects how passes() judges it
/// (conjecture 1 or its unimodal strengthening, conjecture 2).
ConjectureInstance check_c1_c2(long a, long b, long c, long d,
                               Conjecture which = Conjecture::C2);

struct Quadruple {
  long a = 0, b = 0, c = 0, d = 0;
  long product = 0; // ad = bc
  bool degenerate = false; // a == b (forces c == d)
};

/// All quadruples 0 < a <= b < c <= d with ad = bc = n, ordered
/// lexicographically by (a, b).
std::vector<Quadruple> quadruples_with_product(long n);

/// Every admissible quadruple with ad = bc <= max_n, each exactly once,
/// ordered by increasing product then lexicographically.
std::vector<Quadruple> enumerate_quadruples(long max_n);

/// Conjecture 3 instance: [b+beta*a choose b]_q - [a+beta*b choose a]_q
/// for 0 < a < b, beta >= 1. beta = 1 gives the zero polynomial.
ConjectureInstance check_c3(long a, long b, long beta);

/// Conjecture 4 instance for 0 <= k <= a < b:
///   [a choose k]_q [a+b choose b-k]_q - [b choose k]_q [a+b choose a-k]_q,
/// plus the cross-multiplied equivalence with the product form
///   [a choose k]_q [b choose k]_q [a+b choose b]_q
///     (1/[a+k choose k]_q - 1/[b+k choose k]_q).
ConjectureInstance check_c4(long a, long b, long k);

/// sum_{k>=1} q^{(a-k)(i-k)} ([i+k choose 2k]_q + q^{a+i}[i+k-1 choose 2k-1]_q
///   - [i choose k]_q) [3a+i choose a-k]_q — the positive-term expansion
/// that [3a+i choose a+i]_q - [3a+2i choose a]_q must equal.
IntPoly theorem3_expansion(long a, long i);

enum class WZVariant { q1, q };

/// Outcome of verifying a Wilf-Zeilberger pair at one (a, i) over a k
/// window. The window deliberately overshoots the support so boundary
/// terms are confirmed to vanish.
struct WZCheck {
  WZVariant variant = WZVariant::q1;
  long a = 0, i = 0;
  long k_min = 0, k_max = 0;
  /// F(i+1,k) - F(i,k) = G(i,k+1) - G(i,k) for every k in the window.
  bool relation_ok = false;
  /// q-variant only: the displayed certificate ratios agree with each
  /// other and with the F, G they were derived from. Vacuously true for
  /// the q = 1 variant, which has no displayed ratios.
  bool certificate_ok = false;
  /// sum_k F(i,k) = 1 over the window.
  bool telescope_ok = false;
  /// Zero when every flag holds; otherwise a nonzero polynomial
  /// witnessing the first failed equation (the cross-multiplied residual
  /// of the two sides that should have agreed).
  IntPoly residual;
  bool ok() const { return relation_ok && certificate_ok && telescope_ok; }
};

/// The q = 1 pair behind the binomial expansion identity:
///   F(i,k) = (i+3k)/(i+k) C(i+k,2k) C(3a+i,a-k) / C(3a+i,a+i)
///   G(i,k) = -C(i+k-1,2k-2) C(3a+i,a-k) / C(3a+i,a+i)
/// evaluated as exact rationals.
BigRat wz_f_q1(long a, long i, long k);
BigRat wz_g_q1(long a, long i, long k);
WZCheck wz_check_q1(long a, long i, long k_min, long k_max);
WZCheck wz_check_q1(long a, long i);

/// The q-analogue pair: F multiplies the Gaussian quotient by
/// q^{(a-k)(i-k)} (1 + q^{a+i}(1-q^{2k})/(1-q^{i+k})), G carries
/// q^{(a-k+1)(i-k+1)}; both divided by [3a+i choose a+i]_q.
RatFun wz_f_q(long a, long i, long k);
RatFun wz_g_q(long a, long i, long k);
/// The displayed closed forms of the certificate ratios
/// A(i,k) = F(i+1,k)/F(i,k) - 1 and B(i,k) = (G(i,k+1) - G(i,k))/F(i,k).
RatFun wz_certificate_a(long a, long i, long k);
RatFun wz_certificate_b(long a, long i, long k);
WZCheck wz_check_q(long a, long i, long k_min, long k_max);
WZCheck wz_check_q(long a, long i);

/// Default scan window: k from -1 to min(a, i) + 2.
std::pair<long, long> wz_default_k_range(long a, long i);

} // namespace qgauss

#endif
