#ifndef QGAUSS_QKERNEL_HPP
#define QGAUSS_QKERNEL_HPP

#include "qgauss/intpoly.hpp"

namespace qgauss {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
IntPoly q_int(long n);

/// [n]!_q = [1]_q [2]_q ... [n]_q; [0]!_q = 1.
IntPoly q_factorial(long n);

/// Gaussian polynomial [n choose k]_q, n >= 0. Out-of-range k (k < 0 or
/// k > n) yields the zero polynomial so that sums written "over all k"
/// truncate by themselves, matching how the identities are stated.
///
/// Computed by the Pascal-type recurrence
///   [n choose k]_q = [n-1 choose k]_q + q^{n-k} [n-1 choose k-1]_q
/// over a process-wide memo table keyed with k normalized to
/// min(k, n - k). The table behaves as a concurrent map with idempotent
/// inserts; all callers may share it across threads.
IntPoly q_binomial(long n, long k);

enum class BruteForceMode {
  /// Sum q^{inv(w)} over binary words with k zeros and n-k ones, counting
  /// inversion pairs (i < j with w_i > w_j) literally.
  inversion,
  /// Sum q^{area} over monotone lattice paths in the k x (n-k) box, where
  /// area counts the cells above the path. (Counting cells below the path
  /// instead is a reflection and produces the same polynomial; the
  /// mode-agreement tests confirm rather than assume this.)
  area,
};

/// Hard cap on brute-force enumeration; C(22,11) words is milliseconds of
/// work, anything bigger adds cost without adding confidence.
inline constexpr long kBruteForceMaxN = 22;

/// Exhaustive-enumeration Gaussian polynomial, the independent oracle the
/// algebraic kernel is validated against. Throws TooLargeError for
/// n > kBruteForceMaxN.
IntPoly brute_force_qbinomial(long n, long k, BruteForceMode mode);

/// Ordinary binomial coefficient C(n, k) by the exact integer Pascal
/// recurrence (memoized). Deliberately not implemented as a q-polynomial
/// evaluated at 1: the q = 1 checks need a kernel independent of the
/// polynomial machinery they validate. Out-of-range k yields 0.
BigInt binomial(long n, long k);

} // namespace qgauss

#endif
