#include "qgauss/qkernel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgauss/errors.hpp"

namespace qgauss {

IntPoly q_int(long n) {
  if (n < 0) throw std::invalid_argument("q_int: negative n");
  return IntPoly(std::vector<BigInt>(static_cast<size_t>(n), 1));
}

IntPoly q_factorial(long n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative n");
  IntPoly out = IntPoly::one();
  for (long j = 2; j <= n; ++j) out = out * q_int(j);
  return out;
}

namespace {

struct QBinomCache {
  std::map<std::pair<long, long>, IntPoly> table;
  std::shared_mutex mutex;
};

QBinomCache& qbinom_cache() {
  static QBinomCache cache;
  return cache;
}

// Lookup with k already normalized; entry must exist.
const IntPoly& cached_qbinom(const std::map<std::pair<long, long>, IntPoly>& table,
                             long n, long k) {
  return table.at({n, std::min(k, n - k)});
}

} // namespace

IntPoly q_binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("q_binomial: negative n");
  if (k < 0 || k > n) return IntPoly::zero();
  const long kk = std::min(k, n - k);

  auto& cache = qbinom_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find({n, kk});
    if (it != cache.table.end()) return it->second;
  }

  // Build every missing row up to n. Racing builders recompute the same
  // deterministic entries, which is harmless.
  std::unique_lock lock(cache.mutex);
  for (long m = 0; m <= n; ++m) {
    for (long j = 0; 2 * j <= m; ++j) {
      if (cache.table.count({m, j})) continue;
      IntPoly value;
      if (j == 0) {
        value = IntPoly::one();
      } else {
        value = cached_qbinom(cache.table, m - 1, j) +
                cached_qbinom(cache.table, m - 1, j - 1).shifted(m - j);
      }
      cache.table.emplace(std::make_pair(m, j), std::move(value));
    }
  }
  return cache.table.at({n, kk});
}

namespace {

// inv(w) by the literal definition: pairs i < j with w_i > w_j.
long inversion_count(const std::vector<int>& w) {
  long inv = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

// Read the word as a monotone path in the k x (n-k) box: 0 steps up,
// 1 steps right. Column x of the box holds k cells; the path passes that
// column at height h, leaving k - h cells above it.
long area_above_path(const std::vector<int>& w, long rows) {
  long height = 0;
  long area = 0;
  for (int step : w) {
    if (step == 0)
      ++height;
    else
      area += rows - height;
  }
  return area;
}

} // namespace

IntPoly brute_force_qbinomial(long n, long k, BruteForceMode mode) {
  if (n < 0) throw std::invalid_argument("brute_force_qbinomial: negative n");
  if (n > kBruteForceMaxN)
    throw TooLargeError("brute_force_qbinomial: n = " + std::to_string(n) +
                        " exceeds enumeration bound " + std::to_string(kBruteForceMaxN));
  if (k < 0 || k > n) return IntPoly::zero();

  // k zeros then n-k ones is the lexicographically first arrangement;
  // next_permutation walks every distinct word exactly once.
  std::vector<int> word(static_cast<size_t>(n), 1);
  std::fill(word.begin(), word.begin() + k, 0);

  std::vector<BigInt> coeffs(static_cast<size_t>(k * (n - k)) + 1, 0);
  do {
    const long stat = mode == BruteForceMode::inversion ? inversion_count(word)
                                                        : area_above_path(word, k);
    ++coeffs[static_cast<size_t>(stat)];
  } while (std::next_permutation(word.begin(), word.end()));
  return IntPoly(std::move(coeffs));
}

namespace {

struct BinomialCache {
  std::map<std::pair<long, long>, BigInt> table;
  std::mutex mutex;
};

BigInt binomial_locked(std::map<std::pair<long, long>, BigInt>& table, long n, long k) {
  k = std::min(k, n - k);
  if (k < 0) return 0;
  if (k == 0) return 1;
  auto it = table.find({n, k});
  if (it != table.end()) return it->second;
  BigInt value = binomial_locked(table, n - 1, k) + binomial_locked(table, n - 1, k - 1);
  table.emplace(std::make_pair(n, k), value);
  return value;
}

} // namespace

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  static BinomialCache cache;
  std::lock_guard lock(cache.mutex);
  return binomial_locked(cache.table, n, k);
}

} // namespace qgauss
