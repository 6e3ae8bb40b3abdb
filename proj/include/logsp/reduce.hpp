#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace logsp {

// Deterministic parallel reduction. The input range is cut into fixed-size
// blocks; each block is accumulated serially left-to-right and the block
// sums are folded pairwise. The result is independent of the number of
// OpenMP threads, so repeated runs are bitwise identical.

inline double pairwise_fold(std::vector<double>& s) {
  std::size_t n = s.size();
  if (n == 0) return 0.0;
  while (n > 1) {
    std::size_t m = n / 2;
    for (std::size_t i = 0; i < m; ++i) s[i] = s[2 * i] + s[2 * i + 1];
    if (n & 1) {
      s[m] = s[n - 1];
      ++m;
    }
    n = m;
  }
  return s[0];
}

inline constexpr std::size_t kReduceBlock = 4096;

template <class F>
double det_transform_reduce(std::size_t n, F&& f) {
  if (n == 0) return 0.0;
  const std::size_t nb = (n + kReduceBlock - 1) / kReduceBlock;
  std::vector<double> partial(nb, 0.0);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
    const std::size_t hi = std::min(n, lo + kReduceBlock);
    double s = 0.0;
    for (std::size_t k = lo; k < hi; ++k) s += f(k);
    partial[static_cast<std::size_t>(b)] = s;
  }
  return pairwise_fold(partial);
}

inline double det_sum(const double* x, std::size_t n) {
  return det_transform_reduce(n, [x](std::size_t k) { return x[k]; });
}

// Deterministic parallel max of |f(k)|.
template <class F>
double det_max_abs(std::size_t n, F&& f) {
  if (n == 0) return 0.0;
  const std::size_t nb = (n + kReduceBlock - 1) / kReduceBlock;
  std::vector<double> partial(nb, 0.0);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
    const std::size_t hi = std::min(n, lo + kReduceBlock);
    double m = 0.0;
    for (std::size_t k = lo; k < hi; ++k) {
      const double a = f(k) < 0 ? -f(k) : f(k);
      if (a > m) m = a;
    }
    partial[static_cast<std::size_t>(b)] = m;
  }
  double m = 0.0;
  for (double v : partial) m = std::max(m, v);
  return m;
}

}  // namespace logsp
