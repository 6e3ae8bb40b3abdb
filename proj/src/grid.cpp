#include "logsp/grid.hpp"

#include <cmath>

#include "logsp/reduce.hpp"

namespace logsp {

bool all_finite(const Field& f) {
  const std::size_t n = f.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(f.v[k])) return false;
  }
  return true;
}

void require_finite(const Field& f, const char* what) {
  if (!all_finite(f)) throw std::runtime_error(std::string(what) + ": non-finite field value");
}

double integrate(const Field& f) {
  return f.grid.cell_area() * det_sum(f.v.data(), f.size());
}

double lp_norm_p(const Field& u, double p) {
  if (!(p > 2.0)) throw std::invalid_argument("lp_norm_p: requires p > 2");
  const double* v = u.v.data();
  const double s = det_transform_reduce(u.size(), [v, p](std::size_t k) {
    return std::pow(std::fabs(v[k]), p);
  });
  return u.grid.cell_area() * s;
}

double kinetic_energy(const Field& u) {
  const int N = u.grid.points_per_side;
  const double* v = u.v.data();
  // Each cell owns its left and bottom edge; the right/top ghost edges of the
  // last row/column are folded in so every lattice edge is counted once.
  return det_transform_reduce(u.size(), [v, N](std::size_t k) {
    const int i = static_cast<int>(k) / N;
    const int j = static_cast<int>(k) % N;
    const double c = v[k];
    const double left = (i > 0) ? v[k - static_cast<std::size_t>(N)] : 0.0;
    const double down = (j > 0) ? v[k - 1] : 0.0;
    double s = (c - left) * (c - left) + (c - down) * (c - down);
    if (i == N - 1) s += c * c;
    if (j == N - 1) s += c * c;
    return s;
  });
}

Field laplacian(const Field& u) {
  const int N = u.grid.points_per_side;
  const double inv_h2 = 1.0 / u.grid.cell_area();
  Field out(u.grid);
  const double* v = u.v.data();
  double* o = out.v.data();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * N + j;
      const double up = (j + 1 < N) ? v[k + 1] : 0.0;
      const double down = (j > 0) ? v[k - 1] : 0.0;
      const double right = (i + 1 < N) ? v[k + static_cast<std::size_t>(N)] : 0.0;
      const double left = (i > 0) ? v[k - static_cast<std::size_t>(N)] : 0.0;
      o[k] = (up + down + left + right - 4.0 * v[k]) * inv_h2;
    }
  }
  return out;
}

double star_norm_sq(const Field& u) {
  const int N = u.grid.points_per_side;
  const GridSpec g = u.grid;
  const double* v = u.v.data();
  const double s = det_transform_reduce(u.size(), [v, N, g](std::size_t k) {
    const int i = static_cast<int>(k) / N;
    const int j = static_cast<int>(k) % N;
    const double x = g.coord(i);
    const double y = g.coord(j);
    return std::log1p(std::hypot(x, y)) * v[k] * v[k];
  });
  return g.cell_area() * s;
}

double inner_l2(const Field& a, const Field& b) {
  require_same_grid(a, b, "inner_l2");
  const double* x = a.v.data();
  const double* y = b.v.data();
  const double s = det_transform_reduce(a.size(), [x, y](std::size_t k) { return x[k] * y[k]; });
  return a.grid.cell_area() * s;
}

void axpy(double a, const Field& x, Field& y) {
  require_same_grid(x, y, "axpy");
  const std::size_t n = x.size();
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < static_cast<long long>(n); ++k) {
    y.v[static_cast<std::size_t>(k)] += a * x.v[static_cast<std::size_t>(k)];
  }
}

}  // namespace logsp
