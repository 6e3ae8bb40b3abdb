#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace logsp {

// Cell-centered uniform grid on the square [-L,L]^2. Cell (i,j) has its
// center at (-L + (i+1/2)h, -L + (j+1/2)h) with h = 2L/N, so the lattice is
// symmetric under i <-> N-1-i (coordinate sign flip). Fields are truncated
// with homogeneous Dirichlet data: one ghost cell outside the square is zero.
struct GridSpec {
  double half_width = 0.0;  // L
  int points_per_side = 0;  // N (even, >= 8)
  double spacing = 0.0;     // h = 2L/N

  GridSpec() = default;
  GridSpec(double L, int N) : half_width(L), points_per_side(N), spacing(2.0 * L / N) {
    if (!(L > 0.0)) throw std::invalid_argument("GridSpec: half_width must be positive");
    if (N < 8 || (N % 2) != 0) throw std::invalid_argument("GridSpec: N must be even and >= 8");
  }

  std::size_t cells() const { return static_cast<std::size_t>(points_per_side) * points_per_side; }
  double coord(int i) const { return -half_width + (i + 0.5) * spacing; }
  double cell_area() const { return spacing * spacing; }

  bool operator==(const GridSpec& o) const {
    return half_width == o.half_width && points_per_side == o.points_per_side;
  }
  bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

// Scalar function sampled at cell centers, row-major: value(i,j) = v[i*N+j],
// where i indexes x and j indexes y.
struct Field {
  GridSpec grid;
  std::vector<double> v;

  Field() = default;
  explicit Field(const GridSpec& g) : grid(g), v(g.cells(), 0.0) {}

  double& at(int i, int j) { return v[static_cast<std::size_t>(i) * grid.points_per_side + j]; }
  double at(int i, int j) const { return v[static_cast<std::size_t>(i) * grid.points_per_side + j]; }
  std::size_t size() const { return v.size(); }
};

inline void require_same_grid(const Field& a, const Field& b, const char* what) {
  if (a.grid != b.grid) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

bool all_finite(const Field& f);
void require_finite(const Field& f, const char* what);

// h^2 * sum of samples (midpoint rule).
double integrate(const Field& f);

// integrate(|u|^p); rejects p <= 2.
double lp_norm_p(const Field& u, double p);

// Edge sum of squared forward differences with zero Dirichlet ghosts.
// Equals integrate(u * (-laplacian(u))) in exact arithmetic.
double kinetic_energy(const Field& u);

// 5-point stencil with zero Dirichlet ghosts.
Field laplacian(const Field& u);

// integrate(log(1+|x|) u^2), the squared weighted norm of the solution space.
double star_norm_sq(const Field& u);

// integrate(u*w) and integrate(u^2 w); shared inner products of the hot path.
double inner_l2(const Field& a, const Field& b);

// y = a*x + y in place (grids must match).
void axpy(double a, const Field& x, Field& y);

}  // namespace logsp
