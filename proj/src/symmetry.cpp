#include "logsp/symmetry.hpp"

#include <cmath>
#include <numbers>

#include "logsp/fiber.hpp"
#include "logsp/reduce.hpp"

namespace logsp {

SymmetryGroup SymmetryGroup::dihedral(int k) {
  if (k < 1) throw std::invalid_argument("SymmetryGroup: dihedral order must be >= 1");
  return {GroupKind::Dihedral, k};
}

SymmetryGroup SymmetryGroup::parse(const std::string& s) {
  if (s == "radial") return radial();
  if (s == "oddeven") return reflection_odd_even();
  if (s.rfind("dihedral:", 0) == 0) {
    const int k = std::stoi(s.substr(9));
    return dihedral(k);
  }
  throw std::invalid_argument("unknown group '" + s + "' (radial | oddeven | dihedral:<k>)");
}

std::string SymmetryGroup::name() const {
  switch (kind) {
    case GroupKind::Radial:
      return "radial";
    case GroupKind::ReflectionOddEven:
      return "oddeven";
    case GroupKind::Dihedral:
      return "dihedral:" + std::to_string(k);
  }
  return "?";
}

namespace {
GroupElement rotation(double angle, int tau) {
  const double c = std::cos(angle), s = std::sin(angle);
  return GroupElement{{{c, -s}, {s, c}}, tau};
}
GroupElement reflect_x1(int tau) { return GroupElement{{{-1.0, 0.0}, {0.0, 1.0}}, tau}; }
GroupElement reflect_x2(int tau) { return GroupElement{{{1.0, 0.0}, {0.0, -1.0}}, tau}; }
}  // namespace

std::vector<GroupElement> SymmetryGroup::elements() const {
  std::vector<GroupElement> out;
  switch (kind) {
    case GroupKind::Radial:
      out = {rotation(0.0, 1), rotation(std::numbers::pi / 2.0, 1), reflect_x1(1),
             reflect_x2(1)};
      break;
    case GroupKind::ReflectionOddEven:
      out = {rotation(0.0, 1), reflect_x1(-1), reflect_x2(1), rotation(std::numbers::pi, -1)};
      break;
    case GroupKind::Dihedral:
      for (int j = 1; j <= 2 * k; ++j) {
        out.push_back(rotation(j * std::numbers::pi / k, (j % 2 == 0) ? 1 : -1));
      }
      break;
  }
  return out;
}

std::vector<GroupElement> SymmetryGroup::generators() const {
  switch (kind) {
    case GroupKind::Radial:
      return {rotation(std::numbers::pi / 2.0, 1), reflect_x1(1), reflect_x2(1)};
    case GroupKind::ReflectionOddEven:
      return {reflect_x1(-1), reflect_x2(1)};
    case GroupKind::Dihedral:
      return {rotation(std::numbers::pi / k, -1)};
  }
  return {};
}

bool SymmetryGroup::has_sign_flip() const { return kind != GroupKind::Radial; }

namespace {

// Integer lattice map for matrices with entries in {-1,0,1}: on the
// cell-centered grid, coordinate negation is i -> N-1-i and axis swap is an
// index swap, so these elements act exactly.
struct IndexMap {
  bool exact = false;
  // index' = s0*(sel0 ? j : i) + offset-style encoding:
  int a11 = 0, a12 = 0, a21 = 0, a22 = 0;  // entries of A^{-1} = A^T
};

IndexMap lattice_map(const GroupElement& e) {
  IndexMap m;
  const double eps = 1e-12;
  auto near_int = [eps](double x, int v) { return std::fabs(x - v) < eps; };
  int ai[2][2];
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      // A^{-1} = A^T for orthogonal A.
      const double x = e.mat[c][r];
      if (near_int(x, 0))
        ai[r][c] = 0;
      else if (near_int(x, 1))
        ai[r][c] = 1;
      else if (near_int(x, -1))
        ai[r][c] = -1;
      else
        return m;
    }
  }
  m.exact = true;
  m.a11 = ai[0][0];
  m.a12 = ai[0][1];
  m.a21 = ai[1][0];
  m.a22 = ai[1][1];
  return m;
}

}  // namespace

Field apply_element(const Field& u, const GroupElement& e) {
  const GridSpec& g = u.grid;
  const int N = g.points_per_side;
  Field out(g);
  const IndexMap lm = lattice_map(e);
  const double tau = e.tau;
  if (lm.exact) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) {
        // x' = A^{-1} x in index space; coordinate c_i maps by +/-1 and swap.
        const int src_i = (lm.a11 == 1 ? i : (lm.a11 == -1 ? N - 1 - i : (lm.a12 == 1 ? j : N - 1 - j)));
        const int src_j = (lm.a22 == 1 ? j : (lm.a22 == -1 ? N - 1 - j : (lm.a21 == 1 ? i : N - 1 - i)));
        out.at(i, j) = tau * u.at(src_i, src_j);
      }
    }
    return out;
  }
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) {
    const double x = g.coord(i);
    for (int j = 0; j < N; ++j) {
      const double y = g.coord(j);
      const double xr = e.mat[0][0] * x + e.mat[1][0] * y;  // A^T x
      const double yr = e.mat[0][1] * x + e.mat[1][1] * y;
      out.at(i, j) = tau * sample_bilinear(u, xr, yr);
    }
  }
  return out;
}

namespace {

Field symmetrize_oddeven(const Field& u) {
  const int N = u.grid.points_per_side;
  Field sx(u.grid);
  // Odd part in x1, then even part in x2; each stage is an exact projector,
  // so the composition is idempotent bit for bit.
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      sx.at(i, j) = 0.5 * (u.at(i, j) - u.at(N - 1 - i, j));
    }
  }
  Field out(u.grid);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      out.at(i, j) = 0.5 * (sx.at(i, j) + sx.at(i, N - 1 - j));
    }
  }
  return out;
}

Field symmetrize_dihedral(const Field& u, int k) {
  const int N = u.grid.points_per_side;
  Field acc(u.grid);
  const double weight = 1.0 / (2.0 * k);
  for (int j = 1; j <= 2 * k; ++j) {
    const double tau = (j % 2 == 0) ? 1.0 : -1.0;
    // Quarter-turn multiples act exactly on the index lattice.
    if ((2 * j) % k == 0 && ((2 * j / k) % 4 + 4) % 4 >= 0) {
      const int q = ((2 * j / k) % 4 + 4) % 4;
      double rot[4][2][2] = {{{1, 0}, {0, 1}},
                             {{0, -1}, {1, 0}},
                             {{-1, 0}, {0, -1}},
                             {{0, 1}, {-1, 0}}};
      GroupElement e{{{rot[q][0][0], rot[q][0][1]}, {rot[q][1][0], rot[q][1][1]}},
                     tau > 0 ? 1 : -1};
      const Field term = apply_element(u, e);
#pragma omp parallel for schedule(static)
      for (long long t = 0; t < static_cast<long long>(acc.size()); ++t) {
        acc.v[static_cast<std::size_t>(t)] += weight * term.v[static_cast<std::size_t>(t)];
      }
      continue;
    }
    const GroupElement e = rotation(j * std::numbers::pi / k, tau > 0 ? 1 : -1);
    const Field term = apply_element(u, e);
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < static_cast<long long>(acc.size()); ++t) {
      acc.v[static_cast<std::size_t>(t)] += weight * term.v[static_cast<std::size_t>(t)];
    }
  }
  return acc;
}

Field symmetrize_radial(const Field& u) {
  const GridSpec& g = u.grid;
  const int N = g.points_per_side;
  const double dr = 0.5 * g.spacing;
  const int M = static_cast<int>(std::ceil(std::numbers::sqrt2 * g.half_width / dr)) + 2;
  const int Q = 4 * N;
  std::vector<double> profile(static_cast<std::size_t>(M) + 1, 0.0);
#pragma omp parallel for schedule(static)
  for (int m = 0; m <= M; ++m) {
    const double r = m * dr;
    double s = 0.0;
    for (int q = 0; q < Q; ++q) {
      const double th = (2.0 * std::numbers::pi * q) / Q;
      s += sample_bilinear(u, r * std::cos(th), r * std::sin(th));
    }
    profile[m] = s / Q;
  }
  Field out(g);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) {
    const double x = g.coord(i);
    for (int j = 0; j < N; ++j) {
      const double r = std::hypot(x, g.coord(j));
      const double s = r / dr;
      const int m0 = std::min(static_cast<int>(std::floor(s)), M - 1);
      const double a = s - m0;
      out.at(i, j) = (1.0 - a) * profile[m0] + a * profile[m0 + 1];
    }
  }
  return out;
}

}  // namespace

Field symmetrize(const Field& u, const SymmetryGroup& g) {
  Field out(u.grid);
  switch (g.kind) {
    case GroupKind::ReflectionOddEven:
      out = symmetrize_oddeven(u);
      break;
    case GroupKind::Dihedral:
      out = symmetrize_dihedral(u, g.k);
      break;
    case GroupKind::Radial:
      out = symmetrize_radial(u);
      break;
  }
  require_finite(out, "symmetrize");
  return out;
}

double invariance_residual(const Field& u, const SymmetryGroup& g) {
  const double nu = std::sqrt(inner_l2(u, u));
  const double floor = std::max(nu, 1e-30);
  double worst = 0.0;
  for (const GroupElement& e : g.generators()) {
    const Field tu = apply_element(u, e);
    const double* a = tu.v.data();
    const double* b = u.v.data();
    const double d2 = u.grid.cell_area() *
                      det_transform_reduce(u.size(), [a, b](std::size_t t) {
                        const double d = a[t] - b[t];
                        return d * d;
                      });
    worst = std::max(worst, std::sqrt(d2) / floor);
  }
  return worst;
}

SignChangeReport sign_change_certificate(const Field& u, const SymmetryGroup& g) {
  if (!g.has_sign_flip()) {
    throw std::domain_error("sign_change_certificate: group has no tau = -1 element");
  }
  SignChangeReport rep;
  rep.min_value = u.v.empty() ? 0.0 : u.v[0];
  rep.max_value = rep.min_value;
  for (double x : u.v) {
    rep.min_value = std::min(rep.min_value, x);
    rep.max_value = std::max(rep.max_value, x);
  }
  const double amp = std::max(std::fabs(rep.min_value), std::fabs(rep.max_value));
  rep.both_signs = rep.min_value < 0.0 && rep.max_value > 0.0;
  rep.threshold = 1e-3 * amp;

  // Fixed-point set of a tau = -1 element: the x1 = 0 axis for the
  // reflection family, the origin for rotations.
  const int N = u.grid.points_per_side;
  std::vector<std::pair<double, double>> pts;
  if (g.kind == GroupKind::ReflectionOddEven) {
    pts.reserve(N);
    for (int j = 0; j < N; ++j) pts.emplace_back(0.0, u.grid.coord(j));
  } else {
    pts.emplace_back(0.0, 0.0);
  }
  rep.fixed_samples = static_cast<int>(pts.size());
  int below = 0;
  for (auto [x, y] : pts) {
    const double val = std::fabs(sample_bilinear(u, x, y));
    rep.fixed_set_max_abs = std::max(rep.fixed_set_max_abs, val);
    if (val < rep.threshold) ++below;
  }
  rep.fixed_band_fraction = pts.empty() ? 0.0 : static_cast<double>(below) / pts.size();
  return rep;
}

}  // namespace logsp
