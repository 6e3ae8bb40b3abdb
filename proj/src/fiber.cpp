#include "logsp/fiber.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace logsp {

Moments moments_w(const Field& u, const Field& w, double p) {
  const CoreTerms t = core_terms(u, w, p);
  return Moments{t.kinetic, t.mass, t.v0, t.lp, p};
}

Moments moments(const KernelTables& kt, const Field& u, const Params& params) {
  require_valid(params);
  return moments_w(u, log_potential(kt, u), params.p);
}

Moments scaled_moments(const Moments& m, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("scaled_moments: s must be positive");
  const double s2 = s * s, s4 = s2 * s2;
  return Moments{m.a * s4, m.b * s2, (m.c - m.b * m.b * std::log(s)) * s4,
                 m.d * std::pow(s, 2.0 * m.p - 2.0), m.p};
}

double fiber_energy(const Moments& m, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("fiber_energy: t must be positive");
  const double t2 = t * t, t4 = t2 * t2;
  return 0.5 * t4 * m.a + 0.5 * t2 * m.b + 0.25 * t4 * m.c -
         0.25 * t4 * std::log(t) * m.b * m.b - std::pow(t, 2.0 * m.p - 2.0) * m.d / m.p;
}

double fiber_derivative(const Moments& m, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("fiber_derivative: t must be positive");
  const double t3 = t * t * t;
  const double b2 = m.b * m.b;
  return 2.0 * m.a * t3 + m.b * t + m.c * t3 - b2 * t3 * std::log(t) - 0.25 * b2 * t3 -
         (2.0 * m.p - 2.0) / m.p * m.d * std::pow(t, 2.0 * m.p - 3.0);
}

double fiber_J(const Moments& m, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("fiber_J: t must be positive");
  const double t2 = t * t, t4 = t2 * t2;
  const double b2 = m.b * m.b;
  return 2.0 * m.a * t4 + m.b * t2 + m.c * t4 - b2 * t4 * std::log(t) - 0.25 * b2 * t4 -
         (2.0 * (m.p - 1.0) / m.p) * m.d * std::pow(t, 2.0 * m.p - 2.0);
}

namespace {
// Scale for the stopping test: sum of absolute term magnitudes of h'(t).
double derivative_scale(const Moments& m, double t) {
  const double t3 = t * t * t;
  const double b2 = m.b * m.b;
  return std::fabs(2.0 * m.a * t3) + std::fabs(m.b * t) + std::fabs(m.c * t3) +
         std::fabs(b2 * t3 * std::log(t)) + 0.25 * b2 * t3 +
         std::fabs((2.0 * m.p - 2.0) / m.p * m.d * std::pow(t, 2.0 * m.p - 3.0));
}

double fiber_second_derivative(const Moments& m, double t) {
  const double t2 = t * t;
  const double b2 = m.b * m.b;
  return 6.0 * m.a * t2 + m.b + 3.0 * m.c * t2 - b2 * t2 * (3.0 * std::log(t) + 1.0) -
         0.75 * b2 * t2 - (2.0 * m.p - 2.0) * (2.0 * m.p - 3.0) / m.p * m.d *
                              std::pow(t, 2.0 * m.p - 4.0);
}
}  // namespace

double project_to_manifold(const Moments& m) {
  if (m.p < 3.0) {
    throw std::domain_error(
        "project_to_manifold: unique fiber critical point requires p >= 3; use fiber_scan");
  }
  if (!(m.b > 0.0) || !(m.d > 0.0)) {
    throw std::invalid_argument("project_to_manifold: moments of a zero field");
  }

  double lo = 1.0, hi = 1.0;
  const double f1 = fiber_derivative(m, 1.0);
  if (f1 > 0.0) {
    hi = 2.0;
    int guard = 0;
    while (fiber_derivative(m, hi) > 0.0) {
      lo = hi;
      hi *= 2.0;
      if (++guard > 600) throw std::runtime_error("project_to_manifold: no upper bracket");
    }
  } else if (f1 < 0.0) {
    lo = 0.5;
    int guard = 0;
    while (fiber_derivative(m, lo) < 0.0) {
      hi = lo;
      lo *= 0.5;
      if (++guard > 600) throw std::runtime_error("project_to_manifold: no lower bracket");
    }
  }

  double t = 1.0;
  if (lo != hi) {
    for (int it = 0; it < 80; ++it) {
      t = 0.5 * (lo + hi);
      const double f = fiber_derivative(m, t);
      if (f > 0.0) {
        lo = t;
      } else if (f < 0.0) {
        hi = t;
      } else {
        break;
      }
    }
    // Newton polish, clamped to the bracket.
    for (int it = 0; it < 4; ++it) {
      const double f = fiber_derivative(m, t);
      const double fp = fiber_second_derivative(m, t);
      if (fp == 0.0) break;
      double tn = t - f / fp;
      if (!(tn > lo) || !(tn < hi)) break;
      t = tn;
    }
  }

  if (std::fabs(fiber_derivative(m, t)) > 1e-12 * derivative_scale(m, t)) {
    throw std::runtime_error("project_to_manifold: root not resolved to tolerance");
  }
  if (!(fiber_derivative(m, 0.5 * t) > 0.0) || !(fiber_derivative(m, 2.0 * t) < 0.0)) {
    throw std::runtime_error("project_to_manifold: fiber sign structure violated");
  }
  return t;
}

FiberScan fiber_scan(const Moments& m, double t_min, double t_max, int samples) {
  if (!(t_min > 0.0) || !(t_max > t_min) || samples < 2) {
    throw std::invalid_argument("fiber_scan: bad sample range");
  }
  FiberScan scan;
  scan.rows.resize(samples);
  const double ratio = std::log(t_max / t_min) / (samples - 1);
#pragma omp parallel for schedule(static)
  for (int q = 0; q < samples; ++q) {
    const double t = t_min * std::exp(ratio * q);
    scan.rows[q] = FiberRow{t, fiber_energy(m, t), fiber_derivative(m, t), fiber_J(m, t)};
  }
  scan.first_t_negative_h = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : scan.rows) {
    if (r.h < 0.0) {
      scan.first_t_negative_h = r.t;
      break;
    }
  }
  for (int q = 0; q + 1 < samples; ++q) {
    if (scan.rows[q].hprime > 0.0 != scan.rows[q + 1].hprime > 0.0) {
      scan.brackets.emplace_back(scan.rows[q].t, scan.rows[q + 1].t);
    }
  }
  return scan;
}

void write_scan_csv(const FiberScan& s, std::ostream& os) {
  os << "t,h,hprime,J\n";
  os.precision(17);
  for (const auto& r : s.rows) {
    os << r.t << ',' << r.h << ',' << r.hprime << ',' << r.J << '\n';
  }
}

double sample_bilinear(const Field& u, double x, double y) {
  const GridSpec& g = u.grid;
  const int N = g.points_per_side;
  const double gx = (x + g.half_width) / g.spacing - 0.5;
  const double gy = (y + g.half_width) / g.spacing - 0.5;
  const double fx = std::floor(gx);
  const double fy = std::floor(gy);
  const int i0 = static_cast<int>(fx);
  const int j0 = static_cast<int>(fy);
  if (i0 < -1 || i0 >= N || j0 < -1 || j0 >= N) return 0.0;
  const double ax = gx - fx;
  const double ay = gy - fy;
  auto val = [&](int i, int j) -> double {
    if (i < 0 || i >= N || j < 0 || j >= N) return 0.0;
    return u.at(i, j);
  };
  return (1.0 - ax) * ((1.0 - ay) * val(i0, j0) + ay * val(i0, j0 + 1)) +
         ax * ((1.0 - ay) * val(i0 + 1, j0) + ay * val(i0 + 1, j0 + 1));
}

Field rescale(const Field& u, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("rescale: t must be positive");
  if (t == 1.0) return u;
  const GridSpec& g = u.grid;
  const int N = g.points_per_side;
  const double t2 = t * t;
  Field out(g);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) {
    const double x = t * g.coord(i);
    for (int j = 0; j < N; ++j) {
      out.at(i, j) = t2 * sample_bilinear(u, x, t * g.coord(j));
    }
  }
  require_finite(out, "rescale");
  return out;
}

}  // namespace logsp
