#include "logsp/serial_ref.hpp"

#include <cmath>
#include <functional>

namespace logsp::ref {

double integrate(const Field& f) {
  double s = 0.0;
  for (double x : f.v) s += x;
  return f.grid.cell_area() * s;
}

double kinetic_energy(const Field& u) {
  const int N = u.grid.points_per_side;
  double s = 0.0;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const double c = u.at(i, j);
      const double left = (i > 0) ? u.at(i - 1, j) : 0.0;
      const double down = (j > 0) ? u.at(i, j - 1) : 0.0;
      s += (c - left) * (c - left) + (c - down) * (c - down);
      if (i == N - 1) s += c * c;
      if (j == N - 1) s += c * c;
    }
  }
  return s;
}

Field laplacian(const Field& u) {
  const int N = u.grid.points_per_side;
  const double inv_h2 = 1.0 / u.grid.cell_area();
  Field out(u.grid);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const double up = (j + 1 < N) ? u.at(i, j + 1) : 0.0;
      const double down = (j > 0) ? u.at(i, j - 1) : 0.0;
      const double right = (i + 1 < N) ? u.at(i + 1, j) : 0.0;
      const double left = (i > 0) ? u.at(i - 1, j) : 0.0;
      out.at(i, j) = (up + down + left + right - 4.0 * u.at(i, j)) * inv_h2;
    }
  }
  return out;
}

Field convolve_sq_direct(LogKernel k, const Field& u) {
  const int N = u.grid.points_per_side;
  const double h = u.grid.spacing;
  const double h2 = u.grid.cell_area();
  std::vector<double> usq(u.size());
  for (std::size_t t = 0; t < u.size(); ++t) usq[t] = u.v[t] * u.v[t];
  Field w(u.grid);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      double s = 0.0;
      for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
          s += kernel_value(k, h, i - a, j - b) * usq[static_cast<std::size_t>(a) * N + b];
        }
      }
      w.at(i, j) = h2 * s;
    }
  }
  return w;
}

Field log_potential_direct(const Field& u) { return convolve_sq_direct(LogKernel::Log, u); }

namespace {
// Adaptive Simpson on [a,b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace

double log_kernel_origin_quadrature(double h) {
  // Polar reduction over one octant of the square [-h/2,h/2]^2:
  // avg = (4/h^2) * 2 * Int_0^{pi/4} Int_0^{(h/2)/cos t} log(r) r dr dt.
  const double a = 0.5 * h;
  auto f = [a](double t) {
    const double R = a / std::cos(t);
    return 0.5 * R * R * (std::log(R) - 0.5);
  };
  const double fa = f(0.0), fb = f(std::atan(1.0));
  const double m = 0.5 * std::atan(1.0);
  const double fm = f(m);
  const double whole = std::atan(1.0) / 6.0 * (fa + 4.0 * fm + fb);
  const double integral =
      adaptive_simpson(f, 0.0, std::atan(1.0), fa, fm, fb, whole, 1e-15 * std::fabs(whole) + 1e-300, 48);
  return 8.0 * integral / (h * h);
}

}  // namespace logsp::ref
