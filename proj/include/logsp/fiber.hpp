#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "logsp/energy.hpp"

namespace logsp {

// The five scalars that determine the whole scaling fiber t -> I(u_t) of a
// field, u_t(x) = t^2 u(tx):
//   a = int |grad u|^2,  b = int u^2,  c = V0(u),  d = int |u|^p.
struct Moments {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double p = 0.0;
};

Moments moments(const KernelTables& kt, const Field& u, const Params& params);
Moments moments_w(const Field& u, const Field& w, double p);

// Closed-form transport of moments under u -> u_s.
Moments scaled_moments(const Moments& m, double s);

// h(t) = I(u_t) = (t^4/2)a + (t^2/2)b + (t^4/4)c - (t^4 log t / 4)b^2
//               - (t^{2p-2}/p)d.
double fiber_energy(const Moments& m, double t);

// h'(t); t*h'(t) equals J(u_t).
double fiber_derivative(const Moments& m, double t);

// J(u_t) in closed form.
double fiber_J(const Moments& m, double t);

// Unique root t_u of h' for p >= 3 (geometric bracketing, bisection, Newton
// polish); verifies h' > 0 at t_u/2 and h' < 0 at 2 t_u. Rejects p < 3 and
// zero moments.
double project_to_manifold(const Moments& m);

struct FiberRow {
  double t = 0.0;
  double h = 0.0;
  double hprime = 0.0;
  double J = 0.0;
};

struct FiberScan {
  std::vector<FiberRow> rows;
  std::vector<std::pair<double, double>> brackets;  // consecutive sign changes of h'
  double first_t_negative_h = 0.0;                  // NaN when h >= 0 over the scan
};

// Geometric sample grid on [t_min, t_max].
FiberScan fiber_scan(const Moments& m, double t_min, double t_max, int samples);

// CSV with header "t,h,hprime,J".
void write_scan_csv(const FiberScan& s, std::ostream& os);

// u_t materialized on the grid: t^2 u(t x) by bilinear interpolation, zero
// outside the domain. t = 1 is the exact identity.
Field rescale(const Field& u, double t);

// Zero-extended bilinear sample of u at an arbitrary point.
double sample_bilinear(const Field& u, double x, double y);

}  // namespace logsp
