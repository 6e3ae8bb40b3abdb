#include "logsp/energy.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "logsp/reduce.hpp"

namespace logsp {

void require_valid(const Params& params) {
  if (!(params.p > 2.0)) throw std::invalid_argument("Params: exponent p must exceed 2");
  if (params.grid.points_per_side < 8) throw std::invalid_argument("Params: grid not set");
}

void to_json(nlohmann::json& j, const EnergyBreakdown& e) {
  j = nlohmann::json{{"kinetic", e.kinetic}, {"mass", e.mass},       {"v0", e.v0},
                     {"v1", e.v1},           {"v2", e.v2},           {"lp", e.lp},
                     {"I", e.I},             {"J", e.J},             {"P", e.P},
                     {"star_sq", e.star_sq}, {"h1_sq", e.h1_sq}};
}

CoreTerms core_terms(const Field& u, const Field& w, double p) {
  require_same_grid(u, w, "core_terms");
  CoreTerms t;
  t.kinetic = kinetic_energy(u);
  const double* uv = u.v.data();
  const double* wv = w.v.data();
  const double h2 = u.grid.cell_area();
  t.mass = h2 * det_transform_reduce(u.size(), [uv](std::size_t k) { return uv[k] * uv[k]; });
  t.v0 = h2 * det_transform_reduce(u.size(),
                                   [uv, wv](std::size_t k) { return uv[k] * uv[k] * wv[k]; });
  t.lp = h2 * det_transform_reduce(
                  u.size(), [uv, p](std::size_t k) { return std::pow(std::fabs(uv[k]), p); });
  return t;
}

double action_I(const CoreTerms& t, double p) {
  return 0.5 * t.kinetic + 0.5 * t.mass + 0.25 * t.v0 - t.lp / p;
}

double action_J(const CoreTerms& t, double p) {
  return 2.0 * t.kinetic + t.mass - (2.0 * (p - 1.0) / p) * t.lp + t.v0 - 0.25 * t.mass * t.mass;
}

double action_P(const CoreTerms& t, double p) {
  return t.mass + t.v0 + 0.25 * t.mass * t.mass - (2.0 / p) * t.lp;
}

Field euler_gradient_w(const Field& u, const Field& w, double p) {
  require_same_grid(u, w, "euler_gradient_w");
  const int N = u.grid.points_per_side;
  const double inv_h2 = 1.0 / u.grid.cell_area();
  Field g(u.grid);
  const double* uv = u.v.data();
  const double* wv = w.v.data();
  double* gv = g.v.data();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * N + j;
      const double c = uv[k];
      const double up = (j + 1 < N) ? uv[k + 1] : 0.0;
      const double down = (j > 0) ? uv[k - 1] : 0.0;
      const double right = (i + 1 < N) ? uv[k + static_cast<std::size_t>(N)] : 0.0;
      const double left = (i > 0) ? uv[k - static_cast<std::size_t>(N)] : 0.0;
      const double lap = (up + down + left + right - 4.0 * c) * inv_h2;
      const double nonlin = (c == 0.0) ? 0.0 : std::copysign(std::pow(std::fabs(c), p - 1.0), c);
      gv[k] = -lap + c + wv[k] * c - nonlin;
    }
  }
  require_finite(g, "euler_gradient");
  return g;
}

namespace {
void assert_identities(const EnergyBreakdown& e) {
  // Definitional identities re-checked after assembly; 4-1 couples J, P and
  // I'(u)u = kinetic + mass + v0 - lp.
  const double diru = e.kinetic + e.mass + e.v0 - e.lp;
  const double lhs = e.J - (2.0 * diru - e.P);
  const double scale = 1.0 + std::fabs(e.J) + std::fabs(diru) + std::fabs(e.P);
  if (std::fabs(lhs) > 1e-10 * scale) {
    throw std::logic_error("energy: J != 2 I'(u)u - P beyond tolerance");
  }
  if (std::fabs(e.h1_sq - (e.kinetic + e.mass)) > 1e-10 * (1.0 + e.h1_sq)) {
    throw std::logic_error("energy: h1_sq inconsistent");
  }
}
}  // namespace

EnergyBreakdown energy(const KernelTables& kt, const Field& u, const Params& params) {
  require_valid(params);
  if (u.grid != params.grid || u.grid != kt.grid()) {
    throw std::invalid_argument("energy: grid mismatch");
  }
  const Field w = log_potential(kt, u);
  const CoreTerms t = core_terms(u, w, params.p);
  EnergyBreakdown e;
  e.kinetic = t.kinetic;
  e.mass = t.mass;
  e.v0 = t.v0;
  e.lp = t.lp;
  e.v1 = v1(kt, u);
  e.v2 = v2(kt, u);
  e.star_sq = star_norm_sq(u);
  e.h1_sq = t.kinetic + t.mass;
  e.I = action_I(t, params.p);
  e.J = action_J(t, params.p);
  e.P = action_P(t, params.p);
  assert_identities(e);
  return e;
}

Field euler_gradient(const KernelTables& kt, const Field& u, const Params& params) {
  require_valid(params);
  if (u.grid != params.grid || u.grid != kt.grid()) {
    throw std::invalid_argument("euler_gradient: grid mismatch");
  }
  return euler_gradient_w(u, log_potential(kt, u), params.p);
}

double dirI(const KernelTables& kt, const Field& u, const Field& v, const Params& params) {
  require_same_grid(u, v, "dirI");
  return inner_l2(euler_gradient(kt, u, params), v);
}

double pohozaev(const KernelTables& kt, const Field& u, const Params& params) {
  require_valid(params);
  const Field w = log_potential(kt, u);
  return action_P(core_terms(u, w, params.p), params.p);
}

double nehari_pohozaev(const KernelTables& kt, const Field& u, const Params& params) {
  require_valid(params);
  const Field w = log_potential(kt, u);
  return action_J(core_terms(u, w, params.p), params.p);
}

}  // namespace logsp
