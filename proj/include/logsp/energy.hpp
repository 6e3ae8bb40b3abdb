#pragma once

#include <nlohmann/json_fwd.hpp>

#include "logsp/grid.hpp"
#include "logsp/logkernel.hpp"

namespace logsp {

struct Params {
  double p = 0.0;  // nonlinearity exponent, > 2
  GridSpec grid;

  bool p_ge_3() const { return p >= 3.0; }
};

void require_valid(const Params& params);

// Every scalar the variational problem is made of.
//   I = kinetic/2 + mass/2 + v0/4 - lp/p
//   J = 2*kinetic + mass - (2(p-1)/p)*lp + v0 - mass^2/4
//   P = mass + v0 + mass^2/4 - (2/p)*lp
struct EnergyBreakdown {
  double kinetic = 0.0;  // int |grad u|^2
  double mass = 0.0;     // int u^2
  double v0 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  double lp = 0.0;       // int |u|^p
  double I = 0.0;
  double J = 0.0;
  double P = 0.0;
  double star_sq = 0.0;  // int log(1+|x|) u^2
  double h1_sq = 0.0;    // kinetic + mass
};

void to_json(nlohmann::json& j, const EnergyBreakdown& e);

// The four scalars that drive the solver's inner loop; cheaper than a full
// EnergyBreakdown because only the log kernel is convolved.
struct CoreTerms {
  double kinetic = 0.0;
  double mass = 0.0;
  double v0 = 0.0;
  double lp = 0.0;
};

// w must be log_potential(u) on the same grid.
CoreTerms core_terms(const Field& u, const Field& w, double p);
double action_I(const CoreTerms& t, double p);
double action_J(const CoreTerms& t, double p);
double action_P(const CoreTerms& t, double p);

// Euler-Lagrange residual g = -lap u + u + w u - |u|^{p-2}u, the exact L^2
// gradient of the discrete I. |u|^{p-2}u is evaluated as sign(u)|u|^{p-1}.
Field euler_gradient_w(const Field& u, const Field& w, double p);

EnergyBreakdown energy(const KernelTables& kt, const Field& u, const Params& params);
Field euler_gradient(const KernelTables& kt, const Field& u, const Params& params);

// Directional derivative I'(u)v = <grad u, grad v> + <u,v> + int(w u v)
// - int(|u|^{p-2}u v); bilinear in v.
double dirI(const KernelTables& kt, const Field& u, const Field& v, const Params& params);

double pohozaev(const KernelTables& kt, const Field& u, const Params& params);
double nehari_pohozaev(const KernelTables& kt, const Field& u, const Params& params);

}  // namespace logsp
