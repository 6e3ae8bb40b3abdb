#pragma once

#include <memory>

#include "logsp/grid.hpp"

namespace logsp {

// The three convolution kernels of the split logarithmic potential:
//   Log        k0(z) = log|z|
//   OnePlus    k1(z) = log(1+|z|)
//   OnePlusInv k2(z) = log(1+1/|z|)
// with k0 = k1 - k2 away from the origin. At z = 0, k0 is replaced by its
// exact cell average over one grid cell and k2(0) := k1(0) - k0(0) = -k0(0),
// so the splitting identity also holds at the origin.
enum class LogKernel { Log = 0, OnePlus = 1, OnePlusInv = 2 };

// Exact average of log|z| over the cell [-h/2,h/2]^2:
//   log h + pi/4 - 3/2 - (log 2)/2.
double log_kernel_origin(double h);

// Pointwise kernel sample at lattice displacement (dx,dy)*h.
double kernel_value(LogKernel k, double h, int dx, int dy);

// Precomputed padded kernel tables and their cached transforms for one grid.
// Immutable after build(); build() must run single-threaded, everything else
// is safe to share across threads.
class KernelTables {
 public:
  static KernelTables build(const GridSpec& g);

  const GridSpec& grid() const;
  double origin_value(LogKernel k) const;

  // h^2 * sum_y K(x-y) u^2(y), evaluated by zero-padded (linear, never
  // circular) FFT convolution on the 2N x 2N embedding.
  Field convolve_sq(LogKernel k, const Field& u) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// w = log|.| * u^2 on the grid.
Field log_potential(const KernelTables& kt, const Field& u);

// V_i(u) = h^4 sum sum k_i(x-y) u^2(x) u^2(y), computed as integrate(u^2 w_i).
double v0(const KernelTables& kt, const Field& u);
double v1(const KernelTables& kt, const Field& u);
double v2(const KernelTables& kt, const Field& u);

// max over the outermost cell ring of |w(x) - log|x| * integrate(u^2)|;
// diagnoses whether the truncation radius is adequate. Rejects zero fields.
double potential_asymptotics_residual(const KernelTables& kt, const Field& u);

}  // namespace logsp
