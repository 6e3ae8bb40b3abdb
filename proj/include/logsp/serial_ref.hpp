#pragma once

#include "logsp/grid.hpp"
#include "logsp/logkernel.hpp"

namespace logsp::ref {

// Serial reference implementations of the parallel kernels. They are kept
// deliberately simple (plain loops, no FFT, no OpenMP) and serve as the
// comparison baseline for the unit tests and the kernel benchmark.

double integrate(const Field& f);
double kinetic_energy(const Field& u);
Field laplacian(const Field& u);

// Direct O(N^4) lattice summation of h^2 sum_y K(x-y) u^2(y). This is the
// validation oracle for the FFT convolution path.
Field convolve_sq_direct(LogKernel k, const Field& u);
Field log_potential_direct(const Field& u);

// Numerical cell average of log|z| over [-h/2,h/2]^2 (adaptive quadrature),
// cross-checking the closed form used by the kernel tables.
double log_kernel_origin_quadrature(double h);

}  // namespace logsp::ref
