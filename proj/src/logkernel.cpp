#include "logsp/logkernel.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "logsp/reduce.hpp"

namespace logsp {

double log_kernel_origin(double h) {
  // (1/h^2) Int_{[-h/2,h/2]^2} log|z| dz, reduced in polar coordinates over
  // one octant of the square.
  return std::log(h) + std::numbers::pi / 4.0 - 1.5 - 0.5 * std::numbers::ln2;
}

double kernel_value(LogKernel k, double h, int dx, int dy) {
  const double r = std::hypot(dx * h, dy * h);
  switch (k) {
    case LogKernel::Log:
      return (dx == 0 && dy == 0) ? log_kernel_origin(h) : std::log(r);
    case LogKernel::OnePlus:
      return std::log1p(r);
    case LogKernel::OnePlusInv:
      return (dx == 0 && dy == 0) ? -log_kernel_origin(h) : std::log1p(1.0 / r);
  }
  return 0.0;
}

namespace {

struct FftwDeleter {
  void operator()(void* p) const { fftw_free(p); }
};
template <class T>
using fftw_buf = std::unique_ptr<T[], FftwDeleter>;

template <class T>
fftw_buf<T> fftw_alloc_buf(std::size_t n) {
  return fftw_buf<T>(static_cast<T*>(fftw_malloc(n * sizeof(T))));
}

}  // namespace

struct KernelTables::Impl {
  GridSpec grid;
  int M = 0;            // padded side, 2N
  std::size_t mc = 0;   // complex row length, M/2+1
  // Kernel transforms, pre-scaled by h^2 / M^2 so that one forward transform
  // of padded u^2, a pointwise product and one inverse transform yield w.
  std::vector<std::complex<double>> khat[3];
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;

  ~Impl() {
    if (fwd) fftw_destroy_plan(fwd);
    if (inv) fftw_destroy_plan(inv);
  }
};

KernelTables KernelTables::build(const GridSpec& g) {
  auto impl = std::make_shared<Impl>();
  impl->grid = g;
  const int N = g.points_per_side;
  const int M = 2 * N;
  impl->M = M;
  impl->mc = static_cast<std::size_t>(M / 2 + 1);
  const double h = g.spacing;

  auto real = fftw_alloc_buf<double>(static_cast<std::size_t>(M) * M);
  auto cplx = fftw_alloc_buf<fftw_complex>(static_cast<std::size_t>(M) * impl->mc);
  impl->fwd = fftw_plan_dft_r2c_2d(M, M, real.get(), cplx.get(), FFTW_ESTIMATE);
  impl->inv = fftw_plan_dft_c2r_2d(M, M, cplx.get(), real.get(), FFTW_ESTIMATE);
  if (!impl->fwd || !impl->inv) throw std::runtime_error("KernelTables: FFTW plan failed");

  const double scale = g.cell_area() / (static_cast<double>(M) * M);
  for (int kind = 0; kind < 3; ++kind) {
    const LogKernel lk = static_cast<LogKernel>(kind);
    double* re = real.get();
    std::fill(re, re + static_cast<std::size_t>(M) * M, 0.0);
    // Circulant embedding of the displacement table; displacements range over
    // [-(N-1), N-1] in both axes, everything else stays zero and is never
    // reached by the zero-padded data.
#pragma omp parallel for schedule(static)
    for (int dx = -(N - 1); dx <= N - 1; ++dx) {
      const int p = (dx + M) % M;
      for (int dy = -(N - 1); dy <= N - 1; ++dy) {
        const int q = (dy + M) % M;
        re[static_cast<std::size_t>(p) * M + q] = kernel_value(lk, h, dx, dy);
      }
    }
    fftw_execute_dft_r2c(impl->fwd, re, cplx.get());
    auto& kh = impl->khat[kind];
    kh.resize(static_cast<std::size_t>(M) * impl->mc);
    const auto* c = reinterpret_cast<const std::complex<double>*>(cplx.get());
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < static_cast<long long>(kh.size()); ++t) {
      kh[static_cast<std::size_t>(t)] = c[t] * scale;
    }
  }

  KernelTables kt;
  kt.impl_ = std::move(impl);
  return kt;
}

const GridSpec& KernelTables::grid() const { return impl_->grid; }

double KernelTables::origin_value(LogKernel k) const {
  return kernel_value(k, impl_->grid.spacing, 0, 0);
}

Field KernelTables::convolve_sq(LogKernel k, const Field& u) const {
  const Impl& im = *impl_;
  if (u.grid != im.grid) throw std::invalid_argument("convolve_sq: grid mismatch");
  const int N = im.grid.points_per_side;
  const int M = im.M;

  auto real = fftw_alloc_buf<double>(static_cast<std::size_t>(M) * M);
  auto cplx = fftw_alloc_buf<fftw_complex>(static_cast<std::size_t>(M) * im.mc);
  double* re = real.get();

#pragma omp parallel for schedule(static)
  for (int i = 0; i < M; ++i) {
    double* row = re + static_cast<std::size_t>(i) * M;
    if (i < N) {
      const double* src = u.v.data() + static_cast<std::size_t>(i) * N;
      for (int j = 0; j < N; ++j) row[j] = src[j] * src[j];
      for (int j = N; j < M; ++j) row[j] = 0.0;
    } else {
      for (int j = 0; j < M; ++j) row[j] = 0.0;
    }
  }

  fftw_execute_dft_r2c(im.fwd, re, cplx.get());
  auto* c = reinterpret_cast<std::complex<double>*>(cplx.get());
  const auto& kh = im.khat[static_cast<int>(k)];
#pragma omp parallel for schedule(static)
  for (long long t = 0; t < static_cast<long long>(kh.size()); ++t) {
    c[t] *= kh[static_cast<std::size_t>(t)];
  }
  fftw_execute_dft_c2r(im.inv, cplx.get(), re);

  Field w(im.grid);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < N; ++i) {
    const double* row = re + static_cast<std::size_t>(i) * M;
    double* dst = w.v.data() + static_cast<std::size_t>(i) * N;
    for (int j = 0; j < N; ++j) dst[j] = row[j];
  }
  require_finite(w, "convolve_sq");
  return w;
}

Field log_potential(const KernelTables& kt, const Field& u) {
  return kt.convolve_sq(LogKernel::Log, u);
}

namespace {
double v_of(const KernelTables& kt, LogKernel k, const Field& u) {
  const Field w = kt.convolve_sq(k, u);
  const double* uv = u.v.data();
  const double* wv = w.v.data();
  const double s = det_transform_reduce(
      u.size(), [uv, wv](std::size_t t) { return uv[t] * uv[t] * wv[t]; });
  return u.grid.cell_area() * s;
}
}  // namespace

double v0(const KernelTables& kt, const Field& u) { return v_of(kt, LogKernel::Log, u); }
double v1(const KernelTables& kt, const Field& u) { return v_of(kt, LogKernel::OnePlus, u); }
double v2(const KernelTables& kt, const Field& u) { return v_of(kt, LogKernel::OnePlusInv, u); }

double potential_asymptotics_residual(const KernelTables& kt, const Field& u) {
  const double* uv = u.v.data();
  const double mass =
      u.grid.cell_area() *
      det_transform_reduce(u.size(), [uv](std::size_t t) { return uv[t] * uv[t]; });
  if (!(mass > 0.0)) {
    throw std::invalid_argument("potential_asymptotics_residual: zero field");
  }
  const Field w = log_potential(kt, u);
  const int N = u.grid.points_per_side;
  double res = 0.0;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (i != 0 && i != N - 1 && j != 0 && j != N - 1) continue;
      const double r = std::hypot(u.grid.coord(i), u.grid.coord(j));
      const double dev = std::fabs(w.at(i, j) - std::log(r) * mass);
      if (dev > res) res = dev;
    }
  }
  return res;
}

}  // namespace logsp
