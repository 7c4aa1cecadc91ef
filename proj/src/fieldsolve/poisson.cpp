#include "vp25/fieldsolve/poisson.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

#include "vp25/core/error.hpp"

namespace vp25 {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <typename T>
FftwBuffer<T> fftw_buffer(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (!p) throw Error("PoissonSolver: fftw_malloc failed");
  return FftwBuffer<T>(p);
}

}  // namespace

double self_cell_log_average(double h) {
  return std::log(h) + 0.5 * (0.5 * std::numbers::pi - 3.0 - std::log(2.0));
}

struct PoissonSolver::Impl {
  int nx, ny;
  double h;
  int px, py;  // padded sizes
  std::size_t nreal, ncomplex;
  FftwBuffer<double> work_real;
  FftwBuffer<fftw_complex> work_hat;
  FftwBuffer<fftw_complex> out_hat;
  FftwBuffer<double> out_real;
  std::vector<std::complex<double>> k_log, k_x, k_y;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  mutable std::mutex use_mutex;

  Impl(int nx_, int ny_, double h_) : nx(nx_), ny(ny_), h(h_) {
    px = 2 * (nx + 1);
    py = 2 * (ny + 1);
    nreal = static_cast<std::size_t>(px) * py;
    ncomplex = static_cast<std::size_t>(py) * (px / 2 + 1);
    work_real = fftw_buffer<double>(nreal);
    out_real = fftw_buffer<double>(nreal);
    work_hat = fftw_buffer<fftw_complex>(ncomplex);
    out_hat = fftw_buffer<fftw_complex>(ncomplex);
    {
      std::lock_guard lock(planner_mutex());
      // row-major with x fastest: dimensions (py, px)
      forward = fftw_plan_dft_r2c_2d(py, px, work_real.get(), work_hat.get(), FFTW_ESTIMATE);
      backward = fftw_plan_dft_c2r_2d(py, px, out_hat.get(), out_real.get(), FFTW_ESTIMATE);
    }
    if (!forward || !backward) throw Error("PoissonSolver: FFTW planning failed");

    const double area = h * h;
    const double self = -2.0 * self_cell_log_average(h) * area;
    k_log = transform_kernel([&](int dx, int dy) {
      if (dx == 0 && dy == 0) return self;
      return -std::log(h * h * (dx * dx + dy * dy)) * area;
    });
    k_x = transform_kernel([&](int dx, int dy) {
      if (dx == 0 && dy == 0) return 0.0;
      return 2.0 * dx / (h * (dx * dx + dy * dy)) * area;
    });
    k_y = transform_kernel([&](int dx, int dy) {
      if (dx == 0 && dy == 0) return 0.0;
      return 2.0 * dy / (h * (dx * dx + dy * dy)) * area;
    });
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }

  template <typename K>
  std::vector<std::complex<double>> transform_kernel(K kernel) {
    for (int j = 0; j < py; ++j) {
      const int dy = j <= py / 2 ? j : j - py;
      for (int i = 0; i < px; ++i) {
        const int dx = i <= px / 2 ? i : i - px;
        work_real[static_cast<std::size_t>(j) * px + i] = kernel(dx, dy);
      }
    }
    fftw_execute(forward);
    std::vector<std::complex<double>> out(ncomplex);
    for (std::size_t k = 0; k < ncomplex; ++k) out[k] = {work_hat[k][0], work_hat[k][1]};
    return out;
  }

  // Caller holds use_mutex and has transformed the density into work_hat.
  void convolve(const std::vector<std::complex<double>>& kernel, std::vector<double>& out) {
    for (std::size_t k = 0; k < ncomplex; ++k) {
      const std::complex<double> v =
          std::complex<double>(work_hat[k][0], work_hat[k][1]) * kernel[k];
      out_hat[k][0] = v.real();
      out_hat[k][1] = v.imag();
    }
    fftw_execute(backward);
    const double scale = 1.0 / static_cast<double>(nreal);
    out.resize(static_cast<std::size_t>(nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i)
        out[static_cast<std::size_t>(j) * (nx + 1) + i] =
            out_real[static_cast<std::size_t>(j) * px + i] * scale;
  }

  void load_density(const std::vector<double>& rho) {
    std::fill(work_real.get(), work_real.get() + nreal, 0.0);
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i)
        work_real[static_cast<std::size_t>(j) * px + i] =
            rho[static_cast<std::size_t>(j) * (nx + 1) + i];
    fftw_execute(forward);
  }
};

PoissonSolver::PoissonSolver(int nx, int ny, double h) {
  if (!(h > 0.0)) throw PreconditionError("PoissonSolver: spacing must be positive");
  if (nx < 2 || ny < 2) throw PreconditionError("PoissonSolver: need at least two cells per axis");
  impl_ = std::make_unique<Impl>(nx, ny, h);
}

PoissonSolver::~PoissonSolver() = default;

int PoissonSolver::nx() const { return impl_->nx; }
int PoissonSolver::ny() const { return impl_->ny; }
double PoissonSolver::h() const { return impl_->h; }

void check_support(const Grid2D& g) {
  auto on_ring = [&](int i, int j) {
    if (g.rho[g.index(i, j)] != 0.0)
      throw DomainTooSmall("charge support touches the grid boundary; enlarge the domain");
  };
  for (int i = 0; i <= g.nx; ++i) {
    on_ring(i, 0);
    on_ring(i, g.ny);
  }
  for (int j = 0; j <= g.ny; ++j) {
    on_ring(0, j);
    on_ring(g.nx, j);
  }
}

void PoissonSolver::solve(Grid2D& g) const {
  g.validate();
  if (g.nx != impl_->nx || g.ny != impl_->ny || g.h != impl_->h)
    throw PreconditionError("PoissonSolver: grid geometry does not match the solver");
  check_support(g);
  std::lock_guard lock(impl_->use_mutex);
  impl_->load_density(g.rho);
  impl_->convolve(impl_->k_log, g.U);
  impl_->convolve(impl_->k_x, g.Ex);
  impl_->convolve(impl_->k_y, g.Ey);
}

void PoissonSolver::potential(const std::vector<double>& rho, std::vector<double>& U) const {
  const std::size_t n = static_cast<std::size_t>(impl_->nx + 1) * (impl_->ny + 1);
  if (rho.size() != n) throw PreconditionError("PoissonSolver: density has the wrong size");
  std::lock_guard lock(impl_->use_mutex);
  impl_->load_density(rho);
  impl_->convolve(impl_->k_log, U);
}

void solve_potential(Grid2D& grid) {
  PoissonSolver solver(grid);
  solver.solve(grid);
}

void solve_field(Grid2D& grid) { solve_potential(grid); }

}  // namespace vp25
