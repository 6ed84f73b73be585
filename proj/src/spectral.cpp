#include "platesim/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "platesim/errors.hpp"

namespace platesim {

namespace {
constexpr double kPi = std::numbers::pi;

void check_dim(int dim) {
  if (dim != 1 && dim != 2)
    throw std::invalid_argument("dim must be 1 or 2, got " + std::to_string(dim));
}

void check_same_shape(const ModalField& a, const ModalField& b, const char* what) {
  if (!a.same_shape(b))
    throw std::invalid_argument(std::string(what) + ": field shapes differ");
}
} // namespace

double gram_factor(int dim) {
  check_dim(dim);
  return dim == 1 ? kPi / 2.0 : (kPi / 2.0) * (kPi / 2.0);
}

ModalField::ModalField(int N_, int dim_) : N(N_), dim(dim_) {
  check_dim(dim_);
  if (N_ < 1) throw std::invalid_argument("N must be >= 1, got " + std::to_string(N_));
  c.assign(dim_ == 1 ? static_cast<std::size_t>(N_)
                     : static_cast<std::size_t>(N_) * N_,
           0.0);
}

double ModalField::mu(std::size_t i) const {
  if (dim == 1) {
    double k = static_cast<double>(i + 1);
    return k * k;
  }
  double k1 = static_cast<double>(i / N + 1);
  double k2 = static_cast<double>(i % N + 1);
  return k1 * k1 + k2 * k2;
}

bool ModalField::finite() const {
  for (double x : c)
    if (!std::isfinite(x)) return false;
  return true;
}

ModalField& ModalField::operator+=(const ModalField& o) {
  check_same_shape(*this, o, "field +=");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

ModalField& ModalField::operator-=(const ModalField& o) {
  check_same_shape(*this, o, "field -=");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

ModalField& ModalField::operator*=(double a) {
  for (double& x : c) x *= a;
  return *this;
}

ModalField operator+(ModalField a, const ModalField& b) { return a += b; }
ModalField operator-(ModalField a, const ModalField& b) { return a -= b; }
ModalField operator*(double a, ModalField f) { return f *= a; }

ModalField unit_mode(int N, int dim, int k1, int k2) {
  ModalField f(N, dim);
  if (k1 < 1 || k1 > N || (dim == 2 && (k2 < 1 || k2 > N)))
    throw std::invalid_argument("unit_mode: mode index out of range");
  f.c[dim == 1 ? f.index(k1) : f.index(k1, k2)] = 1.0;
  return f;
}

PhaseState::PhaseState(ModalField u_, ModalField v_, double lambda_)
    : u(std::move(u_)), v(std::move(v_)), lambda(lambda_) {
  if (!u.same_shape(v))
    throw std::invalid_argument("PhaseState: u and v must share N and dim");
  if (!(lambda > 0.0)) throw std::invalid_argument("PhaseState: lambda must be > 0");
}

PhaseState& PhaseState::operator+=(const PhaseState& o) {
  u += o.u;
  v += o.v;
  return *this;
}

PhaseState& PhaseState::operator-=(const PhaseState& o) {
  u -= o.u;
  v -= o.v;
  return *this;
}

PhaseState& PhaseState::operator*=(double a) {
  u *= a;
  v *= a;
  return *this;
}

PhaseState operator+(PhaseState a, const PhaseState& b) { return a += b; }
PhaseState operator-(PhaseState a, const PhaseState& b) { return a -= b; }
PhaseState operator*(double a, PhaseState x) { return x *= a; }

std::size_t CollocationGrid::points() const {
  return dim == 1 ? static_cast<std::size_t>(M)
                  : static_cast<std::size_t>(M) * M;
}

double CollocationGrid::weight() const { return dim == 1 ? h : h * h; }

double CollocationGrid::sine(int j, int k) const {
  return sin_lut[static_cast<std::size_t>(j) * k % sin_lut.size()];
}

CollocationGrid build_grid(int M, int dim) {
  check_dim(dim);
  if (M < 1) throw std::invalid_argument("build_grid: M must be >= 1");
  CollocationGrid g;
  g.M = M;
  g.dim = dim;
  g.h = kPi / (M + 1);
  g.nodes.resize(M);
  for (int j = 1; j <= M; ++j) g.nodes[j - 1] = j * g.h;
  std::size_t period = 2 * static_cast<std::size_t>(M + 1);
  g.sin_lut.resize(period);
  for (std::size_t r = 0; r < period; ++r)
    g.sin_lut[r] = std::sin(static_cast<double>(r) * kPi / (M + 1));
  return g;
}

namespace {

// 1D building blocks over the shared LUT. "stride" walks non-contiguous
// layouts so the same kernels serve both 2D passes.
void dst_axis_forward(const double* in, std::size_t in_stride, double* out,
                      std::size_t out_stride, int M, int N,
                      const std::vector<double>& lut) {
  const std::size_t period = lut.size();
  for (int k = 1; k <= N; ++k) {
    double acc = 0.0;
    std::size_t idx = 0;
    for (int j = 1; j <= M; ++j) {
      idx += static_cast<std::size_t>(k);
      if (idx >= period) idx -= period;
      acc += lut[idx] * in[(j - 1) * in_stride];
    }
    out[(k - 1) * out_stride] = acc;  // caller applies the 2/(M+1) scaling
  }
}

void dst_axis_inverse(const double* in, std::size_t in_stride, double* out,
                      std::size_t out_stride, int M, int N,
                      const std::vector<double>& lut) {
  const std::size_t period = lut.size();
  for (int j = 1; j <= M; ++j) {
    double acc = 0.0;
    std::size_t idx = 0;
    for (int k = 1; k <= N; ++k) {
      idx += static_cast<std::size_t>(j);
      if (idx >= period) idx -= period;
      acc += lut[idx] * in[(k - 1) * in_stride];
    }
    out[(j - 1) * out_stride] = acc;
  }
}

} // namespace

ModalField dst_forward(const std::vector<double>& values, int N,
                       const CollocationGrid& grid) {
  if (N > grid.M)
    throw AliasingError("dst_forward: N = " + std::to_string(N) + " modes exceed M = " +
                        std::to_string(grid.M) + " grid points per axis");
  if (values.size() != grid.points())
    throw std::invalid_argument("dst_forward: sample count does not match grid");
  ModalField f(N, grid.dim);
  const double scale = 2.0 / (grid.M + 1);
  if (grid.dim == 1) {
    dst_axis_forward(values.data(), 1, f.c.data(), 1, grid.M, N, grid.sin_lut);
    f *= scale;
    return f;
  }
  // pass 1: transform the k2 axis for each sample row j1
  const int M = grid.M;
  std::vector<double> tmp(static_cast<std::size_t>(M) * N);
  for (int j1 = 1; j1 <= M; ++j1)
    dst_axis_forward(values.data() + static_cast<std::size_t>(j1 - 1) * M, 1,
                     tmp.data() + (j1 - 1), static_cast<std::size_t>(M), M, N,
                     grid.sin_lut);
  // pass 2: transform the k1 axis for each column k2
  for (int k2 = 1; k2 <= N; ++k2)
    dst_axis_forward(tmp.data() + static_cast<std::size_t>(k2 - 1) * M, 1,
                     f.c.data() + (k2 - 1), static_cast<std::size_t>(N), M, N,
                     grid.sin_lut);
  f *= scale * scale;
  return f;
}

std::vector<double> dst_inverse(const ModalField& f, const CollocationGrid& grid) {
  if (f.dim != grid.dim)
    throw std::invalid_argument("dst_inverse: field and grid dimensions differ");
  if (f.N > grid.M)
    throw AliasingError("dst_inverse: field has more modes than grid points");
  std::vector<double> values(grid.points(), 0.0);
  const int M = grid.M, N = f.N;
  if (grid.dim == 1) {
    dst_axis_inverse(f.c.data(), 1, values.data(), 1, M, N, grid.sin_lut);
    return values;
  }
  // pass 1: synthesize the k2 axis; rows indexed by k1
  std::vector<double> tmp(static_cast<std::size_t>(N) * M);
  for (int k1 = 1; k1 <= N; ++k1)
    dst_axis_inverse(f.c.data() + static_cast<std::size_t>(k1 - 1) * N, 1,
                     tmp.data() + (k1 - 1), static_cast<std::size_t>(N), M, N,
                     grid.sin_lut);
  // pass 2: synthesize the k1 axis per sample column j2
  for (int j2 = 1; j2 <= M; ++j2)
    dst_axis_inverse(tmp.data() + static_cast<std::size_t>(j2 - 1) * N, 1,
                     values.data() + (j2 - 1), static_cast<std::size_t>(M), M, N,
                     grid.sin_lut);
  return values;
}

ModalField apply_neg_laplacian(const ModalField& f) {
  ModalField out = f;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] *= f.mu(i);
  return out;
}

ModalField apply_biharmonic(const ModalField& f) {
  ModalField out = f;
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    double m = f.mu(i);
    out.c[i] *= m * m;
  }
  return out;
}

double l2_inner(const ModalField& a, const ModalField& b) {
  check_same_shape(a, b, "l2_inner");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.c.size(); ++i) acc += a.c[i] * b.c[i];
  return gram_factor(a.dim) * acc;
}

double l2_norm_sq(const ModalField& f) {
  double acc = 0.0;
  for (double x : f.c) acc += x * x;
  return gram_factor(f.dim) * acc;
}

double l2_norm(const ModalField& f) { return std::sqrt(l2_norm_sq(f)); }

double norm_half_sq(const ModalField& u, double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("norm_half: lambda must be > 0");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.c.size(); ++i) {
    double m = u.mu(i);
    acc += (m * m + lambda) * u.c[i] * u.c[i];
  }
  return gram_factor(u.dim) * acc;
}

double norm_half(const ModalField& u, double lambda) {
  return std::sqrt(norm_half_sq(u, lambda));
}

double norm_X0_sq(const PhaseState& x) {
  return norm_half_sq(x.u, x.lambda) + l2_norm_sq(x.v);
}

double norm_X0(const PhaseState& x) { return std::sqrt(norm_X0_sq(x)); }

double dist_X0(const PhaseState& a, const PhaseState& b) {
  check_same_shape(a.u, b.u, "dist_X0");
  if (a.lambda != b.lambda)
    throw std::invalid_argument("dist_X0: lambda weights differ");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.u.c.size(); ++i) {
    double m = a.u.mu(i);
    double du = a.u.c[i] - b.u.c[i];
    double dv = a.v.c[i] - b.v.c[i];
    acc += (m * m + a.lambda) * du * du + dv * dv;
  }
  return std::sqrt(gram_factor(a.u.dim) * acc);
}

} // namespace platesim
