#ifndef PLATESIM_SPECTRAL_HPP
#define PLATESIM_SPECTRAL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace platesim {

// Sine-basis representation of scalar fields on Omega = (0,pi)^dim, dim 1 or 2.
//
//   dim 1:  u(x)    = sum_k  c[k-1] sin(k x),                 k  = 1..N
//   dim 2:  u(x1,x2)= sum_kk c[idx] sin(k1 x1) sin(k2 x2),    ki = 1..N
//
// The basis satisfies u = Lap u = 0 on the boundary exactly, so -Lap and
// Lap^2 act diagonally: mode k carries the Dirichlet-Laplacian eigenvalue
// mu_k = k^2 (1D) or k1^2 + k2^2 (2D).

/// Gram factor of the unnormalized sine basis: integral of phi_k^2 over Omega.
double gram_factor(int dim);

struct ModalField {
  int N = 0;              // modes per axis
  int dim = 1;            // 1 or 2
  std::vector<double> c;  // N entries (1D) or N*N entries, k1-major (2D)

  ModalField() = default;
  ModalField(int N_, int dim_);  // zero field; throws std::invalid_argument

  std::size_t size() const { return c.size(); }

  // linear index of a mode
  std::size_t index(int k) const { return static_cast<std::size_t>(k - 1); }
  std::size_t index(int k1, int k2) const {
    return static_cast<std::size_t>(k1 - 1) * N + (k2 - 1);
  }

  /// Eigenvalue of -Lap for the mode at linear index i.
  double mu(std::size_t i) const;

  bool same_shape(const ModalField& o) const { return N == o.N && dim == o.dim; }
  bool finite() const;

  ModalField& operator+=(const ModalField& o);
  ModalField& operator-=(const ModalField& o);
  ModalField& operator*=(double a);
};

ModalField operator+(ModalField a, const ModalField& b);
ModalField operator-(ModalField a, const ModalField& b);
ModalField operator*(double a, ModalField f);

/// Unit coefficient vector e_k (1D) / e_{(k1,k2)} (2D).
ModalField unit_mode(int N, int dim, int k1, int k2 = 1);

// Point (u, v) of the phase space X^0 = E^{1/2} x L^2, with the weight lambda
// entering the E^{1/2} norm.
struct PhaseState {
  ModalField u;
  ModalField v;
  double lambda = 1.0;

  PhaseState() = default;
  PhaseState(ModalField u_, ModalField v_, double lambda_);

  PhaseState& operator+=(const PhaseState& o);
  PhaseState& operator-=(const PhaseState& o);
  PhaseState& operator*=(double a);
};

PhaseState operator+(PhaseState a, const PhaseState& b);
PhaseState operator-(PhaseState a, const PhaseState& b);
PhaseState operator*(double a, PhaseState x);

// Uniform collocation grid x_j = j*pi/(M+1), j = 1..M, tensorized in 2D.
// Node values of sine modes come from one shared table:
//   sin(k * x_j) = sin_lut[(j*k) mod 2(M+1)],
// which keeps the discrete sine transform an exact involution for N <= M.
struct CollocationGrid {
  int M = 0;
  int dim = 1;
  std::vector<double> nodes;    // per-axis nodes, size M
  double h = 0.0;               // per-axis spacing pi/(M+1)
  std::vector<double> sin_lut;  // size 2(M+1)

  std::size_t points() const;       // M^dim
  double weight() const;            // quadrature weight per node: h^dim
  double sine(int j, int k) const;  // sin(k x_j), 1-based j
};

/// Builds the grid; M >= 1 per axis. Nodes are strictly interior and the
/// composite-rule weights are positive.
CollocationGrid build_grid(int M, int dim);

/// Sine coefficients of grid samples; exact for N-term sine sums, N <= M.
/// 2D sample layout is j1-major. Throws AliasingError when N > M.
ModalField dst_forward(const std::vector<double>& values, int N,
                       const CollocationGrid& grid);

/// Samples the field on the grid nodes; inverse of dst_forward on N <= M modes.
std::vector<double> dst_inverse(const ModalField& f, const CollocationGrid& grid);

/// -Lap: coefficient-wise multiplication by mu_k.
ModalField apply_neg_laplacian(const ModalField& f);

/// Lap^2: coefficient-wise multiplication by mu_k^2.
ModalField apply_biharmonic(const ModalField& f);

/// L^2(Omega) inner product: (pi/2)^dim * sum_k a_k b_k.
double l2_inner(const ModalField& a, const ModalField& b);

double l2_norm_sq(const ModalField& f);
double l2_norm(const ModalField& f);

/// ||u||_{1/2}^2 = ||Lap u||_L2^2 + lambda ||u||_L2^2; requires lambda > 0.
double norm_half_sq(const ModalField& u, double lambda);
double norm_half(const ModalField& u, double lambda);

/// ||(u,v)||_{X0} = [||u||_{1/2}^2 + ||v||_L2^2]^{1/2}.
double norm_X0_sq(const PhaseState& x);
double norm_X0(const PhaseState& x);

/// X0 distance without forming the difference state.
double dist_X0(const PhaseState& a, const PhaseState& b);

} // namespace platesim

#endif
