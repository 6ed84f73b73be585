#ifndef PLATESIM_COEFFICIENTS_HPP
#define PLATESIM_COEFFICIENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "platesim/spectral.hpp"

namespace platesim {

// ---------------------------------------------------------------------------
// Damping family a_eps(t,x) = a0(t,x) + eps * p(t,x)
// ---------------------------------------------------------------------------

// Closed-form catalog of time/space profiles. The spatial factor g(x) is
// sin(x) in 1D and sin(x1)sin(x2) in 2D, so every profile is smooth on Omega.
enum class DampingProfileKind { Constant, SinT, SinX, SinTX };

struct DampingProfile {
  DampingProfileKind kind = DampingProfileKind::Constant;
  double c0 = 1.0;     // constant offset
  double c1 = 0.0;     // modulation amplitude
  double c2 = 0.0;     // spatial modulation amplitude (SinTX)
  double omega = 1.0;  // time frequency

  // Constant: c0
  // SinT:     c0 + c1 sin(omega t)
  // SinX:     c0 + c1 g(x)
  // SinTX:    c0 + c1 sin(omega t) (1 + c2 g(x))
  double eval(double t, double gx) const;
  bool x_dependent() const;
  /// sup over R x Omega of |profile|; exact for the catalog forms.
  double sup_abs() const;
};

DampingProfile parse_damping_profile(const std::string& key, double c0, double c1,
                                     double c2, double omega);

struct DampingSpec {
  DampingProfile base;
  DampingProfile perturbation;
  double epsilon = 0.0;  // in [0,1]
  // declared standing hypotheses
  double alpha0 = 0.0;   // 0 < alpha0 <= a_eps
  double alpha1 = 0.0;   // a_eps <= alpha1
  double beta = 1.0;     // Hoelder exponent in (0,1]
  double holder_C = 1.0; // declared Hoelder constant

  double eval(double t, double gx) const {
    return base.eval(t, gx) + epsilon * perturbation.eval(t, gx);
  }
  bool x_dependent() const {
    return base.x_dependent() || (epsilon != 0.0 && perturbation.x_dependent());
  }
  /// ||a0 - a_eps||_inf = eps * sup|p|, exact for the linear-in-eps family.
  double gap_sup() const { return epsilon * perturbation.sup_abs(); }
  void check_declared() const;  // throws std::invalid_argument
};

/// Node values of a_eps(t, .); throws HypothesisViolation naming the node if
/// any value leaves [alpha0, alpha1].
std::vector<double> eval_damping(const DampingSpec& spec, double t,
                                 const CollocationGrid& grid);

/// Fast path when the damping does not depend on x.
double eval_damping_scalar(const DampingSpec& spec, double t);

struct DampingValidationReport {
  double measured_min = 0.0;
  double measured_max = 0.0;
  double holder_quotient = 0.0;  // sup over t-pairs of ||a(t,.)-a(s,.)||_inf / |t-s|^beta
  double witness_t = 0.0;        // where the bound check failed (if it did)
  double witness_value = 0.0;
  bool bounds_pass = false;
  bool holder_pass = false;
  bool pass() const { return bounds_pass && holder_pass; }
};

/// Lattice check of the declared hypotheses over [t0, t1] x grid nodes.
DampingValidationReport validate_damping(const DampingSpec& spec,
                                         const CollocationGrid& grid,
                                         double t0, double t1, int nt = 201);

// ---------------------------------------------------------------------------
// Nonlinearity f with primitive F, growth exponent rho and constant c
// ---------------------------------------------------------------------------

enum class NonlinearityKind {
  Zero,       // f = 0
  Linear,     // f = s
  CubicSoft,  // f = kappa s - s^3
  Cubic,      // f = -s^3
  Sine,       // f = sin s
  Square      // f = s^2 (fails dissipativity; kept for validator tests)
};

struct NonlinearitySpec {
  NonlinearityKind kind = NonlinearityKind::Zero;
  double kappa = 1.0;  // CubicSoft only
  double rho = 2.0;    // declared growth exponent > 1
  double c = 1.0;      // declared growth constant > 0

  double f(double s) const;
  double fprime(double s) const;
  double F(double s) const;  // primitive, F(0) = 0

  bool is_zero() const { return kind == NonlinearityKind::Zero; }
  bool is_polynomial() const;
  int polynomial_degree() const;  // meaningful only when is_polynomial()

  /// Grid-per-mode multiplier of the dealiasing rule: ceil(rho) for
  /// polynomial entries, 2 otherwise, 1 for the zero entry.
  int dealias_multiplier() const;

  /// Critical points of g(s) = f(s)s - nu s^2 where available in closed form.
  std::vector<double> dissipativity_critical_points(double nu) const;
};

/// Catalog constructor with per-entry default rho and c (overridable).
NonlinearitySpec make_nonlinearity(NonlinearityKind kind, double kappa = 1.0,
                                   double rho = 0.0, double c = 0.0);
NonlinearitySpec parse_nonlinearity(const std::string& key, double kappa = 1.0,
                                    double rho = 0.0, double c = 0.0);

/// Pointwise f / F on sample values; throws OverflowError on non-finite output.
std::vector<double> eval_f(const NonlinearitySpec& spec,
                           const std::vector<double>& values);
std::vector<double> eval_F(const NonlinearitySpec& spec,
                           const std::vector<double>& values);

/// Collocation projection of f(u): dst_forward(f(dst_inverse(u))).
/// Requires M >= dealias_multiplier * N (AliasingError otherwise).
ModalField nemitskii(const NonlinearitySpec& spec, const ModalField& u,
                     const CollocationGrid& grid);

struct DissipativityCertificate {
  double nu = 0.0;
  double M_nu = 0.0;          // sup of f(s)s - nu s^2, clamped at 0
  double C_nu = 0.0;          // M_nu * |Omega|
  double probe_range = 0.0;   // S
  double arg_sup = 0.0;
  bool boundary_attained = false;  // sup at |s| = S with outward growth
};

/// Fits M_nu over [-S, S] (lattice + closed-form critical points) and sets
/// C_nu = M_nu * omega_measure. nu = 0 is allowed when the sup is finite.
DissipativityCertificate fit_dissipativity(const NonlinearitySpec& spec, double nu,
                                           double S, double omega_measure);

/// Throws DissipativityViolation when the certificate is boundary-attained.
void require_dissipative(const DissipativityCertificate& cert);

struct GrowthReport {
  double worst_deriv_ratio = 0.0;  // |f'(s)| / (c (1 + |s|^{rho-1}))
  double deriv_witness = 0.0;
  double worst_pair_ratio = 0.0;   // Lipschitz two-point bound ratio
  double pair_witness_s = 0.0;
  double pair_witness_t = 0.0;
  bool pass() const { return worst_deriv_ratio <= 1.0 + 1e-12 &&
                             worst_pair_ratio <= 1.0 + 1e-12; }
};

/// Checks |f'(s)| <= c(1+|s|^{rho-1}) on a lattice and the two-point bound
/// |f(s)-f(t)| <= 2^{rho-1} c |t-s| (1+|s|^{rho-1}+|t|^{rho-1}) on random pairs.
GrowthReport verify_growth(const NonlinearitySpec& spec, double S,
                           int samples = 4096, std::uint64_t seed = 1);

} // namespace platesim

#endif
