#pragma once

#include <array>
#include <functional>

#include "kwc/grid.hpp"

namespace kwc {

// Material functions of the model and the guard constants derived from them.
// alpha must be convex with alpha'(0) = 0; G must be a nonnegative primitive
// of g; alpha0 must be positive with a positive infimum (delta_alpha).
struct ModelFns {
  std::function<double(double)> g;
  std::function<double(double)> G;
  std::function<double(double)> g_prime;
  std::function<double(double)> alpha;
  std::function<double(double)> alpha_prime;
  std::function<double(double)> alpha_second;
  std::function<double(double)> alpha0;
  std::function<double(double)> alpha0_prime;

  double delta_alpha = 0.0;
  double M = 0.0;       // truncation level
  double lip_g_M = 0.0; // sup |g'| on [-M, M], with safety factor

  // sup norms on [-M, M], with safety factor
  double sup_g = 0.0;
  double sup_alpha_prime = 0.0;
  double sup_alpha0 = 0.0;
  double sup_alpha0_prime = 0.0;
};

struct SchemeParams {
  double mu = 1.0;
  double nu = 1.0;
  double eps = 0.1;
  double tau = 0.01;
  double T = 1.0;
  double tol_newton = 1e-10;
  double tol_fixed_point = 1e-9;
  int max_newton_iters = 100;
  int max_fp_iters = 200;
};

void validate_params(const SchemeParams& p);

double truncate(double r, double M);

// gamma_eps(y) = sqrt(eps^2 + |y|^2), smooth approximation of the norm.
double gamma_eps(const std::array<double, 2>& y, int dim, double eps);
std::array<double, 2> dgamma_eps(const std::array<double, 2>& y, int dim,
                                 double eps);

// Linear coefficient model family: g linear, alpha quadratic, alpha0
// quadratic. Invariants of (A2)/(A3) are checked at construction.
ModelFns make_polynomial_model(double g0, double g1, double alpha_c0,
                               double alpha_c2, double alpha0_c0,
                               double alpha0_c2);

// g(r) = r - 1, G(r) = (r-1)^2/2, alpha(r) = r^2/2 + 0.01, alpha0(r) = 1 + r^2.
ModelFns default_model();

// Smallest M on the lattice {|eta0|_inf + 0.5 k} satisfying
// M >= |eta0|_inf, g(M) >= u_sup and g(-M) <= -u_sup, rounded up to one
// decimal. Throws ModelError when no such M exists below 1e6.
double choose_truncation_level(const ScalarField& eta0, double u_sup,
                               const ModelFns& fns);

// Recomputes the [-M, M] guard constants for a given truncation level and
// re-checks the structural invariants. Must be called before stepping.
void finalize_model(ModelFns& fns, double M);

// Truncated primitives: C^{1,1}, equal to G (resp. alpha) on [-M, M] with
// linear extensions outside; derivatives are g o T_M (resp. alpha' o T_M).
double tilde_G_M(double r, const ModelFns& fns);
double tilde_alpha_M(double r, const ModelFns& fns);
double d_tilde_alpha_M(double r, const ModelFns& fns);
double dd_tilde_alpha_M(double r, const ModelFns& fns);

// --- Face quadrature of the singular-diffusion term ---------------------
//
// sum over axes k of { interior faces, weight vol:  mean-alpha * phi(s) }
//                  + { boundary faces, weight vol/2: alpha(adjacent) * phi(0) }
// with phi(s) = sqrt(eps_face^2 + s^2) and eps_face = eps / dim, so that the
// zero-gradient baseline integrates alpha * eps exactly over the domain.
// eps_face = 0 gives the unregularized |s| quadrature.

double tv_face_eps(const Grid& g, double eps);

double tv_value(const ScalarField& alpha_cells, const ScalarField& theta,
                double eps_face);
// d/d theta of tv_value, H-representation: -div(mean-alpha * phi'(grad theta)).
ScalarField tv_grad_theta(const ScalarField& alpha_cells,
                          const ScalarField& theta, double eps_face);
// Per-cell weight q with d/d eta_c tv_value = alpha'(eta_c) * q_c (H-rep);
// q_c = eps at zero gradient.
ScalarField tv_eta_weight(const ScalarField& theta, double eps_face);
// Action of d2/d theta2 of tv_value on a direction (H-representation).
ScalarField tv_hess_theta_apply(const ScalarField& alpha_cells,
                                const ScalarField& theta,
                                const ScalarField& dir, double eps_face);
// Diagonal of the theta-Hessian (H-representation), for preconditioning.
ScalarField tv_hess_theta_diag(const ScalarField& alpha_cells,
                               const ScalarField& theta, double eps_face);

// --- Free energies -------------------------------------------------------

// F(eta, theta) = 1/2 |grad eta|^2 + int G(eta) + face quadrature of
// alpha(eta) |grad theta|.
double energy_F(const ScalarField& eta, const ScalarField& theta,
                const ModelFns& fns);

// F_eps: as F but with the truncated primitives and gamma_eps on faces.
double energy_F_eps(const ScalarField& eta, const ScalarField& theta,
                    const ModelFns& fns, double eps);

}  // namespace kwc
