#ifndef HZETA_QUADRATURE_HPP
#define HZETA_QUADRATURE_HPP

#include <functional>

#include "hzeta/types.hpp"

namespace hzeta {

struct QuadratureResult {
  Complex value{};
  double abs_err = 0.0;       // difference of the last two refinement levels
  int levels_used = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Integrand on (0,1). Receives both x and 1-x so that endpoint-sensitive
/// factors like (1-x)^(-a) keep full precision near x = 1.
using Integrand = std::function<Complex(double x, double one_minus_x)>;

/// Tanh-sinh (double-exponential) quadrature of f over (0,1). Handles
/// algebraic endpoint singularities x^(-p), p < 1. Abscissae never touch
/// the endpoints. Throws NonFiniteSample if f returns a non-finite value.
QuadratureResult tanh_sinh(const Integrand& f, double tol, int max_level = 12);

enum class IntegrandKind {
  II,                  // zeta1(a,x) zeta1(b,x)
  JJ,                  // zeta1(a,x) zeta1(b,1-x)
  M,                   // symmetric remainder integrand of the film integral
  K,                   // film integrand (subtracted squared propagator gap)
  PowerZeta1,          // x^(-a) zeta1(b,x)
  ComplementaryPower,  // x^(-a) zeta1(b,1-x)
  HurwitzProduct,      // zeta(a,x) zeta(b,x)
  HurwitzComplement,   // zeta(a,x) zeta(b,1-x)
  MeanSquare,          // |zeta1(a,x)|^2, a = sigma + i t
};

struct IntegrandSpec {
  IntegrandKind kind;
  Complex a{};  // alpha for kinds M and K; sigma + i t for MeanSquare
  Complex b{};
};

/// Builds the exact integrand of the referenced integral as a callable on
/// (0,1). Throws DomainError when the parameters are outside the kind's
/// admissible range.
Integrand build_integrand(const IntegrandSpec& spec, const EvalOptions& opts = {});

QuadratureResult quad_eval(const IntegrandSpec& spec, double tol,
                           const EvalOptions& opts = {});

}  // namespace hzeta

#endif
