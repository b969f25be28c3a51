#ifndef HZETA_CASIMIR_HPP
#define HZETA_CASIMIR_HPP

#include <optional>

#include "hzeta/types.hpp"

namespace hzeta {

/// Spatial-dimension deficit eps (d = 4 - eps) with the derived film
/// exponent alpha = 2 - eps in (1, 2].
struct EpsilonParam {
  double eps = 0.0;

  explicit EpsilonParam(double e) : eps(e) {
    if (!(e >= 0.0 && e <= 0.95))
      throw DomainError("EpsilonParam: eps must lie in [0, 0.95] (alpha -> 1 divergence beyond)");
  }

  double alpha() const { return 2.0 - eps; }
};

struct CasimirReport {
  double eps = 0.0;
  double c0 = 0.0;
  double c1 = 0.0;
  double c1_assembled = 0.0;
  double K_closed = 0.0;
  double K_assembled = 0.0;
  double c1_err = 0.0;
  double K_err = 0.0;
  std::optional<int> n;
  std::optional<double> amplitude_first_order;
};

/// Dimensionless tail factor 1/(2 alpha - 1) = 1/(3 - 2 eps).
double tail_integral(EpsilonParam eps);

/// Film integral K(alpha) by its closed form, with the removable singularity
/// at alpha = 2 handled by pole-factored Gamma recurrences.
ValueWithError K_closed(EpsilonParam eps, const EvalOptions& opts = {});

/// K(alpha) assembled from the theorem values of I and J plus quadrature of
/// the symmetric remainder integral. At alpha = 2 the integer-order branches
/// are used; alpha in (2 - 1e-3, 2) snaps to 2 (reported in method).
ValueWithError K_assembled(EpsilonParam eps, const EvalOptions& opts = {});

/// Leading Casimir coefficient c0(eps) = -(4 pi)^(-d/2) Gamma(d/2) zeta(d).
double c0(double eps);

/// First-order coefficient c1(eps), with the eps = 0 cancellation handled
/// exactly (pole of the Beta factor killed by the zero of 1 - cos(pi eps)).
ValueWithError c1_closed(double eps, const EvalOptions& opts = {});

/// c1 assembled from the film integrals: (1/8) 2^(2 eps - 4) C(eps)^2
/// [K(2-eps) - 2/(3-2 eps)], with C = (1/4) pi^(eps/2 - 2) Gamma(1 - eps/2).
ValueWithError c1_assembled(double eps, const EvalOptions& opts = {});

/// First-order Casimir amplitude for an n-component Dirichlet film.
double amplitude_DD(int n, double eps);

CasimirReport casimir_report(double eps, std::optional<int> n = std::nullopt,
                             const EvalOptions& opts = {});

}  // namespace hzeta

#endif
