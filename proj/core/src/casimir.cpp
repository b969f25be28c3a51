#include "hzeta/casimir.hpp"

#include <cmath>
#include <limits>

#include "hzeta/closed_form_integrals.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/special_functions.hpp"

namespace hzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

double real_gamma(double x) { return gamma(Complex(x)).real(); }

// 2 B(1-alpha, 2alpha-1) + B(1-alpha, 1-alpha) with alpha = 2 - eps, written
// through exact Gamma recurrences so that the simple poles at eps = 0 appear
// as explicit 1/eps factors and cancel analytically:
//   Gamma(-1+eps)  = Gamma(1+eps)  / (eps (eps-1))
//   Gamma(-2+2eps) = Gamma(1+2eps) / (2eps (2eps-1)(2eps-2))
// The combination vanishes at eps = 0 (including the constant order).
double beta_block(double eps) {
  if (eps < 1e-14) return 0.0;
  const double g1e = real_gamma(1.0 + eps);
  const double inner = g1e * real_gamma(3.0 - 2.0 * eps) / real_gamma(2.0 - eps) +
                       2.0 * (2.0 * eps - 1.0) * g1e * g1e / real_gamma(1.0 + 2.0 * eps);
  return 2.0 / (eps * (eps - 1.0)) * inner;
}

}  // namespace

double tail_integral(EpsilonParam eps) { return 1.0 / (3.0 - 2.0 * eps.eps); }

ValueWithError K_closed(EpsilonParam ep, const EvalOptions& opts) {
  const double eps = ep.eps;
  const double alpha = ep.alpha();
  const ValueWithError za = riemann_zeta(Complex(alpha), opts);
  const ValueWithError z2a1 = riemann_zeta(Complex(2.0 * alpha - 1.0), opts);
  const double block = beta_block(eps);

  ValueWithError out;
  out.value = 4.0 * za.value * za.value + 2.0 * z2a1.value * Complex(block) +
              2.0 / (2.0 * alpha - 1.0);
  // the beta block is a difference of O(1) quantities scaled by 1/eps
  const double block_err =
      (eps > 1e-14) ? 1e-15 / (eps * std::abs(eps - 1.0)) : 0.0;
  out.abs_err = 8.0 * std::abs(za.value) * za.abs_err +
                2.0 * std::abs(z2a1.value) * block_err + 2.0 * std::abs(block) * z2a1.abs_err +
                4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  out.method = "closed-form";
  return out;
}

ValueWithError K_assembled(EpsilonParam ep, const EvalOptions& opts) {
  double alpha = ep.alpha();
  std::string note = "assembled";
  if (alpha > 2.0 - 1e-3 && alpha < 2.0) {
    alpha = 2.0;  // theorem series are cancellation-corrupted in this window
    note = "assembled(alpha snapped to 2)";
  }

  ValueWithError I, J;
  if (alpha == 2.0) {
    I = integral_I_integer(2);
    J = integral_J_integer(2);
  } else {
    I = integral_I(Complex(alpha), Complex(alpha));
    J = integral_J(Complex(alpha), Complex(alpha));
  }
  const QuadratureResult M = quad_eval({IntegrandKind::M, Complex(alpha), {}}, 1e-11, opts);
  const ValueWithError za = riemann_zeta(Complex(alpha), opts);

  ValueWithError out;
  out.value = -4.0 * za.value * za.value + 2.0 * I.value + 2.0 * J.value + 2.0 * M.value;
  out.abs_err = 8.0 * std::abs(za.value) * za.abs_err + 2.0 * I.abs_err + 2.0 * J.abs_err +
                2.0 * M.abs_err;
  out.terms_used = I.terms_used + J.terms_used + M.evaluations;
  out.method = note;
  return out;
}

double c0(double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("c0: eps must lie in [0,1)");
  const double d = 4.0 - eps;
  return -std::pow(4.0 * kPi, -d / 2.0) * real_gamma(d / 2.0) *
         riemann_zeta(Complex(d)).value.real();
}

ValueWithError c1_closed(double eps, const EvalOptions& opts) {
  if (!(eps >= 0.0 && eps <= 0.95))
    throw DomainError("c1_closed: eps must lie in [0, 0.95]");
  const ValueWithError z2 = riemann_zeta(Complex(2.0 - eps), opts);

  // (1 - cos(pi eps)) B(3-2eps, -1+eps) zeta(3-2eps): the simple Beta pole at
  // eps = 0 is cancelled by the second-order zero of 1 - cos = 2 sin^2. With
  // Gamma(-1+eps) = Gamma(1+eps)/(eps(eps-1)) the sin^2/eps grouping is
  // finite and fully stable down to eps = 0.
  double cross = 0.0;
  if (eps > 0.0) {
    const double s = std::sin(0.5 * kPi * eps);
    const double beta_pole = real_gamma(3.0 - 2.0 * eps) * real_gamma(1.0 + eps) /
                             ((eps - 1.0) * real_gamma(2.0 - eps));
    cross = (2.0 * s * s / eps) * beta_pole *
            riemann_zeta(Complex(3.0 - 2.0 * eps), opts).value.real();
  }

  const double ge = real_gamma(1.0 - 0.5 * eps);
  const double pre = 0.5 * std::pow(4.0 * kPi, -4.0 + eps) * ge * ge;
  const double bracket = z2.value.real() * z2.value.real() + cross;

  ValueWithError out;
  out.value = pre * bracket;
  out.abs_err = pre * (2.0 * std::abs(z2.value) * z2.abs_err + 1e-14 * std::abs(cross)) +
                4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  out.method = (eps > 0.0) ? "closed-form" : "closed-form(eps=0 limit)";
  return out;
}

ValueWithError c1_assembled(double eps, const EvalOptions& opts) {
  if (!(eps >= 0.0 && eps <= 0.95))
    throw DomainError("c1_assembled: eps must lie in [0, 0.95]");
  const EpsilonParam ep(eps);
  const ValueWithError K = K_closed(ep, opts);
  const double C = 0.25 * std::pow(kPi, -2.0 + 0.5 * eps) * real_gamma(1.0 - 0.5 * eps);
  const double pre = 0.125 * std::pow(2.0, -4.0 + 2.0 * eps) * C * C;

  ValueWithError out;
  out.value = pre * (K.value.real() - 2.0 * tail_integral(ep));
  out.abs_err = pre * K.abs_err + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  out.method = "assembled";
  return out;
}

double amplitude_DD(int n, double eps) {
  if (n < 1) throw DomainError("amplitude_DD: n must be >= 1");
  if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("amplitude_DD: eps must lie in [0,1)");
  const double zp4 = riemann_zeta_derivative(Complex(4.0)).value.real();
  const double z4 = riemann_zeta(Complex(4.0)).value.real();
  const double bracket = (kEulerGamma - 1.0) / 2.0 + std::log(2.0 * std::sqrt(kPi)) - zp4 / z4 -
                         1.25 * (n + 2.0) / (n + 8.0);
  return -n * kPi * kPi / 1440.0 * (1.0 + bracket * eps);
}

CasimirReport casimir_report(double eps, std::optional<int> n, const EvalOptions& opts) {
  const EpsilonParam ep(eps);
  CasimirReport r;
  r.eps = eps;
  r.c0 = c0(eps);
  const ValueWithError c1c = c1_closed(eps, opts);
  const ValueWithError c1a = c1_assembled(eps, opts);
  const ValueWithError kc = K_closed(ep, opts);
  const ValueWithError ka = K_assembled(ep, opts);
  r.c1 = c1c.value.real();
  r.c1_assembled = c1a.value.real();
  r.K_closed = kc.value.real();
  r.K_assembled = ka.value.real();
  r.c1_err = c1c.abs_err + c1a.abs_err;
  r.K_err = kc.abs_err + ka.abs_err;
  if (n) {
    r.n = n;
    r.amplitude_first_order = amplitude_DD(*n, eps);
  }
  return r;
}

}  // namespace hzeta
