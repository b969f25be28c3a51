#ifndef HZETA_SPECIAL_FUNCTIONS_HPP
#define HZETA_SPECIAL_FUNCTIONS_HPP

#include <utility>

#include "hzeta/types.hpp"

namespace hzeta {

inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024;

/// b^e for real b > 0 and complex exponent e.
Complex cpow(double b, Complex e);

/// Principal-branch log Gamma(z); exp(log_gamma(z)) recovers Gamma(z).
/// Throws PoleError within 1e-13 of a nonpositive integer.
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

/// psi(z), the logarithmic derivative of Gamma.
Complex digamma(Complex z);

/// Rising factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
Complex pochhammer(Complex a, unsigned k);

/// B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y). Throws NearPoleError when x, y or
/// x+y is within 1e-8 of a nonpositive integer (use beta_laurent there).
Complex beta(Complex x, Complex y);

/// Laurent data of eps -> B(x0 + eps, y) at eps = 0 for integer x0 <= 0.
LaurentPair beta_laurent(long x0, Complex y);

ValueWithError riemann_zeta(Complex s, const EvalOptions& opts = {});

/// zeta(s) - 1, computed without subtractive cancellation (equals zeta(s,2)).
ValueWithError riemann_zeta_m1(Complex s, const EvalOptions& opts = {});

/// zeta'(s) by term-wise differentiation of the Euler-Maclaurin formula.
ValueWithError riemann_zeta_derivative(Complex s, const EvalOptions& opts = {});

/// Hurwitz zeta(a,x) for x > 0, all complex a != 1 (Euler-Maclaurin
/// continuation; agrees with the defining series for Re a > 1).
ValueWithError hurwitz_zeta(Complex a, double x, const EvalOptions& opts = {});

/// zeta_1(a,x) = zeta(a,x) - x^(-a) = zeta(a, x+1), continuous on x >= 0.
ValueWithError zeta1(Complex a, double x, const EvalOptions& opts = {});

/// Partial sum of sum_k (a)_k/k! zeta(a+k,b) z^k, approximating zeta(a, b-z)
/// for |z| < |b|. Throws DivergenceError when |z| >= |b|.
ValueWithError wilton_series(Complex a, Complex b, Complex z, std::size_t n_terms,
                             const EvalOptions& opts = {});

/// Partial sum of sum_k (a)_k/k! {zeta(a+k)-1} z^k, approximating
/// zeta_1(a, 1-z); converges on the closed interval z in [0,1].
ValueWithError zeta1_taylor(Complex a, double z, std::size_t n_terms,
                            const EvalOptions& opts = {});

/// Returns (eps*zeta(1+eps,z), zeta(1+eps,z) - 1/eps); the first tends to 1
/// and the second to -psi(z) as eps -> 0.
std::pair<Complex, Complex> laurent_check(double eps, double z,
                                          const EvalOptions& opts = {});

namespace detail {
// Distance from z to the nearest nonpositive integer.
double dist_to_nonpositive_integer(Complex z);
// Distance from z to the nearest integer >= 2.
double dist_to_integer_ge2(Complex z);
}  // namespace detail

}  // namespace hzeta

#endif
