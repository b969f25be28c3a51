#ifndef HZETA_CLOSED_FORM_INTEGRALS_HPP
#define HZETA_CLOSED_FORM_INTEGRALS_HPP

#include "hzeta/types.hpp"

namespace hzeta {

/// Closed form of int_0^1 zeta1(a,x) zeta1(b,x) dx, valid as the analytic
/// continuation for all complex a,b away from 1 and from the integers >= 2
/// (those need integral_I_integer). Symmetric in (a,b).
ValueWithError integral_I(Complex a, Complex b, const SeriesPolicy& policy = {});

/// int_0^1 zeta1(m,x)^2 dx for integer m >= 2 (the a=b=m limit).
ValueWithError integral_I_integer(int m, const SeriesPolicy& policy = {});

/// Closed form of int_0^1 zeta1(a,x) zeta1(b,1-x) dx; same continuation and
/// integer-parameter caveats as integral_I.
ValueWithError integral_J(Complex a, Complex b, const SeriesPolicy& policy = {});

/// int_0^1 zeta1(m,x) zeta1(m,1-x) dx for integer m >= 2.
ValueWithError integral_J_integer(int m, const SeriesPolicy& policy = {});

/// int_0^1 zeta1(s,x) dx = 1/(s-1) for Re s > 1.
Complex moment_integral(Complex s);

/// int_0^1 x^(-a) zeta1(b,x) dx for Re a < 1, b not in {1,0,-1,...}.
ValueWithError andersson_integral(Complex a, Complex b, const SeriesPolicy& policy = {});

/// int_0^1 x^(-a) zeta1(b,1-x) dx for 0 < Re a < 1, 0 < Re b < 1.
ValueWithError complementary_power_integral(Complex a, Complex b,
                                            const SeriesPolicy& policy = {});

/// int_0^1 zeta(a,x) zeta(b,x) dx for Re a, Re b, Re(a+b) < 1.
Complex mikolas_integral(Complex a, Complex b);

/// int_0^1 zeta(a,x) zeta(b,1-x) dx = B(1-a,1-b) zeta(a+b-1), Re a, Re b < 1.
Complex complementary_hurwitz_integral(Complex a, Complex b);

/// Truncated sum_{n>=m-1} Gamma(n+m)/Gamma(n+2-m) {zeta(m+n)-1}; equals
/// Gamma(2m-1) zeta(2m-1) identically.
ValueWithError appendix_sum_S(int m, const SeriesPolicy& policy = {});

/// {psi(n+m)+psi(n+2-m)}{zeta(n+m)-1} + zeta'(n+m), for n >= m-1, m >= 2.
Complex upsilon_term(int n, int m);

}  // namespace hzeta

#endif
