#include "hzeta/closed_form_integrals.hpp"

#include <cmath>
#include <limits>

#include "hzeta/special_functions.hpp"

namespace hzeta {

namespace {

constexpr double kIntegerGuard = 1e-6;
constexpr double kPoleGuard = 1e-8;

double factorial(int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= j;
  return f;
}

void guard_poles(Complex a, Complex b, const char* who) {
  if (std::abs(a - 1.0) < kPoleGuard || std::abs(b - 1.0) < kPoleGuard)
    throw PoleError(std::string(who) + ": double pole at parameter value 1");
}

void guard_integers(Complex a, Complex b, const char* who) {
  if (detail::dist_to_integer_ge2(a) < kIntegerGuard ||
      detail::dist_to_integer_ge2(b) < kIntegerGuard)
    throw NearSingularError(std::string(who) +
                            ": parameter within 1e-6 of an integer >= 2; "
                            "use the integer-order variant for a = b = m");
}

// Accumulates a theorem-series partial sum under the three-consecutive-small
// truncation rule and composes the error estimate.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(const SeriesPolicy& policy) : policy_(policy) {}

  // Returns true while more terms are wanted.
  bool add(Complex term) {
    sum_ += term;
    mag_sum_ += std::abs(term);
    ++n_;
    if (std::abs(term) <= policy_.tol * std::abs(sum_))
      ++small_streak_;
    else
      small_streak_ = 0;
    last_ = std::abs(term);
    if (n_ < policy_.min_n) return true;
    if (small_streak_ >= 3) return false;
    return n_ < policy_.max_n;
  }

  Complex sum() const { return sum_; }
  double magnitude_sum() const { return mag_sum_; }
  double truncation_estimate() const { return last_; }
  std::size_t terms() const { return n_; }

 private:
  SeriesPolicy policy_;
  Complex sum_ = 0.0;
  double mag_sum_ = 0.0;
  double last_ = 0.0;
  int n_ = 0;
  int small_streak_ = 0;
};

ValueWithError compose(Complex closed_part, double closed_mag,
                       const SeriesAccumulator& acc, const char* method) {
  // Error model: series truncation estimate plus 10x unit roundoff times the
  // accumulated term magnitudes; the latter tracks cancellation between the
  // Beta/zeta block and the sums near integer parameters.
  const double uround = std::numeric_limits<double>::epsilon() / 2.0;
  ValueWithError out;
  out.value = closed_part + acc.sum();
  out.abs_err = acc.truncation_estimate() +
                10.0 * uround * (acc.magnitude_sum() + closed_mag + std::abs(out.value));
  out.terms_used = acc.terms();
  out.method = method;
  return out;
}

Complex zm1(Complex s) { return riemann_zeta_m1(s).value; }

}  // namespace

ValueWithError integral_I(Complex a, Complex b, const SeriesPolicy& policy) {
  guard_poles(a, b, "integral_I");
  guard_integers(a, b, "integral_I");
  const Complex ab1 = a + b - 1.0;
  if (std::abs(ab1 - 1.0) < kPoleGuard)
    throw NearPoleError("integral_I: a+b-1 too close to the zeta pole");

  Complex closed = 1.0 / ab1 + (beta(ab1, 1.0 - a) + beta(ab1, 1.0 - b)) * riemann_zeta(ab1).value;
  double closed_mag = std::abs(closed);

  SeriesAccumulator acc(policy);
  // coefficients (a)_n/(1-b)_{n+1} and the mirrored pair, updated in lockstep
  Complex cab = 1.0 / (1.0 - b);
  Complex cba = 1.0 / (1.0 - a);
  double n = 0.0;
  for (;;) {
    const Complex term = -cab * zm1(a + n) - cba * zm1(b + n);
    if (!acc.add(term)) break;
    cab *= (a + n) / (1.0 - b + n + 1.0);
    cba *= (b + n) / (1.0 - a + n + 1.0);
    n += 1.0;
  }
  return compose(closed, closed_mag, acc, "theorem1-series");
}

ValueWithError integral_I_integer(int m, const SeriesPolicy& policy) {
  if (m < 2) throw DomainError("integral_I_integer: m must be >= 2");
  const double md = m;
  const double g2m1 = factorial(2 * m - 2);
  const double gm = factorial(m - 1);
  const Complex Z = digamma(2.0 * md - 1.0) * riemann_zeta(2.0 * md - 1.0).value +
                    riemann_zeta_derivative(2.0 * md - 1.0).value;
  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
  const double pre = 2.0 * sign_m / (gm * gm);

  // finite block: sum_{n<=m-2} (-1)^n (n+m-1)! (m-n-2)! {zeta(n+m)-1}
  Complex finite_sum = 0.0;
  for (int n = 0; n <= m - 2; ++n) {
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    finite_sum += sgn * factorial(n + m - 1) * factorial(m - n - 2) * zm1(Complex(n + md));
  }

  // infinite block: sum_{n>=m-1} (n+m-1)!/(n-m+1)! psi(n+2-m) {zeta(n+m)-1},
  // entering with weight -pre
  SeriesAccumulator acc(policy);
  double fr = g2m1;              // (n+m-1)!/(n-m+1)! at n = m-1
  Complex psi_k = -kEulerGamma;  // psi(n+2-m) at n = m-1
  double n = md - 1.0;
  for (;;) {
    const Complex term = -pre * fr * psi_k * zm1(Complex(n + md));
    if (!acc.add(term)) break;
    fr *= (n + md) / (n - md + 2.0);
    psi_k += 1.0 / (n + 2.0 - md);
    n += 1.0;
  }

  const Complex closed = 1.0 / (2.0 * md - 1.0) + pre * g2m1 * Z + 2.0 / (gm * gm) * finite_sum;
  return compose(closed, std::abs(pre * g2m1 * Z) + std::abs(finite_sum) * 2.0 / (gm * gm), acc,
                 "theorem2-integer");
}

ValueWithError integral_J(Complex a, Complex b, const SeriesPolicy& policy) {
  guard_poles(a, b, "integral_J");
  guard_integers(a, b, "integral_J");
  const Complex ab1 = a + b - 1.0;
  if (std::abs(ab1 - 1.0) < kPoleGuard)
    throw NearPoleError("integral_J: a+b-1 too close to the zeta pole");

  const Complex closed = beta(1.0 - a, 1.0 - b) * riemann_zeta_m1(ab1).value;

  SeriesAccumulator acc(policy);
  Complex ca = 1.0;  // (a)_n/n!
  Complex cb = 1.0;  // (b)_n/n!
  double n = 0.0;
  for (;;) {
    const Complex term = -ca * zm1(a + n) / (n + 1.0 - b) - cb * zm1(b + n) / (n + 1.0 - a);
    if (!acc.add(term)) break;
    ca *= (a + n) / (n + 1.0);
    cb *= (b + n) / (n + 1.0);
    n += 1.0;
  }
  return compose(closed, std::abs(closed), acc, "theorem3-series");
}

ValueWithError integral_J_integer(int m, const SeriesPolicy& policy) {
  if (m < 2) throw DomainError("integral_J_integer: m must be >= 2");
  const double md = m;
  const double g2m1 = gamma(Complex(2.0 * md - 1.0)).real();
  const double gm = gamma(Complex(md)).real();
  const Complex lead =
      2.0 * g2m1 / (gm * gm) *
      ((digamma(md) - digamma(2.0 * md - 1.0)) * riemann_zeta_m1(2.0 * md - 1.0).value -
       riemann_zeta_derivative(2.0 * md - 1.0).value);

  SeriesAccumulator acc(policy);
  Complex c = 1.0;  // (m)_n/n!
  double n = 0.0;
  for (;;) {
    Complex term = 0.0;
    if (static_cast<int>(n) != m - 1)  // primed sum: omit n = m-1
      term = -2.0 * c * zm1(Complex(md + n)) / (n + 1.0 - md);
    if (!acc.add(term)) break;
    c *= (md + n) / (n + 1.0);
    n += 1.0;
  }
  return compose(lead, std::abs(lead), acc, "theorem4-integer");
}

Complex moment_integral(Complex s) {
  if (!(s.real() > 1.0)) throw DomainError("moment_integral: requires Re s > 1");
  return 1.0 / (s - 1.0);
}

ValueWithError andersson_integral(Complex a, Complex b, const SeriesPolicy& policy) {
  if (!(a.real() < 1.0)) throw DomainError("andersson_integral: requires Re a < 1");
  if (std::abs(b - 1.0) < kPoleGuard || detail::dist_to_nonpositive_integer(b) < kPoleGuard)
    throw DomainError("andersson_integral: b must avoid {1, 0, -1, -2, ...}");

  SeriesAccumulator acc(policy);
  Complex c = 1.0 / (1.0 - a);  // (b)_n/(1-a)_{n+1}
  double n = 0.0;
  for (;;) {
    const Complex term = c * zm1(b + n);
    if (!acc.add(term)) break;
    c *= (b + n) / (1.0 - a + n + 1.0);
    n += 1.0;
  }
  return compose(0.0, 0.0, acc, "andersson-series");
}

ValueWithError complementary_power_integral(Complex a, Complex b, const SeriesPolicy& policy) {
  if (!(a.real() >= 0.0 && a.real() < 1.0 && b.real() > 0.0 && b.real() < 1.0))
    throw DomainError("complementary_power_integral: requires 0 <= Re a < 1, 0 < Re b < 1");

  SeriesAccumulator acc(policy);
  Complex c = 1.0;  // (b)_n/n!
  double n = 0.0;
  for (;;) {
    const Complex term = c * zm1(b + n) / (1.0 - a + n);
    if (!acc.add(term)) break;
    c *= (b + n) / (n + 1.0);
    n += 1.0;
  }
  return compose(0.0, 0.0, acc, "complementary-power-series");
}

Complex mikolas_integral(Complex a, Complex b) {
  if (!(a.real() < 1.0 && b.real() < 1.0 && (a + b).real() < 1.0))
    throw DomainError("mikolas_integral: requires Re a, Re b, Re(a+b) < 1");
  if (std::abs(a - 1.0) < kPoleGuard || std::abs(b - 1.0) < kPoleGuard)
    throw PoleError("mikolas_integral: parameter at 1");
  const Complex ab1 = a + b - 1.0;
  if (detail::dist_to_nonpositive_integer(ab1) < kPoleGuard)
    throw NearPoleError("mikolas_integral: a+b-1 near a nonpositive integer (Beta degenerates)");
  return (beta(ab1, 1.0 - a) + beta(ab1, 1.0 - b)) * riemann_zeta(ab1).value;
}

Complex complementary_hurwitz_integral(Complex a, Complex b) {
  if (!(a.real() < 1.0 && b.real() < 1.0))
    throw DomainError("complementary_hurwitz_integral: requires Re a, Re b < 1");
  const Complex ab1 = a + b - 1.0;
  if (std::abs(ab1 - 1.0) < kPoleGuard)
    throw NearPoleError("complementary_hurwitz_integral: a+b-1 at the zeta pole");
  return beta(1.0 - a, 1.0 - b) * riemann_zeta(ab1).value;
}

ValueWithError appendix_sum_S(int m, const SeriesPolicy& policy) {
  if (m < 2) throw DomainError("appendix_sum_S: m must be >= 2");
  const double md = m;
  SeriesAccumulator acc(policy);
  double fr = 1.0;  // Gamma(n+m)/Gamma(n+2-m) at n=m-1: (2m-2)!
  for (int j = 2; j <= 2 * m - 2; ++j) fr *= j;
  double n = md - 1.0;
  for (;;) {
    const Complex term = fr * zm1(Complex(n + md));
    if (!acc.add(term)) break;
    fr *= (n + md) / (n - md + 2.0);
    n += 1.0;
  }
  return compose(0.0, 0.0, acc, "appendix-sum");
}

Complex upsilon_term(int n, int m) {
  if (m < 2 || n < m - 1) throw DomainError("upsilon_term: requires m >= 2 and n >= m-1");
  const double nm = n + m;
  return (digamma(nm) + digamma(n + 2.0 - m)) * riemann_zeta_m1(Complex(nm)).value +
         riemann_zeta_derivative(Complex(nm)).value;
}

}  // namespace hzeta
