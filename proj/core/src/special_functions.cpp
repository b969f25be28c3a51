#include "hzeta/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kLog2Pi = 1.8378770664093454835606594728112353;

// B_{2n} for n = 1..15.
constexpr double kBernoulli2n[16] = {
    0.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Complex z, const char* who) {
  if (!finite(z)) throw DomainError(std::string(who) + ": non-finite argument");
}

// Stirling series for log Gamma, accurate for Re z >= 12.
Complex log_gamma_stirling(Complex z) {
  const Complex lz = std::log(z);
  Complex s = (z - 0.5) * lz - z + 0.5 * kLog2Pi;
  const Complex z2 = z * z;
  Complex zp = z;
  for (int n = 1; n <= 8; ++n) {
    s += kBernoulli2n[n] / (2.0 * n * (2.0 * n - 1.0)) / zp;
    zp *= z2;
  }
  return s;
}

}  // namespace

namespace detail {

double dist_to_nonpositive_integer(Complex z) {
  const double r = std::round(z.real());
  if (r > 0.5) return std::numeric_limits<double>::infinity();
  return std::abs(z - Complex(r, 0.0));
}

double dist_to_integer_ge2(Complex z) {
  const double r = std::round(z.real());
  if (r < 1.5) return std::numeric_limits<double>::infinity();
  return std::abs(z - Complex(r, 0.0));
}

}  // namespace detail

Complex cpow(double b, Complex e) {
  if (e.imag() == 0.0) return Complex(std::pow(b, e.real()), 0.0);
  return std::exp(e * std::log(b));
}

Complex log_gamma(Complex z) {
  require_finite(z, "log_gamma");
  if (detail::dist_to_nonpositive_integer(z) < 1e-13)
    throw PoleError("log_gamma: argument at a nonpositive integer");
  // Shift until the Stirling series applies. Branch consistency is only
  // needed through exp(), so principal logs of the shift factors suffice.
  Complex shift = 0.0;
  while (z.real() < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return log_gamma_stirling(z) - shift;
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

namespace {

// 1/Gamma(z), entire; smooth through the Gamma poles where it has zeros.
Complex reciprocal_gamma(Complex z) {
  Complex prod = 1.0;
  while (z.real() < 0.5) {
    prod *= z;
    z += 1.0;
  }
  return prod * std::exp(-log_gamma(z));
}

}  // namespace

Complex digamma(Complex z) {
  require_finite(z, "digamma");
  if (detail::dist_to_nonpositive_integer(z) < 1e-13)
    throw PoleError("digamma: argument at a nonpositive integer");
  Complex s = 0.0;
  while (z.real() < 12.0) {
    s -= 1.0 / z;
    z += 1.0;
  }
  // psi(z) ~ ln z - 1/(2z) - sum B_{2n}/(2n z^{2n})
  s += std::log(z) - 0.5 / z;
  const Complex z2 = z * z;
  Complex zp = z2;
  for (int n = 1; n <= 8; ++n) {
    s -= kBernoulli2n[n] / (2.0 * n) / zp;
    zp *= z2;
  }
  return s;
}

Complex pochhammer(Complex a, unsigned k) {
  if (k == 0) return 1.0;
  // Direct product for short runs or when the run touches the neighbourhood
  // of the nonpositive integers, where the log-gamma ratio is ill-defined.
  const bool near_axis = std::abs(a.imag()) < 1e-8 && a.real() < 1.0;
  if (k <= 64 || near_axis) {
    Complex p = 1.0;
    for (unsigned j = 0; j < k; ++j) p *= a + static_cast<double>(j);
    return p;
  }
  return std::exp(log_gamma(a + static_cast<double>(k)) - log_gamma(a));
}

Complex beta(Complex x, Complex y) {
  require_finite(x, "beta");
  require_finite(y, "beta");
  if (detail::dist_to_nonpositive_integer(x) < 1e-8 ||
      detail::dist_to_nonpositive_integer(y) < 1e-8)
    throw NearPoleError("beta: argument within 1e-8 of a nonpositive integer; use beta_laurent");
  // x+y at a nonpositive integer is a zero of B, not a pole: route through
  // the entire reciprocal gamma.
  if (detail::dist_to_nonpositive_integer(x + y) < 0.25)
    return std::exp(log_gamma(x) + log_gamma(y)) * reciprocal_gamma(x + y);
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

LaurentPair beta_laurent(long x0, Complex y) {
  if (x0 > 0) throw DomainError("beta_laurent: x0 must be a nonpositive integer");
  if (detail::dist_to_nonpositive_integer(y) < 1e-13)
    throw PoleError("beta_laurent: y at a nonpositive integer");
  const Complex xy = static_cast<double>(x0) + y;
  if (detail::dist_to_nonpositive_integer(xy) < 1e-13)
    throw PoleError("beta_laurent: x0 + y at a nonpositive integer");
  const unsigned p = static_cast<unsigned>(-x0);
  // Gamma(-p+eps) = (-1)^p/(p! eps) {1 + eps psi(p+1) + O(eps^2)}
  double pf = 1.0;
  for (unsigned j = 2; j <= p; ++j) pf *= static_cast<double>(j);
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  const Complex reg = std::exp(log_gamma(y) - log_gamma(xy));
  LaurentPair out;
  out.pole_coeff = sign / pf * reg;
  out.finite_part = out.pole_coeff * (digamma(static_cast<double>(p) + 1.0) - digamma(xy));
  return out;
}

ValueWithError hurwitz_zeta(Complex a, double x, const EvalOptions& opts) {
  opts.validate();
  require_finite(a, "hurwitz_zeta");
  if (!(x > 0.0)) throw DomainError("hurwitz_zeta: x must be > 0");
  if (std::abs(a - 1.0) < 1e-8)
    throw NearPoleError("hurwitz_zeta: a within 1e-8 of the pole at a=1");

  int n_shift = std::max<int>(static_cast<int>(std::ceil(std::abs(a))) + 5,
                              10 * std::max(opts.em_shift_min, 1));
  while (n_shift + x <= 0.5 * std::abs(a.imag())) n_shift *= 2;

  Complex sum = 0.0;
  for (int k = 0; k < n_shift; ++k) sum += cpow(k + x, -a);

  const double xe = n_shift + x;
  const Complex am = a - 1.0;
  Complex tail = cpow(xe, 1.0 - a) / am + 0.5 * cpow(xe, -a);

  // Bernoulli corrections: B_{2j}/(2j)! (a)_{2j-1} xe^{-a-2j+1}
  const int J = opts.em_tail_order;
  Complex poch = a;                       // (a)_1
  double fact = 2.0;                      // (2j)!
  Complex xp = cpow(xe, -a - 1.0);
  double last = 0.0;
  for (int j = 1; j <= J; ++j) {
    const Complex term = kBernoulli2n[j] / fact * poch * xp;
    tail += term;
    last = std::abs(term);
    if (j < J) {
      poch *= (a + (2.0 * j - 1.0)) * (a + 2.0 * j);
      fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
      xp /= xe * xe;
    }
  }
  const Complex v = sum + tail;
  ValueWithError out;
  out.value = v;
  out.abs_err = last + 4.0 * std::numeric_limits<double>::epsilon() * (std::abs(sum) + std::abs(v));
  out.terms_used = static_cast<std::size_t>(n_shift + J);
  out.method = "euler-maclaurin";
  if (!finite(v)) throw DomainError("hurwitz_zeta: evaluation produced a non-finite value");
  return out;
}

ValueWithError riemann_zeta(Complex s, const EvalOptions& opts) {
  if (std::abs(s - 1.0) < 1e-8)
    throw NearPoleError("riemann_zeta: s within 1e-8 of the pole at s=1");
  return hurwitz_zeta(s, 1.0, opts);
}

ValueWithError riemann_zeta_m1(Complex s, const EvalOptions& opts) {
  if (std::abs(s - 1.0) < 1e-8)
    throw NearPoleError("riemann_zeta_m1: s within 1e-8 of the pole at s=1");
  if (s.real() >= 30.0) {
    // zeta(s)-1 = sum_{k>=2} k^{-s}, a handful of terms suffice here.
    Complex sum = 0.0;
    std::size_t used = 0;
    double last = 0.0;
    for (int k = 2; k < 200; ++k) {
      const Complex t = cpow(k, -s);
      sum += t;
      ++used;
      last = std::abs(t);
      if (last < 1e-18 * std::abs(sum)) break;
    }
    return {sum, last + 2.0 * std::numeric_limits<double>::epsilon() * std::abs(sum), used,
            "direct-tail"};
  }
  return hurwitz_zeta(s, 2.0, opts);
}

ValueWithError riemann_zeta_derivative(Complex s, const EvalOptions& opts) {
  opts.validate();
  require_finite(s, "riemann_zeta_derivative");
  if (std::abs(s - 1.0) < 1e-8)
    throw NearPoleError("riemann_zeta_derivative: s within 1e-8 of the pole at s=1");

  int n_shift = std::max<int>(static_cast<int>(std::ceil(std::abs(s))) + 5,
                              10 * std::max(opts.em_shift_min, 1));
  while (n_shift + 1.0 <= 0.5 * std::abs(s.imag())) n_shift *= 2;

  // d/ds of the Euler-Maclaurin formula for zeta(s,1).
  Complex sum = 0.0;
  for (int k = 2; k <= n_shift; ++k) sum -= std::log(static_cast<double>(k)) * cpow(k, -s);

  const double xe = n_shift + 1.0;
  const double lx = std::log(xe);
  const Complex am = s - 1.0;
  Complex tail = cpow(xe, 1.0 - s) * (-lx / am - 1.0 / (am * am)) - 0.5 * lx * cpow(xe, -s);

  const int J = opts.em_tail_order;
  double fact = 2.0;
  Complex xp = cpow(xe, -s - 1.0);
  double last = 0.0;
  for (int j = 1; j <= J; ++j) {
    // (s)_{2j-1} and its derivative via a product rule sweep.
    Complex p = 1.0, dp = 0.0;
    for (int i = 0; i < 2 * j - 1; ++i) {
      dp = dp * (s + static_cast<double>(i)) + p;
      p *= s + static_cast<double>(i);
    }
    const Complex term = kBernoulli2n[j] / fact * (dp - p * lx) * xp;
    tail += term;
    last = std::abs(term);
    if (j < J) {
      fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
      xp /= xe * xe;
    }
  }
  ValueWithError out;
  out.value = sum + tail;
  out.abs_err =
      last + 4.0 * std::numeric_limits<double>::epsilon() * (std::abs(sum) + std::abs(out.value));
  out.terms_used = static_cast<std::size_t>(n_shift + J);
  out.method = "euler-maclaurin-derivative";
  return out;
}

ValueWithError zeta1(Complex a, double x, const EvalOptions& opts) {
  if (!(x >= 0.0)) throw DomainError("zeta1: x must be >= 0");
  if (std::abs(a - 1.0) < 1e-8)
    throw NearPoleError("zeta1: a within 1e-8 of the pole at a=1");
  return hurwitz_zeta(a, x + 1.0, opts);
}

ValueWithError wilton_series(Complex a, Complex b, Complex z, std::size_t n_terms,
                             const EvalOptions& opts) {
  if (std::abs(a - 1.0) < 1e-8)
    throw NearPoleError("wilton_series: a within 1e-8 of the pole at a=1");
  if (std::abs(z) >= std::abs(b))
    throw DivergenceError("wilton_series: requires |z| < |b|");
  if (std::abs(b.imag()) > 1e-14 || !(b.real() > 0.0))
    throw DomainError("wilton_series: b must be real and positive");
  const double br = b.real();

  Complex sum = 0.0;
  Complex coef = 1.0;  // (a)_k/k!
  Complex zp = 1.0;
  double last = 0.0;
  std::size_t k = 0;
  for (; k < n_terms; ++k) {
    const Complex zk = hurwitz_zeta(a + static_cast<double>(k), br, opts).value;
    const Complex term = coef * zk * zp;
    sum += term;
    last = std::abs(term);
    coef *= (a + static_cast<double>(k)) / (static_cast<double>(k) + 1.0);
    zp *= z;
  }
  const double r = std::abs(z) / std::abs(b);
  ValueWithError out;
  out.value = sum;
  out.abs_err = (r < 1.0) ? last * r / (1.0 - r) : last;
  out.terms_used = k;
  out.method = "wilton-series";
  return out;
}

ValueWithError zeta1_taylor(Complex a, double z, std::size_t n_terms, const EvalOptions& opts) {
  if (std::abs(a - 1.0) < 1e-8)
    throw NearPoleError("zeta1_taylor: a within 1e-8 of the pole at a=1");
  if (!(z >= 0.0 && z <= 1.0)) throw DomainError("zeta1_taylor: z must be in [0,1]");

  Complex sum = 0.0;
  Complex coef = 1.0;  // (a)_k/k!
  double zp = 1.0;
  double last = 0.0;
  std::size_t k = 0;
  for (; k < n_terms; ++k) {
    const Complex term = coef * riemann_zeta_m1(a + static_cast<double>(k), opts).value * zp;
    sum += term;
    last = std::abs(term);
    coef *= (a + static_cast<double>(k)) / (static_cast<double>(k) + 1.0);
    zp *= z;
  }
  ValueWithError out;
  out.value = sum;
  // {zeta(a+k)-1} ~ 2^{-k}: geometric tail even at z=1.
  out.abs_err = last;
  out.terms_used = k;
  out.method = "zeta1-taylor";
  return out;
}

std::pair<Complex, Complex> laurent_check(double eps, double z, const EvalOptions& opts) {
  if (!(std::abs(eps) > 0.0 && std::abs(eps) <= 0.1))
    throw DomainError("laurent_check: need 0 < |eps| <= 0.1");
  if (!(z > 0.0)) throw DomainError("laurent_check: z must be > 0");
  const Complex v = hurwitz_zeta(Complex(1.0 + eps, 0.0), z, opts).value;
  return {eps * v, v - 1.0 / eps};
}

}  // namespace hzeta
