#include "hzeta/quadrature.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <vector>

#include "hzeta/special_functions.hpp"

namespace hzeta {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kTMax = 6.1;  // u = pi/2 sinh(t) keeps 1-x above ~1e-300 here
constexpr int kMaxLevelCap = 12;

struct Node {
  double x;    // distance from 0
  double omx;  // distance from 1
  double w;    // dx/dt at the node (step factor applied by the caller)
};

Node make_node(double t) {
  const double u = 0.5 * kPi * std::sinh(t);
  // x = 1/(1+e^{-2u}), 1-x = 1/(1+e^{2u}); both exact near their endpoint.
  const double em = std::exp(-2.0 * std::abs(u));
  const double denom = 1.0 + em;
  Node n;
  if (u >= 0.0) {
    n.x = 1.0 / denom;
    n.omx = em / denom;
  } else {
    n.x = em / denom;
    n.omx = 1.0 / denom;
  }
  // dx/dt = (pi/4) cosh t sech^2 u, with sech^2 u = 4 e^{-2|u|}/(1+e^{-2|u|})^2
  n.w = kPi * std::cosh(t) * em / (denom * denom);
  return n;
}

// Level 0 holds nodes at integer t (including t=0); level k>0 holds the new
// nodes at odd multiples of 2^-k. Tables are built once under a lock.
const std::vector<Node>& level_nodes(int level) {
  static std::vector<std::vector<Node>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  while (static_cast<int>(cache.size()) <= level) {
    const int k = static_cast<int>(cache.size());
    std::vector<Node> nodes;
    if (k == 0) {
      nodes.push_back(make_node(0.0));
      for (double t = 1.0; t <= kTMax; t += 1.0) {
        nodes.push_back(make_node(t));
        nodes.push_back(make_node(-t));
      }
    } else {
      const double h = std::ldexp(1.0, -k);
      for (double t = h; t <= kTMax; t += 2.0 * h) {
        nodes.push_back(make_node(t));
        nodes.push_back(make_node(-t));
      }
    }
    cache.push_back(std::move(nodes));
  }
  return cache[level];
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

QuadratureResult tanh_sinh(const Integrand& f, double tol, int max_level) {
  if (!(tol > 0.0)) throw DomainError("tanh_sinh: tol must be > 0");
  max_level = std::min(std::max(max_level, 2), kMaxLevelCap);

  QuadratureResult out;
  Complex weighted_sum = 0.0;  // sum of w_j f_j over all nodes seen so far
  Complex prev = 0.0;
  double h = 1.0;
  for (int level = 0; level <= max_level; ++level) {
    for (const Node& n : level_nodes(level)) {
      if (n.w == 0.0) continue;
      const Complex fv = f(n.x, n.omx);
      if (!finite(fv)) throw NonFiniteSample("tanh_sinh: integrand non-finite at interior node");
      weighted_sum += n.w * fv;
      ++out.evaluations;
    }
    if (level > 0) h *= 0.5;
    const Complex est = h * weighted_sum;
    out.levels_used = level + 1;
    if (level >= 2) {
      out.abs_err = std::abs(est - prev);
      if (out.abs_err <= tol * (1.0 + std::abs(est))) {
        out.value = est;
        out.converged = true;
        return out;
      }
    }
    prev = est;
    out.value = est;
  }
  return out;  // best estimate, converged = false
}

namespace {

// zeta(alpha,1-u) + zeta(alpha,1+u) - 2 zeta(alpha), evaluated by its even
// Taylor series 2 sum_{j>=1} (alpha)_{2j}/(2j)! zeta(alpha+2j) u^{2j}. This is
// the only stable route for small u, where the direct difference cancels.
class PairDeficit {
 public:
  PairDeficit(Complex alpha, const EvalOptions& opts) : alpha_(alpha) {
    Complex poch = alpha * (alpha + 1.0);  // (alpha)_2
    double fact = 2.0;
    for (int j = 1; j <= 60; ++j) {
      const Complex c = 2.0 * poch / fact * riemann_zeta(alpha + 2.0 * j, opts).value;
      coeffs_.push_back(c);
      if (std::abs(c) * std::pow(0.25, j) < 1e-20) break;
      poch *= (alpha + 2.0 * j) * (alpha + 2.0 * j + 1.0);
      fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
  }

  Complex operator()(double u) const { return u * u * scaled(u); }

  // deficit(u)/u^2; lets callers form u^(-alpha)*deficit(u) as
  // u^(2-alpha)*scaled(u) without transient overflow at tiny u.
  Complex scaled(double u) const {
    const double u2 = u * u;
    Complex s = 0.0;
    double up = 1.0;
    for (const Complex& c : coeffs_) {
      s += c * up;
      up *= u2;
    }
    return s;
  }

 private:
  Complex alpha_;
  std::vector<Complex> coeffs_;
};

void require_strip(Complex z, const char* who) {
  if (!(z.real() > 0.0 && z.real() < 1.0))
    throw DomainError(std::string(who) + ": parameter must satisfy 0 < Re < 1");
}

}  // namespace

Integrand build_integrand(const IntegrandSpec& spec, const EvalOptions& opts) {
  constexpr double kEta = 1e-300;
  const auto clamp = [](double v) { return v < kEta ? kEta : v; };
  const Complex a = spec.a, b = spec.b;

  switch (spec.kind) {
    case IntegrandKind::II:
      return [a, b, opts](double x, double) {
        return hurwitz_zeta(a, 1.0 + x, opts).value * hurwitz_zeta(b, 1.0 + x, opts).value;
      };
    case IntegrandKind::JJ:
      return [a, b, opts](double x, double omx) {
        return hurwitz_zeta(a, 1.0 + x, opts).value * hurwitz_zeta(b, 1.0 + omx, opts).value;
      };
    case IntegrandKind::MeanSquare:
      return [a, opts](double x, double) {
        const Complex z = hurwitz_zeta(a, 1.0 + x, opts).value;
        const Complex zc = hurwitz_zeta(std::conj(a), 1.0 + x, opts).value;
        return z * zc;
      };
    case IntegrandKind::PowerZeta1:
      if (!(a.real() < 1.0)) throw DomainError("build_integrand: PowerZeta1 needs Re a < 1");
      return [a, b, clamp, opts](double x, double) {
        x = clamp(x);
        return cpow(x, -a) * hurwitz_zeta(b, 1.0 + x, opts).value;
      };
    case IntegrandKind::ComplementaryPower:
      require_strip(a, "build_integrand(ComplementaryPower)");
      require_strip(b, "build_integrand(ComplementaryPower)");
      return [a, b, clamp, opts](double x, double omx) {
        x = clamp(x);
        return cpow(x, -a) * hurwitz_zeta(b, 1.0 + omx, opts).value;
      };
    case IntegrandKind::HurwitzProduct:
      if (!(a.real() < 1.0 && b.real() < 1.0 && (a + b).real() < 1.0))
        throw DomainError("build_integrand: HurwitzProduct needs Re a, Re b, Re(a+b) < 1");
      return [a, b, clamp, opts](double x, double) {
        x = clamp(x);
        return hurwitz_zeta(a, x, opts).value * hurwitz_zeta(b, x, opts).value;
      };
    case IntegrandKind::HurwitzComplement:
      if (!(a.real() < 1.0 && b.real() < 1.0))
        throw DomainError("build_integrand: HurwitzComplement needs Re a, Re b < 1");
      return [a, b, clamp, opts](double x, double omx) {
        x = clamp(x);
        omx = clamp(omx);
        return hurwitz_zeta(a, x, opts).value * hurwitz_zeta(b, omx, opts).value;
      };
    case IntegrandKind::M:
    case IntegrandKind::K: {
      const double alpha = a.real();
      if (!(alpha > 1.0 && alpha <= 2.0) || std::abs(a.imag()) > 0.0)
        throw DomainError("build_integrand: film kinds need real alpha in (1,2]");
      const Complex zal = riemann_zeta(a, opts).value;
      auto deficit = std::make_shared<PairDeficit>(a, opts);
      const bool is_k = spec.kind == IntegrandKind::K;
      return [a, alpha, zal, deficit, is_k, clamp, opts](double x, double omx) -> Complex {
        const double u = clamp(std::min(x, omx));
        const double v = std::max(x, omx);
        const double pv = std::pow(v, -alpha);
        // R = 2 zeta(alpha) - zeta1(alpha,x) - zeta1(alpha,1-x), symmetric.
        const Complex r = 2.0 * zal - hurwitz_zeta(a, 1.0 + u, opts).value -
                          hurwitz_zeta(a, 2.0 - u, opts).value;
        // u^-alpha * (v^-alpha - R) = u^(2-alpha) * deficit(u)/u^2; the even
        // series sidesteps the x^(2-alpha)-order cancellation at the
        // endpoints, and the u^(2-alpha) grouping cannot overflow.
        const Complex pud = std::pow(u, 2.0 - alpha) * deficit->scaled(u);
        if (is_k) return r * r - 2.0 * r * pv + 2.0 * pud;
        return pud + r * (2.0 * zal - pv);
      };
    }
  }
  throw DomainError("build_integrand: unknown integrand kind");
}

QuadratureResult quad_eval(const IntegrandSpec& spec, double tol, const EvalOptions& opts) {
  return tanh_sinh(build_integrand(spec, opts), tol, opts.quad_max_level);
}

}  // namespace hzeta
