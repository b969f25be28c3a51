#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hzeta/quadrature.hpp"
#include "hzeta/special_functions.hpp"

using namespace hzeta;

TEST_CASE("polynomial exactness up to degree 6") {
  for (int d = 0; d <= 6; ++d) {
    auto f = [d](double x, double) { return Complex(std::pow(x, d)); };
    const QuadratureResult r = tanh_sinh(f, 1e-14, 8);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0 / (d + 1.0)) <= 1e-13);
  }
}

TEST_CASE("algebraic endpoint singularities x^-p") {
  for (double p : {0.2, 0.5, 0.8}) {
    auto f = [p](double x, double) { return Complex(std::pow(x, -p)); };
    const QuadratureResult r = tanh_sinh(f, 1e-12);
    const double want = 1.0 / (1.0 - p);
    CHECK(std::abs(r.value - want) <= 1e-10 * want);
  }
}

TEST_CASE("log singularity") {
  auto f = [](double x, double) { return Complex(std::log(x)); };
  const QuadratureResult r = tanh_sinh(f, 1e-12);
  CHECK(std::abs(r.value + 1.0) < 1e-12);
}

TEST_CASE("non-finite samples rejected") {
  auto f = [](double x, double) {
    return Complex(x < 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0);
  };
  CHECK_THROWS_AS(tanh_sinh(f, 1e-10), NonFiniteSample);
}

TEST_CASE("two-tolerance consistency on every integrand kind") {
  const IntegrandSpec specs[] = {
      {IntegrandKind::II, Complex(3.0), Complex(3.0)},
      {IntegrandKind::JJ, Complex(2.5), Complex(3.5)},
      {IntegrandKind::M, Complex(1.5), {}},
      {IntegrandKind::K, Complex(1.7), {}},
      {IntegrandKind::PowerZeta1, Complex(0.3), Complex(2.5)},
      {IntegrandKind::ComplementaryPower, Complex(0.4), Complex(0.6)},
      {IntegrandKind::HurwitzProduct, Complex(0.3), Complex(0.4)},
      {IntegrandKind::HurwitzComplement, Complex(0.2), Complex(0.7)},
      {IntegrandKind::MeanSquare, Complex(1.3, 2.0), {}},
  };
  for (const auto& s : specs) {
    const QuadratureResult coarse = quad_eval(s, 1e-9);
    const QuadratureResult fine = quad_eval(s, 1e-11);
    CHECK(std::abs(coarse.value - fine.value) <=
          std::max(coarse.abs_err, 1e-9 * (1.0 + std::abs(fine.value))));
  }
}

TEST_CASE("builder spot values") {
  const EvalOptions opts;
  // II at a=b=2, x=1/2: zeta1(2, 1/2)^2
  {
    auto f = build_integrand({IntegrandKind::II, Complex(2.0), Complex(2.0)});
    const Complex want = zeta1(Complex(2.0), 0.5).value * zeta1(Complex(2.0), 0.5).value;
    CHECK(std::abs(f(0.5, 0.5) - want) < 1e-12 * std::abs(want));
  }
  // K at alpha=2, x=1/2: [2 zeta(2) - 2 zeta(2,1/2)]^2 - 2 * (1/2)^(-4)
  // with zeta(2,1/2) = 3 zeta(2) this is (2 pi^2/3)^2 - 32
  {
    auto f = build_integrand({IntegrandKind::K, Complex(2.0), {}});
    const double ref = std::pow(2.0 * M_PI * M_PI / 3.0, 2) - 32.0;
    CHECK(std::abs(f(0.5, 0.5).real() - ref) < 1e-9 * std::abs(ref));
  }
  // PowerZeta1 with a=0 integrates to zeta1 moment 1/(b-1)
  {
    const QuadratureResult r =
        quad_eval({IntegrandKind::PowerZeta1, Complex(0.0), Complex(3.0)}, 1e-11);
    CHECK(std::abs(r.value - 0.5) < 1e-10);
  }
  // MeanSquare: real and nonnegative
  {
    const QuadratureResult r = quad_eval({IntegrandKind::MeanSquare, Complex(1.3, 2.0), {}}, 1e-10);
    CHECK(std::abs(r.value.imag()) < 1e-12);
    CHECK(r.value.real() >= 0.0);
  }
}

TEST_CASE("JJ and M integrands symmetric under x -> 1-x when a = b") {
  auto jj = build_integrand({IntegrandKind::JJ, Complex(2.4), Complex(2.4)});
  auto m = build_integrand({IntegrandKind::M, Complex(1.6), {}});
  for (double x : {0.05, 0.2, 0.37, 0.49}) {
    CHECK(std::abs(jj(x, 1.0 - x) - jj(1.0 - x, x)) <=
          1e-12 * (1.0 + std::abs(jj(x, 1.0 - x))));
    CHECK(std::abs(m(x, 1.0 - x) - m(1.0 - x, x)) <=
          1e-12 * (1.0 + std::abs(m(x, 1.0 - x))));
  }
}

TEST_CASE("M integrand stays finite toward x = 0") {
  auto m = build_integrand({IntegrandKind::M, Complex(1.5), {}});
  for (double x : {1e-3, 1e-6, 1e-9, 1e-12}) {
    const Complex v = m(x, 1.0 - x);
    CHECK(std::isfinite(v.real()));
    CHECK(std::abs(v) < 1e3);
  }
}
