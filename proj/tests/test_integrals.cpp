#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hzeta/closed_form_integrals.hpp"
#include "hzeta/quadrature.hpp"
#include "hzeta/special_functions.hpp"

using namespace hzeta;

namespace {
double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
}  // namespace

TEST_CASE("frozen oracle values") {
  CHECK(rel(integral_I(1.5, 2.5).value, 1.4082502324569922289) < 1e-11);
  CHECK(rel(integral_I(2.4, 3.6).value, 0.34448590131953622239) < 1e-11);
  CHECK(rel(integral_J(0.2, 0.8).value, 6.1688133594963428725) < 1e-11);
  CHECK(rel(integral_J(2.5, 3.5).value, 0.20986627105491081417) < 1e-11);
  CHECK(rel(integral_I_integer(2).value, 1.0754439103502031463) < 1e-11);
  CHECK(rel(integral_I_integer(3).value, 0.32031006882502269942) < 1e-10);
  CHECK(rel(integral_J_integer(2).value, 0.93200346651783359598) < 1e-11);
  CHECK(rel(integral_J_integer(3).value, 0.19323020997922681974) < 1e-10);
  CHECK(rel(andersson_integral(0.3, 2.5).value, 1.0897016250442348715) < 1e-11);
  CHECK(rel(complementary_power_integral(0.4, 0.6).value, -4.3626756273308751722) < 1e-11);
  CHECK(rel(mikolas_integral(0.3, 0.4), 1.3767908343223144974) < 1e-12);
  CHECK(rel(complementary_hurwitz_integral(0.2, 0.7), -1.5274623569227338434) < 1e-12);
  CHECK(rel(integral_I(Complex(1.3, 2.0), Complex(1.3, -2.0)).value,
            0.33422248073470424143) < 1e-11);
}

TEST_CASE("symmetry in (a,b)") {
  const Complex pairs[][2] = {{Complex(1.3, 0.4), Complex(2.7, -0.9)},
                              {Complex(3.6), Complex(1.7)},
                              {Complex(0.2), Complex(0.8)}};
  for (const auto& p : pairs) {
    const Complex a = p[0], b = p[1];
    if (a.real() > 1.0) {
      CHECK(rel(integral_I(a, b).value, integral_I(b, a).value) < 1e-12);
    }
    CHECK(rel(integral_J(a, b).value, integral_J(b, a).value) < 1e-12);
  }
  CHECK(rel(mikolas_integral(0.3, 0.45), mikolas_integral(0.45, 0.3)) < 1e-13);
  CHECK(rel(complementary_hurwitz_integral(0.2, 0.7), complementary_hurwitz_integral(0.7, 0.2)) <
        1e-13);
}

TEST_CASE("quadrature oracle agreement") {
  for (double a : {1.3, 2.4, 4.5})
    for (double b : {1.7, 3.6}) {
      const Complex closed = integral_I(a, b).value;
      const Complex oracle = quad_eval({IntegrandKind::II, a, b}, 1e-11).value;
      CHECK(std::abs(closed - oracle) <= 1e-8 * (1.0 + std::abs(oracle)));
    }
  for (double a : {0.2, 0.8, 2.4})
    for (double b : {0.5, 3.6}) {
      const Complex closed = integral_J(a, b).value;
      const Complex oracle = quad_eval({IntegrandKind::JJ, a, b}, 1e-11).value;
      CHECK(std::abs(closed - oracle) <= 1e-8 * (1.0 + std::abs(oracle)));
    }
}

TEST_CASE("near-integer parameters refused") {
  CHECK_THROWS_AS(integral_I(Complex(3.0), Complex(2.5)), NearSingularError);
  CHECK_THROWS_AS(integral_I(Complex(2.0), Complex(3.0)), NearSingularError);
  CHECK_THROWS_AS(integral_I(Complex(2.0 + 1e-7), Complex(2.5)), NearSingularError);
  CHECK_THROWS_AS(integral_J(Complex(4.0), Complex(1.5)), NearSingularError);
  // near 1: pole of the moment term
  CHECK_THROWS_AS(integral_I(Complex(1.0), Complex(2.5)), DomainError);
}

TEST_CASE("moment integral") {
  CHECK(rel(moment_integral(Complex(3.0)), 0.5) == 0.0);
  CHECK(rel(moment_integral(Complex(2.0, 1.0)), 1.0 / Complex(1.0, 1.0)) < 1e-15);
  CHECK_THROWS_AS(moment_integral(Complex(0.5)), DomainError);
}

TEST_CASE("andersson reduces to the moment integral at a = 0") {
  CHECK(rel(andersson_integral(Complex(0.0), Complex(3.0)).value, 0.5) < 1e-12);
  const Complex got = andersson_integral(Complex(0.0), Complex(2.5)).value;
  CHECK(rel(got, moment_integral(Complex(2.5))) < 1e-12);
}

TEST_CASE("andersson against quadrature") {
  for (double a : {0.3, 0.7})
    for (double b : {1.6, 2.5}) {
      const Complex closed = andersson_integral(a, b).value;
      const Complex oracle = quad_eval({IntegrandKind::PowerZeta1, a, b}, 1e-11).value;
      CHECK(std::abs(closed - oracle) <= 1e-8 * (1.0 + std::abs(oracle)));
    }
  for (double a : {0.3, 0.7})
    for (double b : {0.4, 0.8}) {
      const Complex closed = complementary_power_integral(a, b).value;
      const Complex oracle = quad_eval({IntegrandKind::ComplementaryPower, a, b}, 1e-11).value;
      CHECK(std::abs(closed - oracle) <= 1e-8 * (1.0 + std::abs(oracle)));
    }
}

TEST_CASE("mikolas and complementary forms against quadrature (looser)") {
  for (double a : {0.2, 0.4})
    for (double b : {0.3, 0.45}) {
      const Complex closed = mikolas_integral(a, b);
      const Complex oracle = quad_eval({IntegrandKind::HurwitzProduct, a, b}, 1e-10).value;
      CHECK(std::abs(closed - oracle) <= 1e-7 * (1.0 + std::abs(oracle)));
      const Complex closed2 = complementary_hurwitz_integral(a, b);
      const Complex oracle2 = quad_eval({IntegrandKind::HurwitzComplement, a, b}, 1e-10).value;
      CHECK(std::abs(closed2 - oracle2) <= 1e-7 * (1.0 + std::abs(oracle2)));
    }
}

TEST_CASE("appendix identity S(m) = Gamma(2m-1) zeta(2m-1)") {
  for (int m = 2; m <= 6; ++m) {
    const Complex target =
        gamma(Complex(2.0 * m - 1.0)) * riemann_zeta(Complex(2.0 * m - 1.0)).value;
    CHECK(rel(appendix_sum_S(m).value, target) < 1e-9);
  }
  CHECK_THROWS_AS(appendix_sum_S(1), DomainError);
}

TEST_CASE("upsilon terms are real") {
  for (int m = 2; m <= 4; ++m)
    for (int n = m - 1; n <= m + 3; ++n) {
      const Complex u = upsilon_term(n, m);
      CHECK(std::abs(u.imag()) <= 1e-14 * (1.0 + std::abs(u)));
    }
  CHECK_THROWS_AS(upsilon_term(0, 2), DomainError);
}

TEST_CASE("Hermitian mean value is real and nonnegative") {
  for (double sigma : {1.3, 2.2})
    for (double t : {0.5, 2.0, 7.0}) {
      const ValueWithError v = integral_I(Complex(sigma, t), Complex(sigma, -t));
      CHECK(std::abs(v.value.imag()) <= 1e-10 * (1.0 + std::abs(v.value)));
      CHECK(v.value.real() >= 0.0);
    }
}

TEST_CASE("error estimates bound the true error on frozen points") {
  const ValueWithError v = integral_I(1.5, 2.5);
  CHECK(std::abs(v.value - 1.4082502324569922289) <= std::max(v.abs_err, 1e-12));
  const ValueWithError w = integral_J(2.5, 3.5);
  CHECK(std::abs(w.value - 0.20986627105491081417) <= std::max(w.abs_err, 1e-12));
}
