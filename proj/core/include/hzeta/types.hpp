#ifndef HZETA_TYPES_HPP
#define HZETA_TYPES_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace hzeta {

using Complex = std::complex<double>;

/// Precision and truncation policy shared by the scalar function evaluators.
struct EvalOptions {
  double target_tol = 1e-12;     // relative tolerance goal
  std::size_t max_terms = 1000000;
  int em_tail_order = 8;         // Bernoulli correction terms J in [1,15]
  int em_shift_min = 2;          // summation shift floor: N >= 10*em_shift_min
  int quad_max_level = 12;

  void validate() const {
    if (!(target_tol > 0.0)) throw std::invalid_argument("EvalOptions: target_tol must be > 0");
    if (max_terms < 1) throw std::invalid_argument("EvalOptions: max_terms must be >= 1");
    if (em_tail_order < 1 || em_tail_order > 15)
      throw std::invalid_argument("EvalOptions: em_tail_order must be in [1,15]");
  }
};

/// Computed value plus an a posteriori absolute-error estimate (not a guarantee).
struct ValueWithError {
  Complex value{};
  double abs_err = 0.0;
  std::size_t terms_used = 0;
  std::string method;
};

/// Laurent data of a function at a known simple pole:
/// f(p + eps) = pole_coeff/eps + finite_part + O(eps).
struct LaurentPair {
  Complex pole_coeff{};
  Complex finite_part{};
};

/// Truncation rule for the theorem series: stop once the running term
/// magnitude has stayed below tol*|partial sum| for three consecutive terms.
struct SeriesPolicy {
  double tol = 1e-14;
  int max_n = 400;
  int min_n = 20;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct PoleError : DomainError {
  using DomainError::DomainError;
};

struct NearPoleError : DomainError {
  using DomainError::DomainError;
};

struct NearSingularError : DomainError {
  using DomainError::DomainError;
};

struct DivergenceError : DomainError {
  using DomainError::DomainError;
};

struct NonFiniteSample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hzeta

#endif
