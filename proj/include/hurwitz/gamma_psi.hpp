#pragma once

#include <cmath>
#include <numbers>

#include "hurwitz/zeta.hpp"

namespace hurwitz {

// Euler's constant; agrees with -psi(1) to full double precision.
inline constexpr double euler_gamma = 0.5772156649015329;

/// A rational abscissa a/q with 1 <= a < q.
struct RationalArgument {
  int a = 1;
  int q = 2;
};

/// log Gamma(alpha) = zeta'(0, alpha) + log(2 pi)/2, through the kernel.
inline double log_gamma(double alpha, EvalParams params = {}) {
  if (!(alpha > 0.0)) throw DomainError("log_gamma: alpha must be positive");
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return hurwitz_zeta_sderiv(Complex(0.0, 0.0), alpha, params).value.real() +
         half_log_two_pi;
}

/// Stirling route: the asymptotic series
///   log Gamma(x) = (x - 1/2) log x - x + log(2 pi)/2
///                  + sum_k B_{2k} / ((2k)(2k-1) x^{2k-1})
/// applied after lifting the argument above shift_threshold with the
/// recurrence log Gamma(a) = log Gamma(a+K) - sum_j log(a+j).
inline double stirling_log_gamma(double alpha, double shift_threshold = 15.0) {
  if (!(alpha > 0.0)) throw DomainError("stirling_log_gamma: alpha must be positive");
  if (!(shift_threshold > 0.0))
    throw DomainError("stirling_log_gamma: shift_threshold must be positive");

  detail::Accumulator shift_logs;
  const int lift = alpha < shift_threshold
                       ? int(std::ceil(shift_threshold - alpha))
                       : 0;
  for (int j = 0; j < lift; ++j) shift_logs.add(std::log(alpha + double(j)));
  const double x = alpha + double(lift);

  constexpr int kOrder = 10;
  const auto& coeff = detail::b2k_over_2k();
  double series = 0.0;
  const double inv_x2 = 1.0 / (x * x);
  double powx = 1.0 / x;
  for (int k = 1; k <= kOrder; ++k) {
    series += coeff[std::size_t(k)] / double(2 * k - 1) * powx;
    powx *= inv_x2;
  }
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + series - shift_logs.total();
}

/// Digamma psi(alpha), delegated to the kernel's pole-limit evaluation.
inline double psi(double alpha, EvalParams params = {}) {
  return psi_via_pole_limit(alpha, params);
}

/// Gauss digamma theorem at alpha = a/q:
///   psi(a/q) = -(gamma + log q) + sum_r cos(2 pi r a/q) log(2 sin(pi r/q))
///              + (pi/q) sum_r r sin(2 pi r a/q),     r = 1..q-1.
/// The r = q term would add r sin(2 pi a) = 0 and is omitted.  gcd(a, q) = 1
/// is not required.
inline double gauss_digamma(RationalArgument arg) {
  const int a = arg.a, q = arg.q;
  if (!(1 <= a && a < q)) throw DomainError("gauss_digamma: need 1 <= a < q");
  const double pi = std::numbers::pi;
  detail::Accumulator cos_part, sin_part;
  for (int r = 1; r < q; ++r) {
    const double angle = 2.0 * pi * double(r) * double(a) / double(q);
    cos_part.add(std::cos(angle) * std::log(2.0 * std::sin(pi * double(r) / double(q))));
    sin_part.add(double(r) * std::sin(angle));
  }
  return -(euler_gamma + std::log(double(q))) + cos_part.total() +
         (pi / double(q)) * sin_part.total();
}

inline double gauss_digamma(int a, int q) { return gauss_digamma(RationalArgument{a, q}); }

/// The proof-end arrangement of the same theorem,
///   psi(a/q) = -(gamma + log 2q) + (pi/q) sum_r r sin(2 pi r a/q)
///              + sum_r cos(2 pi r a/q) log sin(pi r/q);
/// identical to gauss_digamma because log 2 * sum_r cos(2 pi r a/q) = -log 2.
inline double gauss_digamma_proof_form(RationalArgument arg) {
  const int a = arg.a, q = arg.q;
  if (!(1 <= a && a < q))
    throw DomainError("gauss_digamma_proof_form: need 1 <= a < q");
  const double pi = std::numbers::pi;
  detail::Accumulator cos_part, sin_part;
  for (int r = 1; r < q; ++r) {
    const double angle = 2.0 * pi * double(r) * double(a) / double(q);
    cos_part.add(std::cos(angle) * std::log(std::sin(pi * double(r) / double(q))));
    sin_part.add(double(r) * std::sin(angle));
  }
  return -(euler_gamma + std::log(2.0 * double(q))) +
         (pi / double(q)) * sin_part.total() + cos_part.total();
}

/// prod_{k<m} sin(pi (alpha + k/m)), computed factor by factor; equals
/// 2^{1-m} sin(pi m alpha).
inline double sin_product(double alpha, int m) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("sin_product: alpha must lie in (0,1)");
  if (m < 2) throw DomainError("sin_product: m must be at least 2");
  double prod = 1.0;
  for (int k = 0; k < m; ++k) {
    const double t = alpha + double(k) / double(m);
    if (std::abs(t - std::round(t)) < 1e-12)
      throw DomainError("sin_product: factor argument at an integer multiple of pi");
    prod *= std::sin(std::numbers::pi * t);
  }
  return prod;
}

/// Residual of the multiplication theorem
///   sum_k log Gamma(a + k/n) - [(n-1)/2 log 2pi + (1/2 - n a) log n
///                               + log Gamma(n a)];
/// zero up to accumulated tolerance.
inline double gamma_multiplication_residual(double alpha, int n, EvalParams params = {}) {
  if (!(alpha > 0.0))
    throw DomainError("gamma_multiplication_residual: alpha must be positive");
  if (n < 2) throw DomainError("gamma_multiplication_residual: n must be at least 2");
  if (!(double(n) * alpha < 1e6))
    throw DomainError("gamma_multiplication_residual: n*alpha too large for log space");
  detail::Accumulator lhs;
  for (int k = 0; k < n; ++k)
    lhs.add(log_gamma(alpha + double(k) / double(n), params));
  const double rhs = 0.5 * double(n - 1) * std::log(2.0 * std::numbers::pi) +
                     (0.5 - double(n) * alpha) * std::log(double(n)) +
                     log_gamma(double(n) * alpha, params);
  return lhs.total() - rhs;
}

/// Residual of Gamma(a) Gamma(1-a) = pi / sin(pi a), in log space.
inline double gamma_reflection_residual(double alpha, EvalParams params = {}) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("gamma_reflection_residual: alpha must lie in (0,1)");
  return log_gamma(alpha, params) + log_gamma(1.0 - alpha, params) -
         std::log(std::numbers::pi) + std::log(std::sin(std::numbers::pi * alpha));
}

}  // namespace hurwitz
