#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "hurwitz/bernoulli.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

using Complex = std::complex<double>;

/// Controls for the Euler-Maclaurin evaluators.  truncation = 0 selects an
/// s- and alpha-dependent automatic choice; tail_order is the number of
/// B_{2k} correction terms (at most 30); target_tol is the requested
/// absolute accuracy of the truncation.
struct EvalParams {
  int truncation = 0;
  int tail_order = 12;
  double target_tol = 1e-12;
};

/// Value plus an accuracy estimate: the magnitude of the first omitted
/// correction term plus a roundoff floor proportional to the total absolute
/// contribution that entered the sum.
struct ZetaResult {
  Complex value{0.0, 0.0};
  double err_estimate = 0.0;
};

// Periodized first Bernoulli function phi(u) = u - floor(u) - 1/2.
struct Sawtooth {
  double operator()(double u) const { return u - std::floor(u) - 0.5; }
};

namespace detail {

inline constexpr int kMaxTruncation = 100000;
inline constexpr int kMaxTailOrder = 30;

inline double pole_guard() { return 10.0 * std::numeric_limits<double>::epsilon(); }

// Neumaier-compensated accumulator.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }

  double total() const { return sum + comp; }
};

// B_{2k}/(2k)! as doubles, k = 1..kMaxTailOrder+1 (index 0 unused).
inline const std::array<double, kMaxTailOrder + 2>& b2k_over_fact() {
  static const auto table = [] {
    std::array<double, kMaxTailOrder + 2> t{};
    Rational fact = 1;
    for (int k = 1; k <= kMaxTailOrder + 1; ++k) {
      fact *= (2 * k - 1) * (2 * k);
      t[std::size_t(k)] = to_double(bernoulli_number(std::size_t(2 * k)) / fact);
    }
    return t;
  }();
  return table;
}

// B_{2k}/(2k) as doubles, same indexing.
inline const std::array<double, kMaxTailOrder + 2>& b2k_over_2k() {
  static const auto table = [] {
    std::array<double, kMaxTailOrder + 2> t{};
    for (int k = 1; k <= kMaxTailOrder + 1; ++k)
      t[std::size_t(k)] = to_double(bernoulli_number(std::size_t(2 * k)) / (2 * k));
    return t;
  }();
  return table;
}

inline void check_params(const EvalParams& p, const char* where) {
  if (p.truncation < 0 || p.truncation > kMaxTruncation)
    throw DomainError(std::string(where) + ": truncation out of range");
  if (p.tail_order < 0 || p.tail_order > kMaxTailOrder)
    throw DomainError(std::string(where) + ": tail_order out of range");
  if (!(p.target_tol > 0.0))
    throw DomainError(std::string(where) + ": target_tol must be positive");
}

// For Re s < 0 the integral and half terms grow like (N+alpha)^{|Re s|+1}
// and cancel against the direct sum, so the bracket has to stay small; the
// escalation loop raises N whenever the tail estimate demands it.
inline int auto_truncation(Complex s, double alpha) {
  if (s.real() >= 0.0) return std::max(20, int(std::ceil(std::abs(s))) + 10);
  return std::max(1, int(std::ceil(4.0 - alpha)));
}

struct EmPass {
  Complex value{0.0, 0.0};
  double trunc_err = 0.0;  // first omitted correction term
  double round_err = 0.0;  // roundoff floor
};

// One Euler-Maclaurin pass at fixed truncation:
//   sum_{n<N} (n+a)^{-s} + x^{1-s}/(s-1) + x^{-s}/2
//     + sum_{k=1}^{M} B_{2k}/(2k)! (s)(s+1)...(s+2k-2) x^{-s-2k+1},  x = N+a.
// want_deriv selects the termwise d/ds of every term instead.
inline EmPass em_pass(Complex s, double alpha, int trunc, int order, bool want_deriv) {
  Accumulator acc_re, acc_im, acc_abs;
  const auto add = [&](Complex z) {
    acc_re.add(z.real());
    acc_im.add(z.imag());
    acc_abs.add(std::abs(z));
  };

  for (int n = 0; n < trunc; ++n) {
    const double base = double(n) + alpha;
    const double lb = std::log(base);
    const Complex p = std::exp(-s * lb);
    add(want_deriv ? -lb * p : p);
  }

  const double x = double(trunc) + alpha;
  const double lx = std::log(x);
  const Complex xs = std::exp(-s * lx);  // x^{-s}
  const Complex x1s = xs * x;            // x^{1-s}
  const Complex sm1 = s - 1.0;
  if (!want_deriv) {
    add(x1s / sm1);
    add(0.5 * xs);
  } else {
    add(-x1s * (lx / sm1 + 1.0 / (sm1 * sm1)));
    add(-0.5 * lx * xs);
  }

  const auto& coeff = b2k_over_fact();
  Complex prod = s;       // (s)(s+1)...(s+2k-2), one factor at k = 1
  Complex dprod{1.0, 0.0};
  Complex powx = xs / x;  // x^{-s-2k+1} at k = 1
  const double inv_x2 = 1.0 / (x * x);
  for (int k = 1; k <= order; ++k) {
    const double c = coeff[std::size_t(k)];
    add(want_deriv ? c * (dprod - prod * lx) * powx : c * prod * powx);
    const Complex f1 = s + double(2 * k - 1);
    dprod = dprod * f1 + prod;
    prod *= f1;
    const Complex f2 = s + double(2 * k);
    dprod = dprod * f2 + prod;
    prod *= f2;
    powx *= inv_x2;
  }

  const double c_next = std::abs(coeff[std::size_t(order + 1)]);
  const double omitted = want_deriv
                             ? c_next * std::abs(dprod - prod * lx) * std::abs(powx)
                             : c_next * std::abs(prod) * std::abs(powx);

  EmPass out;
  out.value = Complex(acc_re.total(), acc_im.total());
  out.trunc_err = omitted;
  out.round_err = 4.0 * std::numeric_limits<double>::epsilon() * acc_abs.total();
  return out;
}

inline ZetaResult em_evaluate(Complex s, double alpha, const EvalParams& params,
                              bool want_deriv, const char* where) {
  check_params(params, where);
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError(std::string(where) + ": alpha must be positive");
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw DomainError(std::string(where) + ": s must be finite");
  if (std::abs(s - Complex(1.0, 0.0)) < pole_guard())
    throw PoleError(std::string(where) + ": s is at the pole s = 1");

  int trunc = params.truncation > 0 ? params.truncation : auto_truncation(s, alpha);
  EmPass pass;
  for (;;) {
    pass = em_pass(s, alpha, trunc, params.tail_order, want_deriv);
    if (pass.trunc_err <= params.target_tol || trunc >= kMaxTruncation) break;
    trunc = std::min(2 * trunc, kMaxTruncation);
  }
  if (pass.trunc_err > params.target_tol)
    throw ConvergenceError(std::string(where) +
                           ": tail estimate above target_tol at the truncation cap");
  if (!std::isfinite(pass.value.real()) || !std::isfinite(pass.value.imag()))
    throw DomainError(std::string(where) + ": value overflows double range");
  return {pass.value, pass.trunc_err + pass.round_err};
}

struct PsiPass {
  double value = 0.0;
  double err = 0.0;
};

// Digamma through the pole-free limit of the expansion:
//   psi(a) = log x - sum_{n<N} (n+a)^{-1} - 1/(2x) - sum_k B_{2k}/(2k) x^{-2k}.
inline PsiPass psi_em(double alpha, const EvalParams& params) {
  check_params(params, "psi_via_pole_limit");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("psi_via_pole_limit: alpha must be positive");

  const auto& coeff = b2k_over_2k();
  int trunc = params.truncation > 0 ? params.truncation
                                    : std::max(1, int(std::ceil(10.0 - alpha)));
  for (;;) {
    Accumulator acc, acc_abs;
    const auto add = [&](double v) {
      acc.add(v);
      acc_abs.add(std::abs(v));
    };
    for (int n = 0; n < trunc; ++n) add(-1.0 / (double(n) + alpha));
    const double x = double(trunc) + alpha;
    add(std::log(x));
    add(-0.5 / x);
    const double inv_x2 = 1.0 / (x * x);
    double powx = inv_x2;
    for (int k = 1; k <= params.tail_order; ++k) {
      add(-coeff[std::size_t(k)] * powx);
      powx *= inv_x2;
    }
    const double omitted = std::abs(coeff[std::size_t(params.tail_order + 1)]) * powx;
    if (omitted <= params.target_tol || trunc >= kMaxTruncation) {
      if (omitted > params.target_tol)
        throw ConvergenceError(
            "psi_via_pole_limit: tail estimate above target_tol at the truncation cap");
      const double floor =
          4.0 * std::numeric_limits<double>::epsilon() * acc_abs.total();
      return {acc.total(), omitted + floor};
    }
    trunc = std::min(2 * trunc, kMaxTruncation);
  }
}

}  // namespace detail

/// Hurwitz zeta zeta(s, alpha) for complex s != 1 and real alpha > 0, by
/// Euler-Maclaurin summation with automatic truncation escalation.
inline ZetaResult hurwitz_zeta(Complex s, double alpha, EvalParams params = {}) {
  return detail::em_evaluate(s, alpha, params, false, "hurwitz_zeta");
}

/// d/ds zeta(s, alpha), by termwise s-differentiation of the same expansion.
inline ZetaResult hurwitz_zeta_sderiv(Complex s, double alpha, EvalParams params = {}) {
  return detail::em_evaluate(s, alpha, params, true, "hurwitz_zeta_sderiv");
}

/// Digamma psi(alpha), the s -> 1 limit of d/ds[(1-s) zeta(s, alpha)] taken
/// termwise (the pole is removed analytically).
inline double psi_via_pole_limit(double alpha, EvalParams params = {}) {
  return detail::psi_em(alpha, params).value;
}

/// zeta(s, alpha+1) through the Taylor shift
///   zeta(s, a+1) = zeta(s) + sum_{n>=1} ((-a)^n/n!) (s)_n zeta(s+n)
/// with K retained terms, each zeta value supplied by hurwitz_zeta(., 1).
/// At nonpositive integer s = -m the n = m+1 term pairs a vanishing rising
/// factorial with the pole of zeta(s+n) at 1; its finite limit (-1)^m m!
/// (residue 1) is substituted analytically.
inline ZetaResult taylor_zeta_shift(Complex s, double alpha, int terms,
                                    EvalParams params = {}) {
  if (!(std::abs(alpha) < 1.0))
    throw DomainError("taylor_zeta_shift: |alpha| must be < 1");
  if (terms < 1) throw DomainError("taylor_zeta_shift: need at least one term");
  if (std::abs(s - Complex(1.0, 0.0)) < detail::pole_guard())
    throw PoleError("taylor_zeta_shift: s is at the pole s = 1");

  int pole_index = -1;  // n for which s + n sits on the pole
  {
    const double r = std::round(s.real());
    if (r <= 0.0 && std::abs(s.real() - r) < detail::pole_guard() &&
        std::abs(s.imag()) < detail::pole_guard())
      pole_index = int(-r) + 1;
  }

  const ZetaResult head = hurwitz_zeta(s, 1.0, params);
  detail::Accumulator acc_re, acc_im, acc_abs;
  const auto add = [&](Complex z) {
    acc_re.add(z.real());
    acc_im.add(z.imag());
    acc_abs.add(std::abs(z));
  };
  add(head.value);
  double err = head.err_estimate;
  Complex coeff{1.0, 0.0};   // (-alpha)^n / n!
  Complex rising{1.0, 0.0};  // (s)_n
  double last_mag = 0.0;
  for (int n = 1; n <= terms; ++n) {
    coeff *= -alpha / double(n);
    rising *= s + double(n - 1);
    Complex term;
    if (n == pole_index) {
      double limit = 1.0;  // lim (s)_n zeta(s+n) = (-1)^m m!, m = n-1
      for (int j = 1; j < n; ++j) limit *= -double(j);
      term = coeff * limit;
    } else {
      const ZetaResult zn = hurwitz_zeta(s + double(n), 1.0, params);
      term = coeff * rising * zn.value;
      err += std::abs(coeff * rising) * zn.err_estimate;
    }
    add(term);
    last_mag = std::abs(term);
  }
  if (last_mag > params.target_tol)
    throw ConvergenceError("taylor_zeta_shift: last retained term above target_tol");
  err += last_mag + 4.0 * std::numeric_limits<double>::epsilon() * acc_abs.total();
  return {Complex(acc_re.total(), acc_im.total()), err};
}

}  // namespace hurwitz
