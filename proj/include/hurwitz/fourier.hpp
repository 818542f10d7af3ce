#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hurwitz/gamma_psi.hpp"

namespace hurwitz {

/// Term count and averaging switch for the trigonometric series.  Averaging
/// (iterated pairwise means of partial sums, four levels over a trailing
/// window) is what makes the conditionally convergent sums usable.
struct FourierParams {
  int n_terms = 100000;
  bool use_averaging = true;
};

namespace detail {

inline void check_fourier_params(const FourierParams& p, const char* where) {
  if (p.n_terms < 8) throw DomainError(std::string(where) + ": n_terms must be >= 8");
}

// Straight compensated partial sum of term(1) + ... + term(n_terms).
template <class TermFn>
double plain_series(TermFn&& term, long n_terms, double* abs_total = nullptr) {
  Accumulator acc, acc_abs;
  for (long n = 1; n <= n_terms; ++n) {
    const double t = term(n);
    acc.add(t);
    acc_abs.add(std::abs(t));
  }
  if (abs_total) *abs_total = acc_abs.total();
  return acc.total();
}

// Iterated tail averaging: keep the trailing window of partial sums and
// replace it four times by pairwise means.  Returns the deepest, latest
// value; osc_out receives the spread over the last few entries of the
// deepest level, an empirical error bound for the oscillatory part.
template <class TermFn>
double averaged_series(TermFn&& term, long n_terms, double* osc_out = nullptr) {
  const int window = int(std::min<long>(64, n_terms));
  const int levels = std::min(4, window - 1);

  Accumulator acc;
  std::vector<double> ring(std::size_t(window));
  for (long n = 1; n <= n_terms; ++n) {
    acc.add(term(n));
    ring[std::size_t((n - 1) % window)] = acc.total();
  }
  std::vector<double> v(std::size_t(window));
  for (int i = 0; i < window; ++i)
    v[std::size_t(i)] = ring[std::size_t((n_terms + i) % window)];  // oldest..newest
  for (int level = 0; level < levels; ++level) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = 0.5 * (v[i] + v[i + 1]);
    v.pop_back();
  }
  const double result = v.back();
  if (osc_out) {
    const std::size_t span = std::min<std::size_t>(8, v.size());
    double lo = result, hi = result;
    for (std::size_t i = v.size() - span; i < v.size(); ++i) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    *osc_out = hi - lo;
  }
  return result;
}

// Exponential-sum arrangement of the Hurwitz formula,
//   zeta(s,a) = Gamma(1-s) sum_{|n|>=1} e^{2 pi i n a} (2 pi i n)^{s-1},
// kept as an internal cross-check of the sine form.
inline ZetaResult hurwitz_formula_exponential(Complex s, double alpha,
                                              FourierParams params = {}) {
  check_fourier_params(params, "hurwitz_formula_exponential");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("hurwitz_formula_exponential: alpha must lie in (0,1)");
  if (s.imag() != 0.0)
    throw DomainError("hurwitz_formula_exponential: only real s is supported");
  const double sr = s.real();
  if (!(sr < 0.0)) throw DomainError("hurwitz_formula_exponential: requires Re s < 0");

  const double pi = std::numbers::pi;
  const double gam = std::exp(log_gamma(1.0 - sr));
  Accumulator acc_re, acc_im, acc_abs;
  for (long n = 1; n <= params.n_terms; ++n) {
    const double l = (sr - 1.0) * std::log(2.0 * pi * double(n));
    const double half_turn = (sr - 1.0) * 0.5 * pi;
    const Complex up = std::exp(Complex(l, half_turn));     // (2 pi i n)^{s-1}
    const Complex down = std::exp(Complex(l, -half_turn));  // (-2 pi i n)^{s-1}
    const Complex e{std::cos(2.0 * pi * double(n) * alpha),
                    std::sin(2.0 * pi * double(n) * alpha)};
    const Complex t = e * up + std::conj(e) * down;
    acc_re.add(t.real());
    acc_im.add(t.imag());
    acc_abs.add(std::abs(t));
  }
  const double tail = 2.0 * std::pow(2.0 * pi, sr - 1.0) *
                      std::pow(double(params.n_terms), sr) / (-sr);
  const double floor = 4.0 * std::numeric_limits<double>::epsilon() * acc_abs.total();
  return {gam * Complex(acc_re.total(), acc_im.total()),
          gam * tail + gam * floor};
}

}  // namespace detail

/// Hurwitz formula (the Fourier side of the functional equation):
///   zeta(s, a) = 2 (2 pi)^{s-1} Gamma(1-s) sum_n sin(pi s/2 + 2 pi n a) n^{s-1}
/// for real s with Re s < 0 and 0 < a < 1.  The boundary point s = 0, where
/// the series converges only conditionally, is admitted when averaging is
/// enabled; the error estimate is then the observed oscillation instead of
/// the integral tail bound.
inline ZetaResult hurwitz_formula(Complex s, double alpha, FourierParams params = {}) {
  detail::check_fourier_params(params, "hurwitz_formula");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("hurwitz_formula: alpha must lie in (0,1)");
  if (s.imag() != 0.0) throw DomainError("hurwitz_formula: only real s is supported");
  const double sr = s.real();
  if (sr > 0.0 || (sr == 0.0 && !params.use_averaging))
    throw DomainError("hurwitz_formula: requires Re s < 0 (s = 0 only with averaging)");

  const double pi = std::numbers::pi;
  const double prefactor =
      2.0 * std::pow(2.0 * pi, sr - 1.0) * std::exp(log_gamma(1.0 - sr));
  const double phase = 0.5 * pi * sr;
  const auto term = [=](long n) {
    return std::sin(phase + 2.0 * pi * double(n) * alpha) *
           std::pow(double(n), sr - 1.0);
  };

  double sum, err;
  if (sr == 0.0) {
    double osc = 0.0;
    sum = detail::averaged_series(term, params.n_terms, &osc);
    err = std::abs(prefactor) * osc;
  } else {
    double abs_total = 0.0;
    sum = detail::plain_series(term, params.n_terms, &abs_total);
    const double tail = std::pow(double(params.n_terms), sr) / (-sr);
    err = std::abs(prefactor) *
          (tail + 4.0 * std::numeric_limits<double>::epsilon() * abs_total);
  }
  return {Complex(prefactor * sum, 0.0), err};
}

/// Partial sum (averaged when enabled) of sum_n cos(2 pi n a)/n, which
/// converges to -log(2 sin(pi a)) on 0 < a < 1.
inline double log_sine_cosine_sum(double alpha, FourierParams params = {}) {
  detail::check_fourier_params(params, "log_sine_cosine_sum");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("log_sine_cosine_sum: alpha must lie in (0,1)");
  const double pi = std::numbers::pi;
  const auto term = [=](long n) { return std::cos(2.0 * pi * double(n) * alpha) / double(n); };
  if (params.use_averaging)
    return detail::averaged_series(term, params.n_terms);
  return detail::plain_series(term, params.n_terms);
}

/// Kummer-type series for zeta'(0, a) = log(Gamma(a)/sqrt(2 pi)):
///   (1/pi) { (log 2pi + gamma) sum_n sin(2 pi n a)/n
///            + sum_n (pi/2 cos(2 pi n a) + log n sin(2 pi n a))/n }.
/// The log n / n terms converge only conditionally, so averaging is
/// mandatory; the averaged-tail oscillation must stay below 1e-3.
inline double zeta_sderiv_at_zero_fourier(double alpha, FourierParams params = {}) {
  detail::check_fourier_params(params, "zeta_sderiv_at_zero_fourier");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("zeta_sderiv_at_zero_fourier: alpha must lie in (0,1)");
  if (!params.use_averaging)
    throw DomainError("zeta_sderiv_at_zero_fourier: averaging is mandatory");

  constexpr double kOscillationTol = 1e-3;
  const double pi = std::numbers::pi;
  double osc_sin = 0.0, osc_mix = 0.0;
  const double sin_sum = detail::averaged_series(
      [=](long n) { return std::sin(2.0 * pi * double(n) * alpha) / double(n); },
      params.n_terms, &osc_sin);
  const double mix_sum = detail::averaged_series(
      [=](long n) {
        const double angle = 2.0 * pi * double(n) * alpha;
        return (0.5 * pi * std::cos(angle) + std::log(double(n)) * std::sin(angle)) /
               double(n);
      },
      params.n_terms, &osc_mix);
  const double scale = std::log(2.0 * pi) + euler_gamma;
  const double osc = (scale * osc_sin + osc_mix) / pi;
  if (osc > kOscillationTol)
    throw ConvergenceError(
        "zeta_sderiv_at_zero_fourier: averaged tail still oscillating; raise n_terms");
  return (scale * sin_sum + mix_sum) / pi;
}

}  // namespace hurwitz
