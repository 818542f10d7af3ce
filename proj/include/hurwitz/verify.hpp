#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/bernoulli.hpp"
#include "hurwitz/fourier.hpp"
#include "hurwitz/gamma_psi.hpp"
#include "hurwitz/lseries.hpp"
#include "hurwitz/zeta.hpp"

namespace hurwitz {

enum class ToleranceProfile { Default, Strict };

/// One identity sweep: the largest absolute residual seen over the grid,
/// the tolerance it was held to, and the grid point attaining the maximum.
/// Exact records demand a residual of exactly zero.
struct IdentityRecord {
  std::string name;
  std::size_t grid_size = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool exact = false;
  bool pass = false;
  std::string worst_point;
};

struct VerifyReport {
  std::vector<IdentityRecord> records;
  bool all_pass = true;
};

namespace verify_detail {

struct Collector {
  std::size_t count = 0;
  double max_residual = 0.0;
  std::string worst;

  void add(double residual, const std::string& point) {
    residual = std::abs(residual);
    if (count == 0 || residual > max_residual) {
      max_residual = residual;
      worst = point;
    }
    ++count;
  }

  IdentityRecord finish(std::string name, double tolerance, bool exact = false) const {
    IdentityRecord r;
    r.name = std::move(name);
    r.grid_size = count;
    r.max_residual = max_residual;
    r.tolerance = tolerance;
    r.exact = exact;
    r.pass = exact ? max_residual == 0.0 : max_residual <= tolerance;
    r.worst_point = worst;
    return r;
  }
};

template <class... Parts>
std::string label(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

inline std::string label_complex(Complex s) {
  std::ostringstream os;
  os << s.real();
  if (s.imag() != 0.0) os << (s.imag() > 0 ? "+" : "-") << std::abs(s.imag()) << "i";
  return os.str();
}

inline const std::vector<Rational>& rational_test_set() {
  static const std::vector<Rational> set = {
      Rational(0),  Rational(1),          Rational(1) / 2, Rational(-1) / 2,
      Rational(1) / 3, Rational(2) / 3,   Rational(-5) / 4, Rational(7) / 2};
  return set;
}

inline const std::vector<Complex>& s_grid() {
  static const std::vector<Complex> grid = {
      {-3.5, 0.0}, {-1.0, 0.0}, {0.5, 2.0}, {3.0, 0.0}};
  return grid;
}

inline const std::vector<double>& alpha_grid() {
  static const std::vector<double> grid = {0.1, 0.5, 1.0, 2.7};
  return grid;
}

// Polynomial extrapolation to h = 0 (Neville).
inline double neville_at_zero(std::vector<double> xs, std::vector<double> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = 0; i + level < n; ++i)
      ys[i] = (xs[i] * ys[i + 1] - xs[i + level] * ys[i]) / (xs[i] - xs[i + level]);
  return ys[0];
}

// ---- exact Bernoulli identities --------------------------------------

inline IdentityRecord check_bernoulli_difference(double scale) {
  Collector c;
  for (std::size_t m = 0; m <= 12; ++m) {
    const BernoulliPolynomial p = bernoulli_polynomial(m + 1);
    for (const Rational& a : rational_test_set()) {
      const Rational lhs = eval_poly(p, a + 1) - eval_poly(p, a);
      const Rational rhs = Rational(int(m + 1)) * rational_pow(a, unsigned(m));
      c.add(to_double(lhs - rhs), label("m=", m, " alpha=", to_string(a)));
    }
  }
  return c.finish("prop1.bernoulli-difference", 0.0 * scale, true);
}

inline IdentityRecord check_bernoulli_reflection(double scale) {
  Collector c;
  for (std::size_t m = 0; m <= 12; ++m) {
    const BernoulliPolynomial p = bernoulli_polynomial(m + 1);
    const int sign = (m + 1) % 2 == 0 ? 1 : -1;
    for (const Rational& a : rational_test_set()) {
      const Rational lhs = eval_poly(p, Rational(1) - a);
      const Rational rhs = Rational(sign) * eval_poly(p, a);
      c.add(to_double(lhs - rhs), label("m=", m, " alpha=", to_string(a)));
    }
  }
  return c.finish("prop2.bernoulli-reflection", 0.0 * scale, true);
}

inline IdentityRecord check_bernoulli_multiplication(double scale) {
  Collector c;
  static const std::vector<Rational> alphas = {Rational(0), Rational(1) / 2,
                                               Rational(1) / 3, Rational(-2) / 5};
  for (int parts = 2; parts <= 6; ++parts)
    for (std::size_t n = 1; n <= 10; ++n) {
      const BernoulliPolynomial p = bernoulli_polynomial(n);
      for (const Rational& a : alphas) {
        Rational lhs = 0;
        for (int r = 0; r < parts; ++r)
          lhs += eval_poly(p, a + Rational(r) / parts);
        const Rational rhs = eval_poly(p, Rational(parts) * a) /
                             rational_pow(Rational(parts), unsigned(n - 1));
        c.add(to_double(lhs - rhs),
              label("m=", parts, " n=", n, " alpha=", to_string(a)));
      }
    }
  return c.finish("prop3.bernoulli-multiplication", 0.0 * scale, true);
}

inline IdentityRecord check_zeta_neg_routes(double scale) {
  Collector c;
  for (std::size_t m = 0; m <= 12; ++m)
    for (const Rational& a : rational_test_set()) {
      const Rational diff =
          zeta_neg_int_exact(m, a) - zeta_neg_int_via_zeta_values(m, a);
      c.add(to_double(diff), label("m=", m, " alpha=", to_string(a)));
    }
  return c.finish("bernoulli.zeta-neg-routes", 0.0 * scale, true);
}

// Coefficients of z e^{az}/(e^z - 1) through order N by exact power-series
// division; they must reproduce B_n(a)/n!.
inline IdentityRecord check_generating_function(double scale) {
  Collector c;
  constexpr std::size_t order = 12;
  static const std::vector<Rational> alphas = {Rational(0), Rational(1) / 2,
                                               Rational(2) / 3, Rational(-3) / 2};
  for (const Rational& a : alphas) {
    std::vector<Rational> numer(order + 1), denom(order + 1);
    Rational fact = 1;
    for (std::size_t k = 0; k <= order; ++k) {
      if (k > 0) fact *= int(k);
      numer[k] = rational_pow(a, unsigned(k)) / fact;        // e^{az}
      denom[k] = Rational(1) / (fact * int(k + 1));          // (e^z - 1)/z
    }
    std::vector<Rational> series(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
      Rational acc = numer[n];
      for (std::size_t j = 1; j <= n; ++j) acc -= denom[j] * series[n - j];
      series[n] = acc;  // denom[0] = 1
    }
    Rational nfact = 1;
    for (std::size_t n = 0; n <= order; ++n) {
      if (n > 0) nfact *= int(n);
      const Rational expected = eval_poly(bernoulli_polynomial(n), a) / nfact;
      c.add(to_double(series[n] - expected), label("n=", n, " alpha=", to_string(a)));
    }
  }
  return c.finish("bernoulli.generating-function", 0.0 * scale, true);
}

// ---- kernel vs exact encoding ----------------------------------------

inline IdentityRecord check_zeta_encoding(double scale) {
  Collector c;
  static const std::vector<std::pair<double, const char*>> alphas = {
      {0.25, "1/4"}, {1.0 / 3.0, "1/3"}, {0.5, "1/2"},
      {1.0, "1"},    {1.5, "3/2"},       {std::numbers::e, "e"}};
  for (std::size_t n = 0; n <= 8; ++n) {
    const BernoulliPolynomial p = bernoulli_polynomial(n + 1);
    std::vector<double> coeff(p.coefficients.size());
    for (std::size_t j = 0; j < coeff.size(); ++j) coeff[j] = to_double(p.coefficients[j]);
    for (const auto& [a, name] : alphas) {
      double horner = 0.0;
      for (std::size_t j = coeff.size(); j-- > 0;) horner = horner * a + coeff[j];
      const double kernel =
          -double(n + 1) * hurwitz_zeta(Complex(-double(n), 0.0), a).value.real();
      c.add(kernel - horner, label("n=", n, " alpha=", name));
    }
  }
  return c.finish("bernoulli.zeta-encoding", 1e-10 * scale);
}

inline IdentityRecord check_zeta_at_zero(double scale) {
  Collector c;
  for (int i = 1; i <= 100; ++i) {
    const double a = double(i) / 20.0;  // (0, 5]
    const double v = hurwitz_zeta(Complex(0.0, 0.0), a).value.real();
    c.add(v - (0.5 - a), label("alpha=", a));
  }
  return c.finish("kernel.zeta-at-zero", 1e-12 * scale);
}

inline IdentityRecord check_negative_integers(double scale) {
  Collector c;
  static const std::vector<std::pair<Rational, double>> alphas = {
      {Rational(1) / 4, 0.25}, {Rational(1) / 3, 1.0 / 3.0}, {Rational(1) / 2, 0.5},
      {Rational(1), 1.0},      {Rational(3) / 2, 1.5}};
  for (std::size_t m = 0; m <= 8; ++m)
    for (const auto& [ar, ad] : alphas) {
      const double exact = to_double(zeta_neg_int_exact(m, ar));
      const double kernel = hurwitz_zeta(Complex(-double(m), 0.0), ad).value.real();
      c.add(kernel - exact, label("m=", m, " alpha=", to_string(ar)));
    }
  return c.finish("kernel.negative-integers", 1e-10 * scale);
}

inline IdentityRecord check_alpha_derivative(double scale) {
  Collector c;
  constexpr double h = 1e-5;
  for (const Complex s : s_grid())
    for (const double a : alpha_grid()) {
      if (std::abs(s + 1.0 - Complex(1.0, 0.0)) < 1e-9) continue;  // s + 1 at the pole
      const Complex up = hurwitz_zeta(s, a + h).value;
      const Complex dn = hurwitz_zeta(s, a - h).value;
      const Complex fd = (up - dn) / (2.0 * h);
      const Complex ref = -s * hurwitz_zeta(s + 1.0, a).value;
      const double rel = std::abs(fd - ref) / std::max(1.0, std::abs(ref));
      c.add(rel, label("s=", label_complex(s), " alpha=", a));
    }
  return c.finish("fact1.alpha-derivative", 1e-6 * scale);
}

inline IdentityRecord check_alpha_shift(double scale) {
  Collector c;
  for (const Complex s : s_grid())
    for (const double a : alpha_grid()) {
      const Complex left = hurwitz_zeta(s, a).value;
      const Complex right = hurwitz_zeta(s, a + 1.0).value;
      const Complex pow_term = std::exp(-s * std::log(a));
      c.add(std::abs(left - right - pow_term),
            label("s=", label_complex(s), " alpha=", a));
    }
  return c.finish("fact2.alpha-shift", 1e-10 * scale);
}

inline IdentityRecord check_sderiv_fd(double scale) {
  Collector c;
  constexpr double h = 1e-6;
  for (const Complex s : s_grid())
    for (const double a : alpha_grid()) {
      const Complex up = hurwitz_zeta(s + h, a).value;
      const Complex dn = hurwitz_zeta(s - h, a).value;
      const Complex fd = (up - dn) / (2.0 * h);
      const Complex deriv = hurwitz_zeta_sderiv(s, a).value;
      c.add(std::abs(deriv - fd), label("s=", label_complex(s), " alpha=", a));
    }
  return c.finish("kernel.sderiv-finite-difference", 1e-6 * scale);
}

inline IdentityRecord check_taylor_shift(double scale) {
  Collector c;
  static const std::vector<Complex> ss = {
      {3.0, 0.0}, {2.0, 0.0}, {-0.5, 0.0}, {-1.0, 0.0}, {0.5, 2.0}};
  static const std::vector<double> alphas = {-0.5, -0.25, 0.1, 0.3, 0.5};
  for (const Complex s : ss)
    for (const double a : alphas) {
      const ZetaResult shifted = taylor_zeta_shift(s, a, 60);
      const ZetaResult direct = hurwitz_zeta(s, a + 1.0);
      const double excess = std::abs(shifted.value - direct.value) -
                            (shifted.err_estimate + direct.err_estimate);
      c.add(std::max(0.0, excess), label("s=", label_complex(s), " alpha=", a));
    }
  return c.finish("kernel.taylor-shift", 1e-12 * scale);
}

inline IdentityRecord check_pole_residue(double scale) {
  Collector c;
  static const std::vector<double> alphas = {0.4, 1.0, 2.5};
  for (const double a : alphas) {
    std::vector<double> hs, vals;
    for (int j = 2; j <= 6; ++j) {
      const double h = std::pow(10.0, -j);
      hs.push_back(h);
      vals.push_back(h * hurwitz_zeta(Complex(1.0 + h, 0.0), a).value.real());
    }
    const double limit = neville_at_zero(hs, vals);
    c.add(limit - 1.0, label("alpha=", a));
  }
  return c.finish("kernel.pole-residue", 1e-8 * scale);
}

// ---- gamma / psi ------------------------------------------------------

inline IdentityRecord check_gamma_recurrence(double scale) {
  Collector c;
  static const std::vector<double> alphas = {0.1, 0.5, 1.0, 2.3, 7.0};
  for (const double a : alphas)
    c.add(log_gamma(a + 1.0) - log_gamma(a) - std::log(a), label("alpha=", a));
  return c.finish("prop1.gamma-recurrence", 1e-9 * scale);
}

inline IdentityRecord check_psi_recurrence(double scale) {
  Collector c;
  static const std::vector<double> alphas = {0.1, 0.5, 1.0, 2.3, 7.0};
  for (const double a : alphas)
    c.add(psi(a + 1.0) - psi(a) - 1.0 / a, label("alpha=", a));
  return c.finish("prop1.psi-recurrence", 1e-9 * scale);
}

inline IdentityRecord check_psi_reflection(double scale) {
  Collector c;
  static const std::vector<double> alphas = {0.1, 0.25, 0.4};
  const double pi = std::numbers::pi;
  for (const double a : alphas) {
    const double cot = std::cos(pi * a) / std::sin(pi * a);
    c.add(psi(1.0 - a) - psi(a) - pi * cot, label("alpha=", a));
  }
  return c.finish("prop2.psi-reflection", 1e-8 * scale);
}

inline IdentityRecord check_gamma_reflection(double scale) {
  Collector c;
  static const std::vector<double> alphas = {0.25, 0.5, 0.9};
  for (const double a : alphas)
    c.add(gamma_reflection_residual(a), label("alpha=", a));
  return c.finish("prop2.gamma-reflection", 1e-9 * scale);
}

inline IdentityRecord check_gamma_half(double scale) {
  Collector c;
  c.add(std::exp(log_gamma(0.5)) - std::sqrt(std::numbers::pi), "alpha=0.5");
  return c.finish("prop2.gamma-half-sqrt-pi", 1e-10 * scale);
}

inline IdentityRecord check_gamma_multiplication(double scale) {
  Collector c;
  static const std::vector<std::pair<double, int>> grid = {
      {0.3, 2}, {1.0, 3}, {0.7, 5}};
  for (const auto& [a, n] : grid)
    c.add(gamma_multiplication_residual(a, n), label("alpha=", a, " n=", n));
  return c.finish("prop3.gamma-multiplication", 1e-9 * scale);
}

inline IdentityRecord check_sin_product(double scale) {
  Collector c;
  static const std::vector<double> alphas = {0.1, 0.3, 0.45};
  static const std::vector<int> ms = {2, 3, 5, 8};
  const double pi = std::numbers::pi;
  for (const double a : alphas)
    for (const int m : ms) {
      const double rhs = std::pow(2.0, 1 - m) * std::sin(pi * double(m) * a);
      c.add(sin_product(a, m) - rhs, label("alpha=", a, " m=", m));
    }
  return c.finish("prop3.sin-product", 1e-12 * scale);
}

inline IdentityRecord check_gauss_digamma(double scale) {
  Collector c;
  for (int q = 2; q <= 20; ++q)
    for (int a = 1; a < q; ++a)
      c.add(gauss_digamma(a, q) - psi(double(a) / double(q)),
            label("a=", a, " q=", q));
  return c.finish("prop4.gauss-digamma", 1e-9 * scale);
}

inline IdentityRecord check_gauss_forms(double scale) {
  Collector c;
  for (int q = 2; q <= 20; ++q)
    for (int a = 1; a < q; ++a)
      c.add(gauss_digamma(a, q) - gauss_digamma_proof_form(RationalArgument{a, q}),
            label("a=", a, " q=", q));
  return c.finish("prop4.form-equivalence", 1e-12 * scale);
}

inline IdentityRecord check_stirling(double scale) {
  Collector c;
  static const std::vector<double> alphas = {0.5, 1.0, 2.0, 10.0, 50.0};
  for (const double a : alphas)
    c.add(stirling_log_gamma(a) - log_gamma(a), label("alpha=", a));
  return c.finish("prop5.stirling", 1e-9 * scale);
}

// ---- Fourier side ------------------------------------------------------

inline IdentityRecord check_functional_equation(double scale) {
  Collector c;
  static const std::vector<double> ss = {-0.5, -1.5, -2.0, -3.5};
  static const std::vector<double> alphas = {0.1, 0.3, 0.5, 0.7, 0.9};
  FourierParams params;
  params.n_terms = 50000;
  for (const double s : ss)
    for (const double a : alphas) {
      const ZetaResult fourier = hurwitz_formula(Complex(s, 0.0), a, params);
      const ZetaResult kernel = hurwitz_zeta(Complex(s, 0.0), a);
      const double excess = std::abs(fourier.value - kernel.value) -
                            (fourier.err_estimate + kernel.err_estimate);
      c.add(std::max(0.0, excess), label("s=", s, " alpha=", a));
    }
  return c.finish("fact3.functional-equation", 1e-12 * scale);
}

inline IdentityRecord check_fourier_bernoulli_reflection(double scale) {
  Collector c;
  static const std::vector<double> alphas = {0.2, 0.4};
  for (int m = 0; m <= 3; ++m)
    for (const double a : alphas) {
      FourierParams params;
      params.n_terms = m == 0 ? 100000 : 20000;
      const double sign = (m + 1) % 2 == 0 ? 1.0 : -1.0;
      const ZetaResult left = hurwitz_formula(Complex(-double(m), 0.0), 1.0 - a, params);
      const ZetaResult right = hurwitz_formula(Complex(-double(m), 0.0), a, params);
      c.add(std::abs(left.value - sign * right.value), label("m=", m, " alpha=", a));
    }
  return c.finish("fact3.bernoulli-reflection", 1e-8 * scale);
}

inline IdentityRecord check_log_sine(double scale) {
  Collector c;
  static const std::vector<double> alphas = {0.5, 0.25, 1.0 / 6.0, 0.3};
  FourierParams params;
  params.n_terms = 100000;
  for (const double a : alphas) {
    const double closed = -std::log(2.0 * std::sin(std::numbers::pi * a));
    c.add(log_sine_cosine_sum(a, params) - closed, label("alpha=", a));
  }
  return c.finish("kummer.log-sine", 1e-5 * scale);
}

inline IdentityRecord check_kummer_reflection(double scale) {
  Collector c;
  static const std::vector<double> alphas = {0.3, 0.25};
  FourierParams params;
  params.n_terms = 100000;
  for (const double a : alphas) {
    const double sum = zeta_sderiv_at_zero_fourier(a, params) +
                       zeta_sderiv_at_zero_fourier(1.0 - a, params) +
                       std::log(2.0 * std::sin(std::numbers::pi * a));
    c.add(sum, label("alpha=", a));
  }
  return c.finish("kummer.reflection-sum", 1e-3 * scale);
}

inline IdentityRecord check_kummer_vs_kernel(double scale) {
  Collector c;
  static const std::vector<double> alphas = {0.25, 0.5};
  FourierParams params;
  params.n_terms = 100000;
  for (const double a : alphas) {
    const double kernel = hurwitz_zeta_sderiv(Complex(0.0, 0.0), a).value.real();
    c.add(zeta_sderiv_at_zero_fourier(a, params) - kernel, label("alpha=", a));
  }
  return c.finish("kummer.sderiv-vs-kernel", 1e-3 * scale);
}

// ---- L-series -----------------------------------------------------------

inline IdentityRecord check_orthogonality(double scale) {
  Collector c;
  for (int q = 1; q <= 30; ++q) {
    const auto group = build_character_group(q);
    const double phi = double(group.size());
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = 0; j < group.size(); ++j) {
        Complex acc{0.0, 0.0};
        for (int a = 1; a <= q; ++a) acc += group[i](a) * std::conj(group[j](a));
        const double expected = i == j ? phi : 0.0;
        c.add(std::abs(acc - expected), label("q=", q, " i=", i, " j=", j));
      }
  }
  return c.finish("lseries.orthogonality", 1e-10 * scale);
}

inline IdentityRecord check_decomposition(double scale) {
  Collector c;
  const Complex s{3.0, 0.0};
  for (int q = 1; q <= 12; ++q) {
    const auto group = build_character_group(q);
    std::vector<Complex> lvals;
    lvals.reserve(group.size());
    for (const auto& chi : group) lvals.push_back(l_series(s, chi).value);
    const double phi = double(group.size());
    const Complex qs = std::exp(-s * std::log(double(q)));
    for (int b = 1; b <= q; ++b) {
      if (std::gcd(b, q) != 1) continue;
      Complex acc{0.0, 0.0};
      for (std::size_t i = 0; i < group.size(); ++i)
        acc += std::conj(group[i](b)) * lvals[i];
      const Complex expected =
          phi * qs * hurwitz_zeta(s, double(b) / double(q)).value;
      c.add(std::abs(acc - expected), label("q=", q, " b=", b));
    }
  }
  return c.finish("lseries.decomposition", 1e-9 * scale);
}

inline IdentityRecord check_principal_relation(double scale) {
  Collector c;
  const Complex s{2.0, 0.0};
  static const std::vector<int> qs = {2, 3, 4, 6};
  const double zeta2 = hurwitz_zeta(s, 1.0).value.real();
  for (const int q : qs) {
    const auto group = build_character_group(q);
    const DirichletCharacter* principal = nullptr;
    for (const auto& chi : group)
      if (chi.is_principal()) {
        principal = &chi;
        break;
      }
    double euler_factor = 1.0;
    for (int p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      bool prime = p >= 2;
      for (int d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
      if (prime) euler_factor *= 1.0 - std::pow(double(p), -2.0);
    }
    const double lval = l_series(s, *principal).value.real();
    c.add(lval - zeta2 * euler_factor, label("q=", q));
  }
  return c.finish("lseries.principal", 1e-9 * scale);
}

inline const DirichletCharacter& odd_character_mod_4() {
  static const DirichletCharacter chi = [] {
    for (auto& candidate : build_character_group(4))
      if (!candidate.is_principal()) return candidate;
    throw std::logic_error("no odd character mod 4");
  }();
  return chi;
}

inline IdentityRecord check_catalan(double scale) {
  Collector c;
  constexpr double catalan = 0.9159655941772190;  // sum (-1)^n/(2n+1)^2
  c.add(l_series(Complex(2.0, 0.0), odd_character_mod_4()).value.real() - catalan,
        "s=2 q=4");
  return c.finish("lseries.catalan", 1e-9 * scale);
}

inline IdentityRecord check_leibniz(double scale) {
  Collector c;
  c.add(l_series(Complex(1.0, 0.0), odd_character_mod_4()).value.real() -
            std::numbers::pi / 4.0,
        "s=1 q=4");
  return c.finish("lseries.leibniz", 1e-9 * scale);
}

struct NamedCheck {
  const char* name;
  IdentityRecord (*run)(double);
};

inline const std::vector<NamedCheck>& registry() {
  static const std::vector<NamedCheck> checks = {
      {"prop1.bernoulli-difference", &check_bernoulli_difference},
      {"prop2.bernoulli-reflection", &check_bernoulli_reflection},
      {"prop3.bernoulli-multiplication", &check_bernoulli_multiplication},
      {"bernoulli.zeta-neg-routes", &check_zeta_neg_routes},
      {"bernoulli.generating-function", &check_generating_function},
      {"bernoulli.zeta-encoding", &check_zeta_encoding},
      {"kernel.zeta-at-zero", &check_zeta_at_zero},
      {"kernel.negative-integers", &check_negative_integers},
      {"fact1.alpha-derivative", &check_alpha_derivative},
      {"fact2.alpha-shift", &check_alpha_shift},
      {"kernel.sderiv-finite-difference", &check_sderiv_fd},
      {"kernel.taylor-shift", &check_taylor_shift},
      {"kernel.pole-residue", &check_pole_residue},
      {"prop1.gamma-recurrence", &check_gamma_recurrence},
      {"prop1.psi-recurrence", &check_psi_recurrence},
      {"prop2.psi-reflection", &check_psi_reflection},
      {"prop2.gamma-reflection", &check_gamma_reflection},
      {"prop2.gamma-half-sqrt-pi", &check_gamma_half},
      {"prop3.gamma-multiplication", &check_gamma_multiplication},
      {"prop3.sin-product", &check_sin_product},
      {"prop4.gauss-digamma", &check_gauss_digamma},
      {"prop4.form-equivalence", &check_gauss_forms},
      {"prop5.stirling", &check_stirling},
      {"fact3.functional-equation", &check_functional_equation},
      {"fact3.bernoulli-reflection", &check_fourier_bernoulli_reflection},
      {"kummer.log-sine", &check_log_sine},
      {"kummer.reflection-sum", &check_kummer_reflection},
      {"kummer.sderiv-vs-kernel", &check_kummer_vs_kernel},
      {"lseries.orthogonality", &check_orthogonality},
      {"lseries.decomposition", &check_decomposition},
      {"lseries.principal", &check_principal_relation},
      {"lseries.catalan", &check_catalan},
      {"lseries.leibniz", &check_leibniz},
  };
  return checks;
}

}  // namespace verify_detail

/// Sweeps the identity suite.  The strict profile halves every tolerance;
/// `only` restricts the run to records whose name contains the substring.
/// Records are produced in declaration order, so output is deterministic.
inline VerifyReport run_verify(ToleranceProfile profile = ToleranceProfile::Default,
                               std::string_view only = {}) {
  const double scale = profile == ToleranceProfile::Strict ? 0.5 : 1.0;
  VerifyReport report;
  for (const auto& check : verify_detail::registry()) {
    if (!only.empty() && std::string_view(check.name).find(only) == std::string_view::npos)
      continue;
    IdentityRecord record = check.run(scale);
    report.all_pass = report.all_pass && record.pass;
    report.records.push_back(std::move(record));
  }
  return report;
}

}  // namespace hurwitz
