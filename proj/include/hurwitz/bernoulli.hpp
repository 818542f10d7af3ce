#pragma once

#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Append-only memo table of Bernoulli numbers under the generating-function
// convention z e^{az}/(e^z - 1), i.e. B_1 = -1/2.  Reads and extensions are
// serialized; entries never change once computed.
class BernoulliCache {
 public:
  Rational get(std::size_t n) {
    std::scoped_lock lock(mutex_);
    while (table_.size() <= n) extend();
    return table_[n];
  }

 private:
  void extend() {
    const std::size_t m = table_.size();
    if (m == 0) {
      table_.emplace_back(1);
      return;
    }
    // sum_{k=0}^{m} C(m+1,k) B_k = 0, solved for B_m
    Rational acc = 0;
    for (std::size_t k = 0; k < m; ++k)
      acc += Rational(binomial(unsigned(m + 1), unsigned(k))) * table_[k];
    table_.push_back(-acc / int(m + 1));
  }

  std::mutex mutex_;
  std::vector<Rational> table_;
};

/// Exact Bernoulli number B_n (B_1 = -1/2), memoized process-wide.
inline Rational bernoulli_number(std::size_t n) {
  static BernoulliCache cache;
  return cache.get(n);
}

/// Exact coefficient vector of B_n(alpha); index k holds the coefficient of
/// alpha^k.  The polynomial is monic and its constant term is B_n.
struct BernoulliPolynomial {
  std::size_t degree = 0;
  std::vector<Rational> coefficients;
};

inline BernoulliPolynomial bernoulli_polynomial(std::size_t n) {
  BernoulliPolynomial p;
  p.degree = n;
  p.coefficients.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    p.coefficients[j] =
        Rational(binomial(unsigned(n), unsigned(j))) * bernoulli_number(n - j);
  return p;
}

/// Exact Horner evaluation.
inline Rational eval_poly(const BernoulliPolynomial& p, const Rational& alpha) {
  Rational acc = 0;
  for (std::size_t j = p.coefficients.size(); j-- > 0;)
    acc = acc * alpha + p.coefficients[j];
  return acc;
}

/// zeta(-m, alpha) = -B_{m+1}(alpha)/(m+1), exactly.
inline Rational zeta_neg_int_exact(std::size_t m, const Rational& alpha) {
  return -eval_poly(bernoulli_polynomial(m + 1), alpha) / int(m + 1);
}

/// The same value through the closed polynomial
///   zeta(-m,a) = sum_{k<=m} C(m,k) zeta(-k) a^{m-k} + a^m - a^{m+1}/(m+1)
/// with zeta(-k) = -B_{k+1}/(k+1).  Must agree with zeta_neg_int_exact.
inline Rational zeta_neg_int_via_zeta_values(std::size_t m, const Rational& alpha) {
  Rational acc = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    const Rational zeta_neg_k = -bernoulli_number(k + 1) / int(k + 1);
    acc += Rational(binomial(unsigned(m), unsigned(k))) * zeta_neg_k *
           rational_pow(alpha, unsigned(m - k));
  }
  acc += rational_pow(alpha, unsigned(m));
  acc -= rational_pow(alpha, unsigned(m + 1)) / int(m + 1);
  return acc;
}

/// JSON array of coefficient strings, index = power of alpha.
inline std::string to_json_array(const BernoulliPolynomial& p) {
  std::string out = "[";
  for (std::size_t j = 0; j < p.coefficients.size(); ++j) {
    if (j != 0) out += ',';
    out += '"';
    out += to_string(p.coefficients[j]);
    out += '"';
  }
  out += ']';
  return out;
}

}  // namespace hurwitz
