#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

#include "hurwitz/zeta.hpp"

namespace hurwitz {

/// Value table of a Dirichlet character mod q.  values has length q and
/// values[a % q] holds chi(a); chi vanishes exactly off the units mod q.
struct DirichletCharacter {
  int modulus = 1;
  std::vector<Complex> values;

  Complex operator()(long long n) const {
    long long r = n % modulus;
    if (r < 0) r += modulus;
    return values[std::size_t(r)];
  }

  bool is_principal() const {
    for (int a = 1; a <= modulus; ++a)
      if (std::gcd(a, modulus) == 1 && std::abs((*this)(a) - 1.0) > 1e-9)
        return false;
    return true;
  }
};

namespace detail {

// e^{2 pi i k / order} with quarter turns exact.
inline Complex root_of_unity(long long k, long long order) {
  k %= order;
  if (k < 0) k += order;
  if ((4 * k) % order == 0) {
    switch ((4 * k) / order) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * double(k) / double(order);
  return {std::cos(angle), std::sin(angle)};
}

// Fixed-shape pairwise tree reduction over terms ordered by ascending a.
inline Complex pairwise_reduce(std::vector<Complex> v) {
  if (v.empty()) return {0.0, 0.0};
  while (v.size() > 1) {
    std::vector<Complex> next;
    next.reserve((v.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) next.push_back(v[i] + v[i + 1]);
    if (v.size() % 2 == 1) next.push_back(v.back());
    v = std::move(next);
  }
  return v[0];
}

}  // namespace detail

/// All phi(q) Dirichlet characters mod q, by brute-force enumeration of
/// completely multiplicative root-of-unity assignments on a greedy
/// generating set of the unit group, filtered by the group relations.
/// Deterministic ordering: lexicographic on the value arguments, so the
/// principal character always comes first.
inline std::vector<DirichletCharacter> build_character_group(int q) {
  if (q < 1) throw DomainError("build_character_group: modulus must be positive");
  if (q > 200) throw LimitError("build_character_group: modulus limited to q <= 200");

  std::vector<int> units;  // residues in [0, q)
  for (int a = 1; a <= q; ++a)
    if (std::gcd(a, q) == 1) units.push_back(a % q);
  std::sort(units.begin(), units.end());
  const std::size_t phi = units.size();
  const int one = 1 % q;

  const auto mul = [q](int a, int b) { return int((std::int64_t(a) * b) % q); };

  // Greedy generating set with absolute orders.
  std::vector<int> gens, gen_order;
  std::set<int> span{one};
  for (int a : units) {
    if (span.count(a)) continue;
    int order = 1;
    for (int x = a; x != one; x = mul(x, a)) ++order;
    std::set<int> bigger;
    for (int h : span) {
      int p = h;
      for (int e = 0; e < order; ++e) {
        bigger.insert(p);
        p = mul(p, a);
      }
    }
    gens.push_back(a);
    gen_order.push_back(order);
    span = std::move(bigger);
  }
  const std::size_t ngen = gens.size();

  // One exponent vector per unit: first-seen tuple over the mixed-radix
  // enumeration of gen powers.
  std::vector<std::vector<int>> expvec(std::size_t(q));
  std::vector<char> seen(std::size_t(q), 0);
  {
    std::vector<int> tuple(ngen, 0);
    for (;;) {
      int prod = one;
      for (std::size_t i = 0; i < ngen; ++i)
        for (int e = 0; e < tuple[i]; ++e) prod = mul(prod, gens[i]);
      if (!seen[std::size_t(prod)]) {
        seen[std::size_t(prod)] = 1;
        expvec[std::size_t(prod)] = tuple;
      }
      std::size_t i = 0;
      while (i < ngen && ++tuple[i] == gen_order[i]) tuple[i++] = 0;
      if (i == ngen) break;
    }
  }
  for (int a : units)
    if (!seen[std::size_t(a)])
      throw std::logic_error("build_character_group: generators do not span the units");

  long long lambda = 1;
  for (int o : gen_order) lambda = std::lcm(lambda, (long long)o);
  std::vector<long long> weight(ngen);
  for (std::size_t i = 0; i < ngen; ++i) weight[i] = lambda / gen_order[i];

  // Group relations as integer defect vectors of the chosen representations.
  std::set<std::vector<int>> defects;
  for (int a : units)
    for (int b : units) {
      const auto& va = expvec[std::size_t(a)];
      const auto& vb = expvec[std::size_t(b)];
      const auto& vab = expvec[std::size_t(mul(a, b))];
      std::vector<int> d(ngen);
      bool nonzero = false;
      for (std::size_t i = 0; i < ngen; ++i) {
        d[i] = va[i] + vb[i] - vab[i];
        nonzero |= d[i] != 0;
      }
      if (nonzero) defects.insert(std::move(d));
    }

  // Enumerate assignments chi(g_i) = e^{2 pi i t_i / o_i}; keep those that
  // kill every relation.
  std::vector<std::pair<std::vector<long long>, DirichletCharacter>> found;
  std::vector<int> t(ngen, 0);
  for (;;) {
    bool ok = true;
    for (const auto& d : defects) {
      long long acc = 0;
      for (std::size_t i = 0; i < ngen; ++i)
        acc += (long long)t[i] * weight[i] * d[i];
      if (((acc % lambda) + lambda) % lambda != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      DirichletCharacter chi;
      chi.modulus = q;
      chi.values.assign(std::size_t(q), Complex(0.0, 0.0));
      std::vector<long long> key;
      key.reserve(phi);
      for (int a : units) {
        long long angle = 0;
        const auto& v = expvec[std::size_t(a)];
        for (std::size_t i = 0; i < ngen; ++i)
          angle += (long long)t[i] * weight[i] * v[i];
        angle = ((angle % lambda) + lambda) % lambda;
        key.push_back(angle);
        chi.values[std::size_t(a)] = detail::root_of_unity(angle, lambda);
      }
      found.emplace_back(std::move(key), std::move(chi));
    }
    std::size_t i = 0;
    while (i < ngen && ++t[i] == gen_order[i]) t[i++] = 0;
    if (i == ngen) break;
  }
  if (found.size() != phi)
    throw std::logic_error("build_character_group: enumeration mismatch");

  std::sort(found.begin(), found.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<DirichletCharacter> group;
  group.reserve(found.size());
  for (auto& [key, chi] : found) group.push_back(std::move(chi));
  return group;
}

/// L(s, chi) = q^{-s} sum_{a=1}^{q} chi(a) zeta(s, a/q), assembled from q
/// kernel calls (summation order fixed: ascending a, pairwise-tree
/// reduction).  At s = 1 a principal character has a pole; for non-principal
/// characters the pole parts cancel since sum_a chi(a) = 0, and the
/// assembly subtracts them analytically:
///   L(1, chi) = -(1/q) sum_a chi(a) psi(a/q).
inline ZetaResult l_series(Complex s, const DirichletCharacter& chi,
                           EvalParams params = {}) {
  const int q = chi.modulus;
  if (q < 1 || chi.values.size() != std::size_t(q))
    throw DomainError("l_series: malformed character table");
  const bool at_pole = std::abs(s - Complex(1.0, 0.0)) < detail::pole_guard();
  if (at_pole && chi.is_principal())
    throw PoleError("l_series: principal character at the pole s = 1");

  std::vector<Complex> terms;
  terms.reserve(std::size_t(q));
  double err_sum = 0.0;
  double abs_sum = 0.0;
  if (at_pole) {
    for (int a = 1; a <= q; ++a) {
      const Complex c = chi(a);
      if (c == Complex(0.0, 0.0)) {
        terms.emplace_back(0.0, 0.0);
        continue;
      }
      const auto p = detail::psi_em(double(a) / double(q), params);
      terms.push_back(c * (-p.value));
      err_sum += std::abs(c) * p.err;
      abs_sum += std::abs(c) * std::abs(p.value);
    }
    const double inv_q = 1.0 / double(q);
    const Complex total = detail::pairwise_reduce(std::move(terms));
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * abs_sum;
    return {inv_q * total, inv_q * (err_sum + floor)};
  }

  for (int a = 1; a <= q; ++a) {
    const Complex c = chi(a);
    if (c == Complex(0.0, 0.0)) {
      terms.emplace_back(0.0, 0.0);
      continue;
    }
    const ZetaResult z = hurwitz_zeta(s, double(a) / double(q), params);
    terms.push_back(c * z.value);
    err_sum += std::abs(c) * z.err_estimate;
    abs_sum += std::abs(c) * std::abs(z.value);
  }
  const Complex scale = std::exp(-s * std::log(double(q)));  // q^{-s}
  const Complex total = detail::pairwise_reduce(std::move(terms));
  const double floor = 4.0 * std::numeric_limits<double>::epsilon() * abs_sum;
  return {scale * total, std::abs(scale) * (err_sum + floor)};
}

}  // namespace hurwitz
