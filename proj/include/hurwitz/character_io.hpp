#pragma once

#include <json.hpp>

#include <cmath>
#include <numeric>

#include "hurwitz/lseries.hpp"

namespace hurwitz {

/// Character table export: {"q": int, "values": [[re, im], ...]} with
/// values[a % q] = chi(a).
inline nlohmann::json character_to_json(const DirichletCharacter& chi) {
  nlohmann::json values = nlohmann::json::array();
  for (const Complex& v : chi.values)
    values.push_back(nlohmann::json::array({v.real(), v.imag()}));
  return nlohmann::json{{"q", chi.modulus}, {"values", values}};
}

/// Import with the character invariants re-validated: chi vanishes exactly
/// off the units, chi(1) = 1, complete multiplicativity, and every nonzero
/// value a root of unity of order dividing phi(q).
inline DirichletCharacter character_from_json(const nlohmann::json& j) {
  constexpr double tol = 1e-8;
  if (!j.is_object() || !j.contains("q") || !j.contains("values"))
    throw DomainError("character_from_json: expected {\"q\", \"values\"}");
  const int q = j.at("q").get<int>();
  if (q < 1) throw DomainError("character_from_json: modulus must be positive");
  const auto& values = j.at("values");
  if (!values.is_array() || int(values.size()) != q)
    throw DomainError("character_from_json: values must have length q");

  DirichletCharacter chi;
  chi.modulus = q;
  chi.values.reserve(std::size_t(q));
  for (const auto& entry : values) {
    if (!entry.is_array() || entry.size() != 2)
      throw DomainError("character_from_json: each value must be [re, im]");
    chi.values.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }

  int phi = 0;
  for (int a = 1; a <= q; ++a) {
    const bool unit = std::gcd(a, q) == 1;
    phi += unit;
    const double mag = std::abs(chi(a));
    if (unit && std::abs(mag - 1.0) > tol)
      throw DomainError("character_from_json: unit value off the unit circle");
    if (!unit && mag > tol)
      throw DomainError("character_from_json: nonzero value off the units");
  }
  if (std::abs(chi(1) - 1.0) > tol)
    throw DomainError("character_from_json: chi(1) must be 1");
  for (int a = 1; a <= q; ++a)
    for (int b = a; b <= q; ++b)
      if (std::abs(chi(std::int64_t(a) * b) - chi(a) * chi(b)) > tol)
        throw DomainError("character_from_json: multiplicativity violated");
  for (int a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    Complex p{1.0, 0.0};
    for (int e = 0; e < phi; ++e) p *= chi(a);
    if (std::abs(p - 1.0) > tol * double(phi))
      throw DomainError("character_from_json: value is not a root of unity of order dividing phi(q)");
  }
  return chi;
}

}  // namespace hurwitz
