// JSON serialization of polynomials, harmonic bases and Gram matrices.
#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "qharm/harmonics.hpp"
#include "qharm/linalg.hpp"

namespace qharm {

using json = nlohmann::ordered_json;

/// Malformed input; the message names the offending line or field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json exps_to_json(const Exps& e, int n) {
  json a = json::array();
  for (int i = 0; i < n; ++i) a.push_back(static_cast<int>(e[i]));
  return a;
}

inline json poly_to_json(const NCPoly& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms())
    terms.push_back(json{{"z", exps_to_json(mono.z, p.n())}, {"w", exps_to_json(mono.w, p.n())}, {"coeff", c.to_string()}});
  return json{{"n", p.n()}, {"order", order_name(p.order())}, {"terms", terms}};
}

namespace detail {

inline const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

inline Exps exps_from_json(const json& a, int n, const std::string& where) {
  if (!a.is_array()) throw InputError(where + ": expected an array of " + std::to_string(n) + " integers");
  if (static_cast<int>(a.size()) != n)
    throw InputError(where + ": expected " + std::to_string(n) + " exponents, got " + std::to_string(a.size()));
  Exps e{};
  for (int i = 0; i < n; ++i) {
    const json& x = a[i];
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > 255)
      throw InputError(where + "[" + std::to_string(i) + "]: expected an integer in [0, 255]");
    e[i] = static_cast<std::uint8_t>(x.get<int>());
  }
  return e;
}

}  // namespace detail

inline NCPoly poly_from_json(const json& j) {
  const json& nj = detail::require(j, "n", "polynomial");
  if (!nj.is_number_integer()) throw InputError("polynomial.n: expected an integer");
  const int n = nj.get<int>();
  if (n < 1 || n > kMaxRank) throw InputError("polynomial.n: rank must be in [1, " + std::to_string(kMaxRank) + "]");
  Order order = Order::ZFirst;
  if (auto it = j.find("order"); it != j.end()) {
    if (*it == "z-first")
      order = Order::ZFirst;
    else if (*it == "w-first")
      order = Order::WFirst;
    else
      throw InputError("polynomial.order: expected \"z-first\" or \"w-first\"");
  }
  const json& terms = detail::require(j, "terms", "polynomial");
  if (!terms.is_array()) throw InputError("polynomial.terms: expected an array");
  NCPoly p(n, order);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string where = "polynomial.terms[" + std::to_string(k) + "]";
    const json& t = terms[k];
    Monomial mono{detail::exps_from_json(detail::require(t, "z", where), n, where + ".z"),
                  detail::exps_from_json(detail::require(t, "w", where), n, where + ".w")};
    const json& cj = detail::require(t, "coeff", where);
    ScalarQ c;
    if (cj.is_number_integer())
      c = ScalarQ(cj.get<int>());
    else if (cj.is_string()) {
      try {
        c = parse_scalar(cj.get<std::string>());
      } catch (const std::exception& e) {
        throw InputError(where + ".coeff: " + e.what());
      }
    } else
      throw InputError(where + ".coeff: expected a string");
    p.add_term(mono, c);
  }
  return p;
}

/// Parses polynomial JSON text; syntax errors report line and column.
inline NCPoly parse_poly_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return poly_from_json(j);
}

inline json label_to_json(const HarmonicLabel& l) {
  json ms = json::array(), mps = json::array();
  for (int j = 2; j <= l.n; ++j) {
    ms.push_back(l.ms[j]);
    mps.push_back(l.mps[j]);
  }
  return json{{"n", l.n}, {"m", ms}, {"mprime", mps}, {"m1", l.m1}, {"text", l.to_string()}};
}

/// [{label, poly, norm2}] for the Xi basis of H_{m,m'}.
inline json basis_to_json(int n, int m, int mp) {
  json out = json::array();
  for (const auto& [label, p] : xi_basis(n, m, mp))
    out.push_back(json{{"label", label_to_json(label)}, {"poly", poly_to_json(p)}, {"norm2", xi_norm_factors(label).to_string()}});
  return out;
}

inline json matrix_to_json(const Matrix& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) r.push_back(g.at(i, j).to_string());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace qharm
