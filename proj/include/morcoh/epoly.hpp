#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "numeric.hpp"

namespace morcoh {

/* Polynomials in Z[u, v], used as Hodge–Deligne E-polynomials: the (a, b)
   coefficient aggregates weighted dimensions with the sign of the cohomological
   degree.  Stored sparsely; zero coefficients are never kept. */
class EPolynomial {
 public:
  using Key = std::pair<long long, long long>;  // (a, b) exponents of u, v

  EPolynomial() = default;

  static EPolynomial monomial(long long a, long long b, Int coef = 1) {
    EPolynomial p;
    p.add(a, b, std::move(coef));
    return p;
  }

  static EPolynomial one() { return monomial(0, 0); }

  void add(long long a, long long b, const Int& coef) {
    if (coef == 0) return;
    const Key k{a, b};
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      coeffs_.emplace(k, coef);
    } else {
      it->second += coef;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  const std::map<Key, Int>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Int coefficient(long long a, long long b) const {
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  // Evaluation at u = v = 1, i.e. the compactly-supported Euler characteristic.
  Int value_at_one() const {
    Int s = 0;
    for (const auto& [k, c] : coeffs_) s += c;
    return s;
  }

  EPolynomial& operator+=(const EPolynomial& o) {
    for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
    return *this;
  }
  EPolynomial& operator-=(const EPolynomial& o) {
    for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, -c);
    return *this;
  }
  friend EPolynomial operator+(EPolynomial a, const EPolynomial& b) { return a += b; }
  friend EPolynomial operator-(EPolynomial a, const EPolynomial& b) { return a -= b; }
  friend EPolynomial operator-(const EPolynomial& a) {
    EPolynomial r;
    for (const auto& [k, c] : a.coeffs_) r.coeffs_.emplace(k, -c);
    return r;
  }
  friend EPolynomial operator*(const EPolynomial& a, const EPolynomial& b) {
    EPolynomial r;
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_)
        r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  EPolynomial& operator*=(const EPolynomial& o) { return *this = *this * o; }

  bool operator==(const EPolynomial& o) const { return coeffs_ == o.coeffs_; }

  // Human form: terms in descending (total degree, u-exponent) order, e.g.
  // "u^3 v^3 - u v".  Unit coefficients are suppressed next to a monomial.
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::vector<std::pair<Key, Int>> terms(coeffs_.begin(), coeffs_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
      const long long dx = x.first.first + x.first.second;
      const long long dy = y.first.first + y.first.second;
      if (dx != dy) return dx > dy;
      return x.first > y.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms) {
      const bool neg = c < 0;
      Int mag = neg ? Int(-c) : c;
      if (first) {
        if (neg) out << "-";
        first = false;
      } else {
        out << (neg ? " - " : " + ");
      }
      std::string mono;
      auto pow = [](const char* var, long long e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return var;
        return std::string(var) + "^" + std::to_string(e);
      };
      mono = pow("u", k.first);
      const std::string mv = pow("v", k.second);
      if (!mono.empty() && !mv.empty()) mono += " ";
      mono += mv;
      if (mono.empty()) {
        out << mag.str();
      } else {
        if (mag != 1) out << mag.str() << " ";
        out << mono;
      }
    }
    return out.str();
  }

 private:
  std::map<Key, Int> coeffs_;
};

// Serialized as a sorted sparse list; ordering follows the map (ascending
// lexicographic in (a, b)) so output is canonical.
inline nlohmann::ordered_json to_json(const EPolynomial& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [k, c] : p.coefficients()) {
    nlohmann::ordered_json term;
    term["hodge"] = {k.first, k.second};
    term["coef"] = to_ll(c, "E-polynomial coefficient");
    arr.push_back(std::move(term));
  }
  return arr;
}

}  // namespace morcoh
