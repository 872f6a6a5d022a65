#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "numeric.hpp"

namespace morcoh {

// Element of a presented ring: sparse rational coordinates in the ring's
// global basis order.  Interpretation (names, products) lives in the
// presentation; elements are plain data.
struct RingElement {
  std::map<int, Rat> coords;

  bool is_zero() const { return coords.empty(); }
  void set(int idx, const Rat& c) {
    if (c == 0)
      coords.erase(idx);
    else
      coords[idx] = c;
  }
  void accumulate(int idx, const Rat& c) {
    auto it = coords.find(idx);
    if (it == coords.end()) {
      if (c != 0) coords.emplace(idx, c);
    } else {
      it->second += c;
      if (it->second == 0) coords.erase(it);
    }
  }
  bool operator==(const RingElement&) const = default;
};

/* Finite-dimensional graded commutative ring given by a basis in each
   codimension 0..n, structure constants, and a degree functional on the top
   graded piece.  Construction validates the presentation outright:
   unit laws, symmetry, grading additivity of products, and associativity on
   all basis triples.  After that, arithmetic never re-checks. */
class RingPresentation {
 public:
  struct MultTerm {
    std::string name;
    Rat coef;
  };
  struct MultEntry {
    std::string lhs, rhs;
    std::vector<MultTerm> out;
  };

  static RingPresentation create(long long n,
                                 const std::vector<std::vector<std::string>>& basis,
                                 const std::vector<MultEntry>& mult,
                                 const std::vector<MultTerm>& degree) {
    RingPresentation R;
    if (n < 0) throw input_error("ring presentation: negative dimension");
    R.n_ = n;
    if (static_cast<long long>(basis.size()) != n + 1)
      throw input_error("ring presentation: need basis lists for codimensions 0.." +
                        std::to_string(n));
    if (basis[0].size() != 1)
      throw input_error("ring presentation: codimension 0 must hold exactly the unit");
    for (long long c = 0; c <= n; ++c) {
      if (basis[c].empty())
        throw input_error("ring presentation: empty basis in codimension " +
                          std::to_string(c));
      for (const auto& name : basis[c]) {
        if (name.empty()) throw input_error("ring presentation: empty basis name");
        if (!R.index_.emplace(name, static_cast<int>(R.names_.size())).second)
          throw input_error("ring presentation: duplicate basis name " + name);
        R.names_.push_back(name);
        R.codim_.push_back(static_cast<int>(c));
      }
    }
    const int sz = static_cast<int>(R.names_.size());
    R.prod_.assign(sz, std::vector<std::map<int, Rat>>(sz));
    std::vector<std::vector<bool>> given(sz, std::vector<bool>(sz, false));

    for (const auto& e : mult) {
      const int i = R.index_of(e.lhs);
      const int j = R.index_of(e.rhs);
      std::map<int, Rat> out;
      for (const auto& t : e.out) {
        const int k = R.index_of(t.name);
        if (R.codim_[k] != R.codim_[i] + R.codim_[j])
          throw input_error("ring presentation: product " + e.lhs + " * " + e.rhs +
                            " lands outside codimension " +
                            std::to_string(R.codim_[i] + R.codim_[j]));
        if (t.coef != 0) {
          auto [it, fresh] = out.emplace(k, t.coef);
          if (!fresh)
            throw input_error("ring presentation: repeated output class " + t.name);
        }
      }
      auto install = [&](int a, int b) {
        if (given[a][b] && R.prod_[a][b] != out)
          throw input_error("ring presentation: conflicting products for " + e.lhs +
                            " * " + e.rhs);
        R.prod_[a][b] = out;
        given[a][b] = true;
      };
      install(i, j);
      install(j, i);
    }

    // Unit rows are implied; explicit ones must agree with the identity law.
    for (int i = 0; i < sz; ++i) {
      std::map<int, Rat> ident{{i, Rat(1)}};
      if (given[0][i]) {
        if (R.prod_[0][i] != ident)
          throw input_error("ring presentation: unit law violated at " + R.names_[i]);
      } else {
        R.prod_[0][i] = ident;
        R.prod_[i][0] = ident;
        given[0][i] = given[i][0] = true;
      }
    }
    // Unspecified products are zero — legitimate only when the target
    // codimension is out of range; otherwise demand an explicit entry, since
    // silence is indistinguishable from an omission.
    for (int i = 1; i < sz; ++i)
      for (int j = 1; j < sz; ++j)
        if (!given[i][j] && R.codim_[i] + R.codim_[j] <= n)
          throw input_error("ring presentation: missing product " + R.names_[i] +
                            " * " + R.names_[j]);

    for (const auto& t : degree) {
      const int k = R.index_of(t.name);
      if (R.codim_[k] != n)
        throw input_error("ring presentation: degree functional touches non-top class " +
                          t.name);
      if (t.coef == 0) continue;
      if (!R.degree_.emplace(k, t.coef).second)
        throw input_error("ring presentation: repeated degree entry for " + t.name);
    }
    if (R.degree_.empty())
      throw input_error("ring presentation: degree functional is empty");

    R.check_associativity();
    return R;
  }

  long long dim() const { return n_; }
  int basis_size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int idx) const { return names_[idx]; }
  int codim(int idx) const { return codim_[idx]; }
  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw input_error("ring presentation: unknown basis class " + name);
    return it->second;
  }
  bool has_class(const std::string& name) const { return index_.count(name) > 0; }

  RingElement unit() const {
    RingElement e;
    e.set(0, Rat(1));
    return e;
  }
  RingElement basis_element(const std::string& name) const {
    RingElement e;
    e.set(index_of(name), Rat(1));
    return e;
  }

  const std::map<int, Rat>& basis_product(int i, int j) const { return prod_[i][j]; }
  const std::map<int, Rat>& degree_functional() const { return degree_; }

 private:
  RingPresentation() = default;

  void check_associativity() const;

  long long n_ = 0;
  std::vector<std::string> names_;  // codimension-ascending global order
  std::vector<int> codim_;
  std::map<std::string, int> index_;
  std::vector<std::vector<std::map<int, Rat>>> prod_;
  std::map<int, Rat> degree_;
};

inline RingElement multiply(const RingPresentation& R, const RingElement& x,
                            const RingElement& y) {
  RingElement out;
  for (const auto& [i, ci] : x.coords)
    for (const auto& [j, cj] : y.coords)
      for (const auto& [k, ck] : R.basis_product(i, j))
        out.accumulate(k, ci * cj * ck);
  return out;
}

inline RingElement add(const RingElement& x, const RingElement& y) {
  RingElement out = x;
  for (const auto& [i, c] : y.coords) out.accumulate(i, c);
  return out;
}

inline RingElement scale(const RingElement& x, const Rat& c) {
  RingElement out;
  if (c == 0) return out;
  for (const auto& [i, v] : x.coords) out.set(i, v * c);
  return out;
}

// Degree functional: pairs the top-codimension coordinates against the
// fundamental class; lower-codimension coordinates integrate to zero.
inline Rat integrate(const RingPresentation& R, const RingElement& x) {
  Rat s = 0;
  for (const auto& [k, c] : R.degree_functional()) {
    auto it = x.coords.find(k);
    if (it != x.coords.end()) s += it->second * c;
  }
  return s;
}

inline void RingPresentation::check_associativity() const {
  const int sz = basis_size();
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j)
      for (int k = 0; k < sz; ++k) {
        RingElement ei = basis_element(names_[i]);
        RingElement ej = basis_element(names_[j]);
        RingElement ek = basis_element(names_[k]);
        if (!(multiply(*this, multiply(*this, ei, ej), ek) ==
              multiply(*this, ei, multiply(*this, ej, ek))))
          throw input_error("ring presentation: multiplication not associative at (" +
                            names_[i] + ", " + names_[j] + ", " + names_[k] + ")");
      }
}

/* exp of a codimension-1 class, truncated by the grading:
   ch(L) = sum_{k <= n} c1^k / k!.  The input must be homogeneous of
   codimension 1 (zero is allowed and gives the unit). */
inline RingElement chern_character(const RingPresentation& R, const RingElement& c1) {
  for (const auto& [i, c] : c1.coords)
    if (R.codim(i) != 1)
      throw input_error("chern_character: class is not homogeneous of codimension 1");
  RingElement result = R.unit();
  RingElement power = R.unit();
  Int kfact = 1;
  for (long long k = 1; k <= R.dim(); ++k) {
    power = multiply(R, power, c1);
    if (power.is_zero()) break;
    kfact *= k;
    result = add(result, scale(power, Rat(1, kfact)));
  }
  return result;
}

// integral of ch(L) * td — the raw rational value, no integrality or sign
// policy.  Callers that promise a section count layer checks on top.
inline Rat hrr_integral(const RingPresentation& R, const RingElement& c1,
                        const RingElement& todd) {
  return integrate(R, multiply(R, chern_character(R, c1), todd));
}

// Euler characteristic chi(L): must come out an integer or the ring/Todd data
// cannot describe a smooth projective variety.
inline Int hrr_euler_characteristic(const RingPresentation& R, const RingElement& c1,
                                    const RingElement& todd) {
  const Rat chi = hrr_integral(R, c1, todd);
  if (boost::multiprecision::denominator(chi) != 1)
    throw math_error("inconsistent ring/Todd data");
  return boost::multiprecision::numerator(chi);
}

// Section count h^0(L) for a class with vanishing higher cohomology.  The
// acyclicity itself is the caller's assertion; what we can check is that the
// resulting count is a nonnegative integer.
inline Int hrr_sections(const RingPresentation& R, const RingElement& c1,
                        const RingElement& todd) {
  const Int chi = hrr_euler_characteristic(R, c1, todd);
  if (chi < 0) throw math_error("class not acyclic/effective");
  return chi;
}

// ---------------------------------------------------------------------------
// Presets

namespace detail {

// Coefficients t_0..t_n of the Todd series (x / (1 - e^{-x}))^{n+1} mod
// x^{n+1}, over exact rationals: invert sum_k (-1)^k x^k / (k+1)! and raise
// to the (n+1)-st power.
inline std::vector<Rat> todd_series(long long n) {
  std::vector<Rat> a(n + 1);
  Int fact = 1;  // (k+1)!
  for (long long k = 0; k <= n; ++k) {
    fact *= k + 1;
    a[k] = Rat(Int((k % 2 == 0) ? 1 : -1), fact);
  }
  std::vector<Rat> inv(n + 1);
  inv[0] = 1;  // a[0] = 1
  for (long long k = 1; k <= n; ++k) {
    Rat s = 0;
    for (long long i = 1; i <= k; ++i) s += a[i] * inv[k - i];
    inv[k] = -s;
  }
  std::vector<Rat> out(n + 1);
  out[0] = 1;
  for (long long e = 0; e < n + 1; ++e) {
    std::vector<Rat> next(n + 1);
    for (long long i = 0; i <= n; ++i) {
      if (out[i] == 0) continue;
      for (long long j = 0; i + j <= n; ++j) next[i + j] += out[i] * inv[j];
    }
    out = std::move(next);
  }
  return out;
}

inline std::string power_name(const std::string& var, long long e) {
  if (e == 0) return "1";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace detail

struct RingWithTodd {
  RingPresentation ring;
  RingElement todd;
};

// P^n: basis 1, h, ..., h^n with h^i h^j = h^{i+j}; Todd class is the
// truncated series in h.
inline RingWithTodd preset_projective_space(long long n) {
  if (n < 1) throw input_error("projective_space preset: dimension must be >= 1");
  std::vector<std::vector<std::string>> basis(n + 1);
  for (long long c = 0; c <= n; ++c) basis[c] = {detail::power_name("h", c)};
  std::vector<RingPresentation::MultEntry> mult;
  for (long long i = 1; i <= n; ++i)
    for (long long j = i; j <= n; ++j) {
      RingPresentation::MultEntry e;
      e.lhs = detail::power_name("h", i);
      e.rhs = detail::power_name("h", j);
      if (i + j <= n) e.out.push_back({detail::power_name("h", i + j), Rat(1)});
      mult.push_back(std::move(e));
    }
  RingPresentation R = RingPresentation::create(
      n, basis, mult, {{detail::power_name("h", n), Rat(1)}});
  const auto td = detail::todd_series(n);
  RingElement todd;
  for (long long k = 0; k <= n; ++k)
    todd.set(R.index_of(detail::power_name("h", k)), td[k]);
  return {std::move(R), std::move(todd)};
}

// Smooth projective curve of genus g: basis 1, pt; Todd = 1 + (1 - g) pt.
inline RingWithTodd preset_curve(long long genus) {
  if (genus < 0) throw input_error("curve preset: negative genus");
  RingPresentation R = RingPresentation::create(
      1, {{"1"}, {"pt"}}, {{"pt", "pt", {}}}, {{"pt", Rat(1)}});
  RingElement todd;
  todd.set(R.index_of("1"), Rat(1));
  todd.set(R.index_of("pt"), Rat(1 - genus));
  return {std::move(R), std::move(todd)};
}

// P^a x P^b: monomial basis h1^i h2^j, i <= a, j <= b; Todd multiplies
// across the factors.
inline RingWithTodd preset_product_of_projective_spaces(long long a, long long b) {
  if (a < 1 || b < 1)
    throw input_error("product preset: factor dimensions must be >= 1");
  const long long n = a + b;
  auto mono = [&](long long i, long long j) -> std::string {
    if (i == 0 && j == 0) return "1";
    std::string s;
    if (i > 0) s = detail::power_name("h1", i);
    if (j > 0) {
      if (!s.empty()) s += "*";
      s += detail::power_name("h2", j);
    }
    return s;
  };
  std::vector<std::vector<std::string>> basis(n + 1);
  for (long long i = 0; i <= a; ++i)
    for (long long j = 0; j <= b; ++j) basis[i + j].push_back(mono(i, j));
  std::vector<RingPresentation::MultEntry> mult;
  std::vector<std::pair<long long, long long>> monos;
  for (long long i = 0; i <= a; ++i)
    for (long long j = 0; j <= b; ++j)
      if (i + j > 0) monos.push_back({i, j});
  for (size_t x = 0; x < monos.size(); ++x)
    for (size_t y = x; y < monos.size(); ++y) {
      const auto [i1, j1] = monos[x];
      const auto [i2, j2] = monos[y];
      RingPresentation::MultEntry e;
      e.lhs = mono(i1, j1);
      e.rhs = mono(i2, j2);
      if (i1 + i2 <= a && j1 + j2 <= b)
        e.out.push_back({mono(i1 + i2, j1 + j2), Rat(1)});
      mult.push_back(std::move(e));
    }
  RingPresentation R =
      RingPresentation::create(n, basis, mult, {{mono(a, b), Rat(1)}});
  const auto ta = detail::todd_series(a);
  const auto tb = detail::todd_series(b);
  RingElement todd;
  for (long long i = 0; i <= a; ++i)
    for (long long j = 0; j <= b; ++j)
      todd.accumulate(R.index_of(mono(i, j)), ta[i] * tb[j]);
  return {std::move(R), std::move(todd)};
}

// ---------------------------------------------------------------------------
// JSON forms

/* Presentation: {"dim", "basis": [[names by codim]], "mult": [{"lhs","rhs",
   "out":[{"name","coef"}]}], "degree": [{"name","coef"}]}.  Coefficients are
   decimal-free strings ("3", "-1/2").  Serialization emits each unordered
   pair of non-unit classes exactly once (lhs index <= rhs index), including
   explicit zero products, so round-trips are canonical. */
inline nlohmann::ordered_json to_json(const RingPresentation& R) {
  nlohmann::ordered_json j;
  j["dim"] = R.dim();
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (long long c = 0; c <= R.dim(); ++c) {
    nlohmann::ordered_json level = nlohmann::ordered_json::array();
    for (int i = 0; i < R.basis_size(); ++i)
      if (R.codim(i) == c) level.push_back(R.name(i));
    basis.push_back(std::move(level));
  }
  j["basis"] = std::move(basis);
  nlohmann::ordered_json mult = nlohmann::ordered_json::array();
  for (int i = 1; i < R.basis_size(); ++i)
    for (int k = i; k < R.basis_size(); ++k) {
      if (R.codim(i) + R.codim(k) > R.dim()) continue;
      nlohmann::ordered_json e;
      e["lhs"] = R.name(i);
      e["rhs"] = R.name(k);
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& [idx, c] : R.basis_product(i, k)) {
        nlohmann::ordered_json t;
        t["name"] = R.name(idx);
        t["coef"] = rat_to_string(c);
        out.push_back(std::move(t));
      }
      e["out"] = std::move(out);
      mult.push_back(std::move(e));
    }
  j["mult"] = std::move(mult);
  nlohmann::ordered_json deg = nlohmann::ordered_json::array();
  for (const auto& [idx, c] : R.degree_functional()) {
    nlohmann::ordered_json t;
    t["name"] = R.name(idx);
    t["coef"] = rat_to_string(c);
    deg.push_back(std::move(t));
  }
  j["degree"] = std::move(deg);
  return j;
}

namespace detail {

inline Rat coef_from_json(const nlohmann::json& c) {
  if (c.is_number_integer()) return Rat(c.get<long long>());
  if (c.is_string()) return rat_from_string(c.get<std::string>());
  throw input_error("coefficient must be an integer or a \"p/q\" string");
}

inline std::vector<RingPresentation::MultTerm> terms_from_json(const nlohmann::json& arr,
                                                               const char* what) {
  if (!arr.is_array()) throw input_error(std::string(what) + ": expected an array");
  std::vector<RingPresentation::MultTerm> out;
  for (const auto& t : arr) {
    if (!t.is_object() || !t.contains("name") || !t.contains("coef"))
      throw input_error(std::string(what) + ": entry needs name and coef");
    out.push_back({t["name"].get<std::string>(), coef_from_json(t["coef"])});
  }
  return out;
}

}  // namespace detail

inline RingPresentation ring_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("basis") ||
      !j.contains("mult") || !j.contains("degree"))
    throw input_error("ring presentation needs dim, basis, mult, degree");
  if (!j["dim"].is_number_integer())
    throw input_error("ring presentation: dim must be an integer");
  const long long n = j["dim"].get<long long>();
  if (!j["basis"].is_array())
    throw input_error("ring presentation: basis must be an array of arrays");
  std::vector<std::vector<std::string>> basis;
  for (const auto& level : j["basis"]) {
    if (!level.is_array()) throw input_error("ring presentation: basis level must be an array");
    basis.push_back(level.get<std::vector<std::string>>());
  }
  if (!j["mult"].is_array()) throw input_error("ring presentation: mult must be an array");
  std::vector<RingPresentation::MultEntry> mult;
  for (const auto& e : j["mult"]) {
    if (!e.is_object() || !e.contains("lhs") || !e.contains("rhs") || !e.contains("out"))
      throw input_error("ring presentation: mult entry needs lhs, rhs, out");
    RingPresentation::MultEntry m;
    m.lhs = e["lhs"].get<std::string>();
    m.rhs = e["rhs"].get<std::string>();
    m.out = detail::terms_from_json(e["out"], "mult out");
    mult.push_back(std::move(m));
  }
  return RingPresentation::create(n, basis, mult,
                                  detail::terms_from_json(j["degree"], "degree"));
}

// Elements: [{"name", "coef"}] in basis order.
inline nlohmann::ordered_json element_to_json(const RingPresentation& R,
                                              const RingElement& x) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [i, c] : x.coords) {
    nlohmann::ordered_json t;
    t["name"] = R.name(i);
    t["coef"] = rat_to_string(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

inline RingElement element_from_json(const RingPresentation& R, const nlohmann::json& j) {
  RingElement x;
  for (const auto& t : detail::terms_from_json(j, "ring element"))
    x.accumulate(R.index_of(t.name), t.coef);
  return x;
}

}  // namespace morcoh
