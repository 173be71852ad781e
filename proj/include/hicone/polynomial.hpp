// Copyright 2026 The hicone Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hicone/error.hpp"
#include "hicone/field.hpp"
#include "hicone/monomial.hpp"

namespace hicone {

template <FieldElement K>
struct Term {
  Monomial monomial;
  K coefficient;
};

/// Sparse multivariate polynomial in x_0..x_{nvars-1} over the field of K.
///
/// Terms are kept sorted in descending grevlex order with no zero
/// coefficients, so two equal polynomials have identical term vectors and
/// iteration order is deterministic. Values are immutable once built.
template <FieldElement K>
class Polynomial {
 public:
  using Field = typename K::field_type;

  Polynomial(int nvars, Field field) : nvars_(nvars), field_(field) { check_nvars(nvars); }

  /// Sums duplicate monomials and drops zeros.
  static Polynomial from_terms(int nvars, Field field, std::vector<Term<K>> terms) {
    Polynomial p(nvars, field);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }
  static Polynomial constant(int nvars, Field field, const K& c) {
    return from_terms(nvars, field, {{Monomial(), c}});
  }
  static Polynomial variable(int nvars, Field field, int index) {
    if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
    return from_terms(nvars, field, {{Monomial::variable(index), field.one()}});
  }
  /// Sum of coefficients[i] * x_i.
  static Polynomial linear_form(Field field, std::span<const K> coefficients) {
    std::vector<Term<K>> t;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      t.push_back({Monomial::variable(static_cast<int>(i)), coefficients[i]});
    }
    return from_terms(static_cast<int>(coefficients.size()), field, std::move(t));
  }

  int nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Term<K>>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }
  /// Common degree of all terms, if any. Unset for the zero polynomial.
  std::optional<int> homogeneous_degree() const noexcept { return homogeneous_degree_; }
  /// The zero polynomial counts as homogeneous.
  bool is_homogeneous() const noexcept { return terms_.empty() || homogeneous_degree_.has_value(); }

  Monomial leading_monomial() const { return nonzero().terms_.front().monomial; }
  const K& leading_coefficient() const { return nonzero().terms_.front().coefficient; }

  K coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term<K>& t, Monomial x) {
      return grevlex_compare(t.monomial, x) > 0;
    });
    if (it != terms_.end() && it->monomial == m) return it->coefficient;
    return field_.zero();
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    std::vector<Term<K>> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        out.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
      }
    }
    return from_terms(nvars_, field_, std::move(out));
  }
  Polynomial operator*(const K& c) const {
    if (c.is_zero()) return Polynomial(nvars_, field_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = t.coefficient * c;
    return r;
  }
  /// Multiplication by a monomial keeps the order, so no re-sort is needed.
  Polynomial times_monomial(Monomial m, const K& c) const {
    if (c.is_zero()) return Polynomial(nvars_, field_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
      t.monomial = t.monomial * m;
      t.coefficient = t.coefficient * c;
    }
    if (r.homogeneous_degree_) *r.homogeneous_degree_ += m.degree();
    return r;
  }
  Polynomial pow(int e) const {
    Polynomial r = constant(nvars_, field_, field_.one());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
          !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
        return false;
      }
    }
    return true;
  }

  /// Formal partial derivative with respect to x_index.
  Polynomial derivative(int index) const {
    if (index < 0 || index >= nvars_) throw DomainError("derivative: variable index out of range");
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      int e = t.monomial.exponent(index);
      if (e == 0) continue;
      out.push_back({Monomial::from_packed(t.monomial.packed() - (1ull << (8 * index))),
                     t.coefficient * field_(e)});
    }
    return from_terms(nvars_, field_, std::move(out));
  }

  K evaluate(std::span<const K> point) const {
    if (static_cast<int>(point.size()) != nvars_) {
      throw DomainError("evaluate: point has " + std::to_string(point.size()) +
                        " coordinates, expected " + std::to_string(nvars_));
    }
    auto powers = power_table(point);
    K acc = field_.zero();
    for (const auto& t : terms_) {
      K v = t.coefficient;
      for (int i = 0; i < nvars_; ++i) {
        int e = t.monomial.exponent(i);
        if (e != 0) v = v * powers[i][e];
      }
      acc += v;
    }
    return acc;
  }

  /// Substitutes images[i] for x_i. Images must share a variable count.
  Polynomial substitute(std::span<const Polynomial> images) const {
    if (static_cast<int>(images.size()) != nvars_) {
      throw DomainError("substitute: wrong number of images");
    }
    if (images.empty()) return *this;
    std::vector<const Term<K>*> all;
    for (const auto& t : terms_) all.push_back(&t);
    return substitute_rec(all, 0, images);
  }

 private:
  void check_nvars(int n) const {
    if (n < 0 || n > kMaxVars) {
      throw DomainError("number of variables must be in [0, " + std::to_string(kMaxVars) + "]");
    }
  }
  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw DomainError("polynomials live in different rings");
  }
  const Polynomial& nonzero() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return *this;
  }

  void normalize() {
    for (const auto& t : terms_) {
      for (int i = nvars_; i < kMaxVars; ++i) {
        if (t.monomial.exponent(i) != 0) throw DomainError("monomial uses a variable outside the ring");
      }
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term<K>& a, const Term<K>& b) {
      return grevlex_compare(a.monomial, b.monomial) > 0;
    });
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coefficient += t.coefficient;
      } else {
        if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
    terms_ = std::move(out);
    refresh_degree();
  }

  void refresh_degree() {
    homogeneous_degree_.reset();
    if (terms_.empty()) return;
    int d = terms_.front().monomial.degree();
    for (const auto& t : terms_) {
      if (t.monomial.degree() != d) return;
    }
    homogeneous_degree_ = d;
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_compatible(o);
    Polynomial r(nvars_, field_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c = i == terms_.size()     ? -1
              : j == o.terms_.size() ? 1
                                     : grevlex_compare(terms_[i].monomial, o.terms_[j].monomial);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? -t.coefficient : t.coefficient});
      } else {
        K v = subtract ? terms_[i].coefficient - o.terms_[j].coefficient
                       : terms_[i].coefficient + o.terms_[j].coefficient;
        if (!v.is_zero()) r.terms_.push_back({terms_[i].monomial, v});
        ++i;
        ++j;
      }
    }
    r.refresh_degree();
    return r;
  }

  std::vector<std::vector<K>> power_table(std::span<const K> point) const {
    std::vector<int> maxe(nvars_, 0);
    for (const auto& t : terms_) {
      for (int i = 0; i < nvars_; ++i) maxe[i] = std::max(maxe[i], t.monomial.exponent(i));
    }
    std::vector<std::vector<K>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      powers[i].push_back(field_.one());
      for (int e = 1; e <= maxe[i]; ++e) powers[i].push_back(powers[i].back() * point[i]);
    }
    return powers;
  }

  // Horner scheme in x_var over the terms in `group`, recursing on x_{var+1}.
  Polynomial substitute_rec(const std::vector<const Term<K>*>& group, int var,
                            std::span<const Polynomial> images) const {
    const int target_nvars = images[0].nvars();
    if (var == nvars_) {
      K c = field_.zero();
      for (const auto* t : group) c += t->coefficient;
      return constant(target_nvars, field_, c);
    }
    int maxe = 0;
    for (const auto* t : group) maxe = std::max(maxe, t->monomial.exponent(var));
    std::vector<std::vector<const Term<K>*>> by_exp(maxe + 1);
    for (const auto* t : group) by_exp[t->monomial.exponent(var)].push_back(t);
    Polynomial acc(target_nvars, field_);
    for (int e = maxe; e >= 0; --e) {
      if (e != maxe) acc = acc * images[var];
      if (!by_exp[e].empty()) acc = acc + substitute_rec(by_exp[e], var + 1, images);
    }
    return acc;
  }

  int nvars_;
  Field field_;
  std::vector<Term<K>> terms_;
  std::optional<int> homogeneous_degree_;
};

/// Normalized homogeneous coordinates: the first nonzero coordinate is 1.
template <FieldElement K>
class ProjPoint {
 public:
  /// Throws DomainError on the zero vector.
  explicit ProjPoint(std::vector<K> coords) : coords_(std::move(coords)) {
    auto it = std::find_if(coords_.begin(), coords_.end(), [](const K& c) { return !c.is_zero(); });
    if (it == coords_.end()) throw DomainError("projective point with all coordinates zero");
    K inv = it->inverse();
    for (auto& c : coords_) c = c * inv;
  }

  const std::vector<K>& coords() const noexcept { return coords_; }
  int size() const noexcept { return static_cast<int>(coords_.size()); }
  const K& operator[](int i) const { return coords_.at(i); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<K> coords_;
};

/// True when u and v are proportional (as vectors over the field).
template <FieldElement K>
bool proportional(std::span<const K> u, std::span<const K> v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
    }
  }
  return true;
}

/// Coefficients c_0..c_d of t^k in F(p + t v), where d = deg F. Computed by
/// expanding each monomial along the line.
template <FieldElement K>
std::vector<K> restrict_to_line(const Polynomial<K>& f, std::span<const K> p, std::span<const K> v) {
  const int n = f.nvars();
  if (static_cast<int>(p.size()) != n || static_cast<int>(v.size()) != n) {
    throw DomainError("restrict_to_line: coordinate vectors must have nvars entries");
  }
  bool v_zero = std::all_of(v.begin(), v.end(), [](const K& c) { return c.is_zero(); });
  if (v_zero || proportional(p, v)) {
    throw DomainError("restrict_to_line: direction is proportional to the base point");
  }
  const auto& field = f.field();
  const int d = std::max(f.degree(), 0);
  // powers[i][e] = (p_i + t v_i)^e as a coefficient vector in t.
  std::vector<std::vector<std::vector<K>>> powers(n);
  for (int i = 0; i < n; ++i) {
    int maxe = 0;
    for (const auto& t : f.terms()) maxe = std::max(maxe, t.monomial.exponent(i));
    powers[i].push_back({field.one()});
    for (int e = 1; e <= maxe; ++e) {
      const auto& prev = powers[i].back();
      std::vector<K> next(prev.size() + 1, field.zero());
      for (std::size_t k = 0; k < prev.size(); ++k) {
        next[k] += prev[k] * p[i];
        next[k + 1] += prev[k] * v[i];
      }
      powers[i].push_back(std::move(next));
    }
  }
  std::vector<K> out(d + 1, field.zero());
  for (const auto& term : f.terms()) {
    std::vector<K> acc{term.coefficient};
    for (int i = 0; i < n; ++i) {
      int e = term.monomial.exponent(i);
      if (e == 0) continue;
      const auto& pw = powers[i][e];
      std::vector<K> next(acc.size() + pw.size() - 1, field.zero());
      for (std::size_t a = 0; a < acc.size(); ++a) {
        if (acc[a].is_zero()) continue;
        for (std::size_t b = 0; b < pw.size(); ++b) next[a + b] += acc[a] * pw[b];
      }
      acc = std::move(next);
    }
    for (std::size_t k = 0; k < acc.size() && k < out.size(); ++k) out[k] += acc[k];
  }
  return out;
}

/// Parses the term grammar `3*x0^2*x1 - x2^3` (see README). Integer literals
/// are reduced into the field; `a/b` literals are accepted as a convenience.
template <FieldElement K>
Polynomial<K> parse_poly(std::string_view text, int nvars, typename K::field_type field);

/// Inverse of parse_poly. Coefficients of F_q are printed as symmetric
/// representatives so that `-x2^3` round-trips as written.
template <FieldElement K>
std::string render(const Polynomial<K>& p);

extern template Polynomial<Fp> parse_poly<Fp>(std::string_view, int, PrimeField);
extern template Polynomial<Rational> parse_poly<Rational>(std::string_view, int, RationalField);
extern template std::string render<Fp>(const Polynomial<Fp>&);
extern template std::string render<Rational>(const Polynomial<Rational>&);

using PolyFp = Polynomial<Fp>;
using PolyQ = Polynomial<Rational>;
using PointFp = ProjPoint<Fp>;

/// parse_poly over F_modulus. A zero or composite modulus is a DomainError.
PolyFp parse_poly(std::string_view text, int nvars, std::uint32_t modulus);

}  // namespace hicone
