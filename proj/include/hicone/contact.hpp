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

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hicone/grobner.hpp"
#include "hicone/linalg.hpp"
#include "hicone/polynomial.hpp"

namespace hicone {

/// X = V(F) in P^{n+1}; F has n+2 variables.
template <FieldElement K>
class Hypersurface {
 public:
  using Field = typename K::field_type;

  /// Throws DomainError unless F is a nonzero form of degree >= 2 in at least
  /// three variables and the characteristic is 0 or exceeds the degree.
  explicit Hypersurface(Polynomial<K> f);

  const Polynomial<K>& F() const noexcept { return f_; }
  const Field& field() const noexcept { return f_.field(); }
  int n() const noexcept { return f_.nvars() - 2; }
  int nvars() const noexcept { return f_.nvars(); }
  int d() const noexcept { return d_; }
  /// Partial derivatives, computed once.
  const std::vector<Polynomial<K>>& gradient() const noexcept { return gradient_; }

  bool contains(const ProjPoint<K>& p) const;
  /// True when p lies on X and the gradient does not vanish there.
  bool is_smooth_at(const ProjPoint<K>& p) const;
  std::vector<K> gradient_at(const ProjPoint<K>& p) const;

 private:
  Polynomial<K> f_;
  int d_;
  std::vector<Polynomial<K>> gradient_;
};

/// G_0, ..., G_d: G_k = sum over |i| = k of k!/i! x^i d^iF(p), so that
/// F(p + t x) = sum_k t^k G_k(x) / k!. p need not lie on X.
template <FieldElement K>
std::vector<Polynomial<K>> taylor_forms(const Hypersurface<K>& x, const ProjPoint<K>& p);

/// G_k for 1 <= k <= d. Throws DomainError when k is out of range.
template <FieldElement K>
Polynomial<K> taylor_form(const Hypersurface<K>& x, const ProjPoint<K>& p, int k);

/// G_1. Throws DomainError if p is not on X and SingularPointError if the
/// gradient vanishes at p.
template <FieldElement K>
Polynomial<K> tangent_hyperplane(const Hypersurface<K>& x, const ProjPoint<K>& p);

/// The cone of lines meeting X at p with contact order at least h.
template <FieldElement K>
struct ConeIdeal {
  ProjPoint<K> vertex;
  int h;
  /// G_1, ..., G_{h-1}.
  std::vector<Polynomial<K>> generators;

  Ideal<K> ideal() const {
    return Ideal<K>(generators.front().nvars(), generators.front().field(), generators);
  }
};

/// Throws DomainError if p is not on X or h is outside [2, d].
template <FieldElement K>
ConeIdeal<K> cone_ideal(const Hypersurface<K>& x, const ProjPoint<K>& p, int h);

/// Order of vanishing at t = 0 of F(p + t v), or infinite when the line lies
/// in X.
class ContactOrder {
 public:
  static ContactOrder finite(int order) { return ContactOrder(Kind::kFinite, order); }
  static ContactOrder infinite() { return ContactOrder(Kind::kInfinite, 0); }

  bool is_infinite() const noexcept { return kind_ == Kind::kInfinite; }
  /// Throws DomainError for an infinite order.
  int value() const;
  bool at_least(int h) const noexcept { return is_infinite() || order_ >= h; }
  std::string to_string() const { return is_infinite() ? "INFINITE" : std::to_string(order_); }

  friend bool operator==(const ContactOrder&, const ContactOrder&) = default;

 private:
  enum class Kind { kFinite, kInfinite };
  ContactOrder(Kind kind, int order) : kind_(kind), order_(order) {}

  Kind kind_;
  int order_;
};

/// Contact order of the line through p in direction v. Throws DomainError
/// when p is not on X or v is proportional to p.
template <FieldElement K>
ContactOrder line_contact_order(const Hypersurface<K>& x, const ProjPoint<K>& p,
                                const std::vector<K>& v);

/// F(M y) = c y_{n+1} y_0^{d-1} + sum_{i>=2} F_i y_0^{d-i}, with M e_0 = p.
template <FieldElement K>
struct NormalizedChart {
  Polynomial<K> f_norm;
  Matrix<K> transform;
  K c;
  /// parts[i] = F_i for 0 <= i <= d; parts[0] = 0 and parts[1] = c y_{n+1}.
  std::vector<Polynomial<K>> parts;
};

/// Throws SingularPointError if the gradient vanishes at p and DomainError if
/// p is not on X.
template <FieldElement K>
NormalizedChart<K> normalize_chart(const Hypersurface<K>& x, const ProjPoint<K>& p);

/// The right-hand side of the explicit expression for G_k in a normalized
/// chart, assembled from c and the parts F_i.
template <FieldElement K>
Polynomial<K> chart_taylor_form(const NormalizedChart<K>& chart, int d, int k);

/// Multiplicity at p of the tangent section X cap T_pX: the least k >= 2 with
/// F_k not vanishing on y_{n+1} = 0. Unset when T_pX lies in X.
template <FieldElement K>
std::optional<int> tangent_section_multiplicity(const Hypersurface<K>& x, const ProjPoint<K>& p);

/// Same quantity as the least k >= 2 with G_k outside the ideal (G_1).
template <FieldElement K>
std::optional<int> tangent_section_multiplicity_by_ideal(const Hypersurface<K>& x,
                                                         const ProjPoint<K>& p);

/// Ideal of V^h_p cut by a random hyperplane H not through p: the cone
/// generators followed by H. Requires h >= 3 and p smooth.
template <FieldElement K>
Ideal<K> lambda_section(const Hypersurface<K>& x, const ProjPoint<K>& p, int h,
                        std::mt19937_64& rng, int max_retries = 16);

/// Uniformly random coordinates in the field (F_q only).
std::vector<Fp> random_vector(const PrimeField& field, int size, std::mt19937_64& rng);

/// Every point of P^{nvars-1}(F_q), normalized. Throws ResourceExhausted when
/// there are more than `limit` of them.
std::vector<PointFp> projective_points(const PrimeField& field, int nvars,
                                       std::int64_t limit = 2'000'000);

using HypersurfaceFp = Hypersurface<Fp>;

}  // namespace hicone
