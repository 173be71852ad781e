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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hicone/polynomial.hpp"

namespace hicone {

enum class OrderKind { kGrevlex, kLex, kElimination };

/// A monomial order on x_0 > x_1 > ... . The elimination order with block k
/// compares the first k variables by grevlex and breaks ties by grevlex on
/// the remaining ones, so any polynomial whose leading monomial is free of
/// x_0..x_{k-1} lies entirely in the trailing variables.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::kGrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::kLex, 0); }
  static MonomialOrder elimination(int block);

  OrderKind kind() const noexcept { return kind_; }
  int block() const noexcept { return block_; }
  bool degree_compatible() const noexcept { return kind_ == OrderKind::kGrevlex; }
  std::string name() const;

  int compare(Monomial a, Monomial b) const noexcept {
    switch (kind_) {
      case OrderKind::kGrevlex:
        return grevlex_compare(a, b);
      case OrderKind::kLex:
        return lex_compare(a, b);
      case OrderKind::kElimination: {
        int c = grevlex_compare(Monomial::from_packed(a.packed() & mask_),
                                Monomial::from_packed(b.packed() & mask_));
        if (c != 0) return c;
        return grevlex_compare(Monomial::from_packed(a.packed() & ~mask_),
                               Monomial::from_packed(b.packed() & ~mask_));
      }
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(OrderKind kind, int block);

  OrderKind kind_;
  int block_;
  std::uint64_t mask_ = 0;
};

/// Ordered list of generators. Order matters for regular-sequence tests.
template <FieldElement K>
class Ideal {
 public:
  using Field = typename K::field_type;

  Ideal(int nvars, Field field) : nvars_(nvars), field_(field) {}
  Ideal(int nvars, Field field, std::vector<Polynomial<K>> generators)
      : nvars_(nvars), field_(field) {
    for (auto& g : generators) add(std::move(g));
  }

  void add(Polynomial<K> g) {
    if (g.nvars() != nvars_) throw DomainError("generator lives in a different ring");
    homogeneous_ = homogeneous_ && g.is_homogeneous();
    generators_.push_back(std::move(g));
  }

  int nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Polynomial<K>>& generators() const noexcept { return generators_; }
  bool homogeneous() const noexcept { return homogeneous_; }

 private:
  int nvars_;
  Field field_;
  std::vector<Polynomial<K>> generators_;
  bool homogeneous_ = true;
};

/// Tuning and budget knobs for Buchberger's algorithm.
struct GroebnerOptions {
  /// Maximum number of elementary reduction steps (one reducer applied to one
  /// term) before ResourceExhausted is thrown. Zero means unlimited.
  std::uint64_t step_cap = 20'000'000;
};

/// Statistics from the last computation, for benchmarking.
struct GroebnerStats {
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
  std::uint64_t pairs_skipped = 0;
};

/// Reduced Groebner basis: monic elements sorted by increasing leading
/// monomial, no leading monomial divisible by another, tails fully reduced.
template <FieldElement K>
class GroebnerBasis {
 public:
  using Field = typename K::field_type;

  GroebnerBasis(int nvars, Field field, MonomialOrder order, std::vector<Polynomial<K>> basis,
                GroebnerStats stats = {});

  int nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Polynomial<K>>& basis() const noexcept { return basis_; }
  /// Leading monomials w.r.t. order(), parallel to basis().
  const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }
  const GroebnerStats& stats() const noexcept { return stats_; }
  /// True when the ideal is the whole ring.
  bool is_unit() const noexcept { return leading_.size() == 1 && leading_[0].is_one(); }
  bool is_zero_ideal() const noexcept { return basis_.empty(); }

  /// Remainder of f on division by the basis; zero iff f is in the ideal.
  Polynomial<K> normal_form(const Polynomial<K>& f) const;
  bool contains(const Polynomial<K>& f) const { return normal_form(f).is_zero(); }
  /// True when no leading monomial divides m.
  bool is_standard(Monomial m) const noexcept;

 private:
  int nvars_;
  Field field_;
  MonomialOrder order_;
  std::vector<Polynomial<K>> basis_;
  std::vector<Monomial> leading_;
  GroebnerStats stats_;
};

template <FieldElement K>
GroebnerBasis<K> groebner_basis(const Ideal<K>& ideal, const MonomialOrder& order,
                                const GroebnerOptions& options = {});

/// Leading monomial of f under an arbitrary order.
template <FieldElement K>
Monomial leading_monomial(const Polynomial<K>& f, const MonomialOrder& order);

/// Largest independent variable set modulo the leading-term ideal; -1 for
/// the unit ideal.
int krull_dimension(int nvars, const std::vector<Monomial>& leading, bool unit);

template <FieldElement K>
int krull_dimension(const Ideal<K>& ideal, const GroebnerOptions& options = {});

/// Krull dimension of the affine cone minus one; -1 is the empty scheme.
/// Throws DomainError on a non-homogeneous generator.
template <FieldElement K>
int projective_dimension(const Ideal<K>& ideal, const GroebnerOptions& options = {});

/// Number of degree-t standard monomials; throws DomainError for t < 0.
std::int64_t hilbert_function(int nvars, const std::vector<Monomial>& leading, int t);

template <FieldElement K>
std::int64_t hilbert_function(const Ideal<K>& ideal, int t, const GroebnerOptions& options = {});

/// h(t) for t = 0..t_max from one basis computation.
template <FieldElement K>
std::vector<std::int64_t> hilbert_values(const Ideal<K>& ideal, int t_max,
                                         const GroebnerOptions& options = {});

struct RegularSequenceResult {
  bool regular = false;
  /// Length of the longest regular prefix.
  int alpha = 0;
};

/// Regularity by successive drops of the affine dimension. Throws DomainError
/// naming the index of a zero or non-homogeneous generator.
template <FieldElement K>
RegularSequenceResult is_regular_sequence(const std::vector<Polynomial<K>>& gens,
                                          const GroebnerOptions& options = {});

/// Generators of the ideal intersected with the subring of x_k..x_{n-1}.
/// The result keeps all nvars variables; the first k simply do not occur.
template <FieldElement K>
Ideal<K> eliminate(const Ideal<K>& ideal, int k, const GroebnerOptions& options = {});

/// C(n, k) as a 64-bit integer; zero when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Coefficients of prod (1 - s^{d_i}) / (1 - s)^nvars up to s^t_max.
std::vector<std::int64_t> complete_intersection_series(int nvars, const std::vector<int>& degrees,
                                                       int t_max);

extern template class GroebnerBasis<Fp>;
extern template class GroebnerBasis<Rational>;
extern template GroebnerBasis<Fp> groebner_basis(const Ideal<Fp>&, const MonomialOrder&,
                                                 const GroebnerOptions&);
extern template GroebnerBasis<Rational> groebner_basis(const Ideal<Rational>&,
                                                       const MonomialOrder&,
                                                       const GroebnerOptions&);

}  // namespace hicone
