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

#include "hicone/contact.hpp"
#include "hicone/grobner.hpp"
#include "hicone/zero_dim.hpp"

namespace hicone {

/// q . grad f = sum_i q_i df/dx_i.
template <FieldElement K>
Polynomial<K> directional_derivative(const Polynomial<K>& f, std::span<const K> q);

/// Pol^s_q F = (q . grad)^s F, of degree d - s. Throws DomainError unless
/// 0 <= s <= d.
template <FieldElement K>
Polynomial<K> polar_poly(const Hypersurface<K>& x, const ProjPoint<K>& q, int s);

/// Pol^0_q F, ..., Pol^{h-1}_q F.
template <FieldElement K>
struct PolarSystem {
  ProjPoint<K> q;
  int h;
  std::vector<Polynomial<K>> polars;

  Ideal<K> ideal() const {
    return Ideal<K>(polars.front().nvars(), polars.front().field(), polars);
  }
};

/// Throws DomainError unless 2 <= h <= d.
template <FieldElement K>
PolarSystem<K> polar_system(const Hypersurface<K>& x, const ProjPoint<K>& q, int h);

/// Ideal of Delta_{q,h}(X): points p of X such that the line pq has contact
/// order at least h at p.
template <FieldElement K>
Ideal<K> polar_intersection_ideal(const Hypersurface<K>& x, const ProjPoint<K>& q, int h);

/// Whether p lies on Delta_{q,h}(X). Throws DomainError if p is not on X or
/// p = q.
template <FieldElement K>
bool check_reciprocity(const Hypersurface<K>& x, const ProjPoint<K>& p, const ProjPoint<K>& q,
                       int h);

/// Largest h allowed by the connecting hypothesis: floor(n/2) + 1.
inline int connecting_max_h(int n) { return n / 2 + 1; }

/// Delta_{q,h} + Delta_{q',h}: F followed by the proper polars of q and of
/// q', 2h - 1 forms in all. Throws DomainError if q = q' or either point is
/// off X, and HypothesisError when h is outside [2, floor(n/2) + 1] unless
/// `permissive` is set (then 2 <= h <= d is still required).
template <FieldElement K>
Ideal<K> connecting_vertex_ideal(const Hypersurface<K>& x, const ProjPoint<K>& q,
                                 const ProjPoint<K>& q2, int h, bool permissive = false);

/// Bounds on the projective dimension of a homogeneous ideal.
struct DimensionCertificate {
  /// nvars - 1 - (number of generators): every component has at least this
  /// dimension, and the scheme is nonempty when it is >= 0.
  int structural_lower = 0;
  /// Set when slicing by structural_lower + 1 random linear forms gave the
  /// empty scheme, which pins the dimension to structural_lower.
  std::optional<int> exact;
  /// Why `exact` is unset, if it is.
  std::string note;
};

struct CertifyOptions {
  GroebnerOptions gb{2'000'000};
  /// The upper-bound check runs only when the slice has at most this many
  /// variables.
  int max_slice_vars = 3;
};

DimensionCertificate certify_dimension(const Ideal<Fp>& ideal, std::mt19937_64& rng,
                                       const CertifyOptions& options = {});

/// Restriction of each generator to the span of the columns of `basis`.
Ideal<Fp> restrict_ideal(const Ideal<Fp>& ideal, const Matrix<Fp>& basis);

/// Random nvars x m matrix of full column rank.
Matrix<Fp> random_subspace(const PrimeField& field, int nvars, int m, std::mt19937_64& rng);

struct WitnessOptions {
  /// Random linear slices tried before giving up.
  int slices = 16;
  /// Slices whose Bezout number exceeds this are not attempted.
  std::int64_t max_points = 2000;
  /// Exhaustive search when P^{n+1}(F_q) has at most this many points.
  std::int64_t exhaustive_limit = 200'000;
  GroebnerOptions gb{5'000'000};
  bool permissive = false;
};

/// A rational point p of X, distinct from q and q' and smooth on X, with q
/// and q' both in V^h_p; unset means NOT_FOUND_OVER_Fq within the budget.
struct ConnectingWitness {
  std::optional<PointFp> point;
  int slices_tried = 0;
  /// "found", "exhausted" (every rational point checked), "no rational point
  /// on sampled slices" or "bezout budget".
  std::string outcome;

  static constexpr const char* kNotFound = "NOT_FOUND_OVER_Fq";
  std::string to_string() const;
};

ConnectingWitness find_connecting_vertex(const HypersurfaceFp& x, const PointFp& q,
                                         const PointFp& q2, int h, std::mt19937_64& rng,
                                         const WitnessOptions& options = {});

}  // namespace hicone
