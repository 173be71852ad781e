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


// Generators shared by the test binaries. Everything is seeded; a failing
// check prints the seed through doctest's CAPTURE.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hicone/sampler.hpp"

namespace hicone::testing {

inline PrimeField field(std::uint32_t q = 10007) { return PrimeField(q); }

inline Fp random_element(const PrimeField& f, std::mt19937_64& rng) {
  return f(static_cast<std::int64_t>(rng() % f.modulus()));
}

inline Fp random_nonzero(const PrimeField& f, std::mt19937_64& rng) {
  for (;;) {
    Fp c = random_element(f, rng);
    if (!c.is_zero()) return c;
  }
}

/// Random form of degree d; each monomial survives with probability
/// density/100.
inline PolyFp random_form(const PrimeField& f, int nvars, int d, std::mt19937_64& rng,
                          int density = 100) {
  std::vector<Term<Fp>> terms;
  for (Monomial m : monomials_of_degree(nvars, d)) {
    if (static_cast<int>(rng() % 100) < density) terms.push_back({m, random_element(f, rng)});
  }
  return PolyFp::from_terms(nvars, f, std::move(terms));
}

/// Random polynomial with terms of mixed degree up to d.
inline PolyFp random_poly(const PrimeField& f, int nvars, int d, std::mt19937_64& rng) {
  PolyFp out(nvars, f);
  for (int k = 0; k <= d; ++k) out = out + random_form(f, nvars, k, rng, 40);
  return out;
}

inline std::vector<Fp> random_coords(const PrimeField& f, int n, std::mt19937_64& rng) {
  std::vector<Fp> v;
  for (int i = 0; i < n; ++i) v.push_back(random_element(f, rng));
  return v;
}

/// A vector not proportional to p.
inline std::vector<Fp> random_direction(const PrimeField& f, const PointFp& p,
                                        std::mt19937_64& rng) {
  for (;;) {
    auto v = random_coords(f, p.size(), rng);
    if (!proportional<Fp>(v, p.coords())) return v;
  }
}

inline PointFp unit_point(const PrimeField& f, int nvars, int i) {
  std::vector<Fp> v(nvars, f.zero());
  v[i] = f.one();
  return PointFp(v);
}

inline PointFp point(const PrimeField& f, std::vector<std::int64_t> c) {
  std::vector<Fp> v;
  for (auto x : c) v.push_back(f(x));
  return PointFp(v);
}

/// Random smooth pair (X, p) with p on X: redraws X until the sampled point
/// is smooth.
struct SmoothSample {
  HypersurfaceFp x;
  PointFp p;
};

inline SmoothSample smooth_sample(int n, int d, std::uint64_t seed, std::uint32_t q = 10007) {
  for (std::uint64_t k = 0;; ++k) {
    auto x = random_hypersurface(n, d, q, derive_seed(seed, k, "test surface"));
    auto s = sample_point_on_X(x, derive_seed(seed, k, "test point"));
    if (s.smooth_at) return {x, s.point};
  }
}

inline std::int64_t factorial(int k) {
  std::int64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace hicone::testing
