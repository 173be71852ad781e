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

#include <algorithm>
#include <cstdio>

#include "hicone/sampler.hpp"

namespace hicone {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::string_view purpose) {
  std::uint64_t tag = 0xcbf29ce484222325ull;
  for (unsigned char c : purpose) tag = (tag ^ c) * 0x100000001b3ull;
  return mix64(mix64(mix64(master) ^ index) ^ tag);
}

std::uint64_t digest(const PolyFp& f) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&h](std::uint64_t w) {
    for (int i = 0; i < 8; ++i) h = (h ^ ((w >> (8 * i)) & 0xffu)) * 0x100000001b3ull;
  };
  feed(static_cast<std::uint64_t>(f.nvars()));
  for (const auto& t : f.terms()) {
    feed(t.monomial.packed());
    feed(t.coefficient.value());
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  if (nvars > 0) rec(rec, 0, d);
  return out;
}

HypersurfaceFp random_hypersurface(int n, int d, std::uint32_t modulus, std::uint64_t seed) {
  const PrimeField field(modulus);
  const int nvars = n + 2;
  const auto monomials = monomials_of_degree(nvars, d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, modulus - 1);
  while (true) {
    std::vector<Term<Fp>> terms;
    for (Monomial m : monomials) terms.push_back({m, Fp(dist(rng), modulus)});
    auto f = PolyFp::from_terms(nvars, field, std::move(terms));
    if (!f.is_zero()) return HypersurfaceFp(std::move(f));
  }
}

std::vector<PointFp> rational_points_on_line(const HypersurfaceFp& x, const std::vector<Fp>& a,
                                             const std::vector<Fp>& v, std::mt19937_64& rng) {
  auto c = restrict_to_line(x.F(), std::span<const Fp>(a), std::span<const Fp>(v));
  UPoly f(x.field(), c);
  if (f.is_zero()) return {PointFp(a)};
  std::vector<PointFp> out;
  for (Fp r : roots(f, rng)) {
    std::vector<Fp> pt(a.size(), x.field().zero());
    for (std::size_t i = 0; i < a.size(); ++i) pt[i] = a[i] + r * v[i];
    out.emplace_back(std::move(pt));
  }
  return out;
}

PointSample sample_point_on_X(const HypersurfaceFp& x, std::uint64_t seed, int line_budget) {
  std::mt19937_64 rng(seed);
  const int nvars = x.nvars();
  for (int line = 0; line < line_budget; ++line) {
    auto a = random_vector(x.field(), nvars, rng);
    auto v = random_vector(x.field(), nvars, rng);
    bool a_zero = std::all_of(a.begin(), a.end(), [](Fp c) { return c.is_zero(); });
    if (a_zero || proportional(std::span<const Fp>(a), std::span<const Fp>(v))) continue;
    auto pts = rational_points_on_line(x, a, v, rng);
    if (pts.empty()) continue;
    int idx = std::uniform_int_distribution<int>(0, static_cast<int>(pts.size()) - 1)(rng);
    PointSample s{pts[idx], false, false, line, idx};
    s.on_x = x.contains(s.point);
    s.smooth_at = x.is_smooth_at(s.point);
    return s;
  }
  throw ResourceExhausted("sample_point_on_X: no rational point on " + std::to_string(line_budget) +
                          " random lines");
}

}  // namespace hicone
