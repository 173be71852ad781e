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

#include "hicone/zero_dim.hpp"

#include <unordered_map>

#include "hicone/linalg.hpp"

namespace hicone {

namespace {

Matrix<Fp> random_invertible(int n, const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.modulus() - 1);
  while (true) {
    Matrix<Fp> a(n, n, f);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = Fp(dist(rng), f.modulus());
    }
    if (a.rank() == n) return a;
  }
}

// f(A y) for every generator.
Ideal<Fp> transform(const Ideal<Fp>& ideal, const Matrix<Fp>& a) {
  Ideal<Fp> out(ideal.nvars(), ideal.field());
  for (const auto& g : ideal.generators()) out.add(compose_linear(g, a));
  return out;
}

std::vector<Fp> normalize(std::vector<Fp> v) {
  for (const auto& c : v) {
    if (!c.is_zero()) {
      Fp inv = c.inverse();
      for (auto& x : v) x *= inv;
      break;
    }
  }
  return v;
}

using SparseColumn = std::vector<std::pair<int, Fp>>;

}  // namespace

ZeroDimResult solve_zero_dim(const Ideal<Fp>& ideal, std::mt19937_64& rng,
                             const ZeroDimOptions& options) {
  if (!ideal.homogeneous()) throw DomainError("solve_zero_dim: ideal is not homogeneous");
  const int n = ideal.nvars();
  if (n < 2) throw DomainError("solve_zero_dim: need at least two variables");
  const int last = n - 1;
  const PrimeField field = ideal.field();
  const std::uint32_t q = field.modulus();
  std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);

  ZeroDimResult result;
  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    Matrix<Fp> a = random_invertible(n, field, rng);
    auto gb = groebner_basis(transform(ideal, a), MonomialOrder::grevlex(), options.gb);
    int dim = krull_dimension(n, gb.leading_monomials(), gb.is_unit());
    if (dim <= 0) return result;  // empty projective scheme
    if (dim != 1) throw DomainError("solve_zero_dim: scheme is not zero-dimensional");
    bool at_infinity = false;
    for (Monomial m : gb.leading_monomials()) at_infinity = at_infinity || m.exponent(last) != 0;
    if (at_infinity) continue;

    // Dehomogenize at y_last = 1; leading monomials are unchanged for grevlex.
    std::vector<PolyFp> affine;
    const std::uint64_t keep = ~(0xffull << (8 * last));
    for (const auto& g : gb.basis()) {
      std::vector<Term<Fp>> t;
      for (const auto& term : g.terms()) {
        t.push_back({Monomial::from_packed(term.monomial.packed() & keep), term.coefficient});
      }
      affine.push_back(PolyFp::from_terms(n, field, std::move(t)));
    }
    GroebnerBasis<Fp> agb(n, field, MonomialOrder::grevlex(), affine);

    // Standard monomials form an order ideal; breadth-first enumeration.
    std::vector<Monomial> standard{Monomial()};
    std::unordered_map<Monomial, int> index{{Monomial(), 0}};
    for (std::size_t k = 0; k < standard.size(); ++k) {
      for (int v = 0; v < last; ++v) {
        Monomial m = standard[k] * Monomial::variable(v);
        if (index.count(m) || !agb.is_standard(m)) continue;
        if (static_cast<int>(standard.size()) >= options.max_points) {
          throw ResourceExhausted("solve_zero_dim: more than " +
                                  std::to_string(options.max_points) + " points");
        }
        index.emplace(m, static_cast<int>(standard.size()));
        standard.push_back(m);
      }
    }
    const int length = static_cast<int>(standard.size());
    result.length = length;
    if (options.length_only) return result;

    auto coordinates = [&](const PolyFp& p) {
      std::vector<Fp> v(length, field.zero());
      const PolyFp nf = agb.normal_form(p);
      for (const auto& t : nf.terms()) v[index.at(t.monomial)] = t.coefficient;
      return v;
    };

    std::vector<Fp> ucoef(n, field.zero());
    for (int v = 0; v < last; ++v) ucoef[v] = Fp(dist(rng), q);
    PolyFp u = PolyFp::linear_form(field, ucoef);

    // Multiplication by u, column by column.
    std::vector<SparseColumn> mult(length);
    for (int k = 0; k < length; ++k) {
      auto col = coordinates(u.times_monomial(standard[k], field.one()));
      for (int r = 0; r < length; ++r) {
        if (!col[r].is_zero()) mult[k].push_back({r, col[r]});
      }
    }

    // Augmented system [1, u, ..., u^{L-1} | u^L | x_0 ... x_{last-1}].
    const int extra = 1 + last;
    Matrix<Fp> aug(length, length + extra, field);
    std::vector<Fp> cur(length, field.zero());
    cur[0] = field.one();
    for (int k = 0; k <= length; ++k) {
      for (int r = 0; r < length; ++r) aug(r, k) = cur[r];
      if (k == length) break;
      std::vector<std::uint64_t> next(length, 0);
      for (int c = 0; c < length; ++c) {
        if (cur[c].is_zero()) continue;
        for (const auto& [r, val] : mult[c]) {
          next[r] = (next[r] + static_cast<std::uint64_t>(cur[c].value()) * val.value()) % q;
        }
      }
      for (int r = 0; r < length; ++r) cur[r] = Fp(static_cast<std::uint32_t>(next[r]), q);
    }
    for (int v = 0; v < last; ++v) {
      auto col = coordinates(PolyFp::variable(n, field, v));
      for (int r = 0; r < length; ++r) aug(r, length + 1 + v) = col[r];
    }
    auto pivots = aug.rref();
    if (static_cast<int>(pivots.size()) < length || pivots[length - 1] != length - 1) {
      continue;  // u does not separate, or the scheme is not reduced
    }

    std::vector<Fp> phi_c(length + 1, field.zero());
    for (int k = 0; k < length; ++k) phi_c[k] = -aug(k, length);
    phi_c[length] = field.one();
    UPoly phi(field, phi_c);
    if (gcd(phi, phi.derivative()).degree() > 0) continue;
    std::vector<UPoly> g;  // y_v = g_v(u) on the scheme
    for (int v = 0; v < last; ++v) {
      std::vector<Fp> c(length);
      for (int k = 0; k < length; ++k) c[k] = aug(k, length + 1 + v);
      g.emplace_back(field, std::move(c));
    }
    g.push_back(UPoly::constant(field, field.one()));

    // Back to the original coordinates: x = A y.
    std::vector<UPoly> x;
    for (int i = 0; i < n; ++i) {
      UPoly acc(field);
      for (int j = 0; j < n; ++j) acc = acc + g[j] * a(i, j);
      x.push_back(std::move(acc));
    }

    result.shape_position = true;
    if (options.rational_only) {
      for (Fp r : roots(phi, rng)) {
        std::vector<Fp> pt;
        for (const auto& xi : x) pt.push_back(xi.evaluate(r));
        UPoly lin(field, {-r, field.one()});
        std::vector<UPoly> coords;
        for (const auto& c : pt) coords.push_back(UPoly::constant(field, c));
        result.orbits.push_back({lin, std::move(coords)});
        result.rational_points.push_back(normalize(std::move(pt)));
      }
    } else {
      for (auto& [fac, mult_fac] : factor(phi, rng)) {
        std::vector<UPoly> coords;
        for (const auto& xi : x) coords.push_back(xi % fac);
        if (fac.degree() == 1) {
          std::vector<Fp> pt;
          for (const auto& c : coords) pt.push_back(c[0]);
          result.rational_points.push_back(normalize(std::move(pt)));
        }
        result.orbits.push_back({fac, std::move(coords)});
      }
    }
    return result;
  }
  return result;
}

}  // namespace hicone
