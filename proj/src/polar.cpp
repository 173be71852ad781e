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

#include "hicone/polar.hpp"

#include <sstream>

namespace hicone {

template <FieldElement K>
Polynomial<K> directional_derivative(const Polynomial<K>& f, std::span<const K> q) {
  if (static_cast<int>(q.size()) != f.nvars()) {
    throw DomainError("directional_derivative: direction has the wrong length");
  }
  Polynomial<K> out(f.nvars(), f.field());
  for (int i = 0; i < f.nvars(); ++i) {
    if (!q[i].is_zero()) out = out + f.derivative(i) * q[i];
  }
  return out;
}

template <FieldElement K>
Polynomial<K> polar_poly(const Hypersurface<K>& x, const ProjPoint<K>& q, int s) {
  if (s < 0 || s > x.d()) {
    throw DomainError("polar_poly: s = " + std::to_string(s) + " outside [0, " +
                      std::to_string(x.d()) + "]");
  }
  if (q.size() != x.nvars()) throw DomainError("point has the wrong number of coordinates");
  Polynomial<K> out = x.F();
  for (int i = 0; i < s; ++i) out = directional_derivative(out, std::span<const K>(q.coords()));
  return out;
}

template <FieldElement K>
PolarSystem<K> polar_system(const Hypersurface<K>& x, const ProjPoint<K>& q, int h) {
  if (h < 2 || h > x.d()) {
    throw DomainError("polar system: h = " + std::to_string(h) + " outside [2, " +
                      std::to_string(x.d()) + "]");
  }
  if (q.size() != x.nvars()) throw DomainError("point has the wrong number of coordinates");
  PolarSystem<K> sys{q, h, {x.F()}};
  for (int s = 1; s < h; ++s) {
    sys.polars.push_back(
        directional_derivative(sys.polars.back(), std::span<const K>(q.coords())));
  }
  return sys;
}

template <FieldElement K>
Ideal<K> polar_intersection_ideal(const Hypersurface<K>& x, const ProjPoint<K>& q, int h) {
  return polar_system(x, q, h).ideal();
}

template <FieldElement K>
bool check_reciprocity(const Hypersurface<K>& x, const ProjPoint<K>& p, const ProjPoint<K>& q,
                       int h) {
  if (p.size() != x.nvars()) throw DomainError("point has the wrong number of coordinates");
  if (!x.contains(p)) throw DomainError("point is not on the hypersurface");
  if (p == q) throw DomainError("check_reciprocity: p and q must be distinct");
  auto sys = polar_system(x, q, h);
  for (const auto& g : sys.polars) {
    if (!g.evaluate(p.coords()).is_zero()) return false;
  }
  return true;
}

template <FieldElement K>
Ideal<K> connecting_vertex_ideal(const Hypersurface<K>& x, const ProjPoint<K>& q,
                                 const ProjPoint<K>& q2, int h, bool permissive) {
  if (q == q2) throw DomainError("connecting_vertex_ideal: q and q' must be distinct");
  if (!x.contains(q) || !x.contains(q2)) {
    throw DomainError("connecting_vertex_ideal: q and q' must lie on the hypersurface");
  }
  if (!permissive && (h < 2 || h > connecting_max_h(x.n()))) {
    throw HypothesisError("connecting vertex needs 2 <= h <= floor(n/2) + 1 = " +
                          std::to_string(connecting_max_h(x.n())) + ", got h = " +
                          std::to_string(h));
  }
  auto a = polar_system(x, q, h);
  auto b = polar_system(x, q2, h);
  Ideal<K> out = a.ideal();
  for (int s = 1; s < h; ++s) out.add(b.polars[s]);
  return out;
}

Matrix<Fp> random_subspace(const PrimeField& field, int nvars, int m, std::mt19937_64& rng) {
  if (m < 1 || m > nvars) throw DomainError("random_subspace: dimension out of range");
  std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
  while (true) {
    Matrix<Fp> b(nvars, m, field);
    for (int i = 0; i < nvars; ++i) {
      for (int j = 0; j < m; ++j) b(i, j) = Fp(dist(rng), field.modulus());
    }
    if (b.rank() == m) return b;
  }
}

Ideal<Fp> restrict_ideal(const Ideal<Fp>& ideal, const Matrix<Fp>& basis) {
  Ideal<Fp> out(basis.cols(), ideal.field());
  for (const auto& g : ideal.generators()) out.add(compose_linear(g, basis));
  return out;
}

DimensionCertificate certify_dimension(const Ideal<Fp>& ideal, std::mt19937_64& rng,
                                       const CertifyOptions& options) {
  if (!ideal.homogeneous()) throw DomainError("certify_dimension: ideal is not homogeneous");
  const int nvars = ideal.nvars();
  int r = 0;
  for (const auto& g : ideal.generators()) r += g.is_zero() ? 0 : 1;
  DimensionCertificate cert;
  cert.structural_lower = nvars - 1 - r;
  if (cert.structural_lower < 0) {
    cert.note = "more generators than the ambient dimension";
    return cert;
  }
  // Cutting by k general hyperplanes empties the scheme exactly when k > dim.
  for (int k = cert.structural_lower + 1; k < nvars; ++k) {
    const int m = nvars - k;
    if (m > options.max_slice_vars) {
      cert.note = "slice has " + std::to_string(m) + " variables, above the limit of " +
                  std::to_string(options.max_slice_vars);
      return cert;
    }
    auto sliced = restrict_ideal(ideal, random_subspace(ideal.field(), nvars, m, rng));
    try {
      auto gb = groebner_basis(sliced, MonomialOrder::grevlex(), options.gb);
      if (krull_dimension(m, gb.leading_monomials(), gb.is_unit()) == 0) {
        cert.exact = k - 1;
        return cert;
      }
    } catch (const ResourceExhausted& e) {
      cert.note = std::string("slice check: ") + e.what();
      return cert;
    }
  }
  cert.exact = nvars - 1;
  return cert;
}

std::string ConnectingWitness::to_string() const {
  if (!point) return kNotFound;
  std::ostringstream out;
  for (int i = 0; i < point->size(); ++i) {
    if (i) out << ',';
    out << (*point)[i].signed_value();
  }
  return out.str();
}

ConnectingWitness find_connecting_vertex(const HypersurfaceFp& x, const PointFp& q,
                                         const PointFp& q2, int h, std::mt19937_64& rng,
                                         const WitnessOptions& options) {
  const auto ideal = connecting_vertex_ideal(x, q, q2, h, options.permissive);
  const int nvars = x.nvars();
  const PrimeField field = x.field();

  auto accept = [&](const PointFp& p) {
    if (p == q || p == q2 || !x.is_smooth_at(p)) return false;
    if (!check_reciprocity(x, p, q, h) || !check_reciprocity(x, p, q2, h)) return false;
    return line_contact_order(x, p, q.coords()).at_least(h) &&
           line_contact_order(x, p, q2.coords()).at_least(h);
  };
  auto on_locus = [&](const PointFp& p) {
    for (const auto& g : ideal.generators()) {
      if (!g.evaluate(p.coords()).is_zero()) return false;
    }
    return true;
  };

  ConnectingWitness w;
  double count = 0;
  double power = 1;
  for (int i = 0; i < nvars; ++i, power *= field.modulus()) count += power;
  if (count <= static_cast<double>(options.exhaustive_limit)) {
    for (const auto& p : projective_points(field, nvars, options.exhaustive_limit)) {
      if (on_locus(p) && accept(p)) {
        w.point = p;
        w.outcome = "found";
        return w;
      }
    }
    w.outcome = "exhausted";
    return w;
  }

  const int r = static_cast<int>(ideal.generators().size());
  if (nvars - 1 - r < 0) {
    w.outcome = "more equations than the ambient dimension";
    return w;
  }
  std::int64_t bezout = 1;
  for (const auto& g : ideal.generators()) {
    bezout *= std::max(g.degree(), 1);
    if (bezout > options.max_points) {
      w.outcome = "bezout budget";
      return w;
    }
  }

  ZeroDimOptions zopt;
  zopt.gb = options.gb;
  zopt.rational_only = true;
  zopt.max_points = static_cast<int>(options.max_points);
  for (int s = 0; s < options.slices; ++s) {
    ++w.slices_tried;
    Matrix<Fp> basis = random_subspace(field, nvars, r + 1, rng);
    ZeroDimResult sol;
    try {
      sol = solve_zero_dim(restrict_ideal(ideal, basis), rng, zopt);
    } catch (const DomainError&) {
      continue;  // special slice: positive-dimensional intersection
    } catch (const ResourceExhausted&) {
      continue;
    }
    for (const auto& y : sol.rational_points) {
      PointFp p(basis.apply(y));
      if (on_locus(p) && accept(p)) {
        w.point = p;
        w.outcome = "found";
        return w;
      }
    }
  }
  w.outcome = "no rational point on sampled slices";
  return w;
}

#define HICONE_INSTANTIATE(K)                                                                  \
  template Polynomial<K> directional_derivative(const Polynomial<K>&, std::span<const K>);     \
  template Polynomial<K> polar_poly(const Hypersurface<K>&, const ProjPoint<K>&, int);         \
  template PolarSystem<K> polar_system(const Hypersurface<K>&, const ProjPoint<K>&, int);      \
  template Ideal<K> polar_intersection_ideal(const Hypersurface<K>&, const ProjPoint<K>&, int); \
  template bool check_reciprocity(const Hypersurface<K>&, const ProjPoint<K>&,                 \
                                  const ProjPoint<K>&, int);                                   \
  template Ideal<K> connecting_vertex_ideal(const Hypersurface<K>&, const ProjPoint<K>&,       \
                                            const ProjPoint<K>&, int, bool);

HICONE_INSTANTIATE(Fp)
HICONE_INSTANTIATE(Rational)

#undef HICONE_INSTANTIATE

}  // namespace hicone
