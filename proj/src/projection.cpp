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

#include "hicone/sampler.hpp"

namespace hicone {

namespace {

using EPoly = std::vector<ExtElem>;  // coefficients in t, low degree first

EPoly mul(const EPoly& a, const EPoly& b, const ExtField& k) {
  EPoly out(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Coefficients of F(p + t v) over the extension field.
EPoly restrict_over(const PolyFp& f, const PointFp& p, const std::vector<ExtElem>& v,
                    const ExtField& k) {
  const int n = f.nvars();
  const int d = f.degree();
  std::vector<std::vector<EPoly>> powers(n);
  for (int i = 0; i < n; ++i) {
    powers[i].push_back({k.one()});
    EPoly lin{k.embed(p[i]), v[i]};
    for (int e = 1; e <= d; ++e) powers[i].push_back(mul(powers[i].back(), lin, k));
  }
  EPoly out(d + 1, k.zero());
  for (const auto& t : f.terms()) {
    EPoly acc{k.embed(t.coefficient)};
    for (int i = 0; i < n; ++i) {
      int e = t.monomial.exponent(i);
      if (e) acc = mul(acc, powers[i][e], k);
    }
    for (std::size_t j = 0; j < acc.size(); ++j) out[j] += acc[j];
  }
  return out;
}

}  // namespace

ProjectionResult verify_projection_degree(const HypersurfaceFp& x, const PointFp& p, int h,
                                          std::mt19937_64& rng, const ZeroDimOptions& options) {
  tangent_hyperplane(x, p);  // p on X and smooth
  ProjectionResult result;
  auto cone = cone_ideal(x, p, h);
  result.cone_dimension = projective_dimension(cone.ideal(), options.gb);
  if (result.cone_dimension != 1) {
    throw DomainError("verify_projection_degree: the cone has dimension " +
                      std::to_string(result.cone_dimension) + ", not 1");
  }
  const int d = x.d();

  ZeroDimResult lambda;
  for (int attempt = 0;; ++attempt) {
    lambda = solve_zero_dim(lambda_section(x, p, h, rng), rng, options);
    if (lambda.shape_position) break;
    if (attempt + 1 >= options.attempts) {
      throw ResourceExhausted("verify_projection_degree: no separating hyperplane section");
    }
  }
  result.lambda_length = lambda.length;

  std::optional<int> common;
  bool disagree = false;
  for (const auto& orbit : lambda.orbits) {
    ExtField k(orbit.phi);
    std::vector<ExtElem> v;
    for (const auto& c : orbit.coords) v.push_back(k.from_poly(c));
    EPoly c = restrict_over(x.F(), p, v, k);

    FiberSample fiber;
    fiber.orbit_degree = orbit.phi.degree();
    int low = -1;
    int high = -1;
    for (int i = 0; i <= d; ++i) {
      if (c[i].is_zero()) continue;
      if (low < 0) low = i;
      high = i;
    }
    if (low < 0) {
      fiber.contact = ContactOrder::infinite();
      result.fibers.push_back(fiber);
      continue;
    }
    fiber.contact = ContactOrder::finite(low);
    // Roots of c(t) / t^low in the affine chart, plus d - high at t = infinity.
    fiber.at_direction = d - high;
    fiber.residual = (high - low) + fiber.at_direction;
    fiber.generic = low == h;
    if (low + fiber.residual != d) result.bezout_ok = false;
    if (fiber.generic) {
      if (common && *common != fiber.residual) disagree = true;
      common = fiber.residual;
    }
    result.fibers.push_back(fiber);
  }
  if (!disagree) result.degree = common;

  Ideal<Fp> z = cone.ideal();
  z.add(x.F());
  ZeroDimOptions length_opt = options;
  length_opt.length_only = true;
  result.scheme_length = solve_zero_dim(z, rng, length_opt).length;
  int counted = 0;
  for (const auto& f : result.fibers) {
    if (f.contact.is_infinite()) {
      result.bezout_ok = false;  // a line inside X makes the scheme infinite
    } else {
      counted += f.orbit_degree * (f.contact.value() + f.residual);
    }
  }
  if (counted != result.scheme_length) result.bezout_ok = false;
  return result;
}

}  // namespace hicone
