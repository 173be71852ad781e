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


#include "doctest.h"
#include "hicone/polar.hpp"
#include "support.hpp"

using namespace hicone;
using hicone::testing::field;

namespace {

HypersurfaceFp X(std::string_view s, int nvars = 4, std::uint32_t q = 10007) {
  return HypersurfaceFp(parse_poly(s, nvars, q));
}

PolyFp P(std::string_view s, int nvars = 4) { return parse_poly(s, nvars, 10007u); }

// Both sides of reciprocity for every p on X and every q in `poles`.
struct Tally {
  int checked = 0;
  int mismatches = 0;
};

Tally exhaustive_reciprocity(const HypersurfaceFp& x, const std::vector<PointFp>& poles) {
  Tally t;
  std::vector<PointFp> on_x;
  for (const auto& p : projective_points(x.field(), x.nvars())) {
    if (x.contains(p)) on_x.push_back(p);
  }
  for (const auto& q : poles) {
    for (int h = 2; h <= x.d(); ++h) {
      auto delta = polar_intersection_ideal(x, q, h);
      for (const auto& p : on_x) {
        if (p == q) continue;
        bool polar_side = true;
        for (const auto& g : delta.generators()) polar_side = polar_side && g.evaluate(p.coords()).is_zero();
        bool contact_side = line_contact_order(x, p, q.coords()).at_least(h);
        ++t.checked;
        if (polar_side != contact_side) ++t.mismatches;
      }
    }
  }
  return t;
}

}  // namespace

TEST_SUITE("polar") {

TEST_CASE("polar examples") {
  auto q = X("x0*x3 - x1*x2");
  auto e0 = testing::unit_point(field(), 4, 0);
  CHECK(polar_poly(q, e0, 0) == q.F());
  CHECK(polar_poly(q, e0, 1) == P("x3"));
  CHECK(polar_poly(q, e0, 2).is_zero());  // 2! F(e0) = 0
  auto cubic = X("x0^3 + x1^3 + x2^3 + x3^3");
  auto r = testing::point(field(), {1, 2, 3, 4});
  auto top = polar_poly(cubic, r, 3);
  CHECK(top == PolyFp::constant(4, field(), cubic.F().evaluate(r.coords()) * field()(6)));
  CHECK_THROWS_AS(polar_poly(cubic, r, 4), DomainError);
  CHECK_THROWS_AS(polar_poly(cubic, r, -1), DomainError);
}

TEST_CASE("polar degrees, linearity, scaling and symmetry") {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 30; ++trial) {
    int d = 2 + static_cast<int>(rng() % 5);
    auto a = testing::random_form(field(), 4, d, rng);
    auto b = testing::random_form(field(), 4, d, rng);
    HypersurfaceFp xa(a), xb(b), xab(a + b);
    auto qv = testing::random_coords(field(), 4, rng);
    qv[0] = field().one();
    PointFp q(qv);
    auto q2v = testing::random_coords(field(), 4, rng);
    Fp lambda = testing::random_nonzero(field(), rng);
    for (int s = 0; s <= d; ++s) {
      auto pa = polar_poly(xa, q, s);
      CHECK((pa.is_zero() || pa.homogeneous_degree() == d - s));
      CHECK(polar_poly(xab, q, s) == pa + polar_poly(xb, q, s));
      // Pol^s_{lambda q} = lambda^s Pol^s_q, via the unnormalized operator.
      std::vector<Fp> scaled;
      for (auto c : q.coords()) scaled.push_back(c * lambda);
      PolyFp iter = a;
      for (int i = 0; i < s; ++i) iter = directional_derivative<Fp>(iter, scaled);
      CHECK(iter == pa * lambda.pow(s));
    }
    auto qq2 = directional_derivative<Fp>(directional_derivative<Fp>(a, q.coords()), q2v);
    auto q2q = directional_derivative<Fp>(directional_derivative<Fp>(a, q2v), q.coords());
    CHECK(qq2 == q2q);
  }
}

TEST_CASE("polar intersection ideal") {
  auto q = X("x0*x3 - x1*x2");
  auto e0 = testing::unit_point(field(), 4, 0);
  auto delta = polar_intersection_ideal(q, e0, 2);
  REQUIRE(delta.generators().size() == 2);
  CHECK(delta.generators()[0] == q.F());
  CHECK(projective_dimension(delta) == 1);
  CHECK_THROWS_AS(polar_intersection_ideal(q, e0, 3), DomainError);
  auto sys = polar_system(q, e0, 2);
  CHECK(sys.polars.size() == 2);
  auto [x, p] = testing::smooth_sample(3, 5, 410);
  auto d4 = polar_intersection_ideal(x, p, 4);
  REQUIRE(d4.generators().size() == 4);
  for (int s = 0; s < 4; ++s) CHECK(d4.generators()[s].homogeneous_degree() == 5 - s);
}

TEST_CASE("reciprocity examples") {
  std::mt19937_64 rng(402);
  for (int trial = 0; trial < 20; ++trial) {
    auto [x, p] = testing::smooth_sample(2, 4, 420 + trial);
    auto grad = x.gradient_at(p);
    // q in T_pX: contact >= 2 both ways.
    std::vector<Fp> v;
    for (;;) {
      v = testing::random_coords(field(), 4, rng);
      int j = 0;
      while (grad[j].is_zero()) ++j;
      Fp s = field().zero();
      for (int i = 0; i < 4; ++i) {
        if (i != j) s += grad[i] * v[i];
      }
      v[j] = -s / grad[j];
      if (!proportional<Fp>(v, p.coords())) break;
    }
    PointFp in_tangent(v);
    CHECK(check_reciprocity(x, p, in_tangent, 2));
    CHECK(line_contact_order(x, p, in_tangent.coords()).at_least(2));
    // Random q is off T_pX with high probability: false both ways.
    PointFp off(testing::random_direction(field(), p, rng));
    if (tangent_hyperplane(x, p).evaluate(off.coords()).is_zero()) continue;
    CHECK_FALSE(check_reciprocity(x, p, off, 2));
    CHECK_FALSE(line_contact_order(x, p, off.coords()).at_least(2));
  }
  auto [x, p] = testing::smooth_sample(2, 4, 440);
  CHECK_THROWS_AS(check_reciprocity(x, p, p, 2), DomainError);
}

TEST_CASE("reciprocity is exhaustive over F_11: conic, all poles in the plane") {
  auto conic = X("x0^2 + x1^2 - 3*x2^2 + x0*x2", 3, 11);
  auto t = exhaustive_reciprocity(conic, projective_points(PrimeField(11), 3));
  CHECK(t.checked > 1000);
  CHECK(t.mismatches == 0);
}

TEST_CASE("reciprocity is exhaustive over F_11: cubic surface, all point pairs") {
  auto cubic = X("x0^3 + 2*x1^3 + x2^3 + 5*x3^3 + x0*x1*x2", 4, 11);
  std::vector<PointFp> on_x;
  for (const auto& p : projective_points(PrimeField(11), 4)) {
    if (cubic.contains(p)) on_x.push_back(p);
  }
  auto t = exhaustive_reciprocity(cubic, on_x);
  CAPTURE(on_x.size());
  CHECK(t.checked > 10000);
  CHECK(t.mismatches == 0);
}

TEST_CASE("reciprocity on random instances over F_10007") {
  std::mt19937_64 rng(403);
  int mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 3;
    int d = 2 + trial % 5;
    auto [x, p] = testing::smooth_sample(n, d, 450 + trial);
    PointFp q(testing::random_direction(field(), p, rng));
    for (int h = 2; h <= d; ++h) {
      if (check_reciprocity(x, p, q, h) != line_contact_order(x, p, q.coords()).at_least(h)) {
        ++mismatches;
      }
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("connecting vertex ideal") {
  auto [x, q] = testing::smooth_sample(2, 4, 470);
  auto q2 = sample_point_on_X(x, 4711).point;
  REQUIRE_FALSE(q == q2);
  auto ideal = connecting_vertex_ideal(x, q, q2, 2);
  CHECK(ideal.generators().size() == 3);
  std::mt19937_64 rng(404);
  auto cert = certify_dimension(ideal, rng);
  CHECK(cert.structural_lower == 0);
  CHECK(projective_dimension(ideal) >= 0);
  CHECK_THROWS_AS(connecting_vertex_ideal(x, q, q, 2), DomainError);
  CHECK_THROWS_AS(connecting_vertex_ideal(x, q, q2, 3), HypothesisError);
  CHECK(connecting_vertex_ideal(x, q, q2, 3, true).generators().size() == 5);
  CHECK(connecting_max_h(4) == 3);
  CHECK(connecting_max_h(5) == 3);
}

TEST_CASE("connecting witness on a quadric surface") {
  auto [x, q] = testing::smooth_sample(2, 2, 480);
  PointFp q2 = q;
  for (std::uint64_t s = 1; q2 == q; ++s) q2 = sample_point_on_X(x, s).point;
  std::mt19937_64 rng(405);
  auto w = find_connecting_vertex(x, q, q2, 2, rng);
  REQUIRE(w.point.has_value());
  const auto& p = *w.point;
  CHECK(x.is_smooth_at(p));
  CHECK_FALSE(p == q);
  CHECK_FALSE(p == q2);
  CHECK(line_contact_order(x, p, q.coords()).at_least(2));
  CHECK(line_contact_order(x, p, q2.coords()).at_least(2));
  CHECK(check_reciprocity(x, p, q, 2));
  CHECK(check_reciprocity(x, p, q2, 2));
}

TEST_CASE("tiny field without a rational connecting vertex") {
  // Every rational point of P^3(F_3) is tried; none qualifies.
  auto x = X("x0*x1 + x2^2 + x3^2", 4, 3);
  PrimeField f3(3);
  auto q = testing::unit_point(f3, 4, 0);
  auto q2 = testing::unit_point(f3, 4, 1);
  std::mt19937_64 rng(406);
  auto w = find_connecting_vertex(x, q, q2, 2, rng);
  CHECK_FALSE(w.point.has_value());
  CHECK(w.to_string() == "NOT_FOUND_OVER_Fq");
  CHECK(w.outcome == "exhausted");
}

TEST_CASE("dimension certificate on a known ideal") {
  std::mt19937_64 rng(407);
  Ideal<Fp> ideal(5, field(), {P("x0*x1 - x2^2", 5), P("x3", 5)});
  auto cert = certify_dimension(ideal, rng);
  CHECK(cert.structural_lower == 2);
  REQUIRE(cert.exact.has_value());
  CHECK(*cert.exact == 2);
  auto m = random_subspace(field(), 5, 3, rng);
  CHECK(m.rank() == 3);
  CHECK(restrict_ideal(ideal, m).nvars() == 3);
}

}  // TEST_SUITE
