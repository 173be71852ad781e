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
#include "hicone/contact.hpp"
#include "support.hpp"

using namespace hicone;
using hicone::testing::field;

namespace {

HypersurfaceFp X(std::string_view s, int nvars = 4) {
  return HypersurfaceFp(parse_poly(s, nvars, 10007u));
}

PolyFp P(std::string_view s, int nvars = 4) { return parse_poly(s, nvars, 10007u); }

std::vector<Fp> vec(std::vector<std::int64_t> c) {
  std::vector<Fp> v;
  for (auto x : c) v.push_back(field()(x));
  return v;
}

Matrix<Fp> random_invertible(int n, std::mt19937_64& rng) {
  for (;;) {
    Matrix<Fp> m(n, n, field());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = testing::random_element(field(), rng);
    }
    if (m.inverse()) return m;
  }
}

// F = x_{n+1} x0^{d-1} + x1^d + ... + x_n^d: smooth at e0 with every F_i,
// 2 <= i < d, equal to zero.
HypersurfaceFp deep_tangency(int n, int d) {
  const int nv = n + 2;
  PrimeField f = field();
  auto F = PolyFp::variable(nv, f, nv - 1) * PolyFp::variable(nv, f, 0).pow(d - 1);
  for (int i = 1; i <= n; ++i) F = F + PolyFp::variable(nv, f, i).pow(d);
  return HypersurfaceFp(F);
}

}  // namespace

TEST_SUITE("contact") {

TEST_CASE("hypersurface preconditions") {
  CHECK_THROWS_AS(X("0"), DomainError);
  CHECK_THROWS_AS(X("x0*x1 + x2"), DomainError);
  CHECK_THROWS_AS(X("x0"), DomainError);
  CHECK_THROWS_AS(X("x0*x1", 2), DomainError);
  CHECK_THROWS_AS(HypersurfaceFp(parse_poly("x0^5 + x1^5 + x2^5", 3, 5u)), DomainError);
  auto q = X("x0*x3 - x1*x2");
  CHECK(q.n() == 2);
  CHECK(q.d() == 2);
}

TEST_CASE("taylor form examples") {
  auto q = X("x0*x3 - x1*x2");
  auto e0 = testing::unit_point(field(), 4, 0);
  CHECK(taylor_form(q, e0, 1) == P("x3"));
  auto cubic = X("x0^3 + x1^3 + x2^3 + x3^3");
  auto p = testing::point(field(), {1, 0, 0, -1});
  CHECK(taylor_form(cubic, p, 1) == P("3*x0 + 3*x3"));
  CHECK(taylor_form(cubic, p, 3) == cubic.F() * field()(6));
  CHECK_THROWS_AS(taylor_form(cubic, p, 0), DomainError);
  CHECK_THROWS_AS(taylor_form(cubic, p, 4), DomainError);
}

TEST_CASE("tangent hyperplane examples") {
  auto q = X("x0*x3 - x1*x2");
  auto e0 = testing::unit_point(field(), 4, 0);
  auto g1 = tangent_hyperplane(q, e0);
  CHECK(g1 == P("x3"));
  CHECK(g1.evaluate(e0.coords()).is_zero());
  CHECK_THROWS_AS(tangent_hyperplane(q, testing::point(field(), {1, 0, 0, 1})), DomainError);
  auto cone = X("x1*x2 - x3^2");
  try {
    tangent_hyperplane(cone, e0);
    FAIL("expected a singular point error");
  } catch (const SingularPointError& e) {
    CHECK(std::string(e.what()).find("singular point") != std::string::npos);
  }
}

TEST_CASE("cone ideal examples") {
  auto q = X("x0*x3 - x1*x2");
  auto e0 = testing::unit_point(field(), 4, 0);
  auto c = cone_ideal(q, e0, 2);
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0] == P("x3"));
  CHECK(projective_dimension(c.ideal()) == 2);
  CHECK_THROWS_AS(cone_ideal(q, e0, 3), DomainError);
  CHECK_THROWS_AS(cone_ideal(q, e0, 1), DomainError);
  for (int s = 0; s < 20; ++s) {
    auto [x, p] = testing::smooth_sample(2, 4, 300 + s);
    for (int h = 2; h <= 4; ++h) {
      for (const auto& g : cone_ideal(x, p, h).generators) CHECK(g.evaluate(p.coords()).is_zero());
    }
  }
}

TEST_CASE("general quadric surface: cone dimension matches") {
  auto [x, p] = testing::smooth_sample(2, 2, 310);
  CHECK(projective_dimension(cone_ideal(x, p, 2).ideal()) == 2);
}

TEST_CASE("line contact examples") {
  auto q = X("x0*x3 - x1*x2");
  auto e0 = testing::unit_point(field(), 4, 0);
  CHECK(line_contact_order(q, e0, vec({0, 1, 0, 0})).is_infinite());
  CHECK(line_contact_order(q, e0, vec({0, 0, 0, 1})) == ContactOrder::finite(1));
  CHECK_THROWS_AS(line_contact_order(q, e0, vec({3, 0, 0, 0})), DomainError);
  CHECK_THROWS_AS(ContactOrder::infinite().value(), DomainError);
  CHECK(ContactOrder::infinite().at_least(100));
}

TEST_CASE("Taylor identity on random samples") {
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 60; ++trial) {
    CAPTURE(trial);
    int n = 1 + static_cast<int>(rng() % 3);
    int d = 2 + static_cast<int>(rng() % 6);
    auto [x, p] = testing::smooth_sample(n, d, 400 + trial);
    auto v = testing::random_direction(field(), p, rng);
    auto c = restrict_to_line<Fp>(x.F(), p.coords(), v);
    auto forms = taylor_forms(x, p);
    REQUIRE(forms.size() == static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d; ++k) {
      CHECK(forms[k].evaluate(v) == c[k] * field()(testing::factorial(k)));
    }
  }
}

TEST_CASE("contact equivalence with vanishing of the cone generators") {
  std::mt19937_64 rng(312);
  for (int trial = 0; trial < 40; ++trial) {
    auto [x, p] = testing::smooth_sample(2, 5, 500 + trial);
    // Directions inside T_pX make the equivalence non-vacuous at h = 2.
    auto g1 = tangent_hyperplane(x, p);
    for (int rep = 0; rep < 5; ++rep) {
      auto v = testing::random_direction(field(), p, rng);
      if (rep % 2 == 0) {
        // project v into the kernel of G_1 along a coordinate with nonzero coefficient
        auto grad = x.gradient_at(p);
        int j = 0;
        while (grad[j].is_zero()) ++j;
        v[j] = field().zero();
        Fp val = g1.evaluate(v);
        v[j] = -val / grad[j];
        if (proportional<Fp>(v, p.coords())) continue;
      }
      auto order = line_contact_order(x, p, v);
      auto forms = taylor_forms(x, p);
      for (int h = 2; h <= 5; ++h) {
        bool vanish = true;
        for (int k = 1; k < h; ++k) vanish = vanish && forms[k].evaluate(v).is_zero();
        CHECK(order.at_least(h) == vanish);
      }
    }
  }
}

TEST_CASE("G_k vanishes at the vertex") {
  for (int s = 0; s < 20; ++s) {
    auto [x, p] = testing::smooth_sample(3, 6, 600 + s);
    auto forms = taylor_forms(x, p);
    for (int k = 1; k <= x.d(); ++k) CHECK(forms[k].evaluate(p.coords()).is_zero());
  }
}

TEST_CASE("equivariance under projectivities") {
  std::mt19937_64 rng(313);
  for (int trial = 0; trial < 20; ++trial) {
    auto [x, p] = testing::smooth_sample(2, 4, 700 + trial);
    auto m = random_invertible(4, rng);
    auto minv = *m.inverse();
    HypersurfaceFp y(compose_linear(x.F(), m));
    auto raw = minv.apply(p.coords());
    PointFp pm(raw);
    // Normalizing M^{-1} p rescales it by lambda; G_k has degree d - k in p.
    int i = 0;
    while (raw[i].is_zero()) ++i;
    Fp lambda = pm[i] / raw[i];
    for (int k = 1; k <= 4; ++k) {
      CHECK(taylor_form(y, pm, k) == compose_linear(taylor_form(x, p, k), m) * lambda.pow(4 - k));
    }
  }
}

TEST_CASE("normalized chart reproduces the explicit Taylor forms") {
  for (int trial = 0; trial < 30; ++trial) {
    CAPTURE(trial);
    int n = 2 + trial % 2;
    int d = 3 + trial % 4;
    auto [x, p] = testing::smooth_sample(n, d, 800 + trial);
    auto chart = normalize_chart(x, p);
    CHECK_FALSE(chart.c.is_zero());
    CHECK(chart.parts[0].is_zero());
    HypersurfaceFp y(chart.f_norm);
    auto e0 = testing::unit_point(field(), x.nvars(), 0);
    CHECK(y.contains(e0));
    for (int k = 1; k <= std::min(d, 4); ++k) {
      CHECK(taylor_form(y, e0, k) == chart_taylor_form(chart, d, k));
    }
    CHECK(taylor_form(y, e0, 1) == PolyFp::variable(x.nvars(), field(), x.nvars() - 1) * chart.c);
  }
}

TEST_CASE("already normalized input is a fixed point") {
  auto x = X("x3*x0 + x1^2");
  auto chart = normalize_chart(x, testing::unit_point(field(), 4, 0));
  CHECK(chart.transform == Matrix<Fp>::identity(4, field()));
  CHECK(chart.c.is_one());
  CHECK(chart.parts[2] == P("x1^2"));
}

TEST_CASE("normalized chart is conjugation stable") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 10; ++trial) {
    auto [x, p] = testing::smooth_sample(2, 4, 900 + trial);
    auto m = random_invertible(4, rng);
    HypersurfaceFp y(compose_linear(x.F(), m));
    PointFp pm(m.inverse()->apply(p.coords()));
    auto chart = normalize_chart(y, pm);
    HypersurfaceFp z(chart.f_norm);
    auto e0 = testing::unit_point(field(), 4, 0);
    for (int k = 1; k <= 3; ++k) CHECK(taylor_form(z, e0, k) == chart_taylor_form(chart, 4, k));
  }
}

TEST_CASE("normalize_chart rejects singular points") {
  CHECK_THROWS_AS(normalize_chart(X("x1*x2 - x3^2"), testing::unit_point(field(), 4, 0)),
                  SingularPointError);
}

TEST_CASE("tangent section multiplicity") {
  for (int s = 0; s < 20; ++s) {
    auto [x, p] = testing::smooth_sample(2, 5, 1000 + s);
    CHECK(tangent_section_multiplicity(x, p) == 2);
    CHECK(tangent_section_multiplicity_by_ideal(x, p) == 2);
  }
  // Quadric: the tangent plane section is two lines through p.
  auto q = X("x0*x3 - x1*x2");
  auto e0 = testing::unit_point(field(), 4, 0);
  CHECK(tangent_section_multiplicity(q, e0) == 2);
  // Fermat cubic at an Eckardt-type point: three lines through p.
  auto cubic = X("x0^3 + x1^3 + x2^3 + x3^3");
  auto p = testing::point(field(), {1, 0, 0, -1});
  CHECK(tangent_section_multiplicity(cubic, p) == 3);
  CHECK(tangent_section_multiplicity_by_ideal(cubic, p) == 3);
  for (int d = 3; d <= 6; ++d) {
    auto deep = deep_tangency(2, d);
    CHECK(tangent_section_multiplicity(deep, e0) == d);
    CHECK(tangent_section_multiplicity_by_ideal(deep, e0) == d);
  }
}

TEST_CASE("lambda section") {
  std::mt19937_64 rng(315);
  auto [x2, p2] = testing::smooth_sample(2, 5, 1100);
  CHECK(projective_dimension(lambda_section(x2, p2, 3, rng)) == 0);
  auto [x3, p3] = testing::smooth_sample(3, 6, 1101);
  auto conic = lambda_section(x3, p3, 3, rng);
  CHECK(projective_dimension(conic) == 1);
  auto h = hilbert_values(conic, 6);
  for (int t = 1; t <= 6; ++t) CHECK(h[t] == 2 * t + 1);
  CHECK_THROWS_AS(lambda_section(x3, p3, 2, rng), DomainError);
}

TEST_CASE("singular fixture is excluded by the smoothness gate") {
  // x0^{d-1} x3 + x3^d is singular along x0 = x3 = 0.
  for (int d = 3; d <= 5; ++d) {
    auto x = HypersurfaceFp(PolyFp::variable(4, field(), 0).pow(d - 1) * PolyFp::variable(4, field(), 3) +
                            PolyFp::variable(4, field(), 3).pow(d));
    auto bad = testing::point(field(), {0, 1, 5, 0});
    CHECK(x.contains(bad));
    CHECK_FALSE(x.is_smooth_at(bad));
    CHECK_THROWS_AS(tangent_hyperplane(x, bad), SingularPointError);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      auto s = sample_point_on_X(x, seed);
      CHECK(x.contains(s.point));
      bool grad_zero = true;
      for (auto g : x.gradient_at(s.point)) grad_zero = grad_zero && g.is_zero();
      CHECK(s.smooth_at == !grad_zero);
    }
  }
}

TEST_CASE("projective points enumeration") {
  PrimeField f(3);
  auto pts = projective_points(f, 3);
  CHECK(pts.size() == 13);
  CHECK_THROWS_AS(projective_points(PrimeField(10007), 4), ResourceExhausted);
}

}  // TEST_SUITE
