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

#include "doctest.h"
#include "hicone/polynomial.hpp"
#include "hicone/univariate.hpp"
#include "support.hpp"

using namespace hicone;
using hicone::testing::field;

namespace {

PolyFp P(std::string_view s, int nvars = 4, std::uint32_t q = 10007) {
  return parse_poly(s, nvars, q);
}

std::vector<Fp> vec(const PrimeField& f, std::vector<std::int64_t> c) {
  std::vector<Fp> v;
  for (auto x : c) v.push_back(f(x));
  return v;
}

}  // namespace

TEST_SUITE("polyring") {

TEST_CASE("field arithmetic mod q") {
  PrimeField f(7);
  CHECK(f(3) + f(5) == f(1));
  CHECK(f(-1) == f(6));
  CHECK(f(3) * f(3).inverse() == f.one());
  CHECK(f(2).pow(3) == f(1));
  CHECK(f(6).signed_value() == -1);
  CHECK_THROWS_AS(f.zero().inverse(), DomainError);
  CHECK_THROWS_AS(PrimeField(12), DomainError);
  CHECK_THROWS_AS(PrimeField(0), DomainError);
  CHECK(f.from_decimal("-15") == f(6));
}

TEST_CASE("rational arithmetic") {
  RationalField Q;
  auto half = Q(1) / Q(2);
  CHECK(half + half == Q.one());
  CHECK(Q.from_decimal("-3") * half == Q(-3) / Q(2));
  CHECK_THROWS_AS(Q.zero().inverse(), DomainError);
}

TEST_CASE("parse examples") {
  auto q = P("x0*x3 - x1*x2");
  CHECK(q.size() == 2);
  CHECK(q.degree() == 2);
  CHECK(q.homogeneous_degree() == 2);
  CHECK(P("0").is_zero());
  CHECK_THROWS_AS(P("x5 + 1"), DomainError);
  CHECK_THROWS_AS(P("x0 +* x1"), ParseError);
  CHECK_THROWS_AS(parse_poly("x0", 4, 0u), DomainError);
  CHECK(P("3*x0^2*x1 - x2^3") == P("-x2^3 + 3 * x0 ^ 2 * x1"));
  CHECK(P("x0^1") == P("x0"));
  CHECK(P("10010*x0") == P("3*x0"));
}

TEST_CASE("parse errors report a position") {
  try {
    P("x0 + + x1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("render round trip") {
  for (auto s : {"x0*x3 - x1*x2", "3*x0^2*x1 - x2^3", "0", "-x2^3", "x0 + 1"}) {
    auto p = P(s);
    CHECK(P(render(p)) == p);
  }
  CHECK(render(P("x0*x3 - x1*x2")) == "-x1*x2 + x0*x3");
  RationalField Q;
  auto r = parse_poly<Rational>("1/2*x0^2 - 3*x1*x2", 3, Q);
  CHECK(parse_poly<Rational>(render(r), 3, Q) == r);
}

TEST_CASE("partial derivative examples") {
  PrimeField f(10007);
  CHECK(P("x0^2*x1").derivative(0) == P("2*x0*x1"));
  CHECK(P("x0*x3").derivative(2).is_zero());
  CHECK(P("x0^3", 4, 3).derivative(0).is_zero());
  CHECK_THROWS_AS(P("x0").derivative(4), DomainError);
}

TEST_CASE("evaluate examples") {
  PrimeField f(10007);
  auto q = P("x0*x3 - x1*x2");
  CHECK(q.evaluate(vec(f, {1, 0, 0, 0})).is_zero());
  CHECK(q.evaluate(vec(f, {1, 1, 1, 1})).is_zero());
  PrimeField f7(7);
  CHECK(parse_poly("x0^2 + x1", 2, 7u).evaluate(vec(f7, {2, 3})).is_zero());
  CHECK_THROWS_AS(q.evaluate(vec(f, {1, 0, 0})), DomainError);
}

TEST_CASE("restrict_to_line examples") {
  PrimeField f(10007);
  auto q = P("x0*x3 - x1*x2");
  auto p = vec(f, {1, 0, 0, 0});
  auto c = restrict_to_line<Fp>(q, p, vec(f, {0, 1, 0, 0}));
  REQUIRE(c.size() == 3);
  CHECK(std::all_of(c.begin(), c.end(), [](Fp x) { return x.is_zero(); }));
  c = restrict_to_line<Fp>(q, p, vec(f, {0, 0, 0, 1}));
  CHECK(c == vec(f, {0, 1, 0}));
  CHECK_THROWS_AS(restrict_to_line<Fp>(q, p, vec(f, {2, 0, 0, 0})), DomainError);
}

TEST_CASE("projective points normalize") {
  PrimeField f(7);
  PointFp a(vec(f, {0, 3, 6, 1}));
  CHECK(a[0].is_zero());
  CHECK(a[1].is_one());
  CHECK(a == PointFp(vec(f, {0, 1, 2, 5})));
  CHECK(PointFp(a.coords()) == a);
  CHECK_THROWS_AS(PointFp(vec(f, {0, 0, 0})), DomainError);
}

TEST_CASE("ring axioms on random polynomials") {
  auto f = field();
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    CAPTURE(trial);
    auto a = testing::random_poly(f, 4, 3, rng);
    auto b = testing::random_poly(f, 4, 3, rng);
    auto c = testing::random_poly(f, 4, 2, rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    auto pt = testing::random_coords(f, 4, rng);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    for (int i = 0; i < 4; ++i) {
      CHECK((a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i));
    }
  }
}

TEST_CASE("Euler relation") {
  auto f = field();
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 1 + static_cast<int>(rng() % 6);
    auto a = testing::random_form(f, 5, k, rng, 50);
    PolyFp sum(5, f);
    for (int i = 0; i < 5; ++i) sum = sum + PolyFp::variable(5, f, i) * a.derivative(i);
    CHECK(sum == a * f(k));
  }
}

TEST_CASE("restrict_to_line is linear with c_0 = F(p) and c_d = F(v)") {
  auto f = field();
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    int d = 1 + static_cast<int>(rng() % 7);
    auto a = testing::random_form(f, 4, d, rng);
    auto b = testing::random_form(f, 4, d, rng);
    auto p = testing::random_coords(f, 4, rng);
    p[0] = f.one();
    auto v = testing::random_coords(f, 4, rng);
    if (proportional<Fp>(p, v)) continue;
    auto ca = restrict_to_line<Fp>(a, p, v);
    auto cb = restrict_to_line<Fp>(b, p, v);
    auto cab = restrict_to_line<Fp>(a + b, p, v);
    REQUIRE(ca.size() == static_cast<std::size_t>(d + 1));
    for (int k = 0; k <= d; ++k) CHECK(cab[k] == ca[k] + cb[k]);
    CHECK(ca[0] == a.evaluate(p));
    CHECK(ca[d] == a.evaluate(v));
  }
}

TEST_CASE("parse and render round trip on random polynomials") {
  auto f = field();
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = testing::random_poly(f, 5, 4, rng);
    CHECK(parse_poly(render(a), 5, 10007u) == a);
  }
}

TEST_CASE("univariate roots and factoring") {
  PrimeField f(10007);
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Fp> want;
    UPoly g = UPoly::constant(f, f.one());
    int k = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i) {
      Fp r = testing::random_element(f, rng);
      want.push_back(r);
      g = g * (UPoly::x(f) - UPoly::constant(f, r));
    }
    // an irreducible quadratic factor contributes no roots
    Fp nonsq = f(5);  // 5 is a non-residue mod 10007
    g = g * (UPoly::monomial(f, f.one(), 2) - UPoly::constant(f, nonsq));
    auto got = roots(g, rng);
    std::sort(want.begin(), want.end(), [](Fp a, Fp b) { return a.value() < b.value(); });
    want.erase(std::unique(want.begin(), want.end()), want.end());
    std::sort(got.begin(), got.end(), [](Fp a, Fp b) { return a.value() < b.value(); });
    CHECK(got == want);
    UPoly prod = UPoly::constant(f, g.lead());
    for (auto& [h, e] : factor(g, rng)) {
      CHECK(is_irreducible(h));
      for (int i = 0; i < e; ++i) prod = prod * h;
    }
    CHECK(prod == g);
  }
}

}  // TEST_SUITE
