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
#include "hicone/grobner.hpp"
#include "support.hpp"

using namespace hicone;
using hicone::testing::field;

namespace {

PolyFp P(std::string_view s, int nvars = 4) { return parse_poly(s, nvars, 10007u); }

Ideal<Fp> I(std::vector<std::string_view> gens, int nvars = 4) {
  Ideal<Fp> ideal(nvars, field());
  for (auto g : gens) ideal.add(P(g, nvars));
  return ideal;
}

// Random forms of the given degrees; regular with overwhelming probability.
std::vector<PolyFp> random_ci(int nvars, const std::vector<int>& degrees, std::mt19937_64& rng) {
  std::vector<PolyFp> gens;
  for (int d : degrees) gens.push_back(testing::random_form(field(), nvars, d, rng));
  return gens;
}

PolyFp s_poly(const PolyFp& a, const PolyFp& b) {
  Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  auto ta = a.times_monomial(a.leading_monomial().quotient_of(l), a.leading_coefficient().inverse());
  auto tb = b.times_monomial(b.leading_monomial().quotient_of(l), b.leading_coefficient().inverse());
  return ta - tb;
}

}  // namespace

TEST_SUITE("grobner") {

TEST_CASE("basis examples") {
  auto gb = groebner_basis(I({"x1", "x0"}, 2), MonomialOrder::grevlex());
  REQUIRE(gb.basis().size() == 2);
  CHECK(gb.contains(P("x0", 2)));
  CHECK(gb.contains(P("x1", 2)));

  gb = groebner_basis(I({"x0*x3 - x1*x2", "x0"}), MonomialOrder::grevlex());
  REQUIRE(gb.basis().size() == 2);
  CHECK(((gb.basis()[0] == P("x1*x2") && gb.basis()[1] == P("x0")) ||
         (gb.basis()[0] == P("x0") && gb.basis()[1] == P("x1*x2"))));

  auto once = groebner_basis(I({"x0^2 - x1*x2"}), MonomialOrder::grevlex());
  auto twice = groebner_basis(I({"x0^2 - x1*x2", "x0^2 - x1*x2"}), MonomialOrder::grevlex());
  CHECK(once.basis() == twice.basis());
}

TEST_CASE("krull dimension examples") {
  CHECK(krull_dimension(I({"x0"}, 3)) == 2);
  CHECK(krull_dimension(I({"x0*x3 - x1*x2"})) == 3);
  CHECK(krull_dimension(I({"1"})) == -1);
  CHECK(krull_dimension(Ideal<Fp>(3, field())) == 3);
}

TEST_CASE("projective dimension examples") {
  CHECK(projective_dimension(I({"x0"})) == 2);
  CHECK(projective_dimension(I({"x0", "x1", "x2", "x3"})) == -1);
  CHECK_THROWS_AS(projective_dimension(I({"x0 + 1"})), DomainError);
}

TEST_CASE("hilbert function examples") {
  auto zero = Ideal<Fp>(4, field());
  for (int t = 0; t <= 6; ++t) CHECK(hilbert_function(zero, t) == binomial(3 + t, t));
  CHECK(hilbert_function(I({"x0", "x1"}), 2) == 3);
  CHECK_THROWS_AS(hilbert_function(I({"x0"}), -1), DomainError);
  std::mt19937_64 rng(201);
  Ideal<Fp> ci(4, field(), random_ci(4, {2, 3}, rng));
  CHECK(hilbert_values(ci, 10) == complete_intersection_series(4, {2, 3}, 10));
  auto series = complete_intersection_series(4, {2, 3}, 6);
  CHECK(series == std::vector<std::int64_t>{1, 4, 9, 15, 21, 27, 33});
}

TEST_CASE("regular sequence examples") {
  auto r = is_regular_sequence(std::vector{P("x0"), P("x1"), P("x2")});
  CHECK(r.regular);
  CHECK(r.alpha == 3);
  r = is_regular_sequence(std::vector{P("x0"), P("x0*x1")});
  CHECK_FALSE(r.regular);
  CHECK(r.alpha == 1);
  CHECK_THROWS_AS(is_regular_sequence(std::vector{P("x0"), P("0")}), DomainError);
}

TEST_CASE("eliminate examples") {
  auto e = eliminate(I({"x0 - x1"}, 3), 1);
  CHECK(groebner_basis(e, MonomialOrder::grevlex()).is_zero_ideal());
  e = eliminate(I({"x0 - x1", "x0 - x2"}, 3), 1);
  auto gb = groebner_basis(e, MonomialOrder::grevlex());
  REQUIRE(gb.basis().size() == 1);
  CHECK(gb.contains(P("x1 - x2", 3)));
  e = eliminate(I({"x0^2 - x1*x2"}, 3), 1);
  CHECK(groebner_basis(e, MonomialOrder::grevlex()).is_zero_ideal());
  CHECK_THROWS_AS(eliminate(I({"x0"}, 3), 4), DomainError);
}

TEST_CASE("step cap is reported, never a wrong answer") {
  std::mt19937_64 rng(202);
  Ideal<Fp> ci(5, field(), random_ci(5, {3, 3, 3}, rng));
  CHECK_THROWS_AS(groebner_basis(ci, MonomialOrder::grevlex(), GroebnerOptions{10}),
                  ResourceExhausted);
}

TEST_CASE("Buchberger criterion and reducedness on random ideals") {
  std::mt19937_64 rng(203);
  for (int trial = 0; trial < 20; ++trial) {
    CAPTURE(trial);
    int nvars = 3 + static_cast<int>(rng() % 3);
    std::vector<PolyFp> gens;
    int count = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) {
      gens.push_back(testing::random_form(field(), nvars, 2 + static_cast<int>(rng() % 2), rng, 30));
    }
    Ideal<Fp> ideal(nvars, field(), gens);
    auto gb = groebner_basis(ideal, MonomialOrder::grevlex());
    const auto& b = gb.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
      CHECK(b[i].leading_coefficient().is_one());
      for (std::size_t j = i + 1; j < b.size(); ++j) CHECK(gb.normal_form(s_poly(b[i], b[j])).is_zero());
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : b[j].terms()) CHECK_FALSE(b[i].leading_monomial().divides(t.monomial));
      }
    }
    for (const auto& g : gens) CHECK(gb.contains(g));
  }
}

TEST_CASE("lex and elimination orders agree on membership") {
  std::mt19937_64 rng(204);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<PolyFp> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(testing::random_form(field(), 3, 2, rng, 60));
    Ideal<Fp> ideal(3, field(), gens);
    auto a = groebner_basis(ideal, MonomialOrder::grevlex());
    auto b = groebner_basis(ideal, MonomialOrder::lex());
    auto c = groebner_basis(ideal, MonomialOrder::elimination(1));
    for (const auto& g : b.basis()) CHECK(a.contains(g));
    for (const auto& g : c.basis()) CHECK(a.contains(g));
    for (const auto& g : a.basis()) {
      CHECK(b.contains(g));
      CHECK(c.contains(g));
    }
  }
}

TEST_CASE("complete intersections match the product series") {
  std::mt19937_64 rng(205);
  for (int trial = 0; trial < 15; ++trial) {
    CAPTURE(trial);
    int nvars = 3 + static_cast<int>(rng() % 3);
    int r = 1 + static_cast<int>(rng() % (nvars - 1));
    std::vector<int> degrees;
    for (int i = 0; i < r; ++i) degrees.push_back(1 + static_cast<int>(rng() % 3));
    auto gens = random_ci(nvars, degrees, rng);
    auto reg = is_regular_sequence(gens);
    REQUIRE(reg.regular);
    CHECK(reg.alpha == r);
    Ideal<Fp> ideal(nvars, field(), gens);
    CHECK(hilbert_values(ideal, 8) == complete_intersection_series(nvars, degrees, 8));
    CHECK(projective_dimension(ideal) == nvars - 1 - r);
  }
}

TEST_CASE("regularity is invariant under scaling a generator") {
  std::mt19937_64 rng(206);
  for (int trial = 0; trial < 10; ++trial) {
    auto gens = random_ci(4, {1, 2}, rng);
    gens.push_back(gens[0] * gens[1]);
    auto base = is_regular_sequence(gens);
    CHECK(base.alpha == 2);
    for (auto& g : gens) g = g * testing::random_nonzero(field(), rng);
    auto scaled = is_regular_sequence(gens);
    CHECK(scaled.regular == base.regular);
    CHECK(scaled.alpha == base.alpha);
  }
}

TEST_CASE("hyperplane section lowers Hilbert function by at most the difference") {
  std::mt19937_64 rng(207);
  for (int trial = 0; trial < 10; ++trial) {
    auto gens = random_ci(5, {2, 2}, rng);
    Ideal<Fp> ideal(5, field(), gens);
    Ideal<Fp> cut = ideal;
    cut.add(testing::random_form(field(), 5, 1, rng));
    auto h = hilbert_values(ideal, 8);
    auto hc = hilbert_values(cut, 8);
    for (int t = 1; t <= 8; ++t) CHECK(hc[t] >= h[t] - h[t - 1]);
  }
}

TEST_CASE("binomial inequality at the end of the dimension argument") {
  for (int n = 2; n <= 64; ++n) {
    for (int alpha = 2; alpha <= n; ++alpha) {
      // C(n+2, alpha+1) can overflow int64 for large n; saturate by comparing
      // through the smaller of alpha+1 and n+1-alpha.
      int k = std::min(alpha + 1, n + 1 - alpha);
      CHECK(binomial(n + 2, k) >= n + 1);
    }
  }
}

}  // TEST_SUITE
