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


#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "hicone/error.hpp"
#include "hicone/invariants.hpp"

using namespace hicone;

TEST_SUITE("invariants") {

TEST_CASE("integer square roots") {
  for (std::int64_t m = 0; m < 20000; ++m) {
    auto r = isqrt(m);
    CHECK((r * r <= m && (r + 1) * (r + 1) > m));
  }
  CHECK(isqrt(std::int64_t{1} << 62) == std::int64_t{1} << 31);
  CHECK(floor_sqrt_ratio(49, 1, 2) == 4);
  CHECK(floor_sqrt_ratio(48, 1, 2) == 3);
  CHECK(floor_sqrt_ratio(57, -1, 2) == 3);
  CHECK(floor_sqrt_ratio(0, -1, 2) == -1);
  CHECK_THROWS_AS(isqrt(-1), DomainError);
  CHECK_THROWS_AS(floor_sqrt_ratio(4, 0, 0), DomainError);
  CHECK(choose(6, 3) == 20);
  CHECK_THROWS_AS(choose(200, 100), DomainError);
}

TEST_CASE("floor_sqrt_ratio against long double on random inputs") {
  std::mt19937_64 rng(501);
  for (int trial = 0; trial < 20000; ++trial) {
    std::int64_t m = static_cast<std::int64_t>(rng() % 100000000);
    std::int64_t a = static_cast<std::int64_t>(rng() % 21) - 10;
    std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 8);
    long double v = (std::sqrt(static_cast<long double>(m)) + a) / b;
    auto got = floor_sqrt_ratio(m, a, b);
    // Away from integers the float value is trustworthy.
    if (std::fabs(v - std::round(v)) > 1e-9L) CHECK(got == static_cast<std::int64_t>(std::floor(v)));
    CHECK(got * b - a <= isqrt(m));
  }
}

TEST_CASE("expected cone dimension") {
  CHECK(expected_cone_dim(5, 2) == 5);
  CHECK(expected_cone_dim(3, 4) == 1);
  CHECK(expected_cone_dim(4, 3) == 3);
  CHECK_THROWS_AS(expected_cone_dim(3, 5), DomainError);
  CHECK_THROWS_AS(expected_cone_dim(3, 1), DomainError);
}

TEST_CASE("irr bounds") {
  auto b = irr_bounds(5, 12, 5);
  CHECK(b.lower == 11);
  CHECK(b.exact == 11);
  b = irr_bounds(5, 12, 3);
  CHECK(b.lower == 9);
  CHECK(b.exact == 9);
  b = irr_bounds(5, 12, 1);
  CHECK(b.lower == 7);
  CHECK_FALSE(b.exact.has_value());
  CHECK_THROWS_AS(irr_bounds(5, 11, 1), HypothesisError);
  CHECK_THROWS_AS(irr_bounds(2, 12, 1), HypothesisError);
  CHECK_THROWS_AS(irr_bounds(5, 12, 6), DomainError);
  CHECK(irr_bounds(5, 11, 1, true).lower == 6);
}

TEST_CASE("covgon bounds") {
  CHECK(covgon_bounds(3, 8) == Interval{5, 5});
  CHECK(covgon_bounds(4, 10) == Interval{7, 7});
  for (int d = 2; d < 30; ++d) CHECK(covgon_bounds(1, d, true).upper == d - 1);
  CHECK_THROWS_AS(covgon_bounds(3, 7), HypothesisError);
}

TEST_CASE("conngon bounds") {
  auto c = conngon_bounds(4, 10);
  CHECK(c == Interval{7, 7});
  CHECK(c.exact() == 7);
  CHECK(conngon_bounds(6, 14) == Interval{10, 10});
  // The n = 9 gap: lower d - 5, upper d - 4.
  c = conngon_bounds(9, 20);
  CHECK(c == Interval{15, 16});
  CHECK_FALSE(c.exact().has_value());
  CHECK_THROWS_AS(conngon_bounds(3, 20), HypothesisError);
  CHECK_THROWS_AS(conngon_bounds(9, 19), HypothesisError);
}

TEST_CASE("fano threshold") {
  CHECK(fano_max_h(4) == 3);
  CHECK(fano_max_h(6) == 4);
  CHECK(fano_max_h(2) == 2);
  std::mt19937_64 rng(502);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 1000000);
    int h = fano_max_h(n);
    CHECK(h == fano_max_h_by_search(n));
    CHECK(static_cast<std::int64_t>(h) * (h - 1) / 2 <= n);
    CHECK(static_cast<std::int64_t>(h + 1) * h / 2 > n);
  }
}

TEST_CASE("canonical twist of the cone section") {
  for (int n = 3; n <= 200; ++n) CHECK(lambda_canonical_twist(n, fano_max_h(n)) <= 0);
  for (int h = 3; h <= 30; ++h) {
    int m = h * (h - 1) / 2 - 2;
    CHECK(lambda_canonical_twist(m + 1, h) == 0);
  }
  CHECK(lambda_canonical_twist(4, 4) == 1);
  CHECK_THROWS_AS(lambda_canonical_twist(4, 2), DomainError);
}

TEST_CASE("exceptional n") {
  CHECK(exceptional_n(4));
  CHECK(exceptional_n(7));
  CHECK_FALSE(exceptional_n(5));
  for (std::int64_t n = 4; n <= 100000; ++n) {
    if (exceptional_n(n) != floors_coincide(n)) {
      CAPTURE(n);
      FAIL("exceptional families disagree with the floor predicate");
    }
  }
}

TEST_CASE("conngon consistency brute force") {
  for (int n = 4; n <= 100000; ++n) {
    auto c = conngon_bounds(n, 2 * n + 2);
    if (c.lower > c.upper) {
      CAPTURE(n);
      FAIL("lower bound exceeds upper bound");
    }
  }
}

TEST_CASE("moduli dimensions") {
  auto m = moduli_dimensions(1, 3, 2, true);
  CHECK(m.fiber_f == 7);
  CHECK(m.fiber_f_sum == 7);
  m = moduli_dimensions(2, 3, 2);
  CHECK(m.dim_L == 19);
  CHECK(m.N + 1 == choose(6, 3));
  CHECK_THROWS_AS(moduli_dimensions(2, 5, 4), HypothesisError);
  for (int n = 1; n <= 12; ++n) {
    for (int d = 1; d <= 30; ++d) {
      for (int h = 1; h <= d; ++h) {
        auto x = moduli_dimensions(n, d, h, true);
        CHECK(x.fiber_f == x.fiber_f_sum);
        CHECK(x.dim_W == x.dim_J - x.fiber_f);
        CHECK(x.dim_BoxF == x.dim_Box - (x.N + 1));
        CHECK(x.N + 1 == choose(d + n + 1, d));
      }
    }
  }
}

TEST_CASE("family dimension lower bounds") {
  CHECK(family_dim_lower_bounds(3, 1, false) == 2);
  CHECK(family_dim_lower_bounds(3, 1, true) == 4);
  for (int n = 1; n < 10; ++n) {
    CHECK(family_dim_lower_bounds(n, n, false) == 0);
    CHECK(family_dim_lower_bounds(n, n, true) == 0);
  }
  CHECK_THROWS_AS(family_dim_lower_bounds(3, 0, true), DomainError);
}

TEST_CASE("conngon table") {
  auto rows = conngon_table(1, 16);
  REQUIRE(rows.size() == 16);
  auto value = [&](int n) { return rows[n - 1]; };
  CHECK(value(1).lower_offset == 1);
  CHECK(value(2).lower_offset == 2);
  CHECK(value(3).lower_offset == 2);
  for (int n : {1, 2, 3}) CHECK(value(n).status == TableStatus::kHardCoded);
  for (int n : {4, 5}) CHECK(value(n).upper_offset == 3);
  for (int n : {6, 7, 8}) CHECK(value(n).upper_offset == 4);
  for (int n : {10, 11, 12}) CHECK(value(n).upper_offset == 5);
  for (int n : {15, 16}) CHECK(value(n).upper_offset == 6);
  for (int n = 4; n <= 16; ++n) {
    bool gap = n == 9 || n == 13 || n == 14;
    CHECK((value(n).status == TableStatus::kInterval) == gap);
    CHECK((value(n).lower_offset != value(n).upper_offset) == gap);
  }
  CHECK_THROWS_AS(conngon_table(5, 4), DomainError);
}

TEST_CASE("golden table CSV") {
  std::ifstream in(HICONE_GOLDEN_DIR "/conngon_table.csv", std::ios::binary);
  REQUIRE(in.good());
  std::stringstream want;
  want << in.rdbuf();
  CHECK(conngon_table_csv(conngon_table(1, 16)) == want.str());
}

TEST_CASE("bound report chains") {
  for (int n = 4; n <= 40; ++n) {
    for (int d = 2 * n + 2; d <= 2 * n + 20; ++d) {
      auto r = bound_report(n, d);
      REQUIRE(r.covgon.has_value());
      REQUIRE(r.conngon.has_value());
      CHECK(r.covgon->lower <= r.covgon->upper);
      CHECK(r.conngon->lower <= r.conngon->upper);
      CHECK(r.covgon->lower <= r.conngon->lower);
      CHECK(r.conngon->lower <= d - 1);
      for (std::size_t k = 1; k < r.irr_lower.size(); ++k) CHECK(r.irr_lower[k - 1] <= r.irr_lower[k]);
      CHECK(r.irr_lower.back() == d - 1);
      CHECK_FALSE(r.hypothesis_unmet);
    }
  }
  auto r = bound_report(4, 10);
  CHECK(r.conngon_exact == 7);
  r = bound_report(2, 6);
  REQUIRE(r.conngon.has_value());
  CHECK(r.conngon->lower == 4);
  r = bound_report(4, 6, true);
  CHECK(r.hypothesis_unmet);
  CHECK_FALSE(bound_report(4, 6).covgon.has_value());
}

}  // TEST_SUITE
