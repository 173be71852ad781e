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

#include "hicone/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "hicone/error.hpp"

namespace hicone {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require(bool ok, bool permissive, const std::string& what) {
  if (!ok && !permissive) throw HypothesisError(what);
}

std::string range_text(int n, int d) {
  return "n = " + std::to_string(n) + ", d = " + std::to_string(d);
}

}  // namespace

std::int64_t isqrt(std::int64_t m) {
  if (m < 0) throw DomainError("isqrt of a negative number");
  auto r = static_cast<std::int64_t>(__builtin_sqrt(static_cast<double>(m)));
  while (r > 0 && static_cast<__int128>(r) * r > m) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= m) ++r;
  return r;
}

std::int64_t floor_sqrt_ratio(std::int64_t m, std::int64_t a, std::int64_t b) {
  if (b <= 0) throw DomainError("floor_sqrt_ratio: denominator must be positive");
  // x <= sqrt(m), decided exactly.
  auto below_root = [m](std::int64_t x) { return x < 0 || static_cast<__int128>(x) * x <= m; };
  std::int64_t k = floor_div(isqrt(m) + a, b);
  while (below_root((k + 1) * b - a)) ++k;
  while (!below_root(k * b - a)) --k;
  return k;
}

std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw DomainError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::int64_t>(r);
}

int expected_cone_dim(int n, int h) {
  if (h < 2 || h > n + 1) {
    throw DomainError("expected_cone_dim: h = " + std::to_string(h) + " outside [2, n + 1 = " +
                      std::to_string(n + 1) + "]");
  }
  return n + 2 - h;
}

IrrBound irr_bounds(int n, int d, int k, bool permissive) {
  require(n >= 3 && d >= 2 * n + 2, permissive,
          "irr bounds need n >= 3 and d >= 2n + 2, got " + range_text(n, d));
  if (k < 1 || k > n) throw DomainError("irr_bounds: k must be in [1, n]");
  IrrBound b{d - 1 - n + k, std::nullopt};
  if (k >= n - 2) b.exact = b.lower;
  return b;
}

Interval covgon_bounds(int n, int d, bool permissive) {
  require(n >= 2 && d >= 2 * n + 2, permissive,
          "covgon bounds need n >= 2 and d >= 2n + 2, got " + range_text(n, d));
  if (n < 1) throw DomainError("covgon_bounds: n must be positive");
  return {d - floor_sqrt_ratio(16LL * n + 9, -1, 2), d - floor_sqrt_ratio(16LL * n + 1, -1, 2)};
}

Interval conngon_bounds(int n, int d, bool permissive) {
  require(n >= 4 && d >= 2 * n + 2, permissive,
          "conngon bounds need n >= 4 and d >= 2n + 2, got " + range_text(n, d));
  if (n < 1) throw DomainError("conngon_bounds: n must be positive");
  return {d - floor_sqrt_ratio(16LL * n + 25, -3, 2), d - floor_sqrt_ratio(8LL * n + 1, 1, 2)};
}

int fano_max_h(int n) {
  if (n < 2) throw DomainError("fano_max_h: n must be at least 2");
  return static_cast<int>(floor_sqrt_ratio(8LL * n + 1, 1, 2));
}

int fano_max_h_by_search(int n) {
  if (n < 2) throw DomainError("fano_max_h: n must be at least 2");
  std::int64_t h = 1;
  while ((h + 1) * h / 2 - 1 <= n - 1) ++h;
  return static_cast<int>(h);
}

int lambda_canonical_twist(int n, int h) {
  if (h < 3) throw DomainError("lambda_canonical_twist: h must be at least 3");
  return h * (h - 1) / 2 - 1 - n;
}

bool exceptional_n(std::int64_t n) {
  if (n < 0) return false;
  for (std::int64_t a = 0; 4 * a * a <= n; ++a) {
    const std::int64_t base = 4 * a * a;
    for (std::int64_t v : {base + 3 * a, base + 5 * a, base + 5 * a + 1, base + 7 * a + 2,
                           base + 9 * a + 4, base + 11 * a + 6}) {
      if (v == n) return true;
    }
  }
  return false;
}

bool floors_coincide(std::int64_t n) {
  return floor_sqrt_ratio(16 * n + 1, -1, 2) == floor_sqrt_ratio(16 * n + 25, -3, 2);
}

ModuliDims moduli_dimensions(int n, int d, int h, bool permissive) {
  if (n < 1 || d < 1 || h < 1 || h > d) {
    throw DomainError("moduli_dimensions: need n >= 1 and 1 <= h <= d");
  }
  require(h >= 2 && h <= std::min(n + 1, d), permissive,
          "moduli dimensions need 2 <= h <= min(n + 1, d), got h = " + std::to_string(h));
  ModuliDims m;
  m.n = n;
  m.d = d;
  m.h = h;
  m.dim_L = choose(d + n + 1, n + 1) - 1;
  m.dim_V = 2LL * n + choose(d + n, n) - choose(n + 2, 2);
  m.dim_Z_tangency = 2LL * n + choose(d + n + 1, n + 1) - choose(n + 2, 2);
  m.dim_J = choose(n + 1 + d, d) + n;
  m.fiber_f = choose(n + d + 1, d) - choose(n + h, h - 1);
  for (int i = h; i <= d; ++i) m.fiber_f_sum += choose(n + i, i);
  m.dim_W = choose(n + h, h - 1) + n;
  m.N = choose(d + n + 1, d) - 1;
  m.dim_Box = 3LL * n + 3 + m.N - 2LL * h;
  m.dim_BoxF = 3LL * n + 2 - 2LL * h;
  return m;
}

int family_dim_lower_bounds(int n, int k, bool connecting) {
  if (k < 1 || k > n) throw DomainError("family_dim_lower_bounds: k must be in [1, n]");
  return connecting ? 2 * (n - k) : n - k;
}

std::string to_string(TableStatus s) {
  switch (s) {
    case TableStatus::kHardCoded:
      return "hard-coded";
    case TableStatus::kExact:
      return "exact";
    case TableStatus::kInterval:
      return "interval";
  }
  return "?";
}

std::vector<TableRow> conngon_table(int n_min, int n_max) {
  if (n_min < 1 || n_min > n_max) throw DomainError("conngon_table: need 1 <= n_min <= n_max");
  std::vector<TableRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    if (n == 1) {
      rows.push_back({n, TableStatus::kHardCoded, 1, 1, "gonality of plane curves"});
    } else if (n == 2) {
      rows.push_back({n, TableStatus::kHardCoded, 2, 2, "tangent hyperplane sections"});
    } else if (n == 3) {
      rows.push_back({n, TableStatus::kHardCoded, 2, 2, "family dimension count on cone sections"});
    } else {
      int lo = static_cast<int>(floor_sqrt_ratio(16LL * n + 25, -3, 2));
      int hi = fano_max_h(n);
      if (lo == hi) {
        rows.push_back({n, TableStatus::kExact, lo, hi, "upper and lower bounds agree"});
      } else {
        rows.push_back({n, TableStatus::kInterval, lo, hi, "bounds differ"});
      }
    }
  }
  return rows;
}

std::string conngon_table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,status,lower,upper,source\n";
  for (const auto& r : rows) {
    out << r.n << ',' << to_string(r.status) << ",d-" << r.lower_offset << ",d-" << r.upper_offset
        << ',' << r.source << '\n';
  }
  return out.str();
}

BoundReport bound_report(int n, int d, bool permissive) {
  if (n < 1 || d < 2) throw DomainError("bound_report: need n >= 1 and d >= 2");
  BoundReport r;
  r.n = n;
  r.d = d;
  const bool range_ok = d >= 2 * n + 2;
  auto attempt = [&](bool ok, auto&& fn) {
    if (ok) {
      fn();
    } else if (permissive) {
      r.hypothesis_unmet = true;
      fn();
    }
  };
  attempt(n >= 2 && range_ok, [&] { r.covgon = covgon_bounds(n, d, true); });
  if (n <= 3) {
    attempt(range_ok, [&] {
      auto row = conngon_table(n, n).front();
      r.conngon = Interval{d - row.lower_offset, d - row.upper_offset};
    });
  } else {
    attempt(range_ok, [&] { r.conngon = conngon_bounds(n, d, true); });
  }
  attempt(n >= 3 && range_ok, [&] {
    for (int k = 1; k <= n; ++k) {
      auto b = irr_bounds(n, d, k, true);
      r.irr_lower.push_back(b.lower);
      if (b.exact) r.irr_top.push_back({k, *b.exact});
    }
  });
  if (n >= 2) r.fano_max_h = fano_max_h(n);
  if (r.conngon) r.conngon_exact = r.conngon->exact();
  return r;
}

}  // namespace hicone
