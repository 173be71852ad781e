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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hicone {

/// floor(sqrt(m)) for m >= 0, exactly.
std::int64_t isqrt(std::int64_t m);

/// floor((sqrt(m) + a) / b) for m >= 0 and b > 0, without floating point.
std::int64_t floor_sqrt_ratio(std::int64_t m, std::int64_t a, std::int64_t b);

/// Exact binomial coefficient with overflow detection (DomainError).
std::int64_t choose(std::int64_t n, std::int64_t k);

/// Lower and upper bound, each a plain integer value for a given d.
struct Interval {
  std::int64_t lower;
  std::int64_t upper;
  std::optional<std::int64_t> exact() const {
    return lower == upper ? std::optional<std::int64_t>(lower) : std::nullopt;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// n + 2 - h, for 2 <= h <= n + 1.
int expected_cone_dim(int n, int h);

struct IrrBound {
  std::int64_t lower;
  std::optional<std::int64_t> exact;
};

/// Bound on irr_k for a very general hypersurface: lower d - 1 - n + k, exact
/// for k >= n - 2. Needs n >= 3, d >= 2n + 2, 1 <= k <= n; HypothesisError
/// otherwise unless permissive.
IrrBound irr_bounds(int n, int d, int k, bool permissive = false);

/// Covering gonality: d - floor((sqrt(16n+9)-1)/2) <= covgon <= d -
/// floor((sqrt(16n+1)-1)/2). Needs n >= 2, d >= 2n + 2.
Interval covgon_bounds(int n, int d, bool permissive = false);

/// Connecting gonality: d - floor((sqrt(16n+25)-3)/2) <= conngon <= d -
/// floor((sqrt(8n+1)+1)/2). Needs n >= 4, d >= 2n + 2.
Interval conngon_bounds(int n, int d, bool permissive = false);

/// floor((sqrt(8n+1)+1)/2): the largest h for which the cone section is Fano.
int fano_max_h(int n);
/// The same threshold as max{h : h(h-1)/2 - 1 <= n - 1}, by direct search.
int fano_max_h_by_search(int n);

/// h(h-1)/2 - 1 - n: the canonical bundle of the cone section is O(this).
int lambda_canonical_twist(int n, int h);

/// Membership of n in the six quadratic families 4a^2+3a, 4a^2+5a,
/// 4a^2+5a+1, 4a^2+7a+2, 4a^2+9a+4, 4a^2+11a+6 (a >= 0).
bool exceptional_n(std::int64_t n);
/// floor((sqrt(16n+1)-1)/2) == floor((sqrt(16n+25)-3)/2).
bool floors_coincide(std::int64_t n);

struct ModuliDims {
  int n = 0;
  int d = 0;
  int h = 0;
  std::int64_t dim_L = 0;
  std::int64_t dim_V = 0;
  std::int64_t dim_Z_tangency = 0;
  std::int64_t dim_J = 0;
  std::int64_t fiber_f = 0;
  /// The fiber dimension as the explicit sum C(n+h,h) + ... + C(n+d,d).
  std::int64_t fiber_f_sum = 0;
  std::int64_t dim_W = 0;
  std::int64_t dim_Box = 0;
  std::int64_t dim_BoxF = 0;
  std::int64_t N = 0;
};

/// Needs 2 <= h <= min(n + 1, d); HypothesisError otherwise unless permissive
/// (which still requires 1 <= h <= d).
ModuliDims moduli_dimensions(int n, int d, int h, bool permissive = false);

/// Lower bound on the dimension of a covering (n - k) or connecting (2n - 2k)
/// family of k-dimensional subvarieties. Needs 1 <= k <= n.
int family_dim_lower_bounds(int n, int k, bool connecting);

enum class TableStatus { kHardCoded, kExact, kInterval };

std::string to_string(TableStatus s);

/// One row of the conngon table, with values written as d - offset.
struct TableRow {
  int n;
  TableStatus status;
  int lower_offset;
  int upper_offset;
  std::string source;
};

/// Rows for n_min..n_max (n >= 1). n <= 3 are the known special cases.
std::vector<TableRow> conngon_table(int n_min, int n_max);

/// "n,status,lower,upper,source" followed by one line per row.
std::string conngon_table_csv(const std::vector<TableRow>& rows);

/// Everything known for one (n, d).
struct BoundReport {
  int n = 0;
  int d = 0;
  /// Set when some formula was evaluated outside its hypotheses.
  bool hypothesis_unmet = false;
  std::optional<Interval> covgon;
  std::optional<Interval> conngon;
  /// irr_k lower bounds for k = 1..n.
  std::vector<std::int64_t> irr_lower;
  /// Exact irr_k for k = n-2, n-1, n (those with k >= 1).
  std::vector<std::pair<int, std::int64_t>> irr_top;
  int fano_max_h = 0;
  std::optional<std::int64_t> conngon_exact;
};

BoundReport bound_report(int n, int d, bool permissive = false);

}  // namespace hicone
