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
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hicone/contact.hpp"
#include "hicone/polar.hpp"
#include "hicone/zero_dim.hpp"

namespace hicone {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);
/// Seed for an independent stream: hash of (master, index, purpose).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::string_view purpose);

/// FNV-1a over the terms of f.
std::uint64_t digest(const PolyFp& f);
std::string hex64(std::uint64_t v);

/// All monomials of degree d in nvars variables, in a fixed order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

/// Uniform coefficients on every degree-d monomial in n + 2 variables,
/// redrawn if all of them vanish.
HypersurfaceFp random_hypersurface(int n, int d, std::uint32_t modulus, std::uint64_t seed);

struct PointSample {
  PointFp point;
  bool on_x = false;
  bool smooth_at = false;
  /// Index of the random line the point was found on.
  int line_index = 0;
  /// Index of the chosen root among the sorted roots on that line.
  int root_index = 0;
};

/// Rational points of X on the line through a and a + v (the point v
/// itself excluded); the whole line when it lies in X is reported as a.
std::vector<PointFp> rational_points_on_line(const HypersurfaceFp& x, const std::vector<Fp>& a,
                                             const std::vector<Fp>& v, std::mt19937_64& rng);

/// A rational point of X found on a seeded-random line. Throws
/// ResourceExhausted when `line_budget` lines carry no rational point.
PointSample sample_point_on_X(const HypersurfaceFp& x, std::uint64_t seed, int line_budget = 64);

// ---------------------------------------------------------------------------
// Projection from the vertex of the cone.

struct FiberSample {
  /// Degree over F_q of the Galois orbit of cone lines this fiber stands for.
  int orbit_degree = 0;
  ContactOrder contact = ContactOrder::infinite();
  /// Intersections of the line with X away from the vertex, with
  /// multiplicity, including the point at the far end of the direction.
  int residual = 0;
  /// Residual intersections at the chosen direction point itself.
  int at_direction = 0;
  /// False for lines inside X or with contact above the expected order.
  bool generic = false;
};

struct ProjectionResult {
  int cone_dimension = 0;
  /// Length of the finite set Lambda (cone lines counted over the closure).
  int lambda_length = 0;
  std::vector<FiberSample> fibers;
  /// Common residual over the generic fibers; unset when they disagree or
  /// none is generic.
  std::optional<int> degree;
  /// Length of the scheme X cap V^h_p, from its Groebner basis.
  int scheme_length = 0;
  /// Every cone line meets X in d points with multiplicity (contact plus
  /// residual), and these add up to scheme_length.
  bool bezout_ok = true;
};

/// Degree of the projection from p of X cap V^h_p onto Lambda^h_p when the
/// cone is a finite union of lines (h = n + 1). Throws DomainError if the
/// cone does not have dimension 1.
ProjectionResult verify_projection_degree(const HypersurfaceFp& x, const PointFp& p, int h,
                                          std::mt19937_64& rng, const ZeroDimOptions& options = {});

// ---------------------------------------------------------------------------
// Campaigns.

enum class CampaignKind { kDimension, kMultiplicity, kConnecting, kProjection };

std::string to_string(CampaignKind kind);
/// Throws DomainError on an unknown name.
CampaignKind parse_campaign_kind(std::string_view name);

struct CampaignConfig {
  int n = 2;
  int d = 4;
  std::uint32_t modulus = 10007;
  int h_lo = 2;
  int h_hi = 2;
  int trials = 10;
  std::uint64_t master_seed = 1;
  std::uint64_t gb_step_cap = 20'000'000;
  /// Fresh hypersurfaces tried per trial before giving up.
  int retry_budget = 16;
  /// Worker threads; 0 picks the hardware concurrency.
  int threads = 0;
  /// Largest Bezout number attempted in connecting-witness searches.
  std::int64_t witness_budget = 2000;
  bool permissive = false;
};

/// "lo..hi" or a single integer.
std::pair<int, int> parse_range(std::string_view text);

/// Plain "key = value" lines; '#' starts a comment. Unknown keys and
/// malformed values throw DomainError.
CampaignConfig parse_config(std::string_view text, CampaignConfig base = {});
CampaignConfig load_config(const std::string& path, CampaignConfig base = {});

/// Throws DomainError or HypothesisError naming the violated condition.
void validate(const CampaignConfig& cfg, CampaignKind kind);

struct TrialRecord {
  int trial = 0;
  int attempt = 0;
  int h = 0;
  /// Seed of the attempt; replay_attempt(kind, cfg, seed) reproduces it.
  std::uint64_t seed = 0;
  std::uint64_t f_digest = 0;
  std::string point;
  std::optional<int> computed;
  int expected = 0;
  /// "pass", "fail", "resampled" or "resource".
  std::string status;
  std::string detail;
  /// Set for campaigns with a soft witness target.
  std::optional<bool> witness_found;
  std::map<std::string, std::string> extra;
  /// Full equation, recorded for failures only.
  std::string polynomial;
};

struct CampaignSummary {
  int trials = 0;
  int records = 0;
  int passes = 0;
  int fails = 0;
  int resamples = 0;
  int resource = 0;
  int red_flags = 0;
  int witnesses_found = 0;
  int witnesses_missed = 0;
};

struct CampaignReport {
  CampaignKind kind = CampaignKind::kDimension;
  CampaignConfig config;
  std::vector<TrialRecord> records;
  CampaignSummary summary;
  /// Wall-clock seconds; informational, never serialized to JSON.
  double wall_seconds = 0;

  bool all_pass() const { return summary.fails == 0; }
};

/// One attempt of a campaign trial: a fresh hypersurface drawn from `seed`.
/// Records carry status "pass" or "fail"; an empty result means the attempt
/// was unusable (singular sample, no rational point) and `reason` says why.
struct AttemptOutcome {
  std::vector<TrialRecord> records;
  std::string reason;
};

AttemptOutcome replay_attempt(CampaignKind kind, const CampaignConfig& cfg, std::uint64_t seed);

CampaignReport run_campaign(CampaignKind kind, const CampaignConfig& cfg);

CampaignReport verify_dimension_theorem(const CampaignConfig& cfg);
CampaignReport verify_multiplicity_lemma(const CampaignConfig& cfg);
CampaignReport verify_connecting_lemma(const CampaignConfig& cfg);
CampaignReport verify_projection_campaign(const CampaignConfig& cfg);

/// Multiplicity record for a fixed (X, p), as the multiplicity campaign
/// computes it: pass exactly when both methods give 2.
TrialRecord multiplicity_record(const HypersurfaceFp& x, const PointFp& p);

/// Canonical JSON with top-level keys config, results, summary, version.
std::string report_json(const CampaignReport& report);
/// Header row plus one line per record.
std::string report_csv(const CampaignReport& report);
/// Human-readable summary, including the wall-clock time.
std::string report_text(const CampaignReport& report);

/// Library version string embedded in reports.
inline constexpr const char* kVersion = "1.0.0";

}  // namespace hicone
