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
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "hicone/sampler.hpp"
#include "json.hpp"

namespace hicone {

namespace {

std::string point_text(const PointFp& p) {
  std::string s;
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i].signed_value());
  }
  return s;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(std::string_view text, std::string_view key) {
  std::string t = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw DomainError("invalid value '" + t + "' for " + std::string(key));
  }
  return value;
}

bool parse_bool(std::string_view text, std::string_view key) {
  std::string t = trim(text);
  if (t == "1" || t == "true" || t == "yes") return true;
  if (t == "0" || t == "false" || t == "no") return false;
  throw DomainError("invalid boolean '" + t + "' for " + std::string(key));
}

// The hypersurface and base point shared by every campaign.
struct Setup {
  std::optional<HypersurfaceFp> x;
  std::optional<PointFp> p;
  std::string reason;
};

Setup draw_setup(const CampaignConfig& cfg, std::uint64_t seed) {
  Setup s;
  s.x = random_hypersurface(cfg.n, cfg.d, cfg.modulus, derive_seed(seed, 0, "hypersurface"));
  try {
    auto sample = sample_point_on_X(*s.x, derive_seed(seed, 0, "point"));
    if (!sample.smooth_at) {
      s.reason = "singular sample at " + point_text(sample.point) + "; resampling F";
      return s;
    }
    s.p = sample.point;
  } catch (const ResourceExhausted& e) {
    s.reason = e.what();
  }
  return s;
}

TrialRecord base_record(const Setup& s, int h, int expected) {
  TrialRecord r;
  r.h = h;
  r.expected = expected;
  r.f_digest = digest(s.x->F());
  r.point = point_text(*s.p);
  return r;
}

void finish_record(TrialRecord& r, bool ok, const HypersurfaceFp& x) {
  r.status = ok ? "pass" : "fail";
  if (!ok) r.polynomial = render(x.F());
}

AttemptOutcome dimension_attempt(const CampaignConfig& cfg, std::uint64_t seed) {
  AttemptOutcome out;
  Setup s = draw_setup(cfg, seed);
  if (!s.p) {
    out.reason = s.reason;
    return out;
  }
  GroebnerOptions gb{cfg.gb_step_cap};
  for (int h = cfg.h_lo; h <= cfg.h_hi; ++h) {
    TrialRecord r = base_record(s, h, cfg.n + 2 - h);
    try {
      r.computed = projective_dimension(cone_ideal(*s.x, *s.p, h).ideal(), gb);
      finish_record(r, *r.computed == r.expected, *s.x);
    } catch (const ResourceExhausted& e) {
      r.status = "resource";
      r.detail = e.what();
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

AttemptOutcome multiplicity_attempt(const CampaignConfig& cfg, std::uint64_t seed) {
  AttemptOutcome out;
  Setup s = draw_setup(cfg, seed);
  if (!s.p) {
    out.reason = s.reason;
    return out;
  }
  out.records.push_back(multiplicity_record(*s.x, *s.p));
  return out;
}

AttemptOutcome connecting_attempt(const CampaignConfig& cfg, std::uint64_t seed) {
  AttemptOutcome out;
  Setup s = draw_setup(cfg, seed);
  if (!s.p) {
    out.reason = s.reason;
    return out;
  }
  const auto& x = *s.x;
  std::optional<PointFp> q2;
  try {
    auto sample = sample_point_on_X(x, derive_seed(seed, 0, "second point"));
    if (sample.smooth_at && !(sample.point == *s.p)) q2 = sample.point;
  } catch (const ResourceExhausted&) {
  }
  if (!q2) {
    out.reason = "no second smooth point distinct from the first; resampling F";
    return out;
  }
  const PointFp& q = *s.p;
  for (int h = cfg.h_lo; h <= cfg.h_hi; ++h) {
    TrialRecord r = base_record(s, h, cfg.n + 2 - 2 * h);
    r.point.clear();
    r.extra["q"] = point_text(q);
    r.extra["q2"] = point_text(*q2);
    try {
      auto ideal = connecting_vertex_ideal(x, q, *q2, h, cfg.permissive);
      std::mt19937_64 cert_rng(derive_seed(seed, h, "certificate"));
      CertifyOptions copt;
      copt.gb.step_cap = cfg.gb_step_cap;
      auto cert = certify_dimension(ideal, cert_rng, copt);
      r.computed = cert.exact ? *cert.exact : cert.structural_lower;
      r.extra["certificate"] = cert.exact ? "exact" : "structural";
      r.extra["structural_lower"] = std::to_string(cert.structural_lower);
      if (!cert.note.empty()) r.extra["certificate_note"] = cert.note;
      bool ok = cert.structural_lower >= r.expected && (!cert.exact || *cert.exact >= r.expected);

      std::mt19937_64 w_rng(derive_seed(seed, h, "witness"));
      WitnessOptions wopt;
      wopt.max_points = cfg.witness_budget;
      wopt.gb.step_cap = cfg.gb_step_cap;
      wopt.permissive = cfg.permissive;
      auto w = find_connecting_vertex(x, q, *q2, h, w_rng, wopt);
      r.witness_found = w.point.has_value();
      r.point = w.to_string();
      r.extra["witness_outcome"] = w.outcome;
      r.extra["witness_slices"] = std::to_string(w.slices_tried);
      if (w.point) {
        // Re-verify the witness independently of the search.
        ok = ok && line_contact_order(x, *w.point, q.coords()).at_least(h) &&
             line_contact_order(x, *w.point, q2->coords()).at_least(h);
      }
      finish_record(r, ok, x);
    } catch (const ResourceExhausted& e) {
      r.status = "resource";
      r.detail = e.what();
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

AttemptOutcome projection_attempt(const CampaignConfig& cfg, std::uint64_t seed) {
  AttemptOutcome out;
  Setup s = draw_setup(cfg, seed);
  if (!s.p) {
    out.reason = s.reason;
    return out;
  }
  for (int h = cfg.h_lo; h <= cfg.h_hi; ++h) {
    TrialRecord r = base_record(s, h, cfg.d - h);
    try {
      std::mt19937_64 rng(derive_seed(seed, h, "projection"));
      ZeroDimOptions zopt;
      zopt.gb.step_cap = cfg.gb_step_cap;
      auto res = verify_projection_degree(*s.x, *s.p, h, rng, zopt);
      r.computed = res.degree;
      r.extra["lambda_length"] = std::to_string(res.lambda_length);
      r.extra["scheme_length"] = std::to_string(res.scheme_length);
      r.extra["bezout"] = res.bezout_ok ? "ok" : "violated";
      std::string fibers;
      int degenerate = 0;
      for (const auto& f : res.fibers) {
        if (!fibers.empty()) fibers += ';';
        fibers += "orbit " + std::to_string(f.orbit_degree) + ": contact " +
                  f.contact.to_string() + ", residual " + std::to_string(f.residual);
        degenerate += f.generic ? 0 : 1;
      }
      r.extra["fibers"] = fibers;
      r.extra["degenerate_fibers"] = std::to_string(degenerate);
      finish_record(r, res.degree && *res.degree == r.expected && res.bezout_ok, *s.x);
    } catch (const DomainError& e) {
      r.detail = e.what();
      finish_record(r, false, *s.x);
    } catch (const ResourceExhausted& e) {
      r.status = "resource";
      r.detail = e.what();
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

std::vector<TrialRecord> run_trial(CampaignKind kind, const CampaignConfig& cfg, int trial) {
  std::vector<TrialRecord> out;
  bool prior_fail = false;
  const std::uint64_t trial_seed = derive_seed(cfg.master_seed, static_cast<std::uint64_t>(trial), "trial");
  for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
    const std::uint64_t seed = derive_seed(trial_seed, static_cast<std::uint64_t>(attempt), "attempt");
    AttemptOutcome o = replay_attempt(kind, cfg, seed);
    for (auto& r : o.records) {
      r.trial = trial;
      r.attempt = attempt;
      r.seed = seed;
    }
    if (o.records.empty()) {
      TrialRecord r;
      r.trial = trial;
      r.attempt = attempt;
      r.seed = seed;
      r.status = "resampled";
      r.detail = o.reason;
      out.push_back(std::move(r));
      continue;
    }
    bool any_fail = std::any_of(o.records.begin(), o.records.end(),
                                [](const TrialRecord& r) { return r.status == "fail"; });
    if (!any_fail) {
      for (auto& r : o.records) out.push_back(std::move(r));
      return out;
    }
    if (!prior_fail) {
      // A random F may be special; one fresh draw before calling it a failure.
      prior_fail = true;
      for (auto& r : o.records) {
        r.status = "resampled";
        r.detail = r.detail.empty() ? "failure on first draw; resampling F"
                                    : r.detail + "; resampling F";
        r.polynomial.clear();
        out.push_back(std::move(r));
      }
      continue;
    }
    for (auto& r : o.records) {
      if (r.status == "fail") r.extra["red_flag"] = "failed on two independent hypersurfaces";
      out.push_back(std::move(r));
    }
    return out;
  }
  TrialRecord r;
  r.trial = trial;
  r.attempt = cfg.retry_budget;
  r.status = "resource";
  r.detail = "retry budget of " + std::to_string(cfg.retry_budget) + " hypersurfaces exhausted";
  out.push_back(std::move(r));
  return out;
}

nlohmann::json config_json(CampaignKind kind, const CampaignConfig& c) {
  nlohmann::json j;
  j["campaign"] = to_string(kind);
  j["n"] = c.n;
  j["d"] = c.d;
  j["modulus"] = c.modulus;
  j["h_lo"] = c.h_lo;
  j["h_hi"] = c.h_hi;
  j["trials"] = c.trials;
  j["master_seed"] = c.master_seed;
  j["gb_step_cap"] = c.gb_step_cap;
  j["retry_budget"] = c.retry_budget;
  j["witness_budget"] = c.witness_budget;
  j["permissive"] = c.permissive;
  j["genericity"] = "random coefficients over F_q, one resample on failure";
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::kDimension:
      return "dimension";
    case CampaignKind::kMultiplicity:
      return "multiplicity";
    case CampaignKind::kConnecting:
      return "connecting";
    case CampaignKind::kProjection:
      return "projection";
  }
  return "?";
}

CampaignKind parse_campaign_kind(std::string_view name) {
  for (auto k : {CampaignKind::kDimension, CampaignKind::kMultiplicity, CampaignKind::kConnecting,
                 CampaignKind::kProjection}) {
    if (to_string(k) == name) return k;
  }
  throw DomainError("unknown campaign '" + std::string(name) +
                    "' (expected dimension, multiplicity, connecting or projection)");
}

std::pair<int, int> parse_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    int v = parse_number<int>(text, "range");
    return {v, v};
  }
  int lo = parse_number<int>(text.substr(0, dots), "range start");
  int hi = parse_number<int>(text.substr(dots + 2), "range end");
  if (lo > hi) throw DomainError("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

CampaignConfig parse_config(std::string_view text, CampaignConfig c) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "n") {
      c.n = parse_number<int>(value, key);
    } else if (key == "d") {
      c.d = parse_number<int>(value, key);
    } else if (key == "modulus") {
      c.modulus = parse_number<std::uint32_t>(value, key);
    } else if (key == "h") {
      std::tie(c.h_lo, c.h_hi) = parse_range(value);
    } else if (key == "h_lo") {
      c.h_lo = parse_number<int>(value, key);
    } else if (key == "h_hi") {
      c.h_hi = parse_number<int>(value, key);
    } else if (key == "trials") {
      c.trials = parse_number<int>(value, key);
    } else if (key == "seed" || key == "master_seed") {
      c.master_seed = parse_number<std::uint64_t>(value, key);
    } else if (key == "gb_step_cap") {
      c.gb_step_cap = parse_number<std::uint64_t>(value, key);
    } else if (key == "retry_budget") {
      c.retry_budget = parse_number<int>(value, key);
    } else if (key == "threads") {
      c.threads = parse_number<int>(value, key);
    } else if (key == "witness_budget") {
      c.witness_budget = parse_number<std::int64_t>(value, key);
    } else if (key == "permissive") {
      c.permissive = parse_bool(value, key);
    } else {
      throw DomainError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return c;
}

CampaignConfig load_config(const std::string& path, CampaignConfig base) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), base);
}

void validate(const CampaignConfig& c, CampaignKind kind) {
  if (c.n < 1 || c.n + 2 > kMaxVars) {
    throw DomainError("n must be in [1, " + std::to_string(kMaxVars - 2) + "], got " +
                      std::to_string(c.n));
  }
  if (c.d < 2 || c.d > kMaxDegree) throw DomainError("d must be in [2, 127]");
  PrimeField field(c.modulus);
  if (c.modulus <= static_cast<std::uint32_t>(c.d)) {
    throw DomainError("modulus " + std::to_string(c.modulus) + " must exceed the degree " +
                      std::to_string(c.d));
  }
  if (c.trials <= 0) throw DomainError("trials must be positive");
  if (c.retry_budget <= 0) throw DomainError("retry_budget must be positive");
  if (kind == CampaignKind::kMultiplicity) return;
  if (c.h_lo > c.h_hi) throw DomainError("empty h range");
  if (c.h_lo < 2 || c.h_hi > c.d) throw DomainError("h range must lie in [2, d]");
  const int cap = std::min(c.n + 1, c.d);
  if (c.h_hi > cap && !c.permissive) {
    throw HypothesisError("h <= min(n + 1, d) = " + std::to_string(cap) + " violated by h = " +
                          std::to_string(c.h_hi));
  }
  if (kind == CampaignKind::kConnecting && c.h_hi > connecting_max_h(c.n) && !c.permissive) {
    throw HypothesisError("connecting campaign needs h <= floor(n/2) + 1 = " +
                          std::to_string(connecting_max_h(c.n)) + ", got h = " +
                          std::to_string(c.h_hi));
  }
  if (kind == CampaignKind::kProjection && (c.h_lo != c.n + 1 || c.h_hi != c.n + 1 || c.n < 2)) {
    throw DomainError("projection campaign needs n >= 2 and h = n + 1, so that the cone is a "
                      "finite union of lines");
  }
}

TrialRecord multiplicity_record(const HypersurfaceFp& x, const PointFp& p) {
  TrialRecord r;
  r.h = 2;
  r.expected = 2;
  r.f_digest = digest(x.F());
  r.point = point_text(p);
  auto chart = tangent_section_multiplicity(x, p);
  auto ideal = tangent_section_multiplicity_by_ideal(x, p);
  r.computed = chart ? *chart : -1;
  r.extra["by_ideal"] = ideal ? std::to_string(*ideal) : "none";
  const bool ok = chart == std::optional<int>(2) && ideal == std::optional<int>(2);
  if (chart != ideal) r.detail = "chart and ideal computations disagree";
  finish_record(r, ok, x);
  return r;
}

AttemptOutcome replay_attempt(CampaignKind kind, const CampaignConfig& cfg, std::uint64_t seed) {
  switch (kind) {
    case CampaignKind::kDimension:
      return dimension_attempt(cfg, seed);
    case CampaignKind::kMultiplicity:
      return multiplicity_attempt(cfg, seed);
    case CampaignKind::kConnecting:
      return connecting_attempt(cfg, seed);
    case CampaignKind::kProjection:
      return projection_attempt(cfg, seed);
  }
  throw DomainError("unknown campaign kind");
}

CampaignReport run_campaign(CampaignKind kind, const CampaignConfig& cfg) {
  validate(cfg, kind);
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<TrialRecord>> per_trial(cfg.trials);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (int t = next++; t < cfg.trials; t = next++) {
      try {
        per_trial[t] = run_trial(kind, cfg, t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, cfg.trials);
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  CampaignReport report;
  report.kind = kind;
  report.config = cfg;
  report.summary.trials = cfg.trials;
  for (auto& trial : per_trial) {
    for (auto& r : trial) {
      auto& s = report.summary;
      ++s.records;
      if (r.status == "pass") ++s.passes;
      if (r.status == "fail") ++s.fails;
      if (r.status == "resampled") ++s.resamples;
      if (r.status == "resource") ++s.resource;
      if (r.extra.count("red_flag")) ++s.red_flags;
      if (r.witness_found && (r.status == "pass" || r.status == "fail")) {
        ++(*r.witness_found ? s.witnesses_found : s.witnesses_missed);
      }
      report.records.push_back(std::move(r));
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CampaignReport verify_dimension_theorem(const CampaignConfig& cfg) {
  return run_campaign(CampaignKind::kDimension, cfg);
}
CampaignReport verify_multiplicity_lemma(const CampaignConfig& cfg) {
  return run_campaign(CampaignKind::kMultiplicity, cfg);
}
CampaignReport verify_connecting_lemma(const CampaignConfig& cfg) {
  return run_campaign(CampaignKind::kConnecting, cfg);
}
CampaignReport verify_projection_campaign(const CampaignConfig& cfg) {
  return run_campaign(CampaignKind::kProjection, cfg);
}

std::string report_json(const CampaignReport& report) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["config"] = config_json(report.kind, report.config);
  j["results"] = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json t;
    t["trial"] = r.trial;
    t["attempt"] = r.attempt;
    t["h"] = r.h;
    t["seed"] = hex64(r.seed);
    t["f_digest"] = hex64(r.f_digest);
    t["point"] = r.point;
    t["computed"] = r.computed ? nlohmann::json(*r.computed) : nlohmann::json(nullptr);
    t["expected"] = r.expected;
    t["status"] = r.status;
    t["detail"] = r.detail;
    if (r.witness_found) t["witness_found"] = *r.witness_found;
    if (!r.extra.empty()) t["extra"] = r.extra;
    if (!r.polynomial.empty()) t["polynomial"] = r.polynomial;
    j["results"].push_back(std::move(t));
  }
  const auto& s = report.summary;
  j["summary"] = {{"trials", s.trials},         {"records", s.records},
                  {"passes", s.passes},         {"fails", s.fails},
                  {"resamples", s.resamples},   {"resource", s.resource},
                  {"red_flags", s.red_flags},   {"witnesses_found", s.witnesses_found},
                  {"witnesses_missed", s.witnesses_missed},
                  {"all_pass", report.all_pass()}};
  return j.dump(2) + "\n";
}

std::string report_csv(const CampaignReport& report) {
  std::ostringstream out;
  out << "trial,attempt,h,seed,f_digest,point,computed,expected,status,detail\n";
  for (const auto& r : report.records) {
    out << r.trial << ',' << r.attempt << ',' << r.h << ',' << hex64(r.seed) << ','
        << hex64(r.f_digest) << ',' << csv_field(r.point) << ','
        << (r.computed ? std::to_string(*r.computed) : "") << ',' << r.expected << ','
        << r.status << ',' << csv_field(r.detail) << '\n';
  }
  return out.str();
}

std::string report_text(const CampaignReport& report) {
  const auto& s = report.summary;
  const auto& c = report.config;
  std::ostringstream out;
  out << to_string(report.kind) << " campaign: n=" << c.n << " d=" << c.d << " h=" << c.h_lo
      << ".." << c.h_hi << " q=" << c.modulus << " trials=" << c.trials
      << " seed=" << c.master_seed << '\n';
  out << "  pass " << s.passes << ", fail " << s.fails << ", resampled " << s.resamples
      << ", resource " << s.resource << ", red flags " << s.red_flags << '\n';
  if (s.witnesses_found + s.witnesses_missed > 0) {
    out << "  witnesses found " << s.witnesses_found << " of "
        << (s.witnesses_found + s.witnesses_missed) << '\n';
  }
  for (const auto& r : report.records) {
    if (r.status != "fail") continue;
    out << "  FAIL trial " << r.trial << " h=" << r.h << " seed=" << hex64(r.seed)
        << " computed=" << (r.computed ? std::to_string(*r.computed) : "none")
        << " expected=" << r.expected << ' ' << r.detail << '\n';
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "  wall time %.2f s\n", report.wall_seconds);
  out << buf;
  return out.str();
}

}  // namespace hicone
