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

#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "hicone/sampler.hpp"
#include "json.hpp"

namespace hicone::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::uint32_t modulus = 10007;
  bool permissive = false;
  std::uint64_t gb_step_cap = 20'000'000;
  std::uint64_t seed = 1;
  std::string format;
};

// What a command produced, before serialization.
struct Output {
  json config = json::object();
  json results = json::object();
  json summary = json::object();
  std::string text;
  int exit_code = kExitOk;
};

std::string serialize(const Output& o, const std::string& format) {
  if (format == "json") {
    json j{{"config", o.config}, {"results", o.results}, {"summary", o.summary},
           {"version", kVersion}};
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string s = "key,value\n";
    for (auto& [k, v] : o.results.items()) {
      std::string val = v.is_string() ? v.get<std::string>() : v.dump();
      if (val.find_first_of(",\"") != std::string::npos) {
        std::string q = "\"";
        for (char c : val) {
          if (c == '"') q += '"';
          q += c;
        }
        val = q + "\"";
      }
      s += k + "," + val + "\n";
    }
    return s;
  }
  if (format == "text") return o.text;
  throw DomainError("unsupported format '" + format + "' (expected json, csv or text)");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

template <FieldElement K>
K parse_element(const typename K::field_type& f, const std::string& text) {
  std::string t = strip(text);
  auto slash = t.find('/');
  if (slash == std::string::npos) return f.from_decimal(t);
  K den = f.from_decimal(strip(t.substr(slash + 1)));
  if (den.is_zero()) throw DomainError("zero denominator in '" + t + "'");
  return f.from_decimal(strip(t.substr(0, slash))) * den.inverse();
}

template <FieldElement K>
std::vector<K> parse_vector(const typename K::field_type& f, const std::string& text, int size,
                            const std::string& what) {
  auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != size) {
    throw DomainError(what + " needs " + std::to_string(size) + " comma-separated coordinates, got " +
                      std::to_string(parts.size()));
  }
  std::vector<K> v;
  for (const auto& p : parts) v.push_back(parse_element<K>(f, p));
  return v;
}

template <FieldElement K>
std::string element_text(const K& c) {
  if constexpr (std::is_same_v<K, Fp>) {
    return std::to_string(c.signed_value());
  } else {
    return Polynomial<K>::constant(1, c.field(), c).is_zero()
               ? "0"
               : render(Polynomial<K>::constant(1, c.field(), c));
  }
}

template <FieldElement K>
std::string point_text(const ProjPoint<K>& p) {
  std::string s;
  for (int i = 0; i < p.size(); ++i) s += (i ? "," : "") + element_text(p[i]);
  return s;
}

// Runs `fn` with F_q, or with Q when the modulus is 0.
template <typename Fn>
auto with_field(std::uint32_t modulus, Fn&& fn) {
  if (modulus == 0) return fn(RationalField{});
  return fn(PrimeField(modulus));
}

PrimeField prime_field(std::uint32_t modulus, const std::string& command) {
  if (modulus == 0) throw DomainError(command + " works over F_q only; pass a prime --modulus");
  return PrimeField(modulus);
}

json base_config(const Globals& g, const std::string& command) {
  return json{{"command", command}, {"modulus", g.modulus}, {"permissive", g.permissive}};
}

// ---------------------------------------------------------------------------

struct ConeArgs {
  std::string poly;
  int n = 0;
  std::string point;
  int h = 2;
};

Output cmd_cone(const Globals& g, const ConeArgs& a) {
  return with_field(g.modulus, [&](auto field) {
    using K = typename decltype(field)::element_type;
    Output o;
    o.config = base_config(g, "cone");
    o.config["poly"] = a.poly;
    o.config["n"] = a.n;
    o.config["point"] = a.point;
    o.config["h"] = a.h;
    Hypersurface<K> x(parse_poly<K>(a.poly, a.n + 2, field));
    ProjPoint<K> p(parse_vector<K>(field, a.point, x.nvars(), "--point"));
    auto cone = cone_ideal(x, p, a.h);
    std::ostringstream text;
    json gens = json::array();
    for (std::size_t k = 0; k < cone.generators.size(); ++k) {
      std::string g_k = render(cone.generators[k]);
      gens.push_back(g_k);
      text << "G_" << k + 1 << " = " << g_k << "\n";
    }
    int dim = projective_dimension(cone.ideal(), GroebnerOptions{g.gb_step_cap});
    text << "dim = " << dim << "\n";
    const bool singular = cone.generators.front().is_zero();
    o.summary["singular_point"] = singular;
    if (singular) text << "note: p is a singular point of X\n";
    o.results["generators"] = gens;
    o.results["dim"] = dim;
    if (a.h <= a.n + 1) {
      o.results["expected_dim"] = expected_cone_dim(a.n, a.h);
      text << "expected = " << expected_cone_dim(a.n, a.h) << "\n";
      o.summary["matches_expected"] = dim == expected_cone_dim(a.n, a.h);
    } else {
      o.summary["matches_expected"] = nullptr;
      text << "expected = n/a (h > n + 1)\n";
    }
    o.text = text.str();
    return o;
  });
}

struct DimArgs {
  std::string gens;
  int nvars = 0;
  int hilbert = -1;
};

Output cmd_dim(const Globals& g, const DimArgs& a) {
  return with_field(g.modulus, [&](auto field) {
    using K = typename decltype(field)::element_type;
    Output o;
    o.config = base_config(g, "dim");
    o.config["gens"] = a.gens;
    o.config["nvars"] = a.nvars;
    Ideal<K> ideal(a.nvars, field);
    for (const auto& s : split(a.gens, ';')) {
      if (!strip(s).empty()) ideal.add(parse_poly<K>(s, a.nvars, field));
    }
    GroebnerOptions gb{g.gb_step_cap};
    std::ostringstream text;
    int krull = krull_dimension(ideal, gb);
    o.results["krull_dimension"] = krull;
    text << "krull = " << krull << "\n";
    if (ideal.homogeneous()) {
      o.results["projective_dimension"] = krull - 1;
      text << "dim = " << krull - 1 << "\n";
    }
    if (a.hilbert >= 0) {
      auto values = hilbert_values(ideal, a.hilbert, gb);
      o.results["hilbert"] = values;
      text << "hilbert =";
      for (auto v : values) text << ' ' << v;
      text << "\n";
    }
    o.text = text.str();
    return o;
  });
}

struct ContactArgs {
  std::string poly;
  int n = 0;
  std::string point;
  std::string direction;
  std::vector<int> k;
  bool multiplicity = false;
};

Output cmd_contact(const Globals& g, const ContactArgs& a) {
  return with_field(g.modulus, [&](auto field) {
    using K = typename decltype(field)::element_type;
    Output o;
    o.config = base_config(g, "contact");
    o.config["poly"] = a.poly;
    o.config["n"] = a.n;
    o.config["point"] = a.point;
    Hypersurface<K> x(parse_poly<K>(a.poly, a.n + 2, field));
    ProjPoint<K> p(parse_vector<K>(field, a.point, x.nvars(), "--point"));
    std::ostringstream text;
    if (!a.direction.empty()) {
      o.config["direction"] = a.direction;
      auto v = parse_vector<K>(field, a.direction, x.nvars(), "--direction");
      auto order = line_contact_order(x, p, v);
      o.results["contact"] = order.to_string();
      text << "contact = " << order.to_string() << "\n";
    }
    for (int k : a.k) {
      std::string g_k = render(taylor_form(x, p, k));
      o.results["G_" + std::to_string(k)] = g_k;
      text << "G_" << k << " = " << g_k << "\n";
    }
    if (a.multiplicity) {
      auto m = tangent_section_multiplicity(x, p);
      o.results["tangent_section_multiplicity"] = m ? json(*m) : json("none");
      text << "tangent_section_multiplicity = " << (m ? std::to_string(*m) : "none") << "\n";
    }
    if (text.str().empty()) {
      throw DomainError("contact needs at least one of --direction, --k, --multiplicity");
    }
    o.text = text.str();
    return o;
  });
}

struct PolarArgs {
  std::string poly;
  int n = 0;
  std::string q;
  int s = -1;
  int h = -1;
  std::string p;
};

Output cmd_polar(const Globals& g, const PolarArgs& a) {
  return with_field(g.modulus, [&](auto field) {
    using K = typename decltype(field)::element_type;
    Output o;
    o.config = base_config(g, "polar");
    o.config["poly"] = a.poly;
    o.config["n"] = a.n;
    o.config["q"] = a.q;
    Hypersurface<K> x(parse_poly<K>(a.poly, a.n + 2, field));
    ProjPoint<K> q(parse_vector<K>(field, a.q, x.nvars(), "--q"));
    std::ostringstream text;
    if (a.s >= 0) {
      std::string pol = render(polar_poly(x, q, a.s));
      o.results["polar"] = pol;
      text << "Pol^" << a.s << " = " << pol << "\n";
    }
    if (a.h >= 0) {
      auto ideal = polar_intersection_ideal(x, q, a.h);
      json gens = json::array();
      for (const auto& f : ideal.generators()) gens.push_back(render(f));
      int dim = projective_dimension(ideal, GroebnerOptions{g.gb_step_cap});
      o.results["generators"] = gens;
      o.results["dim"] = dim;
      text << "Delta generators: " << gens.size() << "\ndim = " << dim << "\n";
      if (!a.p.empty()) {
        ProjPoint<K> p(parse_vector<K>(field, a.p, x.nvars(), "--p"));
        bool polar_side = check_reciprocity(x, p, q, a.h);
        bool contact_side = line_contact_order(x, p, q.coords()).at_least(a.h);
        o.results["in_delta"] = polar_side;
        o.results["contact_at_least_h"] = contact_side;
        o.summary["reciprocity_holds"] = polar_side == contact_side;
        text << "p in Delta = " << (polar_side ? "true" : "false") << "\ncontact >= h = "
             << (contact_side ? "true" : "false") << "\n";
        if (polar_side != contact_side) o.exit_code = kExitFailure;
      }
    }
    if (text.str().empty()) throw DomainError("polar needs --s or --h");
    o.text = text.str();
    return o;
  });
}

struct ConnectArgs {
  std::string poly;
  int n = 0;
  std::string q;
  std::string q2;
  int h = 2;
  std::int64_t budget = 2000;
};

Output cmd_connect(const Globals& g, const ConnectArgs& a) {
  PrimeField field = prime_field(g.modulus, "connect");
  Output o;
  o.config = base_config(g, "connect");
  o.config["poly"] = a.poly;
  o.config["n"] = a.n;
  o.config["q"] = a.q;
  o.config["q2"] = a.q2;
  o.config["h"] = a.h;
  o.config["seed"] = g.seed;
  HypersurfaceFp x(parse_poly<Fp>(a.poly, a.n + 2, field));
  PointFp q(parse_vector<Fp>(field, a.q, x.nvars(), "--q"));
  PointFp q2(parse_vector<Fp>(field, a.q2, x.nvars(), "--q2"));
  auto ideal = connecting_vertex_ideal(x, q, q2, a.h, g.permissive);
  std::mt19937_64 rng(g.seed);
  CertifyOptions copt;
  copt.gb.step_cap = g.gb_step_cap;
  auto cert = certify_dimension(ideal, rng, copt);
  WitnessOptions wopt;
  wopt.max_points = a.budget;
  wopt.gb.step_cap = g.gb_step_cap;
  wopt.permissive = g.permissive;
  auto w = find_connecting_vertex(x, q, q2, a.h, rng, wopt);
  const int expected = a.n + 2 - 2 * a.h;
  const bool ok = cert.structural_lower >= expected && (!cert.exact || *cert.exact >= expected);
  o.results["structural_lower"] = cert.structural_lower;
  o.results["exact_dim"] = cert.exact ? json(*cert.exact) : json(nullptr);
  o.results["expected_lower"] = expected;
  o.results["witness"] = w.to_string();
  o.results["witness_outcome"] = w.outcome;
  o.summary["dimension_bound_holds"] = ok;
  o.summary["witness_found"] = w.point.has_value();
  std::ostringstream text;
  text << "dim >= " << cert.structural_lower << " (structural)\n";
  if (cert.exact) text << "dim = " << *cert.exact << " (linear slices)\n";
  if (!cert.note.empty()) text << "note: " << cert.note << "\n";
  text << "expected >= " << expected << "\nwitness = " << w.to_string() << " (" << w.outcome
       << ")\n";
  o.text = text.str();
  o.exit_code = ok ? kExitOk : kExitFailure;
  return o;
}

struct ProjectArgs {
  std::string poly;
  int n = 2;
  int d = 5;
  std::string point;
  int h = -1;
};

Output cmd_project(const Globals& g, const ProjectArgs& a) {
  PrimeField field = prime_field(g.modulus, "project");
  Output o;
  o.config = base_config(g, "project");
  o.config["n"] = a.n;
  o.config["seed"] = g.seed;
  std::optional<HypersurfaceFp> x;
  std::optional<PointFp> p;
  if (!a.poly.empty()) {
    o.config["poly"] = a.poly;
    x.emplace(parse_poly<Fp>(a.poly, a.n + 2, field));
    if (a.point.empty()) throw DomainError("--poly needs --point");
    p.emplace(parse_vector<Fp>(field, a.point, x->nvars(), "--point"));
  } else {
    o.config["d"] = a.d;
    x.emplace(random_hypersurface(a.n, a.d, g.modulus, derive_seed(g.seed, 0, "hypersurface")));
    auto sample = sample_point_on_X(*x, derive_seed(g.seed, 0, "point"));
    if (!sample.smooth_at) throw DomainError("sampled point is singular; try another --seed");
    p = sample.point;
    o.results["polynomial"] = render(x->F());
  }
  const int h = a.h > 0 ? a.h : a.n + 1;
  o.config["h"] = h;
  std::mt19937_64 rng(g.seed);
  ZeroDimOptions zopt;
  zopt.gb.step_cap = g.gb_step_cap;
  auto res = verify_projection_degree(*x, *p, h, rng, zopt);
  const int expected = x->d() - h;
  std::ostringstream text;
  text << "point = " << point_text(*p) << "\n";
  text << "lambda points = " << res.lambda_length << "\n";
  json fibers = json::array();
  for (const auto& f : res.fibers) {
    fibers.push_back({{"orbit_degree", f.orbit_degree},
                      {"contact", f.contact.to_string()},
                      {"residual", f.residual},
                      {"generic", f.generic}});
    text << "  orbit of degree " << f.orbit_degree << ": contact " << f.contact.to_string()
         << ", residual " << f.residual << (f.generic ? "" : " (degenerate)") << "\n";
  }
  text << "scheme length = " << res.scheme_length << "\n";
  text << "degree = " << (res.degree ? std::to_string(*res.degree) : "undetermined")
       << "\nexpected = " << expected << "\n";
  o.results["point"] = point_text(*p);
  o.results["lambda_length"] = res.lambda_length;
  o.results["fibers"] = fibers;
  o.results["scheme_length"] = res.scheme_length;
  o.results["degree"] = res.degree ? json(*res.degree) : json(nullptr);
  o.results["expected"] = expected;
  const bool ok = res.degree == std::optional<int>(expected) && res.bezout_ok;
  o.summary["bezout_ok"] = res.bezout_ok;
  o.summary["matches_expected"] = ok;
  o.text = text.str();
  o.exit_code = ok ? kExitOk : kExitFailure;
  return o;
}

struct VerifyArgs {
  std::string campaign;
  std::string config_path;
  std::string output;
  int n = 0;
  int d = 0;
  std::string h;
  int trials = 0;
  int threads = 0;
  int retry_budget = 0;
  std::int64_t witness_budget = 0;
};

}  // namespace

std::string emit_bounds(const BoundReport& r, const std::string& format) {
  json res;
  res["n"] = r.n;
  res["d"] = r.d;
  res["hypothesis_unmet"] = r.hypothesis_unmet;
  res["covgon_lower"] = r.covgon ? json(r.covgon->lower) : json(nullptr);
  res["covgon_upper"] = r.covgon ? json(r.covgon->upper) : json(nullptr);
  res["conngon_lower"] = r.conngon ? json(r.conngon->lower) : json(nullptr);
  res["conngon_upper"] = r.conngon ? json(r.conngon->upper) : json(nullptr);
  res["conngon_exact"] = r.conngon_exact ? json(*r.conngon_exact) : json(nullptr);
  res["irr_k_lower"] = r.irr_lower;
  json top = json::object();
  for (auto [k, v] : r.irr_top) top[std::to_string(k)] = v;
  res["irr_top"] = top;
  res["fano_max_h"] = r.fano_max_h;
  if (format == "json") {
    json j{{"config", {{"command", "bounds"}, {"n", r.n}, {"d", r.d}}},
           {"results", res},
           {"summary", {{"hypothesis_unmet", r.hypothesis_unmet}}},
           {"version", kVersion}};
    return j.dump(2) + "\n";
  }
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; };
  std::string irr;
  for (std::size_t i = 0; i < r.irr_lower.size(); ++i) {
    irr += (i ? ";" : "") + std::to_string(r.irr_lower[i]);
  }
  if (format == "csv") {
    std::ostringstream s;
    s << "n,d,covgon_lower,covgon_upper,conngon_lower,conngon_upper,conngon_exact,fano_max_h,"
         "irr_k_lower,hypothesis_unmet\n";
    s << r.n << ',' << r.d << ',' << opt(r.covgon ? std::optional(r.covgon->lower) : std::nullopt)
      << ',' << opt(r.covgon ? std::optional(r.covgon->upper) : std::nullopt) << ','
      << opt(r.conngon ? std::optional(r.conngon->lower) : std::nullopt) << ','
      << opt(r.conngon ? std::optional(r.conngon->upper) : std::nullopt) << ','
      << opt(r.conngon_exact) << ',' << r.fano_max_h << ',' << irr << ','
      << (r.hypothesis_unmet ? "true" : "false") << '\n';
    return s.str();
  }
  if (format == "text") {
    std::ostringstream s;
    s << "n = " << r.n << ", d = " << r.d << "\n";
    if (r.covgon) s << "covgon in [" << r.covgon->lower << ", " << r.covgon->upper << "]\n";
    if (r.conngon) {
      s << "conngon in [" << r.conngon->lower << ", " << r.conngon->upper << "]";
      if (r.conngon_exact) s << " = " << *r.conngon_exact;
      s << "\n";
    }
    if (!irr.empty()) s << "irr_k lower (k = 1..n): " << irr << "\n";
    for (auto [k, v] : r.irr_top) s << "irr_" << k << " = " << v << "\n";
    if (r.fano_max_h) s << "fano_max_h = " << r.fano_max_h << "\n";
    if (r.hypothesis_unmet) s << "formula value, hypothesis unmet\n";
    return s.str();
  }
  throw DomainError("unsupported format '" + format + "' (expected json, csv or text)");
}

std::string emit_table(const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "csv") return conngon_table_csv(rows);
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"status", to_string(r.status)},
                     {"lower", "d-" + std::to_string(r.lower_offset)},
                     {"upper", "d-" + std::to_string(r.upper_offset)},
                     {"source", r.source}});
    }
    json j{{"config", {{"command", "table"}, {"n_min", rows.front().n}, {"n_max", rows.back().n}}},
           {"results", arr},
           {"summary", {{"rows", rows.size()}}},
           {"version", kVersion}};
    return j.dump(2) + "\n";
  }
  if (format == "text") {
    std::ostringstream s;
    for (const auto& r : rows) {
      s << "n = " << r.n << ": ";
      if (r.lower_offset == r.upper_offset) {
        s << "conngon = d-" << r.lower_offset;
      } else {
        s << "d-" << r.lower_offset << " <= conngon <= d-" << r.upper_offset;
      }
      s << " (" << to_string(r.status) << ")\n";
    }
    return s.str();
  }
  throw DomainError("unsupported format '" + format + "' (expected json, csv or text)");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cones of lines with high contact on hypersurfaces, over finite fields"};
  // Subcommands take --h, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--modulus", g.modulus, "Prime field size; 0 selects the rationals")
      ->envname("HICONE_MODULUS")
      ->capture_default_str();
  app.add_flag("--permissive", g.permissive, "Evaluate outside theorem hypotheses");
  app.add_option("--gb-step-cap", g.gb_step_cap, "Groebner reduction step budget (0 = none)")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  ConeArgs cone;
  auto* c_cone = app.add_subcommand("cone", "Taylor forms and dimension of the cone V^h_p");
  c_cone->add_option("--poly", cone.poly, "Equation of X")->required();
  c_cone->add_option("--n", cone.n, "X lives in P^{n+1}")->required();
  c_cone->add_option("--point", cone.point, "Vertex p, comma-separated")->required();
  c_cone->add_option("--h", cone.h, "Contact order")->required();

  DimArgs dim;
  auto* c_dim = app.add_subcommand("dim", "Dimension and Hilbert function of an ideal");
  c_dim->add_option("--gens", dim.gens, "Generators separated by ';'")->required();
  c_dim->add_option("--nvars", dim.nvars, "Number of variables")->required();
  c_dim->add_option("--hilbert", dim.hilbert, "Print Hilbert function values up to this degree");

  ContactArgs contact;
  auto* c_contact = app.add_subcommand("contact", "Line contact orders and Taylor forms");
  c_contact->add_option("--poly", contact.poly, "Equation of X")->required();
  c_contact->add_option("--n", contact.n, "X lives in P^{n+1}")->required();
  c_contact->add_option("--point", contact.point, "Point p on X")->required();
  c_contact->add_option("--direction", contact.direction, "Direction v of the line p + t v");
  c_contact->add_option("--k", contact.k, "Print the Taylor form G_k");
  c_contact->add_flag("--multiplicity", contact.multiplicity,
                      "Multiplicity of the tangent hyperplane section at p");

  PolarArgs polar;
  auto* c_polar = app.add_subcommand("polar", "Polar hypersurfaces and reciprocity");
  c_polar->add_option("--poly", polar.poly, "Equation of X")->required();
  c_polar->add_option("--n", polar.n, "X lives in P^{n+1}")->required();
  c_polar->add_option("--q", polar.q, "Pole q")->required();
  c_polar->add_option("--s", polar.s, "Order of the polar");
  c_polar->add_option("--h", polar.h, "Intersect the polars of order < h");
  c_polar->add_option("--p", polar.p, "Check reciprocity at this point of X (needs --h)");

  ConnectArgs connect;
  auto* c_connect = app.add_subcommand("connect", "Connecting vertex for two points of X");
  c_connect->add_option("--poly", connect.poly, "Equation of X")->required();
  c_connect->add_option("--n", connect.n, "X lives in P^{n+1}")->required();
  c_connect->add_option("--q", connect.q, "First point")->required();
  c_connect->add_option("--q2", connect.q2, "Second point")->required();
  c_connect->add_option("--h", connect.h, "Contact order")->required();
  c_connect->add_option("--budget", connect.budget, "Largest Bezout number for witness search")
      ->capture_default_str();

  int b_n = 0;
  int b_d = 0;
  auto* c_bounds = app.add_subcommand("bounds", "Bounds on gonality invariants for (n, d)");
  c_bounds->add_option("--n", b_n, "Dimension of X")->required();
  c_bounds->add_option("--d", b_d, "Degree of X")->required();

  int t_min = 1;
  int t_max = 16;
  auto* c_table = app.add_subcommand("table", "Connecting gonality by dimension");
  c_table->add_option("--n-min", t_min, "First row")->capture_default_str();
  c_table->add_option("--n-max", t_max, "Last row")->capture_default_str();

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Randomized verification campaign");
  c_verify->add_option("campaign", verify.campaign, "dimension, multiplicity, connecting, projection")
      ->required()
      ->check(CLI::IsMember({"dimension", "multiplicity", "connecting", "projection"}));
  c_verify->add_option("--config", verify.config_path, "key = value file");
  c_verify->add_option("--n", verify.n, "Dimension of X");
  c_verify->add_option("--d", verify.d, "Degree of X");
  c_verify->add_option("--h", verify.h, "Contact orders, lo..hi");
  c_verify->add_option("--trials", verify.trials, "Number of trials");
  c_verify->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");
  c_verify->add_option("--retry-budget", verify.retry_budget, "Hypersurfaces per trial");
  c_verify->add_option("--witness-budget", verify.witness_budget, "Bezout limit for witnesses");
  c_verify->add_option("--output", verify.output, "Write the report here instead of stdout");

  ProjectArgs project;
  auto* c_project = app.add_subcommand("project", "Degree of the projection from the vertex");
  c_project->add_option("--poly", project.poly, "Equation of X (random when omitted)");
  c_project->add_option("--n", project.n, "X lives in P^{n+1}")->capture_default_str();
  c_project->add_option("--d", project.d, "Degree of the random X")->capture_default_str();
  c_project->add_option("--point", project.point, "Point p on X (with --poly)");
  c_project->add_option("--h", project.h, "Contact order (default n + 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto fmt = [&](const char* fallback) { return g.format.empty() ? std::string(fallback) : g.format; };
  try {
    if (c_table->parsed()) {
      out << emit_table(conngon_table(t_min, t_max), fmt("csv"));
      return kExitOk;
    }
    if (c_bounds->parsed()) {
      if (b_d < 2 * b_n + 2 && !g.permissive) {
        throw HypothesisError("bounds need d >= 2n+2 (got n=" + std::to_string(b_n) +
                              ", d=" + std::to_string(b_d) + "); pass --permissive for formula values");
      }
      out << emit_bounds(bound_report(b_n, b_d, g.permissive), fmt("text"));
      return kExitOk;
    }
    if (c_verify->parsed()) {
      CampaignConfig cfg;
      cfg.modulus = prime_field(g.modulus, "verify").modulus();
      cfg.master_seed = g.seed;
      cfg.gb_step_cap = g.gb_step_cap;
      cfg.permissive = g.permissive;
      if (!verify.config_path.empty()) cfg = load_config(verify.config_path, cfg);
      // Explicit flags win over the config file.
      if (c_verify->count("--n")) cfg.n = verify.n;
      if (c_verify->count("--d")) cfg.d = verify.d;
      if (c_verify->count("--h")) std::tie(cfg.h_lo, cfg.h_hi) = parse_range(verify.h);
      if (c_verify->count("--trials")) cfg.trials = verify.trials;
      if (c_verify->count("--threads")) cfg.threads = verify.threads;
      if (c_verify->count("--retry-budget")) cfg.retry_budget = verify.retry_budget;
      if (c_verify->count("--witness-budget")) cfg.witness_budget = verify.witness_budget;
      if (app.count("--seed")) cfg.master_seed = g.seed;
      if (app.count("--gb-step-cap")) cfg.gb_step_cap = g.gb_step_cap;
      if (app.count("--modulus") || std::getenv("HICONE_MODULUS")) cfg.modulus = g.modulus;
      if (g.permissive) cfg.permissive = true;
      auto kind = parse_campaign_kind(verify.campaign);
      auto report = run_campaign(kind, cfg);
      std::string format = fmt("json");
      std::string body = format == "json"  ? report_json(report)
                         : format == "csv" ? report_csv(report)
                                           : report_text(report);
      if (verify.output.empty()) {
        out << body;
      } else {
        std::ofstream file(verify.output);
        if (!file) throw DomainError("cannot write " + verify.output);
        file << body;
        out << report_text(report);
      }
      if (report.summary.fails > 0) return kExitFailure;
      if (report.summary.passes == 0 && report.summary.resource > 0) return kExitResource;
      return kExitOk;
    }
    Output o;
    if (c_cone->parsed()) o = cmd_cone(g, cone);
    if (c_dim->parsed()) o = cmd_dim(g, dim);
    if (c_contact->parsed()) o = cmd_contact(g, contact);
    if (c_polar->parsed()) o = cmd_polar(g, polar);
    if (c_connect->parsed()) o = cmd_connect(g, connect);
    if (c_project->parsed()) o = cmd_project(g, project);
    out << serialize(o, fmt("text"));
    return o.exit_code;
  } catch (const ResourceExhausted& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hicone::cli
