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

#include "hicone/contact.hpp"

#include <algorithm>

namespace hicone {

namespace {

Fp random_element(const PrimeField& f, std::mt19937_64& rng) {
  return Fp(std::uniform_int_distribution<std::uint32_t>(0, f.modulus() - 1)(rng), f.modulus());
}

Rational random_element(const RationalField& f, std::mt19937_64& rng) {
  return f(std::uniform_int_distribution<int>(-1000, 1000)(rng));
}

template <FieldElement K>
K factorial(const typename K::field_type& f, int k) {
  K r = f.one();
  for (int i = 2; i <= k; ++i) r = r * f(i);
  return r;
}

// prod_{i=lo}^{hi} i as a field element (1 when the range is empty).
template <FieldElement K>
K falling(const typename K::field_type& f, int lo, int hi) {
  K r = f.one();
  for (int i = lo; i <= hi; ++i) r = r * f(i);
  return r;
}

template <FieldElement K>
bool is_zero_vector(const std::vector<K>& v) {
  return std::all_of(v.begin(), v.end(), [](const K& c) { return c.is_zero(); });
}

template <FieldElement K>
void require_on(const Hypersurface<K>& x, const ProjPoint<K>& p) {
  if (p.size() != x.nvars()) throw DomainError("point has the wrong number of coordinates");
  if (!x.contains(p)) throw DomainError("point is not on the hypersurface");
}

}  // namespace

std::vector<Fp> random_vector(const PrimeField& field, int size, std::mt19937_64& rng) {
  std::vector<Fp> v;
  for (int i = 0; i < size; ++i) v.push_back(random_element(field, rng));
  return v;
}

std::vector<PointFp> projective_points(const PrimeField& field, int nvars, std::int64_t limit) {
  const std::int64_t q = field.modulus();
  std::int64_t count = 0;
  std::int64_t power = 1;
  for (int i = 0; i < nvars; ++i) {
    count += power;
    power *= q;
    if (count > limit) {
      throw ResourceExhausted("projective_points: more than " + std::to_string(limit) + " points");
    }
  }
  std::vector<PointFp> out;
  out.reserve(static_cast<std::size_t>(count));
  // Leading 1 at position lead, zeros before it, anything after it.
  for (int lead = 0; lead < nvars; ++lead) {
    const int free = nvars - lead - 1;
    std::vector<std::uint32_t> digits(free, 0);
    while (true) {
      std::vector<Fp> c(nvars, field.zero());
      c[lead] = field.one();
      for (int i = 0; i < free; ++i) c[lead + 1 + i] = Fp(digits[i], field.modulus());
      out.emplace_back(std::move(c));
      int i = 0;
      while (i < free && ++digits[i] == field.modulus()) digits[i++] = 0;
      if (i == free) break;
    }
  }
  return out;
}

int ContactOrder::value() const {
  if (is_infinite()) throw DomainError("contact order is infinite");
  return order_;
}

template <FieldElement K>
Hypersurface<K>::Hypersurface(Polynomial<K> f) : f_(std::move(f)), d_(f_.degree()) {
  if (f_.is_zero()) throw DomainError("hypersurface equation is zero");
  if (!f_.is_homogeneous()) throw DomainError("hypersurface equation is not homogeneous");
  if (d_ < 2) throw DomainError("hypersurface degree must be at least 2");
  if (f_.nvars() < 3) throw DomainError("hypersurface needs n >= 1 (at least three variables)");
  const std::uint64_t ch = f_.field().characteristic();
  if (ch != 0 && ch <= static_cast<std::uint64_t>(d_)) {
    throw DomainError("field characteristic " + std::to_string(ch) +
                      " must exceed the degree " + std::to_string(d_));
  }
  for (int i = 0; i < f_.nvars(); ++i) gradient_.push_back(f_.derivative(i));
}

template <FieldElement K>
bool Hypersurface<K>::contains(const ProjPoint<K>& p) const {
  return f_.evaluate(p.coords()).is_zero();
}

template <FieldElement K>
std::vector<K> Hypersurface<K>::gradient_at(const ProjPoint<K>& p) const {
  std::vector<K> g;
  for (const auto& d : gradient_) g.push_back(d.evaluate(p.coords()));
  return g;
}

template <FieldElement K>
bool Hypersurface<K>::is_smooth_at(const ProjPoint<K>& p) const {
  return contains(p) && !is_zero_vector(gradient_at(p));
}

template <FieldElement K>
std::vector<Polynomial<K>> taylor_forms(const Hypersurface<K>& x, const ProjPoint<K>& p) {
  if (p.size() != x.nvars()) throw DomainError("point has the wrong number of coordinates");
  const auto& field = x.field();
  const int n = x.nvars();
  std::vector<Polynomial<K>> images;
  for (int j = 0; j < n; ++j) {
    images.push_back(Polynomial<K>::variable(n, field, j) +
                     Polynomial<K>::constant(n, field, p[j]));
  }
  Polynomial<K> shifted = x.F().substitute(images);
  std::vector<std::vector<Term<K>>> parts(x.d() + 1);
  for (const auto& t : shifted.terms()) parts[t.monomial.degree()].push_back(t);
  std::vector<Polynomial<K>> out;
  for (int k = 0; k <= x.d(); ++k) {
    out.push_back(Polynomial<K>::from_terms(n, field, std::move(parts[k])) *
                  factorial<K>(field, k));
  }
  return out;
}

template <FieldElement K>
Polynomial<K> taylor_form(const Hypersurface<K>& x, const ProjPoint<K>& p, int k) {
  if (k < 1 || k > x.d()) {
    throw DomainError("taylor_form: k = " + std::to_string(k) + " outside [1, " +
                      std::to_string(x.d()) + "]");
  }
  return taylor_forms(x, p)[k];
}

template <FieldElement K>
Polynomial<K> tangent_hyperplane(const Hypersurface<K>& x, const ProjPoint<K>& p) {
  require_on(x, p);
  if (is_zero_vector(x.gradient_at(p))) {
    throw SingularPointError("singular point: the gradient vanishes");
  }
  return taylor_form(x, p, 1);
}

template <FieldElement K>
ConeIdeal<K> cone_ideal(const Hypersurface<K>& x, const ProjPoint<K>& p, int h) {
  require_on(x, p);
  if (h < 2 || h > x.d()) {
    throw DomainError("cone_ideal: h = " + std::to_string(h) + " outside [2, " +
                      std::to_string(x.d()) + "]");
  }
  auto forms = taylor_forms(x, p);
  ConeIdeal<K> cone{p, h, {}};
  for (int k = 1; k < h; ++k) cone.generators.push_back(forms[k]);
  return cone;
}

template <FieldElement K>
ContactOrder line_contact_order(const Hypersurface<K>& x, const ProjPoint<K>& p,
                                const std::vector<K>& v) {
  require_on(x, p);
  auto c = restrict_to_line(x.F(), std::span<const K>(p.coords()), std::span<const K>(v));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) return ContactOrder::finite(static_cast<int>(k));
  }
  return ContactOrder::infinite();
}

template <FieldElement K>
NormalizedChart<K> normalize_chart(const Hypersurface<K>& x, const ProjPoint<K>& p) {
  require_on(x, p);
  const auto& field = x.field();
  const int n = x.nvars();
  const int d = x.d();
  const std::vector<K> g = x.gradient_at(p);
  int j = 0;
  while (j < n && g[j].is_zero()) ++j;
  if (j == n) throw SingularPointError("singular point: the gradient vanishes");
  int k = 0;
  while (k < n && (k == j || p[k].is_zero())) ++k;
  if (k == n) throw DomainError("normalize_chart: point is not on its tangent hyperplane");

  // Columns: p, then e_i - (g_i / g_j) e_j for i not in {j, k}, then e_j.
  Matrix<K> m(n, n, field);
  for (int r = 0; r < n; ++r) m(r, 0) = p[r];
  K inv = g[j].inverse();
  int col = 1;
  for (int i = 0; i < n; ++i) {
    if (i == j || i == k) continue;
    m(i, col) = field.one();
    m(j, col) = -(g[i] * inv);
    ++col;
  }
  m(j, n - 1) = field.one();

  NormalizedChart<K> chart{compose_linear(x.F(), m), m, g[j], {}};
  std::vector<std::vector<Term<K>>> parts(d + 1);
  for (const auto& t : chart.f_norm.terms()) {
    int e0 = t.monomial.exponent(0);
    Monomial rest = Monomial::from_packed(t.monomial.packed() & ~0xffull);
    parts[d - e0].push_back({rest, t.coefficient});
  }
  for (auto& part : parts) chart.parts.push_back(Polynomial<K>::from_terms(n, field, std::move(part)));
  Polynomial<K> expected_f1 = Polynomial<K>::variable(n, field, n - 1) * chart.c;
  if (!chart.parts[0].is_zero() || !(chart.parts[1] == expected_f1)) {
    throw Error("normalize_chart: transformed equation is not in normal form");
  }
  return chart;
}

template <FieldElement K>
Polynomial<K> chart_taylor_form(const NormalizedChart<K>& chart, int d, int k) {
  if (k < 1 || k > d) throw DomainError("chart_taylor_form: k out of range");
  const int n = chart.f_norm.nvars();
  const auto& field = chart.f_norm.field();
  const Monomial y0 = Monomial::variable(0);
  Monomial y0pow = Monomial();
  for (int i = 1; i < k; ++i) y0pow = y0pow * y0;
  // k (d-1)! / (d-k)! c y_{n+1} y_0^{k-1}
  Polynomial<K> out = Polynomial<K>::variable(n, field, n - 1).times_monomial(
      y0pow, chart.c * field(k) * falling<K>(field, d - k + 1, d - 1));
  for (int i = 2; i <= k; ++i) {
    Monomial pow = Monomial();
    for (int e = 0; e < k - i; ++e) pow = pow * y0;
    K coef = falling<K>(field, k - i + 1, k) * falling<K>(field, d - k + 1, d - i);
    out = out + chart.parts[i].times_monomial(pow, coef);
  }
  return out;
}

template <FieldElement K>
std::optional<int> tangent_section_multiplicity(const Hypersurface<K>& x, const ProjPoint<K>& p) {
  auto chart = normalize_chart(x, p);
  const int last = x.nvars() - 1;
  for (int k = 2; k <= x.d(); ++k) {
    for (const auto& t : chart.parts[k].terms()) {
      if (t.monomial.exponent(last) == 0) return k;
    }
  }
  return std::nullopt;
}

template <FieldElement K>
std::optional<int> tangent_section_multiplicity_by_ideal(const Hypersurface<K>& x,
                                                         const ProjPoint<K>& p) {
  auto g1 = tangent_hyperplane(x, p);
  auto forms = taylor_forms(x, p);
  Ideal<K> ideal(x.nvars(), x.field(), {g1});
  auto gb = groebner_basis(ideal, MonomialOrder::grevlex());
  for (int k = 2; k <= x.d(); ++k) {
    if (!gb.contains(forms[k])) return k;
  }
  return std::nullopt;
}

template <FieldElement K>
Ideal<K> lambda_section(const Hypersurface<K>& x, const ProjPoint<K>& p, int h,
                        std::mt19937_64& rng, int max_retries) {
  if (h < 3) throw DomainError("lambda_section: h must be at least 3");
  tangent_hyperplane(x, p);  // smoothness check
  auto cone = cone_ideal(x, p, h);
  const auto& field = x.field();
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<K> coeffs;
    for (int i = 0; i < x.nvars(); ++i) coeffs.push_back(random_element(field, rng));
    auto hyperplane = Polynomial<K>::linear_form(field, coeffs);
    if (hyperplane.evaluate(p.coords()).is_zero()) continue;
    Ideal<K> out = cone.ideal();
    out.add(std::move(hyperplane));
    return out;
  }
  throw DomainError("lambda_section: every sampled hyperplane passed through p");
}

#define HICONE_INSTANTIATE(K)                                                                      \
  template class Hypersurface<K>;                                                                  \
  template std::vector<Polynomial<K>> taylor_forms(const Hypersurface<K>&, const ProjPoint<K>&);   \
  template Polynomial<K> taylor_form(const Hypersurface<K>&, const ProjPoint<K>&, int);            \
  template Polynomial<K> tangent_hyperplane(const Hypersurface<K>&, const ProjPoint<K>&);          \
  template ConeIdeal<K> cone_ideal(const Hypersurface<K>&, const ProjPoint<K>&, int);              \
  template ContactOrder line_contact_order(const Hypersurface<K>&, const ProjPoint<K>&,            \
                                           const std::vector<K>&);                                 \
  template NormalizedChart<K> normalize_chart(const Hypersurface<K>&, const ProjPoint<K>&);        \
  template Polynomial<K> chart_taylor_form(const NormalizedChart<K>&, int, int);                   \
  template std::optional<int> tangent_section_multiplicity(const Hypersurface<K>&,                 \
                                                           const ProjPoint<K>&);                   \
  template std::optional<int> tangent_section_multiplicity_by_ideal(const Hypersurface<K>&,        \
                                                                    const ProjPoint<K>&);          \
  template Ideal<K> lambda_section(const Hypersurface<K>&, const ProjPoint<K>&, int,               \
                                   std::mt19937_64&, int);

HICONE_INSTANTIATE(Fp)
HICONE_INSTANTIATE(Rational)

#undef HICONE_INSTANTIATE

}  // namespace hicone
