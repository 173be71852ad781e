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

#include "hicone/univariate.hpp"

#include <algorithm>
#include <limits>

#include "hicone/error.hpp"

namespace hicone {

namespace {

// Number of products of reduced residues that fit in a uint64 accumulator.
std::uint64_t accumulation_budget(std::uint64_t q) {
  std::uint64_t m = (q - 1) * (q - 1);
  return m == 0 ? std::numeric_limits<std::uint64_t>::max()
                : std::numeric_limits<std::uint64_t>::max() / m - 1;
}

std::vector<Fp> raw_multiply(const std::vector<Fp>& a, const std::vector<Fp>& b, std::uint32_t q) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;
  const std::uint64_t budget = accumulation_budget(q);
  std::vector<Fp> out(n, Fp(0, q));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
    std::size_t hi = std::min(k, a.size() - 1);
    std::uint64_t acc = 0, count = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
      acc += static_cast<std::uint64_t>(a[i].value()) * b[k - i].value();
      if (++count == budget) {
        acc %= q;
        count = 1;
      }
    }
    out[k] = Fp(static_cast<std::uint32_t>(acc % q), q);
  }
  return out;
}

}  // namespace

UPoly::UPoly(PrimeField field, std::vector<Fp> coeffs) : field_(field), c_(std::move(coeffs)) {
  trim();
}

UPoly UPoly::monomial(PrimeField field, Fp c, int degree) {
  if (degree < 0) throw DomainError("negative degree");
  std::vector<Fp> v(degree + 1, field.zero());
  v[degree] = c;
  return UPoly(field, std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Fp> v(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Fp> v(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return UPoly(field_, std::move(v));
}

UPoly UPoly::operator*(const UPoly& o) const {
  return UPoly(field_, raw_multiply(c_, o.c_, field_.modulus()));
}

UPoly UPoly::operator*(Fp c) const {
  std::vector<Fp> v = c_;
  for (auto& x : v) x *= c;
  return UPoly(field_, std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& m) const {
  if (m.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < m.degree()) return {UPoly(field_), *this};
  const std::uint32_t q = field_.modulus();
  const int dm = m.degree();
  const Fp inv = m.lead().inverse();
  std::vector<Fp> r = c_;
  std::vector<Fp> quot(degree() - dm + 1, field_.zero());
  for (int i = degree() - dm; i >= 0; --i) {
    Fp coef = r[i + dm] * inv;
    quot[i] = coef;
    if (coef.is_zero()) continue;
    const std::uint64_t neg = q - coef.value();
    for (int j = 0; j < dm; ++j) {
      r[i + j] = Fp(static_cast<std::uint32_t>((r[i + j].value() + neg * m.c_[j].value()) % q), q);
    }
    r[i + dm] = field_.zero();
  }
  r.resize(dm);
  return {UPoly(field_, std::move(quot)), UPoly(field_, std::move(r))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

UPoly UPoly::derivative() const {
  std::vector<Fp> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * field_(static_cast<std::int64_t>(i)));
  return UPoly(field_, std::move(v));
}

Fp UPoly::evaluate(Fp t) const {
  Fp acc = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XGcd xgcd(const UPoly& a, const UPoly& b) {
  const auto& f = a.field();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(f, f.one()), s1(f);
  UPoly t0(f), t1 = UPoly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Fp inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return (a * b) % m; }

UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m) {
  UPoly result = UPoly::constant(m.field(), m.field().one()) % m;
  UPoly b = base % m;
  while (e != 0) {
    if (e & 1u) result = mulmod(result, b, m);
    e >>= 1;
    if (e != 0) b = mulmod(b, b, m);
  }
  return result;
}

Frobenius::Frobenius(const UPoly& m) : m_(m), one_(UPoly::constant(m.field(), m.field().one()) % m) {
  if (m.degree() < 1) throw DomainError("Frobenius needs a modulus of positive degree");
  UPoly xq = powmod(UPoly::x(m.field()), m.field().modulus(), m);
  powers_.reserve(m.degree());
  powers_.push_back(one_);
  for (int i = 1; i < m.degree(); ++i) powers_.push_back(mulmod(powers_.back(), xq, m));
}

UPoly Frobenius::apply(const UPoly& g) const {
  UPoly r = g % m_;
  const std::uint32_t q = m_.field().modulus();
  const std::uint64_t budget = accumulation_budget(q);
  const int n = m_.degree();
  std::vector<std::uint64_t> acc(n, 0);
  std::uint64_t count = 0;
  for (int i = 0; i <= r.degree(); ++i) {
    std::uint64_t c = r.coeffs()[i].value();
    if (c == 0) continue;
    if (++count == budget) {
      for (auto& a : acc) a %= q;
      count = 1;
    }
    const auto& row = powers_[i].coeffs();
    for (std::size_t j = 0; j < row.size(); ++j) acc[j] += c * row[j].value();
  }
  std::vector<Fp> out(n);
  for (int j = 0; j < n; ++j) out[j] = Fp(static_cast<std::uint32_t>(acc[j] % q), q);
  return UPoly(m_.field(), std::move(out));
}

namespace {

UPoly random_below(const PrimeField& f, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.modulus() - 1);
  std::vector<Fp> v(degree);
  for (auto& c : v) c = Fp(dist(rng), f.modulus());
  return UPoly(f, std::move(v));
}

// g^((q^k - 1)/2) mod m = prod_{i<k} (g^((q-1)/2))^(q^i).
UPoly half_power(const UPoly& g, int k, const UPoly& m) {
  const std::uint64_t q = m.field().modulus();
  UPoly c = powmod(g, (q - 1) / 2, m);
  if (k == 1) return c;
  Frobenius frob(m);
  UPoly acc = c, cur = c;
  for (int i = 1; i < k; ++i) {
    cur = frob.apply(cur);
    acc = mulmod(acc, cur, m);
  }
  return acc;
}

// Splits a monic squarefree f whose irreducible factors all have degree k.
void equal_degree_split(const UPoly& f, int k, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (f.degree() == k) {
    out.push_back(f);
    return;
  }
  const auto& field = f.field();
  if (field.modulus() == 2) throw DomainError("equal-degree splitting needs an odd characteristic");
  const UPoly one = UPoly::constant(field, field.one());
  while (true) {
    UPoly a = random_below(field, f.degree(), rng);
    if (a.degree() < 1) continue;
    UPoly d = gcd(f, a);
    if (d.degree() > 0 && d.degree() < f.degree()) {
      equal_degree_split(d, k, rng, out);
      equal_degree_split(f / d, k, rng, out);
      return;
    }
    UPoly b = half_power(a, k, f);
    d = gcd(f, b - one);
    if (d.degree() > 0 && d.degree() < f.degree()) {
      equal_degree_split(d, k, rng, out);
      equal_degree_split(f / d, k, rng, out);
      return;
    }
  }
}

UPoly pth_root(const UPoly& f) {
  const std::uint32_t p = f.field().modulus();
  std::vector<Fp> v;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) v.push_back(f.coeffs()[i]);
  return UPoly(f.field(), std::move(v));
}

void squarefree_rec(const UPoly& f, int mult, std::vector<std::pair<UPoly, int>>& out) {
  if (f.degree() < 1) return;
  const int p = static_cast<int>(f.field().modulus());
  UPoly b = f.derivative();
  if (b.is_zero()) {
    squarefree_rec(pth_root(f), mult * p, out);
    return;
  }
  UPoly c = gcd(f, b);
  UPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_rec(pth_root(c), mult * p, out);
}

bool factor_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeffs()[i].value() != b.coeffs()[i].value()) {
      return a.coeffs()[i].value() < b.coeffs()[i].value();
    }
  }
  return false;
}

}  // namespace

std::vector<Fp> roots(const UPoly& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  if (f.degree() < 1) return {};
  const auto& field = f.field();
  UPoly g = f.monic();
  std::vector<Fp> out;
  if (g[0].is_zero()) {
    out.push_back(field.zero());
    while (g[0].is_zero()) g = g / UPoly::x(field);
  }
  if (g.degree() >= 1) {
    UPoly xq = powmod(UPoly::x(field), field.modulus(), g);
    UPoly lin = gcd(g, xq - UPoly::x(field));
    if (lin.degree() >= 1) {
      std::vector<UPoly> parts;
      if (field.modulus() == 2) {
        // Only t + 1 can remain over F_2.
        parts.push_back(lin);
      } else {
        equal_degree_split(lin, 1, rng, parts);
      }
      for (const auto& part : parts) out.push_back(-part[0]);
    }
  }
  std::sort(out.begin(), out.end(), [](Fp a, Fp b) { return a.value() < b.value(); });
  return out;
}

std::vector<std::pair<UPoly, int>> factor(const UPoly& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw DomainError("factoring the zero polynomial");
  std::vector<std::pair<UPoly, int>> sqf;
  squarefree_rec(f.monic(), 1, sqf);
  std::vector<std::pair<UPoly, int>> out;
  for (const auto& [part, mult] : sqf) {
    UPoly rest = part;
    if (rest.degree() == 1) {
      out.push_back({rest, mult});
      continue;
    }
    Frobenius frob(part);
    const UPoly x = UPoly::x(part.field());
    UPoly h = x % part;
    for (int i = 1; rest.degree() >= 2 * i; ++i) {
      h = frob.apply(h);
      UPoly g = gcd(rest, h - x);
      if (g.degree() > 0) {
        std::vector<UPoly> pieces;
        equal_degree_split(g, i, rng, pieces);
        for (auto& piece : pieces) out.push_back({std::move(piece), mult});
        rest = rest / g;
      }
    }
    if (rest.degree() > 0) out.push_back({rest.monic(), mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (!(a.first == b.first)) return factor_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible(const UPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  UPoly g = f.monic();
  Frobenius frob(g);
  const UPoly x = UPoly::x(g.field());
  std::vector<UPoly> iter{x % g};  // iter[i] = t^(q^i) mod g
  for (int i = 1; i <= n; ++i) iter.push_back(frob.apply(iter.back()));
  if (!(iter[n] == x % g)) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool prime = true;
    for (int s = 2; s * s <= r; ++s) prime = prime && (r % s != 0);
    if (!prime) continue;
    if (gcd(g, iter[n / r] - x).degree() != 0) return false;
  }
  return true;
}

ExtField::ExtField(UPoly phi) {
  if (phi.degree() < 1) throw DomainError("extension modulus must have positive degree");
  phi = phi.monic();
  if (!is_irreducible(phi)) throw DomainError("extension modulus is reducible");
  phi_ = std::make_shared<const UPoly>(std::move(phi));
}

ExtElem ExtField::operator()(std::int64_t value) const { return embed(base()(value)); }
ExtElem ExtField::zero() const { return {*this, UPoly(base())}; }
ExtElem ExtField::one() const { return embed(base().one()); }
ExtElem ExtField::generator() const { return from_poly(UPoly::x(base())); }
ExtElem ExtField::embed(Fp c) const { return {*this, UPoly::constant(base(), c)}; }
ExtElem ExtField::from_poly(const UPoly& u) const { return {*this, u % *phi_}; }

ExtElem ExtElem::inverse() const {
  if (rep_.is_zero()) throw DomainError("division by zero in extension field");
  XGcd r = xgcd(rep_, field_.modulus_poly());
  return {field_, r.s % field_.modulus_poly()};
}

}  // namespace hicone
