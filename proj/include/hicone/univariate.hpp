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

#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "hicone/field.hpp"

namespace hicone {

/// Dense univariate polynomial over F_q, coefficients from low to high degree.
/// Always trimmed: the top coefficient is nonzero unless the polynomial is 0.
class UPoly {
 public:
  explicit UPoly(PrimeField field) : field_(field) {}
  UPoly(PrimeField field, std::vector<Fp> coeffs);

  static UPoly x(PrimeField field) { return monomial(field, field.one(), 1); }
  static UPoly constant(PrimeField field, Fp c) { return UPoly(field, {c}); }
  static UPoly monomial(PrimeField field, Fp c, int degree);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Fp>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
  /// Coefficient of t^i; zero past the degree.
  Fp operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : field_.zero(); }
  Fp lead() const { return c_.empty() ? field_.zero() : c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(Fp c) const;
  UPoly operator%(const UPoly& m) const { return divmod(m).second; }
  UPoly operator/(const UPoly& m) const { return divmod(m).first; }
  /// Throws DomainError when dividing by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& m) const;

  UPoly monic() const;
  UPoly derivative() const;
  Fp evaluate(Fp t) const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();

  PrimeField field_;
  std::vector<Fp> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct XGcd {
  UPoly g, s, t;
};
XGcd xgcd(const UPoly& a, const UPoly& b);
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m);
UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m);

/// The q-power Frobenius g -> g^q on F_q[t]/(m), applied by modular
/// composition with precomputed powers of t^q.
class Frobenius {
 public:
  explicit Frobenius(const UPoly& m);
  UPoly apply(const UPoly& g) const;
  /// t^q mod m.
  const UPoly& xq() const noexcept { return powers_.size() > 1 ? powers_[1] : one_; }

 private:
  UPoly m_;
  UPoly one_;
  std::vector<UPoly> powers_;  // (t^q)^i mod m for i < deg m
};

/// Distinct roots of f in F_q, sorted by representative. f must be nonzero.
std::vector<Fp> roots(const UPoly& f, std::mt19937_64& rng);

/// Monic irreducible factors with multiplicities, sorted by (degree,
/// coefficients). Requires f nonzero and q odd.
std::vector<std::pair<UPoly, int>> factor(const UPoly& f, std::mt19937_64& rng);

/// True when f is irreducible over F_q (Rabin's test).
bool is_irreducible(const UPoly& f);

class ExtElem;

/// The finite field F_q[theta]/(phi) for an irreducible phi. Elements of
/// different ExtField objects must not be mixed.
class ExtField {
 public:
  using element_type = ExtElem;

  /// Throws DomainError if phi is not monic irreducible of degree >= 1.
  explicit ExtField(UPoly phi);

  const PrimeField& base() const noexcept { return phi_->field(); }
  const UPoly& modulus_poly() const noexcept { return *phi_; }
  int degree() const noexcept { return phi_->degree(); }
  std::uint64_t characteristic() const noexcept { return base().characteristic(); }

  ExtElem operator()(std::int64_t value) const;
  ExtElem zero() const;
  ExtElem one() const;
  /// The class of theta.
  ExtElem generator() const;
  ExtElem embed(Fp c) const;
  ExtElem from_poly(const UPoly& u) const;

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.phi_ == b.phi_ || *a.phi_ == *b.phi_;
  }

 private:
  std::shared_ptr<const UPoly> phi_;
};

class ExtElem {
 public:
  using field_type = ExtField;

  ExtElem(ExtField field, UPoly rep) : field_(std::move(field)), rep_(std::move(rep)) {}

  const UPoly& rep() const noexcept { return rep_; }
  ExtField field() const noexcept { return field_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_one() const noexcept { return rep_.is_one(); }

  ExtElem operator+(const ExtElem& o) const { return {field_, rep_ + o.rep_}; }
  ExtElem operator-(const ExtElem& o) const { return {field_, rep_ - o.rep_}; }
  ExtElem operator-() const { return {field_, UPoly(rep_.field()) - rep_}; }
  ExtElem operator*(const ExtElem& o) const {
    return {field_, mulmod(rep_, o.rep_, field_.modulus_poly())};
  }
  ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
  ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
  ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }
  /// Throws DomainError on zero.
  ExtElem inverse() const;
  ExtElem operator/(const ExtElem& o) const { return *this * o.inverse(); }

  friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.rep_ == b.rep_; }

 private:
  ExtField field_;
  UPoly rep_;
};

}  // namespace hicone
