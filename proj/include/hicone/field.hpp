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
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hicone {

inline constexpr std::uint32_t kDefaultModulus = 10007;

bool is_prime(std::uint64_t n);

class Fp;

/// The prime field F_q. Moduli are restricted to q < 2^31 so that products of
/// two reduced representatives fit in 64 bits.
class PrimeField {
 public:
  using element_type = Fp;

  /// Throws DomainError for 0, 1, composites and moduli >= 2^31.
  explicit PrimeField(std::uint32_t modulus = kDefaultModulus);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }

  Fp operator()(std::int64_t value) const;
  Fp zero() const;
  Fp one() const;
  /// Decimal literal (optional sign), reduced mod q digit by digit.
  Fp from_decimal(std::string_view digits) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t modulus_;
};

/// Element of F_q, stored as its canonical representative in [0, q).
class Fp {
 public:
  using field_type = PrimeField;

  Fp() = default;
  Fp(std::uint32_t value, std::uint32_t modulus) noexcept
      : value_(value), modulus_(modulus) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  PrimeField field() const { return PrimeField(modulus_); }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }

  Fp operator+(Fp o) const noexcept {
    std::uint32_t s = value_ + o.value_;
    if (s >= modulus_) s -= modulus_;
    return {s, modulus_};
  }
  Fp operator-(Fp o) const noexcept {
    return {value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_,
            modulus_};
  }
  Fp operator-() const noexcept {
    return {value_ == 0 ? 0u : modulus_ - value_, modulus_};
  }
  Fp operator*(Fp o) const noexcept {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(value_) * o.value_ %
                                       modulus_),
            modulus_};
  }
  /// Throws DomainError on division by zero.
  Fp operator/(Fp o) const { return *this * o.inverse(); }
  Fp& operator+=(Fp o) noexcept { return *this = *this + o; }
  Fp& operator-=(Fp o) noexcept { return *this = *this - o; }
  Fp& operator*=(Fp o) noexcept { return *this = *this * o; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const noexcept;

  friend bool operator==(Fp a, Fp b) noexcept { return a.value_ == b.value_; }

  /// Symmetric representative in (-q/2, q/2].
  std::int64_t signed_value() const noexcept {
    return value_ > modulus_ / 2 ? static_cast<std::int64_t>(value_) - modulus_
                                 : static_cast<std::int64_t>(value_);
  }

 private:
  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = kDefaultModulus;
};

std::ostream& operator<<(std::ostream& os, Fp x);

class Rational;

/// The rationals, for small hand-checked examples.
class RationalField {
 public:
  using element_type = Rational;

  std::uint64_t characteristic() const noexcept { return 0; }
  Rational operator()(std::int64_t value) const;
  Rational zero() const;
  Rational one() const;
  Rational from_decimal(std::string_view digits) const;

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

class Rational {
 public:
  using field_type = RationalField;
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  explicit Rational(value_type v) : v_(std::move(v)) {}
  explicit Rational(std::int64_t v) : v_(v) {}

  const value_type& value() const noexcept { return v_; }
  RationalField field() const { return {}; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator-() const { return Rational(-v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  Rational inverse() const;
  Rational pow(std::uint64_t e) const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

 private:
  value_type v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

std::string to_string(Fp x);
std::string to_string(const Rational& x);

/// Coefficient types usable in Polynomial<K>.
template <class K>
concept FieldElement = requires(const K a, const K b) {
  typename K::field_type;
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.field() } -> std::same_as<typename K::field_type>;
};

}  // namespace hicone
