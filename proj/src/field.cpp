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

#include "hicone/field.hpp"

#include <cctype>
#include <sstream>

#include "hicone/error.hpp"

namespace hicone {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw DomainError("zero modulus");
  if (modulus >= (1u << 31)) throw DomainError("modulus must be below 2^31");
  if (!is_prime(modulus)) {
    throw DomainError("modulus " + std::to_string(modulus) + " is not prime");
  }
}

Fp PrimeField::operator()(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(modulus_);
  if (r < 0) r += modulus_;
  return {static_cast<std::uint32_t>(r), modulus_};
}

Fp PrimeField::zero() const { return {0, modulus_}; }
Fp PrimeField::one() const { return {1 % modulus_, modulus_}; }

Fp PrimeField::from_decimal(std::string_view digits) const {
  bool negative = false;
  std::size_t i = 0;
  if (i < digits.size() && (digits[i] == '-' || digits[i] == '+')) {
    negative = digits[i] == '-';
    ++i;
  }
  if (i == digits.size()) throw DomainError("empty integer literal");
  std::uint64_t acc = 0;
  for (; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw DomainError("invalid digit in integer literal");
    }
    acc = (acc * 10 + static_cast<std::uint64_t>(digits[i] - '0')) % modulus_;
  }
  Fp x(static_cast<std::uint32_t>(acc), modulus_);
  return negative ? -x : x;
}

Fp Fp::inverse() const {
  if (value_ == 0) throw DomainError("division by zero in F_" + std::to_string(modulus_));
  std::int64_t a = value_, b = modulus_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (x0 < 0) x0 += modulus_;
  return {static_cast<std::uint32_t>(x0), modulus_};
}

Fp Fp::pow(std::uint64_t e) const noexcept {
  Fp result(1 % modulus_, modulus_);
  Fp base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

std::string to_string(Fp x) { return std::to_string(x.value()); }

Rational RationalField::operator()(std::int64_t value) const { return Rational(value); }
Rational RationalField::zero() const { return Rational(0); }
Rational RationalField::one() const { return Rational(1); }

Rational RationalField::from_decimal(std::string_view digits) const {
  std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (start == digits.size()) throw DomainError("empty integer literal");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw DomainError("invalid digit in integer literal");
    }
  }
  boost::multiprecision::cpp_int v(std::string(digits.substr(start)));
  if (start == 1 && digits[0] == '-') v = -v;
  return Rational(Rational::value_type(v));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.v_ == 0) throw DomainError("division by zero in Q");
  return Rational(v_ / o.v_);
}

Rational Rational::inverse() const {
  if (v_ == 0) throw DomainError("division by zero in Q");
  return Rational(1 / v_);
}

Rational Rational::pow(std::uint64_t e) const {
  Rational result(1);
  Rational base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.value(); }

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << x.value();
  return os.str();
}

}  // namespace hicone
