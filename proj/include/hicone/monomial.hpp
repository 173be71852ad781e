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

#include <array>
#include <cstdint>
#include <functional>
#include <span>

namespace hicone {

/// Maximum number of variables x_0..x_7 (ambient P^7, so n <= 6).
inline constexpr int kMaxVars = 8;
/// Maximum total degree of a monomial. Keeps every exponent below 128, which
/// the packed divisibility test relies on.
inline constexpr int kMaxDegree = 127;

/// Exponent vector packed one byte per variable; variable i lives in byte i.
class Monomial {
 public:
  constexpr Monomial() = default;

  /// Throws DomainError if there are too many exponents, a negative exponent,
  /// or the total degree exceeds kMaxDegree.
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(int index, int power = 1);

  constexpr std::uint64_t packed() const noexcept { return w_; }
  static constexpr Monomial from_packed(std::uint64_t w) noexcept {
    Monomial m;
    m.w_ = w;
    return m;
  }

  constexpr int exponent(int i) const noexcept {
    return static_cast<int>((w_ >> (8 * i)) & 0xffu);
  }
  constexpr int degree() const noexcept {
    return static_cast<int>((w_ * 0x0101010101010101ull) >> 56);
  }
  constexpr bool is_one() const noexcept { return w_ == 0; }
  std::array<int, kMaxVars> exponents() const noexcept;

  /// Throws DomainError when the product would exceed kMaxDegree.
  Monomial operator*(Monomial o) const;
  /// True when *this divides o.
  constexpr bool divides(Monomial o) const noexcept {
    constexpr std::uint64_t kHigh = 0x8080808080808080ull;
    return (((o.w_ | kHigh) - w_) & kHigh) == kHigh;
  }
  /// o / *this; requires divides(o).
  constexpr Monomial quotient_of(Monomial o) const noexcept {
    return from_packed(o.w_ - w_);
  }
  Monomial lcm(Monomial o) const noexcept;
  Monomial gcd(Monomial o) const noexcept;
  constexpr bool coprime(Monomial o) const noexcept { return gcd_mask(o) == 0; }
  /// Bit i set iff x_i occurs.
  unsigned support() const noexcept;

  friend constexpr bool operator==(Monomial a, Monomial b) noexcept { return a.w_ == b.w_; }

 private:
  constexpr std::uint64_t gcd_mask(Monomial o) const noexcept {
    std::uint64_t m = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      if (exponent(i) != 0 && o.exponent(i) != 0) m |= 1ull << i;
    }
    return m;
  }

  std::uint64_t w_ = 0;
};

/// Graded reverse lexicographic comparison with x_0 > x_1 > ... Returns
/// negative, zero or positive.
inline int grevlex_compare(Monomial a, Monomial b) noexcept {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the monomial with the smaller exponent in the last differing
  // variable is larger; the last variable sits in the most significant byte.
  if (a.packed() == b.packed()) return 0;
  return a.packed() < b.packed() ? 1 : -1;
}

/// Pure lexicographic comparison with x_0 > x_1 > ...
inline int lex_compare(Monomial a, Monomial b) noexcept {
  std::uint64_t ka = __builtin_bswap64(a.packed());
  std::uint64_t kb = __builtin_bswap64(b.packed());
  if (ka == kb) return 0;
  return ka < kb ? -1 : 1;
}

}  // namespace hicone

template <>
struct std::hash<hicone::Monomial> {
  std::size_t operator()(hicone::Monomial m) const noexcept {
    std::uint64_t x = m.packed() * 0x9e3779b97f4a7c15ull;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};
