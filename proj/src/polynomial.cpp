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

#include "hicone/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace hicone {

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars)) {
    throw DomainError("monomial has more than " + std::to_string(kMaxVars) + " variables");
  }
  std::uint64_t w = 0;
  int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw DomainError("negative exponent");
    total += exponents[i];
    if (total > kMaxDegree) {
      throw DomainError("monomial degree exceeds " + std::to_string(kMaxDegree));
    }
    w |= static_cast<std::uint64_t>(exponents[i]) << (8 * i);
  }
  return from_packed(w);
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVars) throw DomainError("variable index out of range");
  if (power < 0 || power > kMaxDegree) throw DomainError("exponent out of range");
  return from_packed(static_cast<std::uint64_t>(power) << (8 * index));
}

std::array<int, kMaxVars> Monomial::exponents() const noexcept {
  std::array<int, kMaxVars> e{};
  for (int i = 0; i < kMaxVars; ++i) e[i] = exponent(i);
  return e;
}

Monomial Monomial::operator*(Monomial o) const {
  if (degree() + o.degree() > kMaxDegree) {
    throw DomainError("monomial degree exceeds " + std::to_string(kMaxDegree));
  }
  // Bytes cannot carry: every exponent is at most the total degree.
  return from_packed(w_ + o.w_);
}

Monomial Monomial::lcm(Monomial o) const noexcept {
  std::uint64_t w = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    w |= static_cast<std::uint64_t>(std::max(exponent(i), o.exponent(i))) << (8 * i);
  }
  return from_packed(w);
}

Monomial Monomial::gcd(Monomial o) const noexcept {
  std::uint64_t w = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    w |= static_cast<std::uint64_t>(std::min(exponent(i), o.exponent(i))) << (8 * i);
  }
  return from_packed(w);
}

unsigned Monomial::support() const noexcept {
  unsigned s = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exponent(i) != 0) s |= 1u << i;
  }
  return s;
}

namespace {

template <FieldElement K>
class Parser {
 public:
  Parser(std::string_view text, int nvars, typename K::field_type field)
      : text_(text), nvars_(nvars), field_(field) {}

  Polynomial<K> run() {
    std::vector<Term<K>> terms;
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      Term<K> t = term();
      if (negative) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == text_.size()) break;
    }
    return Polynomial<K>::from_terms(nvars_, field_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string_view digits() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return text_.substr(start, pos_ - start);
  }

  int small_int(std::size_t limit, const char* what) {
    std::size_t start = pos_;
    auto d = digits();
    if (d.size() > 4 || std::stoul(std::string(d)) > limit) {
      throw ParseError(std::string(what) + " too large", start);
    }
    return static_cast<int>(std::stoul(std::string(d)));
  }

  Term<K> term() {
    K coeff = field_.one();
    std::array<int, kMaxVars> exps{};
    int total = 0;
    while (true) {
      skip_ws();
      std::size_t start = pos_;
      if (at_digit()) {
        K c = field_.from_decimal(digits());
        skip_ws();
        if (peek() == '/') {
          ++pos_;
          skip_ws();
          std::size_t den_pos = pos_;
          K den = field_.from_decimal(digits());
          if (den.is_zero()) throw ParseError("zero denominator", den_pos);
          c = c * den.inverse();
        }
        coeff = coeff * c;
      } else if (peek() == 'x') {
        ++pos_;
        skip_ws();
        std::size_t idx_pos = pos_;
        int idx = small_int(1000, "variable index");
        if (idx >= nvars_) {
          throw ParseError("variable x" + std::to_string(idx) + " out of range for " +
                               std::to_string(nvars_) + " variables",
                           idx_pos);
        }
        int e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = small_int(kMaxDegree, "exponent");
        }
        exps[idx] += e;
        total += e;
        if (total > kMaxDegree) throw ParseError("monomial degree too large", start);
      } else {
        throw ParseError(pos_ == text_.size() ? "unexpected end of input" : "unexpected character",
                         pos_);
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {Monomial::from_exponents(std::span<const int>(exps.data(), nvars_)), coeff};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int nvars_;
  typename K::field_type field_;
};

// Returns the absolute value as text and whether the coefficient is negative.
std::pair<std::string, bool> split_sign(const Fp& c) {
  std::int64_t s = c.signed_value();
  return {std::to_string(s < 0 ? -s : s), s < 0};
}

std::pair<std::string, bool> split_sign(const Rational& c) {
  bool neg = c.value() < 0;
  Rational a = neg ? -c : c;
  return {to_string(a), neg};
}

}  // namespace

template <FieldElement K>
Polynomial<K> parse_poly(std::string_view text, int nvars, typename K::field_type field) {
  if (nvars < 1 || nvars > kMaxVars) {
    throw DomainError("number of variables must be in [1, " + std::to_string(kMaxVars) + "]");
  }
  return Parser<K>(text, nvars, field).run();
}

template <FieldElement K>
std::string render(const Polynomial<K>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    auto [mag, negative] = split_sign(t.coefficient);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != "1" || t.monomial.is_one()) {
      os << mag;
      need_star = true;
    }
    for (int i = 0; i < p.nvars(); ++i) {
      int e = t.monomial.exponent(i);
      if (e == 0) continue;
      if (need_star) os << '*';
      os << 'x' << i;
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

PolyFp parse_poly(std::string_view text, int nvars, std::uint32_t modulus) {
  return parse_poly<Fp>(text, nvars, PrimeField(modulus));
}

template Polynomial<Fp> parse_poly<Fp>(std::string_view, int, PrimeField);
template Polynomial<Rational> parse_poly<Rational>(std::string_view, int, RationalField);
template std::string render<Fp>(const Polynomial<Fp>&);
template std::string render<Rational>(const Polynomial<Rational>&);

}  // namespace hicone
