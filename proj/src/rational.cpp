// Copyright 2026 The esembed Authors
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

#include "esembed/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "esembed/errors.hpp"

namespace esembed {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

// num/den as a (numerator, denominator) pair of c^2 * delta * k^2.
struct Square {
  u128 num;
  u128 den;
};

Square scaled_square(const Rational& coef, const Rational& delta, std::int64_t k) {
  if (coef < Rational(0) || delta < Rational(0) || k < 0) {
    throw DomainError("scaled sqrt bound requires non-negative coefficient, delta and k");
  }
  u128 num = static_cast<u128>(coef.num()) * static_cast<u128>(coef.num());
  u128 den = static_cast<u128>(coef.den()) * static_cast<u128>(coef.den());
  num *= static_cast<u128>(delta.num());
  den *= static_cast<u128>(delta.den());
  const u128 kk = static_cast<u128>(k) * static_cast<u128>(k);
  if (kk != 0 && num > std::numeric_limits<u128>::max() / kk) {
    throw std::overflow_error("scaled sqrt bound overflows 128 bits");
  }
  num *= kk;
  return {num, den};
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax64 || num < -kMax64 || den > kMax64) {
    throw std::overflow_error("rational overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ParseError(0, "not a rational number: '" + std::string(text) + "'");
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational a = parse(text.substr(0, slash));
    const Rational b = parse(text.substr(slash + 1));
    if (b == Rational(0)) return fail();
    return a / b;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  i128 mantissa = 0;
  i128 scale = 1;
  bool digits = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits = true;
      mantissa = mantissa * 10 + (ch - '0');
      if (seen_point) scale *= 10;
      if (mantissa > kMax64 * 1000 || scale > kMax64) return fail();
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!digits) return fail();
  int exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') return fail();
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    if (pos == text.size()) return fail();
    for (; pos < text.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return fail();
      exponent = exponent * 10 + (text[pos] - '0');
      if (exponent > 36) return fail();
    }
    if (exp_negative) exponent = -exponent;
  }
  i128 num = negative ? -mantissa : mantissa;
  i128 den = scale;
  for (; exponent > 0; --exponent) num *= 10;
  for (; exponent < 0; ++exponent) den *= 10;
  return from_wide(num, den);
}

std::int64_t Rational::floor() const noexcept {
  return static_cast<std::int64_t>(floor_div(num_, den_));
}

std::int64_t Rational::ceil() const noexcept {
  return static_cast<std::int64_t>(-floor_div(-static_cast<i128>(num_), den_));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                             static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("division by zero rational");
  return Rational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  const i128 lhs = static_cast<i128>(a.num_) * b.den_;
  const i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::uint64_t isqrt_floor(u128 x) {
  if (x == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (static_cast<u128>(r) * r > x) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t scaled_sqrt_floor(const Rational& coef, const Rational& delta, std::int64_t k) {
  const Square sq = scaled_square(coef, delta, k);
  // floor(sqrt(q)) == floor(sqrt(floor(q))) for q >= 0.
  return static_cast<std::int64_t>(isqrt_floor(sq.num / sq.den));
}

std::int64_t scaled_sqrt_ceil(const Rational& coef, const Rational& delta, std::int64_t k) {
  const Square sq = scaled_square(coef, delta, k);
  // Smallest N with N^2 >= q; N^2 is an integer so this is ceil(sqrt(ceil(q))).
  const u128 q_ceil = (sq.num + sq.den - 1) / sq.den;
  std::uint64_t r = isqrt_floor(q_ceil);
  if (static_cast<u128>(r) * r < q_ceil) ++r;
  return static_cast<std::int64_t>(r);
}

bool at_most_scaled_sqrt(std::int64_t value, const Rational& coef, const Rational& delta, std::int64_t k) {
  if (value <= 0) return true;
  const Square sq = scaled_square(coef, delta, k);
  const u128 v2 = static_cast<u128>(value) * static_cast<u128>(value);
  // v^2 <= num/den  <=>  v^2 * den <= num
  if (sq.den != 0 && v2 > std::numeric_limits<u128>::max() / sq.den) return false;
  return v2 * sq.den <= sq.num;
}

}  // namespace esembed
