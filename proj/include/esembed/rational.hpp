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

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace esembed {

// Exact rational with 64-bit numerator/denominator. Intermediate products are
// computed in 128 bits; a result that does not fit in 64 bits throws
// std::overflow_error rather than silently wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "3", "-3/4", "0.05", "1e-10", "2.5e-3".
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  std::int64_t floor() const noexcept;
  std::int64_t ceil() const noexcept;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// floor(sqrt(x)) for x >= 0.
std::uint64_t isqrt_floor(unsigned __int128 x);

/// ceil(coef * sqrt(delta) * k), computed exactly (no floating point).
std::int64_t scaled_sqrt_ceil(const Rational& coef, const Rational& delta, std::int64_t k);
/// floor(coef * sqrt(delta) * k), computed exactly.
std::int64_t scaled_sqrt_floor(const Rational& coef, const Rational& delta, std::int64_t k);
/// True iff value <= coef * sqrt(delta) * k.
bool at_most_scaled_sqrt(std::int64_t value, const Rational& coef, const Rational& delta, std::int64_t k);

}  // namespace esembed
