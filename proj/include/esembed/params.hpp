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

#include <cstdint>
#include <string>

#include "esembed/rational.hpp"

namespace esembed {

// Every numeric constant of the construction. Quantities written "c·√δ·k" below are
// always rounded exactly through scaled_sqrt_ceil / scaled_sqrt_floor.
struct ParameterSet {
  Rational delta{1, 10'000'000'000};  // 10^-10
  Rational c_leafcut{10};             // leaf threshold / |L| = ⌈c·√δ·k⌉
  Rational c_R1{100};                 // R1 covers ⌊c·√δ·k⌋ degree-2 vertices
  Rational c_A{30};                   // (A): |J_π| <= c·√δ·k
  Rational c_B{16};                   // (B): |H_π| >= c·√δ·k, |H'_π| = ⌈c·√δ·k⌉
  Rational c_prefix{49, 50};          // |V_π| = ⌈c·k⌉
  Rational c_nonneigh{1, 3};          // H_π: fewer than c·a non-neighbours
  Rational c_small_k{2, 3};           // S: degree <= c_small_k·k + c_small_a·a
  Rational c_small_a{1};
  Rational c_sprime{2};               // |S'| = ⌈c·√δ·k⌉
  std::uint32_t retry_budget = 64;

  /// Constants as used in the proof for asymptotically large k.
  static ParameterSet paper() { return {}; }

  /// Multipliers shrunk so that every phase has non-trivial, mutually consistent
  /// sizes on hosts with 50..300 tree edges and n <= (1 + delta)k.
  static ParameterSet desk(const Rational& delta);

  /// Throws DomainError unless 0 <= delta <= 1, every multiplier is positive,
  /// c_prefix < 1 and c_nonneigh <= 1/2.
  void validate() const;
};

}  // namespace esembed
