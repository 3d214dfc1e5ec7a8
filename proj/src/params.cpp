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

#include "esembed/params.hpp"

#include "esembed/errors.hpp"

namespace esembed {

ParameterSet ParameterSet::desk(const Rational& delta) {
  ParameterSet p;
  p.delta = delta;
  p.c_leafcut = Rational(1);
  p.c_sprime = Rational(1, 10);
  p.c_R1 = Rational(1);
  p.c_A = Rational(1);
  p.c_B = Rational(1, 5);
  p.c_prefix = Rational(1, 2);
  p.c_nonneigh = Rational(1, 2);
  return p;
}

void ParameterSet::validate() const {
  const Rational zero(0);
  if (delta < zero || delta > Rational(1)) throw DomainError("delta must lie in [0, 1]");
  const Rational* positive[] = {&c_leafcut, &c_R1,      &c_A,       &c_B,      &c_prefix,
                                &c_nonneigh, &c_small_k, &c_small_a, &c_sprime};
  for (const Rational* r : positive) {
    if (*r <= zero) throw DomainError("parameter multipliers must be positive");
  }
  if (c_prefix >= Rational(1)) throw DomainError("c_prefix must be < 1");
  // Two H'-vertices must still share a neighbour among the last a unused vertices.
  if (c_nonneigh > Rational(1, 2)) throw DomainError("c_nonneigh must be <= 1/2");
}

}  // namespace esembed
