// Copyright 2026 the gregdow authors
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

namespace gregdow {

// Integer division rounding toward negative infinity. C++'s operator/
// truncates toward zero, which is wrong for the negative floor arguments
// that show up near the lower end of the supported range.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Modulo with the sign of the divisor: result is in [0, b) for b > 0.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - floor_div(a, b) * b;
}

static_assert(floor_div(-179, 330) == -1);
static_assert(floor_div(179, 330) == 0);
static_assert(floor_mod(-3, 7) == 4);
static_assert(floor_mod(368, 7) == 4);

}  // namespace gregdow
