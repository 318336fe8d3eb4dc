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
#include <string_view>

#include "gregdow/date.hpp"

// Independent reference implementations used to cross-check the formula.
// Neither shares code with the formula beyond the Date type and the
// month-length table.

namespace gregdow::oracles {

enum class OracleId { zeller, iterative };

std::string_view oracle_name(OracleId id);
OracleId oracle_from_name(std::string_view name);  // throws on unknown name

// Zeller's congruence (Gregorian form), with January and February treated as
// months 13 and 14 of the previous year, remapped from its native
// Saturday = 0 numbering to Monday = 0.
Weekday zeller_day_of_week(const Date& date);

enum class Accumulation {
  monthly,  // sum month lengths
  daily,    // literal next_day walk, for auditing
};

// Exact day count from 1582-10-15 (which maps to 0), by explicit
// accumulation over the month-length table.
std::int64_t days_since_epoch(const Date& date,
                              Accumulation mode = Accumulation::monthly);

// (epoch weekday + days since epoch) mod 7.
Weekday iterative_day_of_week(const Date& date);

}  // namespace gregdow::oracles
