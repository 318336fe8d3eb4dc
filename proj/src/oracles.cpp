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

#include "gregdow/oracles.hpp"

#include <stdexcept>

#include "gregdow/intmath.hpp"

namespace gregdow::oracles {

std::string_view oracle_name(OracleId id) {
  return id == OracleId::zeller ? "zeller" : "iterative";
}

OracleId oracle_from_name(std::string_view name) {
  if (name == "zeller") return OracleId::zeller;
  if (name == "iterative") return OracleId::iterative;
  throw std::invalid_argument("unknown oracle: '" + std::string(name) + "'");
}

Weekday zeller_day_of_week(const Date& date) {
  std::int64_t q = date.day();
  std::int64_t m = date.month();
  std::int64_t y = date.year();
  if (m < 3) {
    m += 12;
    --y;
  }
  const std::int64_t k = y % 100;
  const std::int64_t j = y / 100;
  const std::int64_t h =
      floor_mod(q + (13 * (m + 1)) / 5 + k + k / 4 + j / 4 - 2 * j, 7);
  // Zeller: 0 = Saturday; shift to Monday = 0.
  return weekday_from_number(static_cast<int>(floor_mod(h + 5, 7)));
}

std::int64_t days_since_epoch(const Date& date, Accumulation mode) {
  if (mode == Accumulation::daily) {
    std::int64_t count = 0;
    Date cursor = gregorian_epoch();
    while (cursor < date) {
      cursor = next_day(cursor);
      ++count;
    }
    return count;
  }
  // Month-by-month: whole months from 1582-10 up to the date's month, then
  // day offsets relative to the epoch's day of month.
  std::int64_t days = 0;
  int year = 1582;
  int month = 10;
  while (year < date.year() || month < date.month()) {
    days += month_length(year, month);
    if (++month > 12) {
      month = 1;
      ++year;
    }
  }
  return days + date.day() - 15;
}

Weekday iterative_day_of_week(const Date& date) {
  return weekday_from_number(static_cast<int>(
      floor_mod(weekday_number(epoch_weekday) + days_since_epoch(date), 7)));
}

}  // namespace gregdow::oracles
