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
#include <stdexcept>

#include "gregdow/date.hpp"
#include "gregdow/intmath.hpp"

// Day-of-week computation built from truncated linear models: a leap-year
// counting term, a day-of-year term, and a two-month error correction, summed
// with a per-year offset and reduced mod 7. Everything here is exact 64-bit
// integer arithmetic; floors round toward negative infinity throughout.

namespace gregdow {

// Leap years strictly between 1582 and the given year, excluding the year
// itself. Defined for 1582 (where it is 0) through 9999.
constexpr std::int64_t leap_years_since_epoch(int year) {
  if (year < 1582 || year > 9999)
    throw std::out_of_range("year must be in 1582..9999");
  return floor_div(year, 4) - floor_div(year, 100) + floor_div(year, 400) -
         383 - is_leap_year(year);
}

// 1 for January and February, 0 for every other month: floor(6/5 - m/10).
constexpr int correction_term(int month) {
  if (month < 1 || month > 12)
    throw std::invalid_argument("month must be in 1..12");
  return static_cast<int>(floor_div(12 - month, 10));
}

// Rounded day-of-year model for the first of the month: the fractions
// 1009m/33 - 3423/110 + l are floored over the common denominator 330 to
// keep the evaluation exact.
constexpr std::int64_t first_of_month_ordinal_term(int month, int leap) {
  return floor_div(10090LL * month - 10269 + 330LL * leap, 330);
}

// 1-based ordinal of the date within its year (Jan 1 -> 1, Dec 31 -> 365/366).
constexpr std::int64_t day_of_year(const Date& date) {
  const int leap = is_leap_year(date.year());
  return first_of_month_ordinal_term(date.month(), leap) +
         static_cast<std::int64_t>(2 - leap) * correction_term(date.month()) +
         date.day() - 1;
}

// Intermediate quantities of the weekday computation, kept for step-by-step
// reporting.
struct WeekdayBreakdown {
  int leap;                       // l(y)
  std::int64_t leap_years;        // L(y)
  std::int64_t ordinal;           // D(y, m, d)
  std::int64_t running_sum;       // value reduced mod 7
  Weekday weekday;
};

constexpr WeekdayBreakdown day_of_week_breakdown(const Date& date) {
  WeekdayBreakdown b{};
  b.leap = is_leap_year(date.year());
  b.leap_years = leap_years_since_epoch(date.year());
  b.ordinal = day_of_year(date);
  b.running_sum = weekday_number(epoch_weekday) +
                  365LL * (date.year() - epoch_year) - 1 + b.leap_years +
                  b.ordinal;
  b.weekday = weekday_from_number(static_cast<int>(floor_mod(b.running_sum, 7)));
  return b;
}

constexpr Weekday day_of_week(const Date& date) {
  return day_of_week_breakdown(date).weekday;
}

// Same computation with all constants folded together. The partial sums go
// negative near the epoch, hence the floored mod.
constexpr Weekday day_of_week_simplified(const Date& date) {
  const std::int64_t y = date.year();
  const int leap = is_leap_year(date.year());
  const std::int64_t sum =
      365 * y - 577811 + floor_div(y, 4) - floor_div(y, 100) +
      floor_div(y, 400) - leap +
      first_of_month_ordinal_term(date.month(), leap) +
      static_cast<std::int64_t>(2 - leap) * correction_term(date.month()) +
      date.day();
  return weekday_from_number(static_cast<int>(floor_mod(sum, 7)));
}

static_assert(day_of_week(gregorian_epoch()) == Weekday::friday);
static_assert(day_of_week(Date(1583, 1, 1)) == Weekday::saturday);
static_assert(day_of_year(Date(2001, 1, 1)) == 1);

}  // namespace gregdow
