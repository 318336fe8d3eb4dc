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

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gregdow {

// Days of the week, numbered Monday = 0 through Sunday = 6.
enum class Weekday : int {
  monday = 0,
  tuesday = 1,
  wednesday = 2,
  thursday = 3,
  friday = 4,
  saturday = 5,
  sunday = 6,
};

constexpr int weekday_number(Weekday w) { return static_cast<int>(w); }

constexpr Weekday weekday_from_number(int n) {
  if (n < 0 || n > 6) throw std::out_of_range("weekday number must be in 0..6");
  return static_cast<Weekday>(n);
}

std::string_view weekday_name(Weekday w);

// Leap-year predicate: divisible by 4, except centurial years, which count
// only when divisible by 400. Returns 1 or 0 so it can be used as a term.
// Accepts the back-dated range [1200, 9999] needed by the regression datasets.
constexpr int is_leap_year(int year) {
  if (year < 1200 || year > 9999)
    throw std::out_of_range("year must be in 1200..9999");
  return (year % 4 == 0 && (year % 100 != 0 || year % 400 == 0)) ? 1 : 0;
}

constexpr int month_length(int year, int month) {
  if (month < 1 || month > 12) throw std::out_of_range("month must be in 1..12");
  constexpr int lengths[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return lengths[month - 1] + (month == 2 ? is_leap_year(year) : 0);
}

constexpr int days_in_year(int year) { return 365 + is_leap_year(year); }

// A validated Gregorian calendar date. Instances always lie in the supported
// range [1582-10-15, 9999-12-31]; construction throws otherwise.
class Date {
 public:
  constexpr Date(int year, int month, int day)
      : year_(year), month_(month), day_(day) {
    if (year < 1582 || year > 9999)
      throw std::out_of_range("year must be in 1582..9999");
    if (month < 1 || month > 12)
      throw std::out_of_range("month must be in 1..12");
    if (day < 1 || day > month_length(year, month))
      throw std::out_of_range("day out of range for month");
    if (year == 1582 && (month < 10 || (month == 10 && day < 15)))
      throw std::out_of_range("dates before 1582-10-15 are not supported");
  }

  constexpr int year() const { return year_; }
  constexpr int month() const { return month_; }
  constexpr int day() const { return day_; }

  friend constexpr auto operator<=>(const Date&, const Date&) = default;

  // Strict YYYY-MM-DD: four/two/two zero-padded digits, hyphen separators.
  // Throws std::invalid_argument on malformed text, std::out_of_range on a
  // well-formed but unsupported date.
  static Date parse(std::string_view text);

  std::string to_string() const;

 private:
  int year_;
  int month_;
  int day_;
};

inline constexpr Date gregorian_epoch() { return Date(1582, 10, 15); }
inline constexpr Date last_supported_date() { return Date(9999, 12, 31); }
inline constexpr int epoch_year = 1582;
inline constexpr Weekday epoch_weekday = Weekday::friday;

// Successor calendar date; throws once past 9999-12-31.
constexpr Date next_day(const Date& d) {
  if (d.day() < month_length(d.year(), d.month()))
    return Date(d.year(), d.month(), d.day() + 1);
  if (d.month() < 12) return Date(d.year(), d.month() + 1, 1);
  return Date(d.year() + 1, 1, 1);
}

}  // namespace gregdow
