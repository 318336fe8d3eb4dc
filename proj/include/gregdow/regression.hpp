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
#include <span>
#include <vector>

#include "gregdow/rational.hpp"

// Exact ordinary least squares over integer data, plus the two dataset
// generators the weekday formula's linear models are fitted from. No floating
// point anywhere: coefficients come out as exact fractions.

namespace gregdow::regression {

struct DataPoint {
  std::int64_t x;
  std::int64_t y;
  friend bool operator==(const DataPoint&, const DataPoint&) = default;
};

struct LinearModel {
  Rational slope;
  Rational intercept;

  Rational predict(const Rational& x) const { return slope * x + intercept; }
  Rational predict(std::int64_t x) const { return predict(Rational(x)); }
};

// Closed-form simple OLS: slope = Sxy/Sxx, intercept = mean(y) - slope*mean(x).
// Throws std::invalid_argument on fewer than two points or zero x-variance.
LinearModel ols_fit(std::span<const DataPoint> points);

// Pearson correlation, kept exact: r^2 as a fraction plus the sign of the
// covariance. r == 1 is decided without ever taking a square root.
struct Correlation {
  Rational r_squared;
  int slope_sign;  // -1, 0, or +1

  bool exactly_one() const { return slope_sign > 0 && r_squared == Rational(1); }
  bool exactly_minus_one() const {
    return slope_sign < 0 && r_squared == Rational(1);
  }
};

Correlation pearson_r(std::span<const DataPoint> points);

// One point per back-dated Gregorian leap year in [start_year, end_year],
// x = the year, y = its cumulative index with 1200 -> 0. Bounds must lie in
// [1200, 9999].
std::vector<DataPoint> leap_year_dataset(int start_year, int end_year);

// (month, ordinal of the first of the month) for months 1..12.
std::vector<DataPoint> day_of_year_dataset(bool leap);

struct ErrorTableRow {
  int month;
  std::int64_t observed;
  Rational predicted;
  Rational error;                  // observed - predicted
  std::int64_t predicted_rounded;  // floor(predicted + 1/2)
  std::int64_t rounded_error;      // observed - predicted_rounded
};

std::vector<ErrorTableRow> error_table(const LinearModel& model,
                                       std::span<const DataPoint> points);

// OLS over the leap-year dataset restricted to [window_start, window_end].
LinearModel windowed_leap_fit(int window_start, int window_end);

// Intercept of the windowed fit; slopes come out exactly 1/4 for windows
// clear of centurial discontinuities.
Rational windowed_intercept_scan(int window_start, int window_end);

}  // namespace gregdow::regression
