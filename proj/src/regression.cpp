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

#include "gregdow/regression.hpp"

#include <stdexcept>

#include "gregdow/date.hpp"

namespace gregdow::regression {

namespace {

struct Moments {
  BigInt n;
  BigInt sum_x, sum_y, sum_xx, sum_xy, sum_yy;

  // n*Sxy - Sx*Sy and friends: the centered sums scaled by n, which keeps
  // everything integral.
  BigInt scaled_cov() const { return n * sum_xy - sum_x * sum_y; }
  BigInt scaled_var_x() const { return n * sum_xx - sum_x * sum_x; }
  BigInt scaled_var_y() const { return n * sum_yy - sum_y * sum_y; }
};

Moments accumulate(std::span<const DataPoint> points) {
  Moments m{};
  m.n = static_cast<long long>(points.size());
  for (const DataPoint& p : points) {
    m.sum_x += p.x;
    m.sum_y += p.y;
    m.sum_xx += BigInt(p.x) * p.x;
    m.sum_xy += BigInt(p.x) * p.y;
    m.sum_yy += BigInt(p.y) * p.y;
  }
  return m;
}

}  // namespace

LinearModel ols_fit(std::span<const DataPoint> points) {
  if (points.size() < 2)
    throw std::invalid_argument("ols_fit needs at least 2 points");
  const Moments m = accumulate(points);
  if (m.scaled_var_x() == 0)
    throw std::invalid_argument("ols_fit: zero variance in x");
  Rational slope(m.scaled_cov(), m.scaled_var_x());
  Rational intercept =
      Rational(m.sum_y, m.n) - slope * Rational(m.sum_x, m.n);
  return LinearModel{slope, intercept};
}

Correlation pearson_r(std::span<const DataPoint> points) {
  if (points.size() < 2)
    throw std::invalid_argument("pearson_r needs at least 2 points");
  const Moments m = accumulate(points);
  const BigInt cov = m.scaled_cov();
  const BigInt var_x = m.scaled_var_x();
  const BigInt var_y = m.scaled_var_y();
  if (var_x == 0 || var_y == 0)
    throw std::invalid_argument("pearson_r: zero variance");
  Correlation c;
  c.r_squared = Rational(cov * cov, var_x * var_y);
  c.slope_sign = cov == 0 ? 0 : (cov > 0 ? 1 : -1);
  return c;
}

std::vector<DataPoint> leap_year_dataset(int start_year, int end_year) {
  if (start_year < 1200 || end_year > 9999 || start_year > end_year)
    throw std::out_of_range("leap-year dataset window must lie in 1200..9999");
  std::vector<DataPoint> points;
  std::int64_t index = -1;
  for (int year = 1200; year <= end_year; ++year) {
    if (!is_leap_year(year)) continue;
    ++index;  // 1200 gets index 0
    if (year >= start_year) points.push_back({year, index});
  }
  return points;
}

std::vector<DataPoint> day_of_year_dataset(bool leap) {
  std::vector<DataPoint> points;
  points.reserve(12);
  std::int64_t ordinal = 1;
  for (int month = 1; month <= 12; ++month) {
    points.push_back({month, ordinal});
    ordinal += month_length(leap ? 2000 : 2001, month);
  }
  return points;
}

std::vector<ErrorTableRow> error_table(const LinearModel& model,
                                       std::span<const DataPoint> points) {
  std::vector<ErrorTableRow> rows;
  rows.reserve(points.size());
  for (const DataPoint& p : points) {
    ErrorTableRow row;
    row.month = static_cast<int>(p.x);
    row.observed = p.y;
    row.predicted = model.predict(p.x);
    row.error = Rational(p.y) - row.predicted;
    row.predicted_rounded =
        round_half_up(row.predicted).convert_to<std::int64_t>();
    row.rounded_error = p.y - row.predicted_rounded;
    rows.push_back(std::move(row));
  }
  return rows;
}

LinearModel windowed_leap_fit(int window_start, int window_end) {
  return ols_fit(leap_year_dataset(window_start, window_end));
}

Rational windowed_intercept_scan(int window_start, int window_end) {
  return windowed_leap_fit(window_start, window_end).intercept;
}

}  // namespace gregdow::regression
