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

#include <string>
#include <vector>

#include <doctest.h>

#include "gregdow/date.hpp"

namespace gregdow::regression {
namespace {

std::vector<DataPoint> months_from(const std::vector<DataPoint>& points,
                                   int first_month) {
  std::vector<DataPoint> out;
  for (const DataPoint& p : points)
    if (p.x >= first_month) out.push_back(p);
  return out;
}

TEST_SUITE("regression") {

TEST_CASE("ols on small exact datasets") {
  {
    const DataPoint pts[] = {{0, 1}, {1, 3}};
    const LinearModel m = ols_fit(pts);
    CHECK(m.slope == Rational(2));
    CHECK(m.intercept == Rational(1));
  }
  {
    const DataPoint pts[] = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    const LinearModel m = ols_fit(pts);
    CHECK(m.slope == Rational(1));
    CHECK(m.intercept == Rational(0));
  }
  {
    // Residuals cancel pairwise; the fit passes through the midpoints.
    const DataPoint pts[] = {{0, 0}, {0, 2}, {4, 3}, {4, 5}};
    const LinearModel m = ols_fit(pts);
    CHECK(m.slope == Rational(3, 4));
    CHECK(m.intercept == Rational(1));
  }
}

TEST_CASE("ols rejects degenerate inputs") {
  const DataPoint one[] = {{1, 1}};
  CHECK_THROWS_AS(ols_fit(one), std::invalid_argument);
  const DataPoint vertical[] = {{1, 1}, {1, 2}, {1, 3}};
  CHECK_THROWS_AS(ols_fit(vertical), std::invalid_argument);
  CHECK_THROWS_AS(ols_fit(std::span<const DataPoint>{}), std::invalid_argument);
}

TEST_CASE("model prediction is exact rational evaluation") {
  const LinearModel m{Rational(1, 4), Rational(-300)};
  CHECK(m.predict(1200) == Rational(0));
  CHECK(m.predict(1204) == Rational(1));
  CHECK(m.predict(1206) == Rational(3, 2));
}

TEST_CASE("leap year dataset indexing") {
  CHECK(leap_year_dataset(1200, 1204) ==
        std::vector<DataPoint>{{1200, 0}, {1204, 1}});
  // 1300 is centurial and skipped; the index continues unbroken.
  CHECK(leap_year_dataset(1296, 1304) ==
        std::vector<DataPoint>{{1296, 24}, {1304, 25}});
  const std::vector<DataPoint> to_epoch = leap_year_dataset(1200, 1582);
  CHECK(to_epoch.front() == DataPoint{1200, 0});
  CHECK(to_epoch.back() == DataPoint{1580, 92});
  CHECK(leap_year_dataset(1200, 9999).size() == 2134);
  CHECK(leap_year_dataset(1201, 1203).empty());
  CHECK_THROWS_AS(leap_year_dataset(1199, 1300), std::out_of_range);
  CHECK_THROWS_AS(leap_year_dataset(1200, 10000), std::out_of_range);
}

TEST_CASE("day of year dataset matches the calendar") {
  const std::vector<DataPoint> plain = day_of_year_dataset(false);
  const std::vector<DataPoint> leap = day_of_year_dataset(true);
  REQUIRE(plain.size() == 12);
  REQUIRE(leap.size() == 12);
  const std::int64_t plain_y[12] = {1,   32,  60,  91,  121, 152,
                                    182, 213, 244, 274, 305, 335};
  const std::int64_t leap_y[12] = {1,   32,  61,  92,  122, 153,
                                   183, 214, 245, 275, 306, 336};
  for (int m = 1; m <= 12; ++m) {
    CHECK(plain[m - 1] == DataPoint{m, plain_y[m - 1]});
    CHECK(leap[m - 1] == DataPoint{m, leap_y[m - 1]});
  }
}

TEST_CASE("leap window fits") {
  {
    const LinearModel m = windowed_leap_fit(1200, 1300);
    CHECK(m.slope == Rational(1, 4));
    CHECK(m.intercept == Rational(-300));
  }
  {
    const LinearModel m = windowed_leap_fit(1668, 1696);
    CHECK(m.slope == Rational(1, 4));
    CHECK(m.intercept == Rational(-303));
  }
  {
    const LinearModel m = windowed_leap_fit(1704, 1732);
    CHECK(m.slope == Rational(1, 4));
    CHECK(m.intercept == Rational(-304));
  }
  {
    const LinearModel m = windowed_leap_fit(1568, 1632);
    CHECK(m.slope == Rational(1, 4));
    CHECK(m.intercept == Rational(-303));
  }
  CHECK(windowed_intercept_scan(1200, 1300) == Rational(-300));
  CHECK(windowed_intercept_scan(1668, 1696) == Rational(-303));
  CHECK(windowed_intercept_scan(1704, 1732) == Rational(-304));
}

TEST_CASE("day of year fits") {
  const std::vector<DataPoint> plain = day_of_year_dataset(false);
  {
    const LinearModel m = ols_fit(plain);
    CHECK(m.slope == Rational(4350, 143));
    CHECK(m.intercept == Rational(-665, 22));
  }
  {
    const LinearModel m = ols_fit(months_from(plain, 3));
    CHECK(m.slope == Rational(1009, 33));
    CHECK(m.intercept == Rational(-1739, 55));
  }
}

TEST_CASE("pearson correlation stays exact") {
  {
    const Correlation c = pearson_r(leap_year_dataset(1200, 1300));
    CHECK(c.r_squared == Rational(1));
    CHECK(c.slope_sign == 1);
    CHECK(c.exactly_one());
    CHECK_FALSE(c.exactly_minus_one());
  }
  {
    const DataPoint down[] = {{0, 2}, {1, 1}, {2, 0}};
    const Correlation c = pearson_r(down);
    CHECK(c.exactly_minus_one());
    CHECK_FALSE(c.exactly_one());
  }
  {
    const DataPoint tent[] = {{0, 0}, {1, 1}, {2, 0}};
    const Correlation c = pearson_r(tent);
    CHECK(c.r_squared == Rational(0));
    CHECK(c.slope_sign == 0);
    CHECK_FALSE(c.exactly_one());
  }
  {
    // The full 1200..9999 dataset is close to linear but not exactly so.
    const Correlation c = pearson_r(leap_year_dataset(1200, 9999));
    CHECK(c.slope_sign == 1);
    CHECK(c.r_squared < Rational(1));
    CHECK(c.r_squared > Rational(99, 100));
  }
  const DataPoint flat[] = {{1, 5}, {2, 5}};
  CHECK_THROWS_AS(pearson_r(flat), std::invalid_argument);
  const DataPoint vertical[] = {{1, 1}, {1, 2}};
  CHECK_THROWS_AS(pearson_r(vertical), std::invalid_argument);
}

TEST_CASE("error table for the initial day of year model") {
  const std::vector<DataPoint> plain = day_of_year_dataset(false);
  const LinearModel m = ols_fit(plain);
  const std::vector<ErrorTableRow> rows = error_table(m, plain);
  REQUIRE(rows.size() == 12);

  const char* predicted[12] = {"0.2",   "30.6",  "61.0",  "91.5",
                               "121.9", "152.3", "182.7", "213.1",
                               "243.5", "274.0", "304.4", "334.8"};
  const char* error[12] = {"0.8",  "1.4",  "-1.0", "-0.5", "-0.9", "-0.3",
                           "-0.7", "-0.1", "0.5",  "0.0",  "0.6",  "0.2"};
  const std::int64_t rounded[12] = {0,   31,  61,  91,  122, 152,
                                    183, 213, 244, 274, 304, 335};
  const std::int64_t rounded_error[12] = {1, 1, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0};

  for (int i = 0; i < 12; ++i) {
    CHECK(rows[i].month == i + 1);
    CHECK(rows[i].observed == plain[i].y);
    CHECK(rows[i].predicted.to_decimal(1) == predicted[i]);
    CHECK(rows[i].error.to_decimal(1) == error[i]);
    CHECK(rows[i].predicted_rounded == rounded[i]);
    CHECK(rows[i].rounded_error == rounded_error[i]);
    CHECK(rows[i].error == Rational(rows[i].observed) - rows[i].predicted);
    CHECK(rows[i].rounded_error == rows[i].observed - rows[i].predicted_rounded);
  }
  CHECK(rows[0].predicted == Rational(5, 26));
}

TEST_CASE("error table for the revised day of year model") {
  const std::vector<DataPoint> plain = day_of_year_dataset(false);
  const LinearModel m = ols_fit(months_from(plain, 3));
  const std::vector<ErrorTableRow> rows = error_table(m, plain);
  REQUIRE(rows.size() == 12);

  const char* predicted[12] = {"-1.0",  "29.5",  "60.1",  "90.7",
                               "121.3", "151.8", "182.4", "213.0",
                               "243.6", "274.1", "304.7", "335.3"};
  const char* error[12] = {"2.0",  "2.5", "-0.1", "0.3", "-0.3", "0.2",
                           "-0.4", "0.0", "0.4",  "-0.1", "0.3", "-0.3"};
  const std::int64_t rounded[12] = {-1,  30,  60,  91,  121, 152,
                                    182, 213, 244, 274, 305, 335};
  const std::int64_t rounded_error[12] = {2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};

  for (int i = 0; i < 12; ++i) {
    CHECK(rows[i].month == i + 1);
    CHECK(rows[i].predicted.to_decimal(1) == predicted[i]);
    CHECK(rows[i].error.to_decimal(1) == error[i]);
    CHECK(rows[i].predicted_rounded == rounded[i]);
    CHECK(rows[i].rounded_error == rounded_error[i]);
  }
  CHECK(rows[0].predicted == Rational(-172, 165));
  // The month 8 residual is tiny but nonzero.
  CHECK(rows[7].error == Rational(2, 165));
  for (int i = 2; i < 12; ++i) CHECK(rows[i].rounded_error == 0);
}

}  // TEST_SUITE

}  // namespace
}  // namespace gregdow::regression
