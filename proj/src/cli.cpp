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

#include "gregdow/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <span>
#include <stdexcept>

#include <CLI11.hpp>

#include "gregdow/date.hpp"
#include "gregdow/formula.hpp"
#include "gregdow/oracles.hpp"
#include "gregdow/regression.hpp"
#include "gregdow/verify.hpp"

namespace gregdow::cli {
namespace {

int run_dow(const std::string& text, std::ostream& out) {
  const Weekday w = day_of_week(Date::parse(text));
  out << weekday_name(w) << " (" << weekday_number(w) << ")\n";
  return 0;
}

int run_explain(const std::string& text, std::ostream& out) {
  const Date date = Date::parse(text);
  const WeekdayBreakdown b = day_of_week_breakdown(date);
  out << "date: " << date.to_string() << '\n';
  out << "leap year: " << (b.leap ? "yes" : "no") << '\n';
  out << "leap years since epoch: L = " << b.leap_years << '\n';
  out << "day of year: D = " << b.ordinal << '\n';
  out << "sum = " << weekday_number(epoch_weekday) << " + 365*(" << date.year()
      << " - " << epoch_year << ") - 1 + L + D = " << b.running_sum << '\n';
  out << "weekday = sum mod 7 = " << weekday_number(b.weekday) << " ("
      << weekday_name(b.weekday) << ")\n";
  return 0;
}

int run_verify(const std::string& from, const std::string& to,
               const std::string& oracle, std::size_t max_mismatches,
               std::ostream& out, std::ostream& err) {
  const verify::DateRange range{Date::parse(from), Date::parse(to)};
  std::vector<oracles::OracleId> against;
  if (oracle == "all") {
    against = {oracles::OracleId::zeller, oracles::OracleId::iterative};
  } else {
    against = {oracles::oracle_from_name(oracle)};
  }
  verify::VerifyOptions options;
  options.max_mismatches = max_mismatches;
  const verify::VerificationReport report =
      verify::verify_range(range, against, options);

  out << "range: " << range.start.to_string() << " .. "
      << range.end.to_string() << '\n';
  out << "oracles:";
  for (std::size_t i = 0; i < against.size(); ++i) {
    out << (i ? ", " : " ") << oracles::oracle_name(against[i]);
  }
  out << '\n';
  out << "dates checked: " << report.dates_checked << '\n';
  out << "mismatches: " << report.mismatch_count << '\n';
  for (const verify::Mismatch& m : report.mismatches) {
    out << "mismatch: " << m.date.to_string() << ' ' << m.candidate << '='
        << weekday_number(m.computed) << ' ' << oracles::oracle_name(m.oracle)
        << '=' << weekday_number(m.expected) << '\n';
  }
  if (report.mismatch_count > static_cast<long long>(report.mismatches.size())) {
    out << "(showing first " << report.mismatches.size() << " of "
        << report.mismatch_count << ")\n";
  }
  err << "elapsed: " << std::fixed << std::setprecision(2)
      << report.elapsed_seconds << "s\n";
  return report.ok() ? 0 : 1;
}

void print_model(const regression::LinearModel& model, std::ostream& out) {
  out << "slope: " << model.slope.to_string() << " (~"
      << model.slope.to_decimal(6) << ")\n";
  out << "intercept: " << model.intercept.to_string() << " (~"
      << model.intercept.to_decimal(6) << ")\n";
}

int run_fit(const std::string& dataset, int from, int to, bool windowed,
            std::ostream& out) {
  if (dataset == "leap1200") {
    const std::vector<regression::DataPoint> points =
        regression::leap_year_dataset(from, to);
    const regression::LinearModel model = regression::ols_fit(points);
    out << "dataset: " << dataset << '\n';
    out << "window: " << from << " .. " << to << '\n';
    out << "points: " << points.size() << '\n';
    print_model(model, out);
    return 0;
  }
  if (windowed) {
    throw std::invalid_argument("--from/--to apply only to --dataset leap1200");
  }
  const bool revised = dataset == "doy-revised";
  std::vector<regression::DataPoint> points =
      regression::day_of_year_dataset(false);
  if (revised) {
    std::erase_if(points,
                  [](const regression::DataPoint& p) { return p.x < 3; });
  }
  const regression::LinearModel model = regression::ols_fit(points);
  out << "dataset: " << dataset << '\n';
  out << "months: " << (revised ? 3 : 1) << " .. 12\n";
  out << "points: " << points.size() << '\n';
  print_model(model, out);
  return 0;
}

long long write_leap_years(std::ostream& os, int from, int to) {
  os << "year,leap_index\n";
  long long rows = 0;
  for (const regression::DataPoint& p : regression::leap_year_dataset(from, to)) {
    os << p.x << ',' << p.y << '\n';
    ++rows;
  }
  return rows;
}

long long write_day_of_year(std::ostream& os) {
  os << "month,day_of_year\n";
  long long rows = 0;
  for (const regression::DataPoint& p : regression::day_of_year_dataset(false)) {
    os << p.x << ',' << p.y << '\n';
    ++rows;
  }
  return rows;
}

long long write_error_table(std::ostream& os, bool revised) {
  std::vector<regression::DataPoint> points =
      regression::day_of_year_dataset(false);
  std::vector<regression::DataPoint> window = points;
  if (revised) {
    std::erase_if(window,
                  [](const regression::DataPoint& p) { return p.x < 3; });
  }
  const regression::LinearModel model = regression::ols_fit(window);
  os << "month,observed,predicted_exact,predicted_decimal,error_decimal,"
        "predicted_rounded,rounded_error\n";
  long long rows = 0;
  for (const regression::ErrorTableRow& row :
       regression::error_table(model, points)) {
    os << row.month << ',' << row.observed << ','
       << row.predicted.to_string() << ',' << row.predicted.to_decimal(1)
       << ',' << row.error.to_decimal(1) << ',' << row.predicted_rounded
       << ',' << row.rounded_error << '\n';
    ++rows;
  }
  return rows;
}

long long write_model_curve(std::ostream& os) {
  const std::vector<regression::DataPoint> points =
      regression::day_of_year_dataset(false);
  const regression::LinearModel model = regression::ols_fit(points);
  os << "month,day_of_year,predicted_exact,predicted_decimal\n";
  long long rows = 0;
  for (const regression::DataPoint& p : points) {
    const Rational predicted = model.predict(p.x);
    os << p.x << ',' << p.y << ',' << predicted.to_string() << ','
       << predicted.to_decimal(1) << '\n';
    ++rows;
  }
  return rows;
}

long long write_figure(std::ostream& os, int figure) {
  switch (figure) {
    case 1:
      return write_leap_years(os, 1200, 1300);
    case 2:
      return write_leap_years(os, 1568, 1632);
    case 3:
      return write_leap_years(os, 1668, 1732);
    case 4:
      return write_leap_years(os, 1582, 2150);
    case 5:
      return write_model_curve(os);
    default:
      throw std::invalid_argument("--figure must be between 1 and 5");
  }
}

int run_gen_data(const std::string& dataset, int figure, bool has_figure,
                 const std::string& path, std::ostream& err) {
  if (dataset == "figure" && !has_figure) {
    throw std::invalid_argument("--dataset figure requires --figure N");
  }
  if (dataset != "figure" && has_figure) {
    throw std::invalid_argument("--figure applies only to --dataset figure");
  }
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return 2;
  }
  long long rows = 0;
  if (dataset == "leap-years") {
    rows = write_leap_years(file, 1200, 9999);
  } else if (dataset == "day-of-year") {
    rows = write_day_of_year(file);
  } else if (dataset == "error-table-initial") {
    rows = write_error_table(file, false);
  } else if (dataset == "error-table-revised") {
    rows = write_error_table(file, true);
  } else {
    rows = write_figure(file, figure);
  }
  file.flush();
  if (!file.good()) {
    err << "error: failed while writing " << path << '\n';
    return 2;
  }
  err << "wrote " << path << " (" << rows << " rows)\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gregorian day-of-week formula, fits, and verification",
               "gregdow"};
  app.require_subcommand(1);

  std::string dow_date;
  CLI::App* dow = app.add_subcommand("dow", "Print the weekday of a date");
  dow->add_option("date", dow_date, "Date as YYYY-MM-DD")->required();

  std::string explain_date;
  CLI::App* explain =
      app.add_subcommand("explain", "Show each term of the computation");
  explain->add_option("date", explain_date, "Date as YYYY-MM-DD")->required();

  std::string verify_from = gregorian_epoch().to_string();
  std::string verify_to = last_supported_date().to_string();
  std::string verify_oracle = "all";
  std::size_t max_mismatches = 100;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check the formula against independent oracles over a range");
  verify_cmd->add_option("--from", verify_from, "First date to check");
  verify_cmd->add_option("--to", verify_to, "Last date to check");
  verify_cmd->add_option("--oracle", verify_oracle, "Oracle to compare against")
      ->check(CLI::IsMember({"zeller", "iterative", "all"}));
  verify_cmd->add_option("--max-mismatches", max_mismatches,
                         "Cap on recorded mismatch lines");

  std::string fit_dataset;
  int fit_from = 1200;
  int fit_to = 9999;
  CLI::App* fit =
      app.add_subcommand("fit", "Re-derive a linear model by exact least squares");
  fit->add_option("--dataset", fit_dataset, "Dataset to fit")
      ->required()
      ->check(CLI::IsMember({"leap1200", "doy", "doy-revised"}));
  CLI::Option* fit_from_opt =
      fit->add_option("--from", fit_from, "First year of the window");
  CLI::Option* fit_to_opt =
      fit->add_option("--to", fit_to, "Last year of the window");

  std::string gen_dataset;
  std::string gen_out;
  int gen_figure = 0;
  CLI::App* gen = app.add_subcommand("gen-data", "Write a dataset as CSV");
  gen->add_option("--dataset", gen_dataset, "Dataset to emit")
      ->required()
      ->check(CLI::IsMember({"leap-years", "day-of-year", "error-table-initial",
                             "error-table-revised", "figure"}));
  CLI::Option* gen_figure_opt =
      gen->add_option("--figure", gen_figure, "Figure number (1-5)");
  gen->add_option("--out", gen_out, "Output CSV path")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (dow->parsed()) {
      return run_dow(dow_date, out);
    }
    if (explain->parsed()) {
      return run_explain(explain_date, out);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_from, verify_to, verify_oracle, max_mismatches,
                        out, err);
    }
    if (fit->parsed()) {
      const bool windowed =
          fit_from_opt->count() > 0 || fit_to_opt->count() > 0;
      return run_fit(fit_dataset, fit_from, fit_to, windowed, out);
    }
    if (gen->parsed()) {
      return run_gen_data(gen_dataset, gen_figure, gen_figure_opt->count() > 0,
                          gen_out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace gregdow::cli
