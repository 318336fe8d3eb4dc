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

#include "gregdow/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "gregdow/formula.hpp"
#include "gregdow/intmath.hpp"

namespace gregdow::verify {

namespace {

struct ChunkResult {
  std::int64_t dates_checked = 0;
  std::int64_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;
};

ChunkResult sweep_chunk(std::span<const Candidate> candidates,
                        const Date& first, const Date& last,
                        std::span<const oracles::OracleId> ids,
                        std::size_t cap) {
  ChunkResult result;
  bool use_zeller = false;
  bool use_iterative = false;
  for (oracles::OracleId id : ids) {
    use_zeller |= id == oracles::OracleId::zeller;
    use_iterative |= id == oracles::OracleId::iterative;
  }

  // The iterative oracle is a running day counter seeded once per chunk, so
  // the whole sweep stays linear in the number of dates.
  std::int64_t day_number = oracles::days_since_epoch(first);

  const auto record = [&](const Date& date, std::string_view candidate,
                          Weekday computed, Weekday expected,
                          oracles::OracleId oracle) {
    ++result.mismatch_count;
    if (result.mismatches.size() < cap)
      result.mismatches.push_back({date, candidate, computed, expected, oracle});
  };

  Date date = first;
  while (true) {
    Weekday expected_zeller = Weekday::monday;
    Weekday expected_iterative = Weekday::monday;
    if (use_zeller) expected_zeller = oracles::zeller_day_of_week(date);
    if (use_iterative) {
      expected_iterative = weekday_from_number(static_cast<int>(
          floor_mod(weekday_number(epoch_weekday) + day_number, 7)));
    }
    for (const Candidate& candidate : candidates) {
      const Weekday computed = candidate.fn(date);
      if (use_zeller && computed != expected_zeller)
        record(date, candidate.name, computed, expected_zeller,
               oracles::OracleId::zeller);
      if (use_iterative && computed != expected_iterative)
        record(date, candidate.name, computed, expected_iterative,
               oracles::OracleId::iterative);
    }
    ++result.dates_checked;
    if (date == last) break;
    date = next_day(date);
    ++day_number;
  }
  return result;
}

}  // namespace

VerificationReport verify_candidates(std::span<const Candidate> candidates,
                                     const DateRange& range,
                                     std::span<const oracles::OracleId> ids,
                                     const VerifyOptions& options) {
  if (range.start > range.end)
    throw std::invalid_argument("invalid range: start is after end");

  const auto t0 = std::chrono::steady_clock::now();

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  // Split on year boundaries into spans of whole years.
  const int first_year = range.start.year();
  const int last_year = range.end.year();
  const int total_years = last_year - first_year + 1;
  const int span_years =
      std::max(1, total_years / static_cast<int>(threads * 4));

  struct Chunk {
    Date first;
    Date last;
  };
  std::vector<Chunk> chunks;
  for (int y = first_year; y <= last_year; y += span_years) {
    const int y_end = std::min(y + span_years - 1, last_year);
    // Jan 1 of the range's first year may predate the epoch, so clamp by
    // construction rather than with max().
    const Date first = y == first_year ? range.start : Date(y, 1, 1);
    const Date last = y_end == last_year ? range.end : Date(y_end, 12, 31);
    chunks.push_back({first, last});
  }

  std::vector<ChunkResult> results(chunks.size());
  if (threads <= 1 || chunks.size() <= 1) {
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      results[i] = sweep_chunk(candidates, chunks[i].first, chunks[i].last, ids,
                               options.max_mismatches);
    }
  } else {
    std::vector<std::future<ChunkResult>> futures;
    futures.reserve(chunks.size());
    for (const Chunk& chunk : chunks) {
      futures.push_back(std::async(std::launch::async, [&, chunk] {
        return sweep_chunk(candidates, chunk.first, chunk.last, ids,
                           options.max_mismatches);
      }));
    }
    for (std::size_t i = 0; i < futures.size(); ++i)
      results[i] = futures[i].get();
  }

  VerificationReport report;
  for (ChunkResult& r : results) {
    report.dates_checked += r.dates_checked;
    report.mismatch_count += r.mismatch_count;
    report.mismatches.insert(report.mismatches.end(),
                             std::make_move_iterator(r.mismatches.begin()),
                             std::make_move_iterator(r.mismatches.end()));
  }
  // Chunks are already in date order; the sort makes the merged list
  // canonical whatever the partitioning was.
  std::stable_sort(report.mismatches.begin(), report.mismatches.end(),
                   [](const Mismatch& a, const Mismatch& b) {
                     return std::tie(a.date, a.candidate, a.oracle) <
                            std::tie(b.date, b.candidate, b.oracle);
                   });
  if (report.mismatches.size() > options.max_mismatches)
    report.mismatches.erase(
        report.mismatches.begin() +
            static_cast<std::ptrdiff_t>(options.max_mismatches),
        report.mismatches.end());

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

VerificationReport verify_range(const DateRange& range,
                                std::span<const oracles::OracleId> ids,
                                const VerifyOptions& options) {
  const Candidate candidates[] = {
      {"formula", [](const Date& d) { return day_of_week(d); }},
      {"simplified", [](const Date& d) { return day_of_week_simplified(d); }},
  };
  return verify_candidates(candidates, range, ids, options);
}

}  // namespace gregdow::verify
