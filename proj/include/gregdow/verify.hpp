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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "gregdow/date.hpp"
#include "gregdow/oracles.hpp"

// Differential sweep of the formula against the oracles over a date range.
// Work may be split across threads by year span; the resulting report is
// deterministic for a given range, oracle set, and mismatch cap, regardless
// of how the work was partitioned.

namespace gregdow::verify {

struct DateRange {
  Date start;
  Date end;
};

struct Mismatch {
  Date date;
  std::string_view candidate;  // which computation disagreed
  Weekday computed;
  Weekday expected;
  oracles::OracleId oracle;
};

struct VerificationReport {
  std::int64_t dates_checked = 0;
  std::int64_t mismatch_count = 0;   // total disagreements observed
  std::vector<Mismatch> mismatches;  // first max_mismatches, in date order
  double elapsed_seconds = 0.0;      // informational; excluded from determinism

  bool ok() const { return mismatch_count == 0; }
};

struct VerifyOptions {
  std::size_t max_mismatches = 100;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// A weekday computation under test.
struct Candidate {
  std::string_view name;
  std::function<Weekday(const Date&)> fn;
};

// Sweeps every date in [range.start, range.end], comparing day_of_week and
// day_of_week_simplified against each selected oracle.
VerificationReport verify_range(const DateRange& range,
                                std::span<const oracles::OracleId> ids,
                                const VerifyOptions& options = {});

// Same sweep with caller-supplied candidates; verify_range is this with the
// two formula variants.
VerificationReport verify_candidates(std::span<const Candidate> candidates,
                                     const DateRange& range,
                                     std::span<const oracles::OracleId> ids,
                                     const VerifyOptions& options = {});

}  // namespace gregdow::verify
