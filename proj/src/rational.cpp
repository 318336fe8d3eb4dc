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

#include "gregdow/rational.hpp"

#include <ostream>

namespace gregdow {

std::string Rational::to_string() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

std::string Rational::to_decimal(int places) const {
  if (places < 0) throw std::invalid_argument("negative decimal places");
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round_half_up applied to value * 10^places
  BigInt scaled = floor_div(2 * num_ * scale + den_, 2 * den_);
  const bool negative = scaled < 0;
  const BigInt magnitude = negative ? BigInt(-scaled) : scaled;
  std::string digits = magnitude.str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, places + 1 - digits.size(), '0');
  std::string out;
  if (negative) out += '-';
  out.append(digits, 0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out.append(digits, digits.size() - places, places);
  }
  return out;
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: '" + std::string(text) +
                                 "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto is_int = [&](std::string_view part) {
    if (!part.empty() && part.front() == '-') part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw bad();
    return Rational(BigInt(std::string(text)));
  }
  const std::string_view num_part = text.substr(0, slash);
  const std::string_view den_part = text.substr(slash + 1);
  if (!is_int(num_part) || !is_int(den_part)) throw bad();
  return Rational(BigInt(std::string(num_part)), BigInt(std::string(den_part)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace gregdow
