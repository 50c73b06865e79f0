// mix/snr-level.cc

// Copyright 2026  snrkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "snrkit/mix/snr-level.h"

#include <cctype>
#include <charconv>

#include "snrkit/base/snrkit-error.h"

namespace snrkit {

std::string SnrLevel::Label() const { return clean_ ? "clean" : std::to_string(db_); }

SnrLevel SnrLevel::Parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::string lower(text);
  for (char &c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "clean") return Clean();
  int value = 0;
  const char *begin = text.data();
  const char *end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end)
    throw Error(ErrorCode::kParse, "invalid SNR level '" + std::string(text) + "'");
  return Decibels(value);
}

std::strong_ordering operator<=>(const SnrLevel &a, const SnrLevel &b) {
  if (a.clean_ != b.clean_) return a.clean_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.clean_) return std::strong_ordering::equal;
  return a.db_ <=> b.db_;
}

std::vector<SnrLevel> DefaultSnrGrid() {
  std::vector<SnrLevel> grid;
  for (int db = -20; db <= 20; db += 5) grid.push_back(SnrLevel::Decibels(db));
  grid.push_back(SnrLevel::Clean());
  return grid;
}

std::vector<SnrLevel> ParseSnrGrid(std::string_view text) {
  std::vector<SnrLevel> grid;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    grid.push_back(SnrLevel::Parse(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return grid;
}

}  // namespace snrkit
