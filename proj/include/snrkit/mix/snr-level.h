// snrkit/mix/snr-level.h

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

#ifndef SNRKIT_MIX_SNR_LEVEL_H_
#define SNRKIT_MIX_SNR_LEVEL_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace snrkit {

/// Either the clean condition (no noise added) or an integer SNR in dB.
class SnrLevel {
 public:
  static SnrLevel Clean() { return SnrLevel(true, 0); }
  static SnrLevel Decibels(int db) { return SnrLevel(false, db); }

  bool is_clean() const { return clean_; }
  // Only meaningful when !is_clean().
  int db() const { return db_; }

  // "clean" or the signed integer, e.g. "-15".
  std::string Label() const;

  // Accepts "clean" (any case) or an integer; throws kParse otherwise.
  static SnrLevel Parse(std::string_view text);

  friend bool operator==(const SnrLevel &, const SnrLevel &) = default;
  // dB levels ascend; Clean sorts after every dB level.
  friend std::strong_ordering operator<=>(const SnrLevel &a, const SnrLevel &b);

 private:
  SnrLevel(bool clean, int db) : clean_(clean), db_(db) {}
  bool clean_;
  int db_;
};

// -20, -15, ..., 20 dB followed by Clean.
std::vector<SnrLevel> DefaultSnrGrid();

// Comma-separated list, e.g. "-5,0,5,clean". Throws kParse on bad items.
std::vector<SnrLevel> ParseSnrGrid(std::string_view text);

}  // namespace snrkit

#endif  // SNRKIT_MIX_SNR_LEVEL_H_
