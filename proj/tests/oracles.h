// tests/oracles.h

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

#ifndef SNRKIT_TESTS_ORACLES_H_
#define SNRKIT_TESTS_ORACLES_H_

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace snrkit {
namespace testing {

// Levenshtein distance by memoized recursion over suffixes.
inline size_t LevenshteinOracle(const std::vector<std::string> &a, const std::vector<std::string> &b) {
  std::map<std::pair<size_t, size_t>, size_t> memo;
  std::function<size_t(size_t, size_t)> d = [&](size_t i, size_t j) -> size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    size_t best = std::min(d(i + 1, j), d(i, j + 1)) + 1;
    best = std::min(best, d(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1));
    memo[{i, j}] = best;
    return best;
  };
  return d(0, 0);
}

inline std::vector<std::string> SplitSpaces(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Code points of a UTF-8 string (no validation).
inline std::vector<std::string> CodePoints(const std::string &s) {
  std::vector<std::string> out;
  for (size_t i = 0; i < s.size();) {
    size_t len = 1;
    const unsigned char c = s[i];
    if (c >= 0xf0) len = 4;
    else if (c >= 0xe0) len = 3;
    else if (c >= 0xc0) len = 2;
    out.push_back(s.substr(i, len));
    i += len;
  }
  return out;
}

inline std::string JoinSpaces(const std::vector<std::string> &tokens) {
  std::string out;
  for (const auto &t : tokens) out += (out.empty() ? "" : " ") + t;
  return out;
}

// Random string of up to max_len symbols drawn from `alphabet`.
inline std::string RandomString(std::mt19937_64 &gen, const std::vector<std::string> &alphabet, size_t max_len) {
  const size_t n = gen() % (max_len + 1);
  std::string s;
  for (size_t i = 0; i < n; ++i) s += alphabet[gen() % alphabet.size()];
  return s;
}

}  // namespace testing
}  // namespace snrkit

#endif  // SNRKIT_TESTS_ORACLES_H_
