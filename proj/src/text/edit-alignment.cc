// text/edit-alignment.cc

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

#include "snrkit/text/edit-alignment.h"

#include <algorithm>
#include <unordered_map>

#include "snrkit/base/snrkit-error.h"

namespace snrkit {

AlignmentResult AlignSequences(const std::vector<std::string> &ref, const std::vector<std::string> &hyp) {
  // Intern units so the DP compares integers.
  std::unordered_map<std::string, int> ids;
  auto intern = [&ids](const std::vector<std::string> &units) {
    std::vector<int> out;
    out.reserve(units.size());
    for (const auto &u : units) out.push_back(ids.emplace(u, static_cast<int>(ids.size())).first->second);
    return out;
  };
  const std::vector<int> r = intern(ref), h = intern(hyp);
  const size_t n = r.size(), m = h.size();
  const size_t width = m + 1;
  std::vector<uint32_t> cost((n + 1) * width);
  for (size_t j = 0; j <= m; ++j) cost[j] = static_cast<uint32_t>(j);
  for (size_t i = 1; i <= n; ++i) {
    cost[i * width] = static_cast<uint32_t>(i);
    for (size_t j = 1; j <= m; ++j) {
      const uint32_t diag = cost[(i - 1) * width + j - 1] + (r[i - 1] == h[j - 1] ? 0 : 1);
      const uint32_t up = cost[(i - 1) * width + j] + 1;
      const uint32_t left = cost[i * width + j - 1] + 1;
      cost[i * width + j] = std::min({diag, up, left});
    }
  }

  AlignmentResult result;
  result.ref_length = n;
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const uint32_t here = cost[i * width + j];
    if (i > 0 && j > 0 && r[i - 1] == h[j - 1] && cost[(i - 1) * width + j - 1] == here) {
      result.ops.push_back({EditKind::kMatch, ref[i - 1], hyp[j - 1]});
      --i, --j;
    } else if (i > 0 && j > 0 && cost[(i - 1) * width + j - 1] + 1 == here) {
      result.ops.push_back({EditKind::kSub, ref[i - 1], hyp[j - 1]});
      ++result.substitutions;
      --i, --j;
    } else if (i > 0 && cost[(i - 1) * width + j] + 1 == here) {
      result.ops.push_back({EditKind::kDel, ref[i - 1], ""});
      ++result.deletions;
      --i;
    } else {
      result.ops.push_back({EditKind::kIns, "", hyp[j - 1]});
      ++result.insertions;
      --j;
    }
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

namespace {
void CheckCasing(const NormalizedText &ref, const NormalizedText &hyp) {
  if (ref.casing() != hyp.casing())
    throw Error(ErrorCode::kCasingMismatch, "reference and hypothesis were normalized with different casing");
}
}  // namespace

AlignmentResult WordAlign(const NormalizedText &ref, const NormalizedText &hyp) {
  CheckCasing(ref, hyp);
  return AlignSequences(ref.Tokens(), hyp.Tokens());
}

AlignmentResult CharAlign(const NormalizedText &ref, const NormalizedText &hyp) {
  CheckCasing(ref, hyp);
  return AlignSequences(ref.Characters(), hyp.Characters());
}

double ErrorRate(const AlignmentResult &alignment) {
  if (alignment.ref_length == 0)
    throw Error(ErrorCode::kEmptyReference, "error rate undefined for an empty reference");
  return static_cast<double>(alignment.Edits()) / static_cast<double>(alignment.ref_length);
}

}  // namespace snrkit
