// base/snrkit-error.cc

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

#include "snrkit/base/snrkit-error.h"

#include <atomic>
#include <iostream>
#include <mutex>

namespace snrkit {

namespace {
std::atomic<bool> g_quiet{false};
std::mutex g_log_mutex;
}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kMalformedWav: return "malformed WAV header";
    case ErrorCode::kUnsupportedEncoding: return "unsupported encoding";
    case ErrorCode::kEmptyInput: return "empty input";
    case ErrorCode::kShapeMismatch: return "shape mismatch";
    case ErrorCode::kNoNoisePresent: return "no noise present";
    case ErrorCode::kSilentNoise: return "silent noise clip";
    case ErrorCode::kSilentUtterance: return "silent utterance";
    case ErrorCode::kInsufficientNoise: return "insufficient noise clips";
    case ErrorCode::kEmptyReference: return "empty reference";
    case ErrorCode::kCasingMismatch: return "casing mismatch";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kDuplicateId: return "duplicate id";
    case ErrorCode::kUnknownName: return "unknown name";
  }
  return "error";
}

void SetLogQuiet(bool quiet) { g_quiet = quiet; }

void LogWarning(const std::string &message) {
  if (g_quiet) return;
  std::lock_guard<std::mutex> lock(g_log_mutex);
  std::cerr << "WARNING: " << message << '\n';
}

void LogInfo(const std::string &message) {
  if (g_quiet) return;
  std::lock_guard<std::mutex> lock(g_log_mutex);
  std::cerr << "LOG: " << message << '\n';
}

}  // namespace snrkit
