// snrkit/base/snrkit-error.h

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

#ifndef SNRKIT_BASE_SNRKIT_ERROR_H_
#define SNRKIT_BASE_SNRKIT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace snrkit {

enum class ErrorCode {
  kInvalidArgument,
  kIo,
  kMalformedWav,
  kUnsupportedEncoding,
  kEmptyInput,
  kShapeMismatch,
  kNoNoisePresent,
  kSilentNoise,
  kSilentUtterance,
  kInsufficientNoise,
  kEmptyReference,
  kCasingMismatch,
  kParse,
  kDuplicateId,
  kUnknownName,
};

std::string_view ErrorCodeName(ErrorCode code);

/// Every failure in the library is reported through this type. The code lets
/// batch drivers tell recoverable per-item failures apart from bad arguments.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

void LogWarning(const std::string &message);
void LogInfo(const std::string &message);

// Silences LogInfo/LogWarning output (tests and --quiet).
void SetLogQuiet(bool quiet);

}  // namespace snrkit

#endif  // SNRKIT_BASE_SNRKIT_ERROR_H_
