// snrkit/base/csv.h

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

#ifndef SNRKIT_BASE_CSV_H_
#define SNRKIT_BASE_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace snrkit {

// Quotes a field when it contains a comma, quote or newline (RFC 4180).
std::string CsvEscape(std::string_view field);

std::string CsvRow(const std::vector<std::string> &fields);

// Splits one RFC 4180 line; quoted fields may contain commas and "".
std::vector<std::string> CsvSplit(std::string_view line);

// Fixed-point rendering used by every report so outputs are byte-stable.
std::string FormatFixed(double value, int decimals);

}  // namespace snrkit

#endif  // SNRKIT_BASE_CSV_H_
