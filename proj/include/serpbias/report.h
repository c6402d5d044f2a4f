// Copyright 2026 The serpbias Authors.
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

// Report rendering. Output is a pure function of the report: entries are
// already sorted, JSON numbers carry 17 significant digits and non-finite
// values are written as the strings "inf", "-inf" and "nan".

#ifndef SERPBIAS_REPORT_H_
#define SERPBIAS_REPORT_H_

#include <optional>
#include <string>
#include <string_view>

#include "serpbias/evaluation.h"

namespace serpbias {

enum class OutputFormat : std::uint8_t { kJson, kTsv, kMarkdown };

std::optional<OutputFormat> ParseOutputFormat(std::string_view text);

std::string RenderReport(const ComparisonReport& report, OutputFormat format);

// Reads the JSON rendering back. Throws InputError on malformed input.
ComparisonReport ParseReportJson(std::string_view text);

std::string RenderBaselineReport(const BaselineReport& report,
                                 OutputFormat format);

// "%.17g" for finite values, "inf", "-inf" or "nan" otherwise.
std::string FormatNumber(double value);

}  // namespace serpbias

#endif  // SERPBIAS_REPORT_H_
