// Copyright 2026 The wsdkit Authors.
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

#ifndef WSD_REPORT_HPP_
#define WSD_REPORT_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsd/metrics.hpp"

namespace wsd {

enum class ReportStyle { kPlain, kTsv, kStructured };

ReportStyle parse_report_style(std::string_view text);

// Column sets:
//   kPolysemy     Set Instances WT WAP IAP PW
//   kComposition  Set Instances SW MW Entities MSI MSL
//   kFull         Set Instances WT WAP IAP PW SW MW Entities MSI MSL
enum class StatsLayout { kPolysemy, kComposition, kFull };

StatsLayout parse_stats_layout(std::string_view text);

struct NamedStats {
  std::string name;
  CorpusStats stats;
};

// Fixed two-decimal rendering with half-up rounding ("4.2" -> "4.20").
std::string fixed2(double value);
// value in [0,1] rendered as a percentage with two decimals.
std::string percent(double value);

std::string format_stats(std::span<const NamedStats> rows, StatsLayout layout,
                         ReportStyle style);

// Reads back the tsv form. The header row selects the layout; columns the
// layout lacks stay zero. Throws FormatError on a bad header or cell.
std::vector<NamedStats> parse_stats_tsv(std::string_view text,
                                        StatsLayout* layout = nullptr);

std::string format_score(const ScoreReport& report, ReportStyle style,
                         bool per_pos = false);

}  // namespace wsd

#endif  // WSD_REPORT_HPP_
