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

#include "wsd/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "wsd/error.hpp"

namespace wsd {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Column { kInstances, kWT, kWAP, kIAP, kPW, kSW, kMW, kEntities, kMSI, kMSL };

const char* column_name(Column c) {
  switch (c) {
    case Column::kInstances: return "Instances";
    case Column::kWT: return "WT";
    case Column::kWAP: return "WAP";
    case Column::kIAP: return "IAP";
    case Column::kPW: return "PW";
    case Column::kSW: return "SW";
    case Column::kMW: return "MW";
    case Column::kEntities: return "Entities";
    case Column::kMSI: return "MSI";
    case Column::kMSL: return "MSL";
  }
  return "?";
}

std::vector<Column> columns(StatsLayout layout) {
  switch (layout) {
    case StatsLayout::kPolysemy:
      return {Column::kInstances, Column::kWT, Column::kWAP, Column::kIAP, Column::kPW};
    case StatsLayout::kComposition:
      return {Column::kInstances, Column::kSW, Column::kMW, Column::kEntities,
              Column::kMSI, Column::kMSL};
    case StatsLayout::kFull:
      break;
  }
  return {Column::kInstances, Column::kWT, Column::kWAP, Column::kIAP, Column::kPW,
          Column::kSW, Column::kMW, Column::kEntities, Column::kMSI, Column::kMSL};
}

std::string cell(const CorpusStats& s, Column c) {
  switch (c) {
    case Column::kInstances: return std::to_string(s.instances);
    case Column::kWT: return std::to_string(s.word_types);
    case Column::kWAP: return fixed2(s.wap);
    case Column::kIAP: return fixed2(s.iap);
    case Column::kPW: return std::to_string(s.pw);
    case Column::kSW: return std::to_string(s.sw);
    case Column::kMW: return std::to_string(s.mw);
    case Column::kEntities: return std::to_string(s.entities);
    case Column::kMSI: return fixed2(s.msi);
    case Column::kMSL: return fixed2(s.msl);
  }
  return {};
}

bool is_real(Column c) {
  return c == Column::kWAP || c == Column::kIAP || c == Column::kMSI ||
         c == Column::kMSL;
}

void set_cell(CorpusStats& s, Column c, std::string_view text) {
  const std::string value(text);
  std::size_t used = 0;
  try {
    if (is_real(c)) {
      const double x = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      switch (c) {
        case Column::kWAP: s.wap = x; break;
        case Column::kIAP: s.iap = x; break;
        case Column::kMSI: s.msi = x; break;
        default: s.msl = x; break;
      }
      return;
    }
    if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument(value);
    }
    const std::size_t n = std::stoull(value);
    switch (c) {
      case Column::kInstances: s.instances = n; break;
      case Column::kWT: s.word_types = n; break;
      case Column::kPW: s.pw = n; break;
      case Column::kSW: s.sw = n; break;
      case Column::kMW: s.mw = n; break;
      default: s.entities = n; break;
    }
  } catch (const std::exception&) {
    throw FormatError(std::string("bad ") + column_name(c) + " value '" + value + "'");
  }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string pad(width[i] - row[i].size(), ' ');
      if (i == 0) {
        line += row[i] + pad;
      } else {
        line += "  " + pad + row[i];
      }
    }
    out += line + '\n';
  }
  return out;
}

ordered_json counts_json(const ScoreCounts& c) {
  ordered_json j;
  j["total"] = c.total;
  j["attempted"] = c.attempted;
  j["correct"] = c.correct;
  j["precision"] = c.precision;
  j["recall"] = c.recall;
  j["f1"] = c.f1;
  return j;
}

}  // namespace

ReportStyle parse_report_style(std::string_view text) {
  if (text == "plain") return ReportStyle::kPlain;
  if (text == "tsv") return ReportStyle::kTsv;
  if (text == "structured" || text == "json") return ReportStyle::kStructured;
  throw InputError("unknown report format '" + std::string(text) + "'");
}

StatsLayout parse_stats_layout(std::string_view text) {
  if (text == "polysemy") return StatsLayout::kPolysemy;
  if (text == "composition") return StatsLayout::kComposition;
  if (text == "full") return StatsLayout::kFull;
  throw InputError("unknown stats layout '" + std::string(text) + "'");
}

std::string fixed2(double value) {
  const double scaled = value * 100.0;
  const double rounded =
      std::floor(scaled + 0.5 + 1e-9 * std::max(1.0, std::fabs(scaled)));
  const long long n = static_cast<long long>(rounded);
  const unsigned long long magnitude =
      static_cast<unsigned long long>(n < 0 ? -n : n);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%llu.%02llu", n < 0 ? "-" : "",
                magnitude / 100, magnitude % 100);
  return buf;
}

std::string percent(double value) { return fixed2(value * 100.0); }

std::string format_stats(std::span<const NamedStats> rows, StatsLayout layout,
                         ReportStyle style) {
  if (style == ReportStyle::kStructured) {
    ordered_json out = ordered_json::array();
    for (const NamedStats& row : rows) {
      const CorpusStats& s = row.stats;
      ordered_json j;
      j["name"] = row.name;
      j["instances"] = s.instances;
      j["word_types"] = s.word_types;
      j["wap"] = s.wap;
      j["iap"] = s.iap;
      j["pw"] = s.pw;
      j["sw"] = s.sw;
      j["mw"] = s.mw;
      j["entities"] = s.entities;
      j["msi"] = s.msi;
      j["msl"] = s.msl;
      out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
  }

  const std::vector<Column> cols = columns(layout);
  std::vector<std::vector<std::string>> table;
  table.emplace_back();
  table.back().push_back("Set");
  for (Column c : cols) table.back().push_back(column_name(c));
  for (const NamedStats& row : rows) {
    table.emplace_back();
    table.back().push_back(row.name);
    for (Column c : cols) table.back().push_back(cell(row.stats, c));
  }
  if (style == ReportStyle::kPlain) return render_table(table);

  std::string out;
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += '\t';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

std::vector<NamedStats> parse_stats_tsv(std::string_view text,
                                        StatsLayout* layout_out) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
  }
  if (lines.empty()) throw FormatError("stats table has no header");

  const std::vector<std::string_view> header = split_tabs(lines.front());
  std::optional<StatsLayout> layout;
  for (StatsLayout candidate :
       {StatsLayout::kPolysemy, StatsLayout::kComposition, StatsLayout::kFull}) {
    const std::vector<Column> cols = columns(candidate);
    if (header.size() != cols.size() + 1 || header[0] != "Set") continue;
    bool match = true;
    for (std::size_t i = 0; i < cols.size() && match; ++i) {
      match = header[i + 1] == column_name(cols[i]);
    }
    if (match) layout = candidate;
  }
  if (!layout) throw FormatError("unrecognized stats header");
  if (layout_out != nullptr) *layout_out = *layout;

  const std::vector<Column> cols = columns(*layout);
  std::vector<NamedStats> rows;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const std::vector<std::string_view> fields = split_tabs(lines[l]);
    if (fields.size() != cols.size() + 1) {
      throw FormatError("stats row " + std::to_string(l) + ": expected " +
                        std::to_string(cols.size() + 1) + " columns");
    }
    NamedStats row;
    row.name = std::string(fields[0]);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      set_cell(row.stats, cols[i], fields[i + 1]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_score(const ScoreReport& report, ReportStyle style,
                         bool per_pos) {
  if (style == ReportStyle::kStructured) {
    ordered_json j = counts_json(report);
    if (per_pos) {
      ordered_json split = ordered_json::object();
      for (const auto& [pos, counts] : report.per_pos) split[pos] = counts_json(counts);
      j["per_pos"] = std::move(split);
    }
    return j.dump(2) + "\n";
  }
  if (style == ReportStyle::kTsv) {
    std::string out = "Scope\tTotal\tAttempted\tCorrect\tP\tR\tF1\n";
    const auto row = [&out](const std::string& scope, const ScoreCounts& c) {
      out += scope + '\t' + std::to_string(c.total) + '\t' +
             std::to_string(c.attempted) + '\t' + std::to_string(c.correct) +
             '\t' + percent(c.precision) + '\t' + percent(c.recall) + '\t' +
             percent(c.f1) + '\n';
    };
    row("ALL", report);
    if (per_pos) {
      for (const auto& [pos, counts] : report.per_pos) row(pos, counts);
    }
    return out;
  }
  const auto block = [](const std::string& prefix, const ScoreCounts& c) {
    return prefix + "Total " + std::to_string(c.total) + '\n' + prefix +
           "Attempted " + std::to_string(c.attempted) + '\n' + prefix +
           "Correct " + std::to_string(c.correct) + '\n' + prefix + "P " +
           percent(c.precision) + '\n' + prefix + "R " + percent(c.recall) +
           '\n' + prefix + "F1 " + percent(c.f1) + '\n';
  };
  std::string out = block("", report);
  if (per_pos) {
    for (const auto& [pos, counts] : report.per_pos) out += block(pos + " ", counts);
  }
  return out;
}

}  // namespace wsd
