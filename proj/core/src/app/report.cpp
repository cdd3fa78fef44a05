// Copyright 2026 The seisnet Authors
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

#include <seisnet/app/report.hpp>

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include <seisnet/app/config.hpp>

#ifndef SEISNET_VERSION
#define SEISNET_VERSION "0.0.0"
#endif

namespace seisnet::app {

std::string tool_version() { return SEISNET_VERSION; }

std::string format_number(double v) {
  if (std::isfinite(v) && std::trunc(v) == v && std::abs(v) < 1e15) {
    return fmt::format("{}", static_cast<long long>(v));
  }
  return fmt::format("{:.10g}", v);
}

namespace {

std::string scaled(double v, const char* const* units, int count, double step) {
  int i = 0;
  while (i + 1 < count && std::abs(v) >= step) {
    v /= step;
    ++i;
  }
  return fmt::format("{:.4g} {}", v, units[i]);
}

std::string cell_text(const Document& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  if (v.is_number()) return format_number(v.get<double>());
  return v.dump();
}

}  // namespace

std::string human_bytes(double bytes) {
  static const char* const units[] = {"B", "kB", "MB", "GB", "TB", "PB"};
  return scaled(bytes, units, 6, 1000.0);
}

std::string human_rate(double bps) {
  static const char* const units[] = {"bps", "kbps", "Mbps", "Gbps"};
  return scaled(bps, units, 4, 1000.0);
}

Document Table::to_json() const {
  Document t;
  t["title"] = title;
  t["columns"] = columns;
  t["rows"] = Document::array();
  for (const auto& r : rows) t["rows"].push_back(r);
  return t;
}

Report::Report(std::string command, const ProjectConfig& config)
    : command_(std::move(command)) {
  doc_["command"] = command_;
  doc_["provenance"] = {{"tool", "seisnet"},
                        {"version", tool_version()},
                        {"config_hash", fmt::format("{:016x}", config_hash(config))},
                        {"seed", config.seed}};
  doc_["summary"] = Document::object();
  doc_["tables"] = Document::array();
  doc_["notes"] = Document::array();
}

void Report::add_table(const Table& table) { doc_["tables"].push_back(table.to_json()); }

void Report::add_note(const std::string& note) { doc_["notes"].push_back(note); }

std::string Report::to_json_string() const { return doc_.dump(2) + "\n"; }

std::string Report::to_text() const {
  std::string out;
  const auto& prov = doc_["provenance"];
  out += fmt::format("seisnet {} ({}) config {} seed {}\n", command_,
                     prov["version"].get<std::string>(),
                     prov["config_hash"].get<std::string>(),
                     prov["seed"].get<std::uint64_t>());

  const auto& summary = doc_["summary"];
  if (!summary.empty()) {
    std::size_t width = 0;
    for (const auto& [k, v] : summary.items()) width = std::max(width, k.size());
    out += "\n";
    for (const auto& [k, v] : summary.items()) {
      out += fmt::format("  {:<{}}  {}\n", k, width, cell_text(v));
    }
  }

  for (const auto& table : doc_["tables"]) {
    const auto& cols = table["columns"];
    std::vector<std::size_t> widths;
    for (const auto& c : cols) widths.push_back(c.get<std::string>().size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : table["rows"]) {
      std::vector<std::string> r;
      for (std::size_t i = 0; i < row.size(); ++i) {
        r.push_back(cell_text(row[i]));
        if (i < widths.size()) widths[i] = std::max(widths[i], r.back().size());
      }
      cells.push_back(std::move(r));
    }
    out += fmt::format("\n{}\n", table["title"].get<std::string>());
    std::string header, rule;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      header += fmt::format("  {:<{}}", cols[i].get<std::string>(), widths[i]);
      rule += "  " + std::string(widths[i], '-');
    }
    while (!header.empty() && header.back() == ' ') header.pop_back();
    out += header + "\n" + rule + "\n";
    for (const auto& r : cells) {
      std::string line;
      for (std::size_t i = 0; i < r.size() && i < widths.size(); ++i) {
        line += fmt::format("  {:<{}}", r[i], widths[i]);
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    }
  }

  const auto& notes = doc_["notes"];
  if (!notes.empty()) {
    out += "\nnotes:\n";
    for (const auto& n : notes) out += "  - " + n.get<std::string>() + "\n";
  }
  return out;
}

}  // namespace seisnet::app
