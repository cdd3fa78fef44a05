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

#pragma once

// Structured command output. A report is a JSON document; the plain-text
// rendering is generated from that same document, so both show identical
// values.
//
// Layout:
//   {"command": ..., "provenance": {...}, "summary": {...},
//    "tables": [{"title", "columns": [...], "rows": [[...], ...]}],
//    "notes": [...], ...command-specific sections}

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace seisnet::app {

struct ProjectConfig;

using Document = nlohmann::ordered_json;

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Document>> rows;

  Document to_json() const;
};

class Report {
 public:
  Report(std::string command, const ProjectConfig& config);

  const std::string& command() const noexcept { return command_; }

  Document& summary() { return doc_["summary"]; }
  Document& section(const std::string& name) { return doc_[name]; }
  void add_table(const Table& table);
  void add_note(const std::string& note);

  const Document& document() const noexcept { return doc_; }
  std::string to_json_string() const;
  std::string to_text() const;

 private:
  std::string command_;
  Document doc_;
};

/// Formats a number the way both renderings show it: integers verbatim,
/// other values with 10 significant digits.
std::string format_number(double v);

/// 1577000000 -> "1.577 GB" (SI decimal, 4 significant digits).
std::string human_bytes(double bytes);
/// 10774.76 -> "10.77 kbps".
std::string human_rate(double bps);

std::string tool_version();

}  // namespace seisnet::app
