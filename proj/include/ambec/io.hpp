/* Copyright 2026 The ambec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ambec {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Shortest-round-trip is not the goal here: 15 significant digits,
/// '.' separator, independent of the global locale.
std::string format_double(double v);

/// Comment lines first ("# ..."), then one header line, the data rows and
/// a trailing "# manifest: <path>" line.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  void comment(std::string line);
  void row(const std::vector<double>& values);
  std::size_t rows() const noexcept { return rows_.size(); }

  std::string str(const std::string& manifest_path) const;
  void write(const std::string& path, const std::string& manifest_path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::string> comments_;
  std::vector<std::string> rows_;
};

struct CsvTable {
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::string manifest_path;

  std::size_t column(std::string_view name) const;
};

CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::string& path);

struct RunManifest {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  double duration_s = 0.0;

  nlohmann::ordered_json to_json() const;
  void write(const std::string& path) const;
};

std::string manifest_path_for(const std::string& output);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace ambec
