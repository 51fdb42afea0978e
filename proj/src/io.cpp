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

#include "ambec/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ambec/core.hpp"

namespace ambec {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::comment(std::string line) { comments_.push_back(std::move(line)); }

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != header_.size()) throw Error(ErrorKind::precondition, "CSV row width differs from header");
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_double(values[i]);
  }
  rows_.push_back(std::move(s));
}

std::string CsvWriter::str(const std::string& manifest_path) const {
  std::string out;
  for (const auto& c : comments_) out += "# " + c + "\n";
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ',';
    out += header_[i];
  }
  out += '\n';
  for (const auto& r : rows_) out += r + "\n";
  out += "# manifest: " + manifest_path + "\n";
  return out;
}

void CsvWriter::write(const std::string& path, const std::string& manifest_path) const {
  write_text(path, str(manifest_path));
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw Error(ErrorKind::io, "CSV has no column " + std::string(name));
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
      constexpr std::string_view tag = "manifest: ";
      if (have_header && body.rfind(tag, 0) == 0) {
        t.manifest_path = body.substr(tag.size());
      } else {
        t.comments.push_back(std::move(body));
      }
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!have_header) {
      t.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != t.header.size()) throw Error(ErrorKind::io, "CSV row width differs from header: " + line);
    std::vector<double> row(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const char* b = cells[i].data();
      const char* e = b + cells[i].size();
      const auto r = std::from_chars(b, e, row[i]);
      if (r.ec != std::errc() || r.ptr != e) throw Error(ErrorKind::io, "malformed CSV number '" + cells[i] + "'");
    }
    t.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error(ErrorKind::io, "CSV has no header line");
  return t;
}

CsvTable read_csv(const std::string& path) { return parse_csv(read_text(path)); }

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["tool_version"] = std::string(kToolVersion);
  j["parameters"] = parameters;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["duration_s"] = duration_s;
  return j;
}

void RunManifest::write(const std::string& path) const { write_text(path, to_json().dump(2) + "\n"); }

std::string manifest_path_for(const std::string& output) { return output + ".manifest.json"; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorKind::io, "write failed for " + path);
}

}  // namespace ambec
