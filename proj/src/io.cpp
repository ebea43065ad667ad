// Copyright 2026 The Alphaleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alphaleak/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace alphaleak {
namespace {

using nlohmann::json;

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_cell(std::string_view cell, const std::string& source_name,
                  std::size_t row, std::size_t col) {
  const std::string_view t = trimmed(cell);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ParseError(source_name + ": row " + std::to_string(row) +
                     ", column " + std::to_string(col) + ": cannot parse '" +
                     std::string(cell) + "' as a probability");
  }
  return value;
}

Channel channel_from_rows(std::vector<std::vector<double>> rows,
                          const std::string& source_name) {
  try {
    return Channel(std::move(rows));
  } catch (const Error& e) {
    throw ParseError(source_name + ": " + e.what());
  }
}

}  // namespace

Channel parse_channel_csv(const std::string& text,
                          const std::string& source_name) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    std::size_t col = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view cell =
          std::string_view(line).substr(start, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - start);
      row.push_back(parse_cell(cell, source_name, line_no, ++col));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError(source_name + ": no rows found");
  }
  return channel_from_rows(std::move(rows), source_name);
}

Channel parse_channel_json(const std::string& text,
                           const std::string& source_name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(source_name + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    throw ParseError(source_name +
                     ": expected an object with a 'rows' array");
  }
  std::vector<std::vector<double>> rows;
  std::size_t r = 0;
  for (const auto& jrow : j["rows"]) {
    ++r;
    if (!jrow.is_array()) {
      throw ParseError(source_name + ": row " + std::to_string(r) +
                       " is not an array");
    }
    std::vector<double> row;
    std::size_t c = 0;
    for (const auto& cell : jrow) {
      ++c;
      if (!cell.is_number()) {
        throw ParseError(source_name + ": row " + std::to_string(r) +
                         ", column " + std::to_string(c) +
                         " is not a number");
      }
      row.push_back(cell.get<double>());
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError(source_name + ": 'rows' is empty");
  }
  return channel_from_rows(std::move(rows), source_name);
}

Channel load_channel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == '{') return parse_channel_json(text, path.string());
    break;
  }
  return parse_channel_csv(text, path.string());
}

Distribution load_distribution(const std::filesystem::path& path) {
  const Channel parsed = load_channel(path);
  if (parsed.in_size() != 1) {
    throw ParseError(path.string() + ": expected a single row, got " +
                     std::to_string(parsed.in_size()));
  }
  return parsed.row(0);
}

}  // namespace alphaleak
