// Copyright 2026 The bicross Authors
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

#include "bicross/point_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "bicross/errors.hpp"

namespace bicross {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

PointSet parse_point_set(std::string_view text) {
  long expected = -1;
  std::vector<Point> points;
  std::vector<std::string> labels;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto f = fields(line);
    if (expected < 0) {
      if (f.size() != 1) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected point count");
      }
      Coord n = parse_coord(f[0]);
      if (n.get_den() != 1 || n < 0 || n > 100000000) {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": bad point count");
      }
      expected = n.get_num().get_si();
      points.reserve(static_cast<std::size_t>(expected));
      continue;
    }
    if (f.size() != 2 && f.size() != 3) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": expected two coordinates and an optional label");
    }
    // Labels are all-or-nothing.
    if (!points.empty() && (f.size() == 3) != !labels.empty()) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": labels must be on every line");
    }
    if (static_cast<long>(points.size()) == expected) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": too many points");
    }
    points.push_back({parse_coord(f[0]), parse_coord(f[1])});
    if (f.size() == 3) labels.emplace_back(f[2]);
  }
  if (expected < 0) throw Error(ErrorCode::kParse, "missing point count");
  if (static_cast<long>(points.size()) != expected) {
    throw Error(ErrorCode::kParse, "expected " + std::to_string(expected) + " points, found " +
                                       std::to_string(points.size()));
  }
  return PointSet(std::move(points), std::move(labels));
}

PointSet read_point_set(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_point_set(buffer.str());
}

PointSet read_point_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return read_point_set(in);
}

std::string format_point_set(const PointSet& points) {
  std::string out = std::to_string(points.size()) + "\n";
  for (int i = 0; i < points.size(); ++i) {
    out += format_coord(points[i].x);
    out += ' ';
    out += format_coord(points[i].y);
    if (points.has_labels()) {
      out += ' ';
      out += points.labels()[i];
    }
    out += '\n';
  }
  return out;
}

void write_point_set(std::ostream& out, const PointSet& points) { out << format_point_set(points); }

void write_point_set_file(const std::string& path, const PointSet& points) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  write_point_set(out, points);
}

}  // namespace bicross
