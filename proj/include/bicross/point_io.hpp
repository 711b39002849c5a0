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

#ifndef BICROSS_POINT_IO_HPP_
#define BICROSS_POINT_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "bicross/geometry.hpp"

namespace bicross {

// Text format: a line holding n, then n lines "x y" where each coordinate is
// "num" or "num/den", optionally followed by a label (on every line or none).
// Blank lines and lines starting with '#' are skipped. Writing then reading
// returns identical coordinates and labels.
PointSet parse_point_set(std::string_view text);
PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::string& path);

std::string format_point_set(const PointSet& points);
void write_point_set(std::ostream& out, const PointSet& points);
void write_point_set_file(const std::string& path, const PointSet& points);

}  // namespace bicross

#endif  // BICROSS_POINT_IO_HPP_
