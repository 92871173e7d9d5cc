// Copyright 2026 The rotorqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROTORQEC_TABLE_IO_H
#define ROTORQEC_TABLE_IO_H

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace rotorqec {

/// A CSV table whose first line is "# rotorqec <schema> v<version>".
struct CsvTable {
    std::string schema;
    int version = 1;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    size_t column(const std::string &name) const;
    void write(std::ostream &out) const;
    std::string str() const;
    /// Throws std::runtime_error on a malformed header or ragged rows.
    static CsvTable read(std::istream &in);
};

/// Shortest round-tripping decimal form of a double.
std::string format_double(double v);
double parse_double(const std::string &s);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path &path, const std::string &content);

}  // namespace rotorqec

#endif
