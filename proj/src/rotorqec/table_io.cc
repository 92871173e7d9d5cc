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

#include "rotorqec/table_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rotorqec {

namespace {

std::vector<std::string> split_line(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("row width " + std::to_string(row.size()) + " does not match " +
                                    std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

size_t CsvTable::column(const std::string &name) const {
    for (size_t i = 0; i < columns.size(); i++) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range("no column named " + name);
}

void CsvTable::write(std::ostream &out) const {
    out << "# rotorqec " << schema << " v" << version << "\n";
    for (size_t i = 0; i < columns.size(); i++) {
        out << (i ? "," : "") << columns[i];
    }
    out << "\n";
    for (const auto &row : rows) {
        for (size_t i = 0; i < row.size(); i++) {
            out << (i ? "," : "") << row[i];
        }
        out << "\n";
    }
}

std::string CsvTable::str() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

CsvTable CsvTable::read(std::istream &in) {
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty CSV input");
    }
    std::istringstream head(line);
    std::string hash, tool, ver;
    head >> hash >> tool >> t.schema >> ver;
    if (hash != "#" || tool != "rotorqec" || ver.size() < 2 || ver[0] != 'v') {
        throw std::runtime_error("missing rotorqec CSV header line");
    }
    t.version = std::stoi(ver.substr(1));
    if (!std::getline(in, line)) {
        throw std::runtime_error("missing CSV column line");
    }
    t.columns = split_line(line);
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto cells = split_line(line);
        if (cells.size() != t.columns.size()) {
            throw std::runtime_error("ragged CSV row: " + line);
        }
        t.rows.push_back(std::move(cells));
    }
    return t;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string &s) {
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("not a number: " + s);
    }
    return v;
}

void write_file_atomic(const std::filesystem::path &path, const std::string &content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out << content;
        if (!out) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace rotorqec
