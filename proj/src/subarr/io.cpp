// Copyright 2026 The subarr Authors.
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

#include "subarr/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "subarr/errors.hpp"

namespace subarr::io {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw InputError(source + ": " + where + ": " + what);
}

}  // namespace

lattice::Arrangement parse_arrangement(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character
    const auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    if (cut != std::string::npos) what = what.substr(cut);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
  if (!doc.is_object()) fail(source, "$", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "ambient_dim" && key != "subspaces") fail(source, "$", "unknown key '" + key + "'");
  }
  if (!doc.contains("ambient_dim")) fail(source, "$", "missing 'ambient_dim'");
  const json& dim = doc["ambient_dim"];
  if (!dim.is_number_integer() || dim.get<long long>() <= 0)
    fail(source, "$.ambient_dim", "expected a positive integer");
  lattice::Arrangement arr;
  arr.ambient_dim = static_cast<std::size_t>(dim.get<long long>());

  if (!doc.contains("subspaces")) fail(source, "$", "missing 'subspaces'");
  const json& subs = doc["subspaces"];
  if (!subs.is_array() || subs.empty()) fail(source, "$.subspaces", "expected a nonempty array");
  std::set<std::string> names;
  for (std::size_t s = 0; s < subs.size(); ++s) {
    const std::string at = "$.subspaces[" + std::to_string(s) + "]";
    const json& sub = subs[s];
    if (!sub.is_object()) fail(source, at, "expected an object");
    for (const auto& [key, value] : sub.items()) {
      if (key != "name" && key != "equations") fail(source, at, "unknown key '" + key + "'");
    }
    if (!sub.contains("name") || !sub["name"].is_string() || sub["name"].get<std::string>().empty())
      fail(source, at + ".name", "expected a nonempty string");
    const std::string name = sub["name"].get<std::string>();
    if (!names.insert(name).second) fail(source, at + ".name", "duplicate name '" + name + "'");
    if (!sub.contains("equations") || !sub["equations"].is_array() || sub["equations"].empty())
      fail(source, at + ".equations", "expected a nonempty array of rows");
    std::vector<std::vector<exactla::Rat>> rows;
    const json& eqs = sub["equations"];
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      const std::string row_at = at + ".equations[" + std::to_string(r) + "]";
      if (!eqs[r].is_array()) fail(source, row_at, "expected an array of rational strings");
      if (eqs[r].size() != arr.ambient_dim)
        fail(source, row_at, "row has " + std::to_string(eqs[r].size()) + " entries, expected " +
                                 std::to_string(arr.ambient_dim));
      std::vector<exactla::Rat> row;
      for (std::size_t c = 0; c < eqs[r].size(); ++c) {
        const std::string cell_at = row_at + "[" + std::to_string(c) + "]";
        if (!eqs[r][c].is_string()) fail(source, cell_at, "rationals must be strings such as \"-3/4\"");
        const auto value = exactla::parse_rat(eqs[r][c].get<std::string>());
        if (!value) fail(source, cell_at, "'" + eqs[r][c].get<std::string>() + "' is not a rational");
        row.push_back(*value);
      }
      rows.push_back(std::move(row));
    }
    arr.atoms.push_back({name, lattice::Subspace::from_equations(arr.ambient_dim, rows)});
  }
  return arr;
}

lattice::Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str(), path);
}

}  // namespace subarr::io
