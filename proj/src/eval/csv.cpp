// SPDX-FileCopyrightText: Copyright (c) 2026 The atomprior Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <sstream>

#include "atomprior/eval.hpp"

namespace atomprior::eval {

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) {
      return i;
    }
  }
  throw std::out_of_range("no column named '" + name + "'");
}

CsvTable parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t i = 0;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    if (!(row.size() == 1 && row[0].empty())) {
      rows.push_back(std::move(row));
    }
    row.clear();
  };
  while (i < text.size()) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n' || c == '\r') {
      end_row();
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
        ++i;
      }
    } else {
      field += c;
      field_started = true;
    }
    ++i;
  }
  if (quoted) {
    throw std::runtime_error("CSV: unterminated quoted field");
  }
  if (field_started || !row.empty()) {
    end_row();
  }
  CsvTable t;
  if (rows.empty()) {
    return t;
  }
  t.header = std::move(rows.front());
  t.rows.assign(std::make_move_iterator(rows.begin() + 1), std::make_move_iterator(rows.end()));
  return t;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_csv(ss.str());
}

Dataset load_dataset(const CsvTable& table, const std::string& smiles_column,
                     const std::vector<std::string>& label_columns, prompts::TaskKind kind) {
  Dataset d;
  d.kind = kind;
  const std::size_t sc = table.column(smiles_column);
  std::vector<std::size_t> lc;
  if (label_columns.empty()) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      if (i != sc) {
        lc.push_back(i);
        d.label_names.push_back(table.header[i]);
      }
    }
  } else {
    for (const auto& name : label_columns) {
      lc.push_back(table.column(name));
      d.label_names.push_back(name);
    }
  }
  if (lc.empty()) {
    throw std::invalid_argument("dataset has no label columns");
  }

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::string where = "row " + std::to_string(r + 2);
    auto drop = [&](const std::string& why) {
      ++d.dropped;
      d.drop_reasons.push_back(where + ": " + why);
    };
    if (row.size() != table.header.size()) {
      drop("expected " + std::to_string(table.header.size()) + " fields, got " + std::to_string(row.size()));
      continue;
    }
    std::string err;
    if (!mol::try_parse_smiles(row[sc], &err)) {
      drop("unparseable SMILES: " + err);
      continue;
    }
    Record rec;
    rec.smiles = row[sc];
    bool bad = false;
    for (std::size_t c : lc) {
      const std::string& cell = row[c];
      if (cell.empty()) {
        rec.labels.emplace_back();
        continue;
      }
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0' || !std::isfinite(v) ||
          (kind == prompts::TaskKind::Classification && v != 0.0 && v != 1.0)) {
        drop("invalid label '" + cell + "' in column " + table.header[c]);
        bad = true;
        break;
      }
      rec.labels.emplace_back(v);
    }
    if (!bad) {
      d.records.push_back(std::move(rec));
    }
  }
  return d;
}

}  // namespace atomprior::eval
