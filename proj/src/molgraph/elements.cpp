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

#include "atomprior/molgraph.hpp"

#include <stdexcept>
#include <unordered_map>

namespace atomprior::mol {
namespace {

const std::vector<ElementInfo>& table() {
  static const std::vector<ElementInfo> kTable = {
      {"*", 0, 0.0, 0, {}, {}},
      {"H", 1, 1.008, 1, {1}, {}},
      {"He", 2, 4.003, 2, {0}, {}},
      {"Li", 3, 6.941, 1, {1}, {}},
      {"Be", 4, 9.012, 2, {2}, {}},
      {"B", 5, 10.812, 3, {3}, {}},
      {"C", 6, 12.011, 4, {4}, {}},
      {"N", 7, 14.007, 5, {3}, {}},
      {"O", 8, 15.999, 6, {2}, {}},
      {"F", 9, 18.998, 7, {1}, {}},
      {"Ne", 10, 20.18, 8, {0}, {}},
      {"Na", 11, 22.99, 1, {1}, {}},
      {"Mg", 12, 24.305, 2, {}, {}},
      {"Al", 13, 26.982, 3, {3, 6}, {}},
      {"Si", 14, 28.086, 4, {4, 6}, {}},
      {"P", 15, 30.974, 5, {3, 5}, {7}},
      {"S", 16, 32.067, 6, {2, 4, 6}, {}},
      {"Cl", 17, 35.453, 7, {1}, {}},
      {"Ar", 18, 39.948, 8, {0}, {}},
      {"K", 19, 39.098, 1, {1}, {}},
      {"Ca", 20, 40.078, 2, {}, {}},
      {"Sc", 21, 44.956, 3, {}, {}},
      {"Ti", 22, 47.867, 4, {}, {}},
      {"V", 23, 50.942, 5, {}, {}},
      {"Cr", 24, 51.996, 6, {}, {}},
      {"Mn", 25, 54.938, 7, {}, {}},
      {"Fe", 26, 55.845, 8, {}, {}},
      {"Co", 27, 58.933, 9, {}, {}},
      {"Ni", 28, 58.693, 10, {}, {}},
      {"Cu", 29, 63.546, 11, {}, {}},
      {"Zn", 30, 65.39, 2, {}, {}},
      {"Ga", 31, 69.723, 3, {3}, {}},
      {"Ge", 32, 72.61, 4, {4}, {}},
      {"As", 33, 74.922, 5, {3, 5, 7}, {}},
      {"Se", 34, 78.96, 6, {2, 4, 6}, {}},
      {"Br", 35, 79.904, 7, {1}, {}},
      {"Kr", 36, 83.8, 8, {0}, {}},
      {"Rb", 37, 85.468, 1, {1}, {}},
      {"Sr", 38, 87.62, 2, {}, {}},
      {"Y", 39, 88.906, 3, {}, {}},
      {"Zr", 40, 91.224, 4, {}, {}},
      {"Nb", 41, 92.906, 5, {}, {}},
      {"Mo", 42, 95.94, 6, {}, {}},
      {"Tc", 43, 98.0, 7, {}, {}},
      {"Ru", 44, 101.07, 8, {}, {}},
      {"Rh", 45, 102.906, 9, {}, {}},
      {"Pd", 46, 106.42, 10, {}, {}},
      {"Ag", 47, 107.868, 11, {}, {}},
      {"Cd", 48, 112.412, 2, {}, {}},
      {"In", 49, 114.818, 3, {3}, {}},
      {"Sn", 50, 118.711, 4, {2, 4}, {}},
      {"Sb", 51, 121.76, 5, {3, 5, 7}, {}},
      {"Te", 52, 127.6, 6, {2, 4, 6}, {}},
      {"I", 53, 126.904, 7, {1}, {3, 5}},
      {"Xe", 54, 131.29, 8, {0, 2, 4, 6}, {}},
      {"Cs", 55, 132.905, 1, {1}, {}},
      {"Ba", 56, 137.328, 2, {}, {}},
      {"La", 57, 138.906, 3, {}, {}},
      {"Ce", 58, 140.116, 4, {}, {}},
      {"Pr", 59, 140.908, 3, {}, {}},
      {"Nd", 60, 144.24, 4, {}, {}},
      {"Pm", 61, 145.0, 5, {}, {}},
      {"Sm", 62, 150.36, 6, {}, {}},
      {"Eu", 63, 151.964, 7, {}, {}},
      {"Gd", 64, 157.25, 8, {}, {}},
      {"Tb", 65, 158.925, 9, {}, {}},
      {"Dy", 66, 162.5, 10, {}, {}},
      {"Ho", 67, 164.93, 11, {}, {}},
      {"Er", 68, 167.26, 12, {}, {}},
      {"Tm", 69, 168.934, 13, {}, {}},
      {"Yb", 70, 173.04, 14, {}, {}},
      {"Lu", 71, 174.967, 15, {}, {}},
      {"Hf", 72, 178.49, 4, {}, {}},
      {"Ta", 73, 180.948, 5, {}, {}},
      {"W", 74, 183.84, 6, {}, {}},
      {"Re", 75, 186.207, 7, {}, {}},
      {"Os", 76, 190.23, 8, {}, {}},
      {"Ir", 77, 192.217, 9, {}, {}},
      {"Pt", 78, 195.078, 10, {}, {}},
      {"Au", 79, 196.967, 11, {}, {}},
      {"Hg", 80, 200.59, 2, {}, {}},
      {"Tl", 81, 204.383, 3, {3}, {}},
      {"Pb", 82, 207.2, 4, {2, 4}, {}},
      {"Bi", 83, 208.98, 5, {3, 5, 7}, {}},
      {"Po", 84, 209.0, 6, {2, 4, 6}, {}},
      {"At", 85, 210.0, 7, {1, 3, 5}, {}},
      {"Rn", 86, 222.0, 8, {0}, {}},
      {"Fr", 87, 223.0, 1, {1}, {}},
      {"Ra", 88, 226.0, 2, {}, {}},
      {"Ac", 89, 227.0, 3, {}, {}},
      {"Th", 90, 232.038, 4, {}, {}},
      {"Pa", 91, 231.036, 3, {}, {}},
      {"U", 92, 238.029, 4, {}, {}},
      {"Np", 93, 237.0, 5, {}, {}},
      {"Pu", 94, 244.0, 6, {}, {}},
      {"Am", 95, 243.0, 7, {}, {}},
      {"Cm", 96, 247.0, 8, {}, {}},
      {"Bk", 97, 247.0, 9, {}, {}},
      {"Cf", 98, 251.0, 10, {}, {}},
      {"Es", 99, 252.0, 11, {}, {}},
      {"Fm", 100, 257.0, 12, {}, {}},
      {"Md", 101, 258.0, 13, {}, {}},
      {"No", 102, 259.0, 14, {}, {}},
      {"Lr", 103, 262.0, 15, {}, {}},
  };
  return kTable;
}

const std::unordered_map<std::string_view, int>& symbol_index() {
  static const std::unordered_map<std::string_view, int> kIndex = [] {
    std::unordered_map<std::string_view, int> m;
    for (const auto& e : table()) {
      if (e.atomic_number > 0) {
        m.emplace(e.symbol, e.atomic_number);
      }
    }
    return m;
  }();
  return kIndex;
}

}  // namespace

const ElementInfo* element_by_symbol(std::string_view symbol) {
  const auto& idx = symbol_index();
  auto it = idx.find(symbol);
  if (it == idx.end()) {
    return nullptr;
  }
  return &table()[static_cast<std::size_t>(it->second)];
}

const ElementInfo& element_by_number(int z) {
  if (z < 0 || static_cast<std::size_t>(z) >= table().size()) {
    throw std::out_of_range("atomic number out of range: " + std::to_string(z));
  }
  return table()[static_cast<std::size_t>(z)];
}

std::vector<int> allowed_valences(int z, int charge, bool include_extended) {
  const ElementInfo& base = element_by_number(z);
  if (base.valences.empty()) {
    return {};
  }
  int effective = z - charge;
  if (charge != 0) {
    if (effective <= 0 || static_cast<std::size_t>(effective) >= table().size()) {
      return {};
    }
    // Isoelectronic only within the same period block; fall back to unchecked for metals.
    if (element_by_number(effective).valences.empty()) {
      return {};
    }
  }
  const ElementInfo& e = element_by_number(effective);
  std::vector<int> out = e.valences;
  if (include_extended) {
    out.insert(out.end(), e.extended_valences.begin(), e.extended_valences.end());
  }
  return out;
}

}  // namespace atomprior::mol
