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
#include <map>
#include <string>
#include <utility>

#include "atomprior/descriptors.hpp"

namespace atomprior::desc {
namespace {

struct Params {
  double a;
  double b;
  double c;
};

constexpr double kIonXH = 20.02;
constexpr Params kHydrogen{7.17, 6.24, -0.56};

const std::map<std::pair<std::string, std::string>, Params>& param_table() {
  static const std::map<std::pair<std::string, std::string>, Params> kTable = {
      {{"H", "*"}, {7.17, 6.24, -0.56}},     {{"C", "sp3"}, {7.98, 9.18, 1.88}},
      {{"C", "sp2"}, {8.79, 9.32, 1.51}},    {{"C", "sp"}, {10.39, 9.45, 0.73}},
      {{"N", "sp3"}, {11.54, 10.82, 1.36}},  {{"N", "sp2"}, {12.87, 11.15, 0.85}},
      {{"N", "sp"}, {15.68, 11.7, -0.27}},   {{"O", "sp3"}, {14.18, 12.92, 1.39}},
      {{"O", "sp2"}, {17.07, 13.79, 0.47}},  {{"F", "sp3"}, {14.66, 13.85, 2.31}},
      {{"Cl", "sp3"}, {11.00, 9.69, 1.35}},  {{"Br", "sp3"}, {10.08, 8.47, 1.16}},
      {{"I", "sp3"}, {9.90, 7.96, 0.96}},    {{"S", "sp3"}, {10.14, 9.13, 1.38}},
      {{"S", "so"}, {10.14, 9.13, 1.38}},    {{"S", "so2"}, {12.00, 10.81, 1.20}},
      {{"S", "sp2"}, {10.88, 9.49, 1.33}},   {{"P", "sp3"}, {8.90, 8.24, 0.96}},
      {{"P", "sp2"}, {9.665, 8.530, 0.735}}, {{"Si", "sp3"}, {7.300, 6.567, 0.657}},
      {{"Si", "sp2"}, {7.905, 6.748, 0.443}}, {{"Si", "sp"}, {9.065, 7.027, -0.002}},
      {{"B", "sp3"}, {5.980, 6.820, 1.605}}, {{"B", "sp2"}, {6.420, 6.807, 1.322}},
      {{"Be", "sp3"}, {3.845, 6.755, 3.165}}, {{"Be", "sp2"}, {4.005, 6.725, 3.035}},
      {{"Mg", "sp2"}, {3.565, 5.572, 2.197}}, {{"Mg", "sp3"}, {3.300, 5.587, 2.447}},
      {{"Mg", "sp"}, {4.040, 5.472, 1.823}}, {{"Al", "sp3"}, {5.375, 4.953, 0.867}},
      {{"Al", "sp2"}, {5.795, 5.020, 0.695}},
  };
  return kTable;
}

std::string mode_for(const mol::Molecule& mol, int i) {
  const mol::Atom& a = mol.atoms[i];
  switch (a.hybridization) {
    case mol::Hybridization::SP3:
      return "sp3";
    case mol::Hybridization::SP2:
      return "sp2";
    case mol::Hybridization::SP:
      return "sp";
    default:
      break;
  }
  if (a.atomic_number == 1) {
    return "*";
  }
  if (a.atomic_number == 16) {
    int oxygens = 0;
    for (const auto& nb : mol.neighbors(i)) {
      oxygens += mol.atoms[nb.atom].atomic_number == 8 ? 1 : 0;
    }
    return oxygens == 2 ? "so2" : (oxygens == 1 ? "so" : "sp3");
  }
  return "";
}

// Formal charge shared among same-element atoms two conjugated bonds apart (carboxylates, nitro, amidinium).
std::vector<double> split_conjugated_charge(const mol::Molecule& mol) {
  const std::size_t n = mol.num_atoms();
  std::vector<double> q(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const mol::Atom& at = mol.atoms[i];
    double formal = at.formal_charge;
    if (formal == 0.0 || q[i] != 0.0) {
      continue;
    }
    std::vector<int> marker{static_cast<int>(i)};
    for (const auto& n1 : mol.neighbors(static_cast<int>(i))) {
      if (!mol.bonds[n1.bond].conjugated) {
        continue;
      }
      for (const auto& n2 : mol.neighbors(n1.atom)) {
        if (n2.bond == n1.bond || !mol.bonds[n2.bond].conjugated) {
          continue;
        }
        if (mol.atoms[n2.atom].atomic_number == at.atomic_number) {
          formal += mol.atoms[n2.atom].formal_charge;
          marker.push_back(n2.atom);
        }
      }
    }
    for (int m : marker) {
      q[m] = formal / static_cast<double>(marker.size());
    }
  }
  return q;
}

}  // namespace

GasteigerResult gasteiger_charges(const mol::Molecule& mol, int iterations) {
  const std::size_t n = mol.num_atoms();
  GasteigerResult out;
  std::vector<double>& q = out.charges;
  q = split_conjugated_charge(mol);
  out.hydrogen_charges.assign(n, 0.0);
  std::vector<double>& hq = out.hydrogen_charges;
  std::vector<Params> p(n);
  std::vector<double> ionx(n, 0.0);
  std::vector<bool> active(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    const int ai = static_cast<int>(i);
    const auto& table = param_table();
    auto it = table.find({mol.atoms[i].element, mode_for(mol, ai)});
    if (it == table.end()) {
      active[i] = false;
      out.missing_parameters.push_back(ai);
      q[i] = mol.atoms[i].formal_charge;
      continue;
    }
    p[i] = it->second;
    ionx[i] = mol.atoms[i].atomic_number == 1 ? kIonXH : p[i].a + p[i].b + p[i].c;
  }
  std::vector<double> energy(n, 0.0);
  double damp = 0.5;
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      energy[i] = p[i].a + q[i] * (p[i].b + p[i].c * q[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) {
        continue;
      }
      const int ai = static_cast<int>(i);
      double dq = 0.0;
      for (const auto& nb : mol.neighbors(ai)) {
        if (!active[nb.atom]) {
          continue;
        }
        const double dx = energy[nb.atom] - energy[i];
        dq += dx / (dx < 0.0 ? ionx[nb.atom] : ionx[i]);
      }
      const int nh = mol.atoms[i].implicit_h;
      if (nh > 0) {
        const double qh = hq[i] / nh;
        const double enr = kHydrogen.a + qh * (kHydrogen.b + kHydrogen.c * qh);
        const double dx = enr - energy[i];
        const double dqh = dx / (dx < 0.0 ? kIonXH : ionx[i]);
        dq += nh * dqh;
        hq[i] -= nh * dqh * damp;
      }
      q[i] += damp * dq;
    }
    damp *= 0.5;
  }
  return out;
}

}  // namespace atomprior::desc
