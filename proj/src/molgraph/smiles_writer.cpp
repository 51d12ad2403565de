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

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>

#include "atomprior/molgraph.hpp"
#include "internal.hpp"

namespace atomprior::mol {
namespace {

bool organic_symbol(int z) {
  switch (z) {
    case 5:
    case 6:
    case 7:
    case 8:
    case 9:
    case 15:
    case 16:
    case 17:
    case 35:
    case 53:
      return true;
    default:
      return false;
  }
}

bool lowercase_ok(int z) { return z == 5 || z == 6 || z == 7 || z == 8 || z == 15 || z == 16 || z == 33 || z == 34 || z == 52; }

std::string lower(const std::string& s) {
  std::string out = s;
  out[0] = static_cast<char>(std::tolower(out[0]));
  return out;
}

std::string atom_token(const Molecule& mol, int i) {
  const Atom& a = mol.atoms[i];
  int nonarom = 0;
  int narom = 0;
  for (const auto& nb : mol.neighbors(i)) {
    const Bond& b = mol.bonds[nb.bond];
    if (b.order == BondOrder::Aromatic) {
      ++narom;
    } else {
      nonarom += b.kekule_order;
    }
  }
  if (organic_symbol(a.atomic_number) && a.formal_charge == 0 && a.isotope == 0) {
    detail::OrganicInference inf = detail::infer_organic(a.atomic_number, a.aromatic, nonarom, narom);
    bool double_ok = true;
    if (a.aromatic) {
      bool has_double = false;
      for (const auto& nb : mol.neighbors(i)) {
        const Bond& b = mol.bonds[nb.bond];
        if (b.order == BondOrder::Aromatic && b.kekule_order == 2) {
          has_double = true;
        }
      }
      double_ok = has_double == inf.need_double;
    }
    if (inf.ok && inf.implicit_h == a.implicit_h && double_ok && (!a.aromatic || lowercase_ok(a.atomic_number))) {
      return a.aromatic ? lower(a.element) : a.element;
    }
  }
  std::string t = "[";
  if (a.isotope > 0) {
    t += std::to_string(a.isotope);
  }
  t += (a.aromatic && lowercase_ok(a.atomic_number)) ? lower(a.element) : a.element;
  if (a.implicit_h == 1) {
    t += "H";
  } else if (a.implicit_h > 1) {
    t += "H" + std::to_string(a.implicit_h);
  }
  if (a.formal_charge > 0) {
    t += "+";
    if (a.formal_charge > 1) {
      t += std::to_string(a.formal_charge);
    }
  } else if (a.formal_charge < 0) {
    t += "-";
    if (a.formal_charge < -1) {
      t += std::to_string(-a.formal_charge);
    }
  }
  t += "]";
  return t;
}

std::string bond_token(const Molecule& mol, const Bond& b) {
  const bool both_arom = mol.atoms[b.a].aromatic && mol.atoms[b.b].aromatic;
  switch (b.order) {
    case BondOrder::Aromatic:
      return "";
    case BondOrder::Double:
      return "=";
    case BondOrder::Triple:
      return "#";
    case BondOrder::Single:
      return both_arom ? "-" : "";
  }
  return "";
}

std::string ring_label(int n) { return n < 10 ? std::to_string(n) : "%" + std::to_string(n); }

class Writer {
 public:
  Writer(const Molecule& mol, const SmilesWriteOptions& opts) : mol_(mol) {
    if (opts.random_seed) {
      rng_.seed(*opts.random_seed);
      randomize_ = true;
    }
  }

  std::string run() {
    const int n = static_cast<int>(mol_.num_atoms());
    rank_.assign(n, -1);
    parent_bond_.assign(n, -1);
    nbr_order_.assign(n, {});
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) {
      order[i] = i;
    }
    if (randomize_) {
      std::shuffle(order.begin(), order.end(), rng_);
    }
    std::string out;
    for (int root : order) {
      if (rank_[root] >= 0) {
        continue;
      }
      discover(root, -1);
      if (!out.empty()) {
        out += ".";
      }
      emit(root, out);
    }
    return out;
  }

 private:
  // First pass fixes DFS ranks and the spanning tree; non-tree bonds become ring closures.
  void discover(int v, int via) {
    rank_[v] = counter_++;
    parent_bond_[v] = via;
    std::vector<Neighbor> nbs = mol_.neighbors(v);
    if (randomize_) {
      std::shuffle(nbs.begin(), nbs.end(), rng_);
    }
    nbr_order_[v] = nbs;
    for (const auto& nb : nbs) {
      if (rank_[nb.atom] < 0) {
        discover(nb.atom, nb.bond);
      }
    }
  }

  void emit(int v, std::string& out) {
    out += atom_token(mol_, v);
    std::vector<Neighbor> branches;
    for (const auto& nb : nbr_order_[v]) {
      if (nb.bond == parent_bond_[v]) {
        continue;
      }
      if (parent_bond_[nb.atom] == nb.bond && rank_[nb.atom] > rank_[v]) {
        branches.push_back(nb);
        continue;
      }
      auto it = open_.find(nb.bond);
      if (it != open_.end()) {
        out += ring_label(it->second);
        free_labels_.insert(it->second);
        open_.erase(it);
      } else {
        const int label = next_label();
        open_[nb.bond] = label;
        out += bond_token(mol_, mol_.bonds[nb.bond]) + ring_label(label);
      }
    }
    for (std::size_t k = 0; k < branches.size(); ++k) {
      const Neighbor& nb = branches[k];
      const bool last = k + 1 == branches.size();
      if (!last) {
        out += "(";
      }
      out += bond_token(mol_, mol_.bonds[nb.bond]);
      emit(nb.atom, out);
      if (!last) {
        out += ")";
      }
    }
  }

  int next_label() {
    if (!free_labels_.empty()) {
      const int l = *free_labels_.begin();
      free_labels_.erase(free_labels_.begin());
      return l;
    }
    return ++max_label_;
  }

  const Molecule& mol_;
  std::mt19937_64 rng_;
  bool randomize_ = false;
  int counter_ = 0;
  std::vector<int> rank_;
  std::vector<int> parent_bond_;
  std::vector<std::vector<Neighbor>> nbr_order_;
  std::map<int, int> open_;
  std::set<int> free_labels_;
  int max_label_ = 0;
};

}  // namespace

std::string write_smiles(const Molecule& mol, const SmilesWriteOptions& opts) {
  Writer w(mol, opts);
  return w.run();
}

}  // namespace atomprior::mol
