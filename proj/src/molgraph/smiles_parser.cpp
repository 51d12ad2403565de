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

#include "atomprior/molgraph.hpp"
#include "internal.hpp"

namespace atomprior::mol {
namespace {

struct RawAtom {
  int z = 0;
  std::string symbol;
  bool aromatic = false;
  bool bracket = false;
  int h_count = 0;
  int charge = 0;
  int isotope = 0;
  std::size_t offset = 0;
};

struct RawBond {
  int a = 0;
  int b = 0;
  char symbol = 0;
  std::size_t offset = 0;
};

struct RingOpen {
  int atom;
  char bond_symbol;
  std::size_t offset;
};

bool is_organic_aromatic(char c) {
  return c == 'b' || c == 'c' || c == 'n' || c == 'o' || c == 'p' || c == 's';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  void run() {
    if (s_.empty()) {
      throw SmilesError(SmilesErrorKind::EmptyInput, 0, "empty SMILES");
    }
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (c == '(') {
        if (prev_ < 0) {
          throw SmilesError(SmilesErrorKind::Syntax, i_, "branch without a preceding atom");
        }
        branches_.push_back({prev_, i_});
        ++i_;
      } else if (c == ')') {
        if (branches_.empty()) {
          throw SmilesError(SmilesErrorKind::UnbalancedParen, i_, "unmatched ')'");
        }
        if (pending_bond_ != 0) {
          throw SmilesError(SmilesErrorKind::Syntax, i_, "bond symbol before ')'");
        }
        prev_ = branches_.back().first;
        branches_.pop_back();
        ++i_;
      } else if (c == '-' || c == '=' || c == '#' || c == ':' || c == '/' || c == '\\') {
        if (pending_bond_ != 0) {
          throw SmilesError(SmilesErrorKind::Syntax, i_, "two consecutive bond symbols");
        }
        pending_bond_ = (c == '/' || c == '\\') ? '-' : c;
        pending_bond_offset_ = i_;
        ++i_;
      } else if (c == '$') {
        throw SmilesError(SmilesErrorKind::Syntax, i_, "quadruple bonds are not supported");
      } else if (c == '.') {
        if (pending_bond_ != 0) {
          throw SmilesError(SmilesErrorKind::Syntax, i_, "bond symbol before '.'");
        }
        prev_ = -1;
        ++i_;
      } else if (c == '[') {
        add_atom(parse_bracket());
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        ring_closure();
      } else if (c == ']') {
        throw SmilesError(SmilesErrorKind::UnbalancedBracket, i_, "unmatched ']'");
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '*') {
        add_atom(parse_organic());
      } else {
        throw SmilesError(SmilesErrorKind::Syntax, i_, std::string("unexpected character '") + c + "'");
      }
    }
    if (pending_bond_ != 0) {
      throw SmilesError(SmilesErrorKind::Syntax, pending_bond_offset_, "dangling bond symbol");
    }
    if (!branches_.empty()) {
      throw SmilesError(SmilesErrorKind::UnbalancedParen, branches_.back().second, "unclosed '('");
    }
    if (!rings_.empty()) {
      const auto& open = rings_.begin()->second;
      throw SmilesError(SmilesErrorKind::UnbalancedRingClosure, open.offset,
                        "ring bond " + std::to_string(rings_.begin()->first) + " never closed");
    }
  }

  std::vector<RawAtom> atoms;
  std::vector<RawBond> bonds;

 private:
  RawAtom parse_organic() {
    RawAtom a;
    a.offset = i_;
    const char c = s_[i_];
    if (c == 'C' && i_ + 1 < s_.size() && s_[i_ + 1] == 'l') {
      a.symbol = "Cl";
      i_ += 2;
    } else if (c == 'B' && i_ + 1 < s_.size() && s_[i_ + 1] == 'r') {
      a.symbol = "Br";
      i_ += 2;
    } else if (c == 'B' || c == 'C' || c == 'N' || c == 'O' || c == 'P' || c == 'S' || c == 'F' || c == 'I') {
      a.symbol = std::string(1, c);
      ++i_;
    } else if (is_organic_aromatic(c)) {
      a.symbol = std::string(1, static_cast<char>(std::toupper(c)));
      a.aromatic = true;
      ++i_;
    } else {
      throw SmilesError(SmilesErrorKind::UnknownElement, i_, std::string("not an organic-subset atom: '") + c + "'");
    }
    a.z = element_by_symbol(a.symbol)->atomic_number;
    return a;
  }

  RawAtom parse_bracket() {
    const std::size_t open = i_;
    const std::size_t close = s_.find(']', open + 1);
    const std::size_t next_open = s_.find('[', open + 1);
    if (close == std::string_view::npos || (next_open != std::string_view::npos && next_open < close)) {
      throw SmilesError(SmilesErrorKind::UnbalancedBracket, open, "unclosed '['");
    }
    RawAtom a;
    a.offset = open;
    a.bracket = true;
    std::size_t j = open + 1;
    auto digits = [&](std::size_t& k) {
      int v = 0;
      bool any = false;
      while (k < close && std::isdigit(static_cast<unsigned char>(s_[k]))) {
        v = v * 10 + (s_[k] - '0');
        ++k;
        any = true;
      }
      return any ? v : -1;
    };
    if (int iso = digits(j); iso >= 0) {
      a.isotope = iso;
    }
    if (j >= close) {
      throw SmilesError(SmilesErrorKind::UnknownElement, j, "missing element symbol");
    }
    const char c0 = s_[j];
    if (std::isupper(static_cast<unsigned char>(c0))) {
      const ElementInfo* e = nullptr;
      if (j + 1 < close && std::islower(static_cast<unsigned char>(s_[j + 1]))) {
        e = element_by_symbol(s_.substr(j, 2));
        if (e != nullptr) {
          j += 2;
        }
      }
      if (e == nullptr) {
        e = element_by_symbol(s_.substr(j, 1));
        if (e == nullptr) {
          throw SmilesError(SmilesErrorKind::UnknownElement, j, "unknown element");
        }
        ++j;
      }
      a.symbol = e->symbol;
      a.z = e->atomic_number;
    } else if (std::islower(static_cast<unsigned char>(c0))) {
      static constexpr std::string_view kTwo[] = {"se", "as", "te"};
      bool matched = false;
      for (auto t : kTwo) {
        if (s_.substr(j, 2) == t) {
          a.symbol = std::string(1, static_cast<char>(std::toupper(t[0]))) + t[1];
          j += 2;
          matched = true;
          break;
        }
      }
      if (!matched) {
        if (!is_organic_aromatic(c0)) {
          throw SmilesError(SmilesErrorKind::UnknownElement, j, "unknown aromatic element");
        }
        a.symbol = std::string(1, static_cast<char>(std::toupper(c0)));
        ++j;
      }
      a.aromatic = true;
      a.z = element_by_symbol(a.symbol)->atomic_number;
    } else if (c0 == '*') {
      throw SmilesError(SmilesErrorKind::UnknownElement, j, "wildcard atoms are not supported");
    } else {
      throw SmilesError(SmilesErrorKind::UnknownElement, j, "missing element symbol");
    }
    // chirality, discarded
    while (j < close && s_[j] == '@') {
      ++j;
    }
    if (j + 1 < close && j > open && s_[j - 1] == '@') {
      static constexpr std::string_view kClasses[] = {"TH", "AL", "SP", "TB", "OH"};
      for (auto t : kClasses) {
        if (s_.substr(j, 2) == t) {
          j += 2;
          digits(j);
          break;
        }
      }
    }
    if (j < close && s_[j] == 'H') {
      ++j;
      int h = digits(j);
      a.h_count = h >= 0 ? h : 1;
    }
    if (j < close && (s_[j] == '+' || s_[j] == '-')) {
      const char sign = s_[j];
      ++j;
      int mag = digits(j);
      if (mag < 0) {
        mag = 1;
        while (j < close && s_[j] == sign) {
          ++mag;
          ++j;
        }
      }
      a.charge = sign == '+' ? mag : -mag;
    }
    if (j < close && s_[j] == ':') {
      ++j;
      digits(j);
    }
    if (j != close) {
      throw SmilesError(SmilesErrorKind::Syntax, j, "unexpected character in bracket atom");
    }
    i_ = close + 1;
    return a;
  }

  void add_atom(RawAtom a) {
    const int idx = static_cast<int>(atoms.size());
    atoms.push_back(std::move(a));
    if (prev_ >= 0) {
      bonds.push_back({prev_, idx, pending_bond_, pending_bond_ != 0 ? pending_bond_offset_ : atoms.back().offset});
    } else if (pending_bond_ != 0) {
      throw SmilesError(SmilesErrorKind::Syntax, pending_bond_offset_, "bond symbol without a preceding atom");
    }
    pending_bond_ = 0;
    prev_ = idx;
  }

  void ring_closure() {
    const std::size_t start = i_;
    int num = 0;
    if (s_[i_] == '%') {
      if (i_ + 2 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_ + 1])) ||
          !std::isdigit(static_cast<unsigned char>(s_[i_ + 2]))) {
        throw SmilesError(SmilesErrorKind::Syntax, i_, "'%' must be followed by two digits");
      }
      num = (s_[i_ + 1] - '0') * 10 + (s_[i_ + 2] - '0');
      i_ += 3;
    } else {
      num = s_[i_] - '0';
      ++i_;
    }
    if (prev_ < 0) {
      throw SmilesError(SmilesErrorKind::UnbalancedRingClosure, start, "ring bond without a preceding atom");
    }
    auto it = rings_.find(num);
    if (it == rings_.end()) {
      rings_.emplace(num, RingOpen{prev_, pending_bond_, start});
      pending_bond_ = 0;
      return;
    }
    const RingOpen open = it->second;
    rings_.erase(it);
    char sym = pending_bond_ != 0 ? pending_bond_ : open.bond_symbol;
    if (pending_bond_ != 0 && open.bond_symbol != 0 && pending_bond_ != open.bond_symbol) {
      throw SmilesError(SmilesErrorKind::UnbalancedRingClosure, start, "conflicting ring-bond symbols");
    }
    if (open.atom == prev_) {
      throw SmilesError(SmilesErrorKind::UnbalancedRingClosure, start, "ring bond to the same atom");
    }
    for (const auto& b : bonds) {
      if ((b.a == open.atom && b.b == prev_) || (b.a == prev_ && b.b == open.atom)) {
        throw SmilesError(SmilesErrorKind::UnbalancedRingClosure, start, "duplicate bond from ring closure");
      }
    }
    bonds.push_back({open.atom, prev_, sym, start});
    pending_bond_ = 0;
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int prev_ = -1;
  char pending_bond_ = 0;
  std::size_t pending_bond_offset_ = 0;
  std::vector<std::pair<int, std::size_t>> branches_;
  std::map<int, RingOpen> rings_;
};

int bond_symbol_order(char sym) {
  switch (sym) {
    case '=':
      return 2;
    case '#':
      return 3;
    default:
      return 1;
  }
}

//! Pentavalent nitro N(=O)=O becomes the charge-separated [N+](=O)[O-].
void normalize_nitro(Molecule& mol) {
  for (std::size_t i = 0; i < mol.atoms.size(); ++i) {
    Atom& n = mol.atoms[i];
    if (n.atomic_number != 7 || n.bracket || n.aromatic || n.formal_charge != 0) {
      continue;
    }
    std::vector<int> oxo_bonds;
    int order_sum = 0;
    for (const auto& nb : mol.neighbors(static_cast<int>(i))) {
      const Bond& b = mol.bonds[static_cast<std::size_t>(nb.bond)];
      const Atom& o = mol.atoms[static_cast<std::size_t>(nb.atom)];
      order_sum += b.kekule_order;
      if (b.order == BondOrder::Double && o.atomic_number == 8 && o.formal_charge == 0 && !o.aromatic &&
          mol.neighbors(nb.atom).size() == 1) {
        oxo_bonds.push_back(nb.bond);
      }
    }
    if (oxo_bonds.size() != 2 || order_sum != 5) {
      continue;
    }
    Bond& b = mol.bonds[static_cast<std::size_t>(oxo_bonds[1])];
    b.order = BondOrder::Single;
    b.kekule_order = 1;
    Atom& o = mol.atoms[static_cast<std::size_t>(b.other(static_cast<int>(i)))];
    n.formal_charge = 1;
    n.bracket = true;
    o.formal_charge = -1;
    o.bracket = true;
  }
}

}  // namespace

namespace detail {

int pick_valence(int z, int charge, int used) {
  for (bool ext : {false, true}) {
    std::vector<int> vals = allowed_valences(z, charge, ext);
    std::sort(vals.begin(), vals.end());
    for (int v : vals) {
      if (v >= used) {
        return v;
      }
    }
  }
  return -1;
}

OrganicInference infer_organic(int z, bool aromatic, int nonaromatic_valence, int aromatic_bonds) {
  OrganicInference out;
  const int used = nonaromatic_valence + aromatic_bonds;
  const int v = pick_valence(z, 0, used);
  if (v < 0) {
    out.ok = false;
    return out;
  }
  const int free = v - used;
  if (aromatic) {
    out.need_double = free >= 1;
    out.implicit_h = free - (out.need_double ? 1 : 0);
  } else {
    out.implicit_h = free;
  }
  return out;
}

OrganicInference infer_bracket_aromatic(int z, int charge, int nonaromatic_valence, int aromatic_bonds,
                                        int h_count) {
  OrganicInference out;
  out.implicit_h = h_count;
  const int used = nonaromatic_valence + aromatic_bonds + h_count;
  std::vector<int> vals = allowed_valences(z, charge, true);
  if (vals.empty()) {
    return out;
  }
  const int v = pick_valence(z, charge, used);
  if (v < 0) {
    out.ok = false;
    return out;
  }
  out.need_double = v - used >= 1;
  return out;
}

}  // namespace detail

Molecule parse_smiles(std::string_view text) {
  Parser p(text);
  p.run();

  // Fold plain explicit hydrogens into their heavy neighbor.
  const std::size_t nraw = p.atoms.size();
  std::vector<int> bond_count(nraw, 0);
  for (const auto& b : p.bonds) {
    ++bond_count[b.a];
    ++bond_count[b.b];
  }
  std::vector<int> folded(nraw, 0);
  std::vector<bool> drop(nraw, false);
  for (const auto& b : p.bonds) {
    for (int side = 0; side < 2; ++side) {
      const int h = side == 0 ? b.a : b.b;
      const int heavy = side == 0 ? b.b : b.a;
      const RawAtom& ha = p.atoms[h];
      if (ha.z == 1 && ha.isotope == 0 && ha.charge == 0 && ha.h_count == 0 && bond_count[h] == 1 &&
          p.atoms[heavy].z != 1 && bond_symbol_order(b.symbol) == 1 && b.symbol != ':') {
        drop[h] = true;
        ++folded[heavy];
      }
    }
  }
  std::vector<int> remap(nraw, -1);
  Molecule mol;
  mol.source_smiles = std::string(text);
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < nraw; ++i) {
    if (drop[i]) {
      continue;
    }
    remap[i] = static_cast<int>(mol.atoms.size());
    const RawAtom& r = p.atoms[i];
    Atom a;
    a.element = r.symbol;
    a.atomic_number = r.z;
    a.formal_charge = r.charge;
    a.isotope = r.isotope;
    a.aromatic = r.aromatic;
    a.bracket = r.bracket;
    a.implicit_h = folded[i] + (r.bracket ? r.h_count : 0);
    mol.atoms.push_back(std::move(a));
    offsets.push_back(r.offset);
  }
  std::vector<bool> pending;
  std::vector<std::size_t> bond_offsets;
  for (const auto& rb : p.bonds) {
    if (drop[rb.a] || drop[rb.b]) {
      continue;
    }
    Bond b;
    b.a = remap[rb.a];
    b.b = remap[rb.b];
    const bool both_arom = mol.atoms[b.a].aromatic && mol.atoms[b.b].aromatic;
    bool pend = false;
    if (rb.symbol == ':') {
      if (!both_arom) {
        throw SmilesError(SmilesErrorKind::Syntax, rb.offset, "aromatic bond between non-aromatic atoms");
      }
      b.order = BondOrder::Aromatic;
    } else if (rb.symbol == 0 && both_arom) {
      b.order = BondOrder::Aromatic;
      pend = true;
    } else {
      const int o = bond_symbol_order(rb.symbol);
      b.order = o == 1 ? BondOrder::Single : (o == 2 ? BondOrder::Double : BondOrder::Triple);
      b.kekule_order = o;
    }
    mol.bonds.push_back(b);
    pending.push_back(pend);
    bond_offsets.push_back(rb.offset);
  }
  mol.rebuild_adjacency();
  normalize_nitro(mol);
  perceive_rings(mol);

  for (std::size_t i = 0; i < mol.bonds.size(); ++i) {
    if (pending[i] && !mol.bonds[i].in_ring) {
      mol.bonds[i].order = BondOrder::Single;
      mol.bonds[i].kekule_order = 1;
    }
  }

  // Hydrogen counts and Kekule requirements for aromatic input atoms.
  std::vector<bool> need_double(mol.atoms.size(), false);
  for (std::size_t i = 0; i < mol.atoms.size(); ++i) {
    Atom& a = mol.atoms[i];
    int nonarom = a.bracket ? 0 : a.implicit_h;
    int narom = 0;
    for (const auto& nb : mol.neighbors(static_cast<int>(i))) {
      const Bond& b = mol.bonds[nb.bond];
      if (b.order == BondOrder::Aromatic) {
        ++narom;
      } else {
        nonarom += b.kekule_order;
      }
    }
    if (a.aromatic) {
      if (!a.in_ring) {
        throw SmilesError(SmilesErrorKind::KekulizationFailure, offsets[i], "aromatic atom outside a ring");
      }
      detail::OrganicInference inf =
          a.bracket ? detail::infer_bracket_aromatic(a.atomic_number, a.formal_charge, nonarom, narom, a.implicit_h)
                    : detail::infer_organic(a.atomic_number, true, nonarom, narom);
      if (!inf.ok) {
        throw SmilesError(SmilesErrorKind::ValenceViolation, offsets[i], "valence exceeded for " + a.element);
      }
      need_double[i] = inf.need_double;
      if (!a.bracket) {
        a.implicit_h += inf.implicit_h;
      }
    } else if (!a.bracket) {
      detail::OrganicInference inf = detail::infer_organic(a.atomic_number, false, nonarom, 0);
      if (!inf.ok) {
        throw SmilesError(SmilesErrorKind::ValenceViolation, offsets[i], "valence exceeded for " + a.element);
      }
      a.implicit_h += inf.implicit_h;
    }
  }
  const int failed = detail::kekulize(mol, need_double);
  if (failed >= 0) {
    throw SmilesError(SmilesErrorKind::KekulizationFailure, offsets[failed],
                      "no alternating bond assignment for aromatic system");
  }
  for (std::size_t i = 0; i < mol.atoms.size(); ++i) {
    const Atom& a = mol.atoms[i];
    std::vector<int> vals = allowed_valences(a.atomic_number, a.formal_charge, true);
    if (vals.empty()) {
      continue;
    }
    const int used = mol.total_valence(static_cast<int>(i));
    if (used > *std::max_element(vals.begin(), vals.end())) {
      throw SmilesError(SmilesErrorKind::ValenceViolation, offsets[i],
                        "valence " + std::to_string(used) + " exceeds the allowed maximum for " + a.element);
    }
  }

  perceive_aromaticity(mol);
  perceive_conjugation(mol);
  perceive_hybridization(mol);
  perceive_rotatable(mol);
  return mol;
}

std::optional<Molecule> try_parse_smiles(std::string_view text, std::string* err) {
  try {
    return parse_smiles(text);
  } catch (const SmilesError& e) {
    if (err != nullptr) {
      *err = e.what();
    }
    return std::nullopt;
  }
}

}  // namespace atomprior::mol
