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

#include "smarts.hpp"

#include <cctype>
#include <stdexcept>

namespace atomprior::desc::detail {

ExplicitHGraph::ExplicitHGraph(const mol::Molecule& mol) {
  num_heavy = mol.num_atoms();
  nodes.resize(num_heavy);
  adj.resize(num_heavy);
  for (std::size_t i = 0; i < num_heavy; ++i) {
    const mol::Atom& a = mol.atoms[i];
    nodes[i] = {a.atomic_number, a.aromatic, a.formal_charge, a.implicit_h, a.degree + a.implicit_h, -1};
    for (const auto& nb : mol.neighbors(static_cast<int>(i))) {
      adj[i].push_back({nb.atom, mol.bonds[nb.bond].order});
      nodes[i].h_count += mol.atoms[nb.atom].atomic_number == 1 ? 1 : 0;
    }
  }
  for (std::size_t i = 0; i < num_heavy; ++i) {
    for (int h = 0; h < mol.atoms[i].implicit_h; ++h) {
      const int idx = static_cast<int>(nodes.size());
      nodes.push_back({1, false, 0, 0, 1, static_cast<int>(i)});
      adj.push_back({{static_cast<int>(i), mol::BondOrder::Single}});
      adj[i].push_back({idx, mol::BondOrder::Single});
    }
  }
}

namespace {

enum class Prim { AtomicNum, AliphaticElem, AromaticElem, Aliphatic, Aromatic, HCount, Connectivity, Degree, Charge, Any };

struct Expr {
  enum class Op { Leaf, Not, And, Or } op = Op::Leaf;
  Prim prim = Prim::Any;
  int value = 0;
  std::vector<Expr> kids;

  bool eval(const ExplicitHGraph::Node& n) const {
    switch (op) {
      case Op::Not:
        return !kids[0].eval(n);
      case Op::And:
        for (const auto& k : kids) {
          if (!k.eval(n)) {
            return false;
          }
        }
        return true;
      case Op::Or:
        for (const auto& k : kids) {
          if (k.eval(n)) {
            return true;
          }
        }
        return false;
      case Op::Leaf:
        break;
    }
    switch (prim) {
      case Prim::AtomicNum:
        return n.z == value;
      case Prim::AliphaticElem:
        return n.z == value && !n.aromatic;
      case Prim::AromaticElem:
        return n.z == value && n.aromatic;
      case Prim::Aliphatic:
        return !n.aromatic;
      case Prim::Aromatic:
        return n.aromatic;
      case Prim::HCount:
        return n.h_count == value;
      case Prim::Connectivity:
      case Prim::Degree:
        return n.connectivity == value;
      case Prim::Charge:
        return n.charge == value;
      case Prim::Any:
        return true;
    }
    return false;
  }
};

enum class BondKind { Implicit, Single, Double, Triple, Aromatic, Any };

bool bond_matches(BondKind k, mol::BondOrder o) {
  switch (k) {
    case BondKind::Implicit:
      return o == mol::BondOrder::Single || o == mol::BondOrder::Aromatic;
    case BondKind::Single:
      return o == mol::BondOrder::Single;
    case BondKind::Double:
      return o == mol::BondOrder::Double;
    case BondKind::Triple:
      return o == mol::BondOrder::Triple;
    case BondKind::Aromatic:
      return o == mol::BondOrder::Aromatic;
    case BondKind::Any:
      return true;
  }
  return false;
}

Expr leaf(Prim p, int v = 0) {
  Expr e;
  e.prim = p;
  e.value = v;
  return e;
}

int element_number(std::string_view sym) {
  const mol::ElementInfo* e = mol::element_by_symbol(sym);
  if (e == nullptr) {
    throw std::invalid_argument("SMARTS: unknown element " + std::string(sym));
  }
  return e->atomic_number;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = low_and();
    if (i_ != s_.size()) {
      throw std::invalid_argument("SMARTS: trailing text in atom expression: " + std::string(s_));
    }
    return e;
  }

 private:
  Expr combine(Expr::Op op, std::vector<Expr> parts) {
    if (parts.size() == 1) {
      return std::move(parts[0]);
    }
    Expr e;
    e.op = op;
    e.kids = std::move(parts);
    return e;
  }

  Expr low_and() {
    std::vector<Expr> parts{or_expr()};
    while (i_ < s_.size() && s_[i_] == ';') {
      ++i_;
      parts.push_back(or_expr());
    }
    return combine(Expr::Op::And, std::move(parts));
  }

  Expr or_expr() {
    std::vector<Expr> parts{high_and()};
    while (i_ < s_.size() && s_[i_] == ',') {
      ++i_;
      parts.push_back(high_and());
    }
    return combine(Expr::Op::Or, std::move(parts));
  }

  Expr high_and() {
    std::vector<Expr> parts{unary()};
    while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != ';') {
      if (s_[i_] == '&') {
        ++i_;
      }
      parts.push_back(unary());
    }
    return combine(Expr::Op::And, std::move(parts));
  }

  Expr unary() {
    if (i_ < s_.size() && s_[i_] == '!') {
      ++i_;
      Expr e;
      e.op = Expr::Op::Not;
      e.kids.push_back(unary());
      return e;
    }
    return primitive();
  }

  int number(int dflt) {
    int v = 0;
    bool any = false;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      ++i_;
      any = true;
    }
    return any ? v : dflt;
  }

  Expr primitive() {
    if (i_ >= s_.size()) {
      throw std::invalid_argument("SMARTS: truncated atom expression");
    }
    const char c = s_[i_];
    if (c == '#') {
      ++i_;
      return leaf(Prim::AtomicNum, number(0));
    }
    if (c == '*') {
      ++i_;
      return leaf(Prim::Any);
    }
    if (c == '+' || c == '-') {
      ++i_;
      int mag = number(-1);
      if (mag < 0) {
        mag = 1;
        while (i_ < s_.size() && s_[i_] == c) {
          ++mag;
          ++i_;
        }
      }
      return leaf(Prim::Charge, c == '+' ? mag : -mag);
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (i_ + 1 < s_.size() && std::islower(static_cast<unsigned char>(s_[i_ + 1]))) {
        const mol::ElementInfo* e = mol::element_by_symbol(s_.substr(i_, 2));
        if (e != nullptr) {
          i_ += 2;
          return leaf(Prim::AliphaticElem, e->atomic_number);
        }
      }
      ++i_;
      switch (c) {
        case 'A':
          return leaf(Prim::Aliphatic);
        case 'H':
          return leaf(Prim::HCount, number(1));
        case 'X':
          return leaf(Prim::Connectivity, number(1));
        case 'D':
          return leaf(Prim::Degree, number(1));
        default:
          return leaf(Prim::AliphaticElem, element_number(std::string_view(&s_[i_ - 1], 1)));
      }
    }
    if (c == 'a') {
      ++i_;
      return leaf(Prim::Aromatic);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      ++i_;
      const char up = static_cast<char>(std::toupper(c));
      return leaf(Prim::AromaticElem, element_number(std::string_view(&up, 1)));
    }
    throw std::invalid_argument("SMARTS: unexpected character in " + std::string(s_));
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

struct PatternAtom {
  Expr expr;
  int parent = -1;
  BondKind bond = BondKind::Implicit;
};

}  // namespace

struct SmartsPattern::Impl {
  std::vector<PatternAtom> atoms;

  bool extend(const ExplicitHGraph& g, std::vector<int>& map, std::vector<bool>& used, std::size_t k) const {
    if (k == atoms.size()) {
      return true;
    }
    const PatternAtom& pa = atoms[k];
    const int from = map[static_cast<std::size_t>(pa.parent)];
    for (const auto& e : g.adj[static_cast<std::size_t>(from)]) {
      if (used[static_cast<std::size_t>(e.to)] || !bond_matches(pa.bond, e.order) ||
          !pa.expr.eval(g.nodes[static_cast<std::size_t>(e.to)])) {
        continue;
      }
      used[static_cast<std::size_t>(e.to)] = true;
      map[k] = e.to;
      if (extend(g, map, used, k + 1)) {
        return true;
      }
      used[static_cast<std::size_t>(e.to)] = false;
    }
    return false;
  }
};

SmartsPattern::SmartsPattern(std::string_view text) : impl_(std::make_unique<Impl>()), text_(text) {
  std::vector<int> stack;
  int prev = -1;
  BondKind bond = BondKind::Implicit;
  std::size_t i = 0;
  auto add = [&](Expr e) {
    impl_->atoms.push_back({std::move(e), prev, bond});
    prev = static_cast<int>(impl_->atoms.size()) - 1;
    bond = BondKind::Implicit;
  };
  while (i < text.size()) {
    const char c = text[i];
    switch (c) {
      case '(':
        stack.push_back(prev);
        ++i;
        continue;
      case ')':
        prev = stack.back();
        stack.pop_back();
        ++i;
        continue;
      case '-':
        bond = BondKind::Single;
        ++i;
        continue;
      case '=':
        bond = BondKind::Double;
        ++i;
        continue;
      case '#':
        bond = BondKind::Triple;
        ++i;
        continue;
      case ':':
        bond = BondKind::Aromatic;
        ++i;
        continue;
      case '~':
        bond = BondKind::Any;
        ++i;
        continue;
      case '[': {
        const std::size_t close = text.find(']', i);
        if (close == std::string_view::npos) {
          throw std::invalid_argument("SMARTS: unclosed bracket in " + std::string(text));
        }
        add(ExprParser(text.substr(i + 1, close - i - 1)).parse());
        i = close + 1;
        continue;
      }
      default:
        break;
    }
    std::string_view sym;
    if ((c == 'C' && i + 1 < text.size() && text[i + 1] == 'l') || (c == 'B' && i + 1 < text.size() && text[i + 1] == 'r')) {
      sym = text.substr(i, 2);
    } else {
      sym = text.substr(i, 1);
    }
    add(ExprParser(sym).parse());
    i += sym.size();
  }
}

SmartsPattern::~SmartsPattern() = default;
SmartsPattern::SmartsPattern(SmartsPattern&&) noexcept = default;
SmartsPattern& SmartsPattern::operator=(SmartsPattern&&) noexcept = default;

bool SmartsPattern::matches_at(const ExplicitHGraph& g, int root) const {
  if (impl_->atoms.empty() || !impl_->atoms[0].expr.eval(g.nodes[static_cast<std::size_t>(root)])) {
    return false;
  }
  std::vector<int> map(impl_->atoms.size(), -1);
  std::vector<bool> used(g.nodes.size(), false);
  map[0] = root;
  used[static_cast<std::size_t>(root)] = true;
  return impl_->extend(g, map, used, 1);
}

}  // namespace atomprior::desc::detail
