// SPDX-License-Identifier: Apache-2.0

#include "fragx/chem/smiles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stack>
#include <vector>

#include "fragx/chem/elements.hpp"
#include "fragx/errors.hpp"

namespace fragx::chem {

namespace {

bool is_aromatic_organic(char c) {
  return c == 'b' || c == 'c' || c == 'n' || c == 'o' || c == 'p' || c == 's';
}

struct PendingRing {
  int atom;
  bool has_order = false;
  BondOrder order = BondOrder::Single;
  std::size_t offset;  // of the opening digit, for error reporting
};

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  MolGraph mol;
  std::vector<std::size_t> atom_offset;  // source position per atom
  std::vector<int> component_of;
  int current_component = 0;

  int prev_atom = -1;
  std::stack<int> branch_stack;
  bool has_pending_order = false;
  BondOrder pending_order = BondOrder::Single;
  std::size_t pending_offset = 0;
  std::map<int, PendingRing> open_rings;

  explicit Parser(std::string_view input) : s(input) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  void add_bond(int a, int b, BondOrder order, std::size_t at) {
    if (a == b) fail("ring closure bonds an atom to itself", at);
    for (const Bond& bond : mol.bonds) {
      if ((bond.a == a && bond.b == b) || (bond.a == b && bond.b == a))
        fail("duplicate bond between atoms", at);
    }
    mol.bonds.push_back({a, b, order, false});
  }

  BondOrder default_order(int a, int b) const {
    if (mol.atoms[a].aromatic && mol.atoms[b].aromatic)
      return BondOrder::Aromatic;
    return BondOrder::Single;
  }

  void on_atom(Atom atom, std::size_t at) {
    int idx = static_cast<int>(mol.atoms.size());
    mol.atoms.push_back(std::move(atom));
    atom_offset.push_back(at);
    component_of.push_back(current_component);
    if (prev_atom >= 0) {
      BondOrder order = has_pending_order ? pending_order
                                          : default_order(prev_atom, idx);
      if (order == BondOrder::Aromatic &&
          !(mol.atoms[prev_atom].aromatic && mol.atoms[idx].aromatic)) {
        fail("aromatic bond joins a non-aromatic atom",
             has_pending_order ? pending_offset : at);
      }
      add_bond(prev_atom, idx, order, at);
    }
    has_pending_order = false;
    prev_atom = idx;
  }

  void on_ring_digit(int digit, std::size_t at) {
    if (prev_atom < 0) fail("ring closure digit before any atom", at);
    auto it = open_rings.find(digit);
    if (it == open_rings.end()) {
      PendingRing ring{prev_atom, has_pending_order, pending_order, at};
      open_rings.emplace(digit, ring);
      has_pending_order = false;
      return;
    }
    PendingRing ring = it->second;
    open_rings.erase(it);
    BondOrder order;
    if (ring.has_order && has_pending_order) {
      if (ring.order != pending_order)
        fail("ring closure bond orders disagree", at);
      order = pending_order;
    } else if (ring.has_order) {
      order = ring.order;
    } else if (has_pending_order) {
      order = pending_order;
    } else {
      order = default_order(ring.atom, prev_atom);
    }
    if (order == BondOrder::Aromatic &&
        !(mol.atoms[ring.atom].aromatic && mol.atoms[prev_atom].aromatic)) {
      fail("aromatic bond joins a non-aromatic atom", at);
    }
    add_bond(ring.atom, prev_atom, order, at);
    has_pending_order = false;
  }

  int read_int() {
    int value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = value * 10 + (s[pos] - '0');
      ++pos;
    }
    return value;
  }

  Atom read_bracket_atom() {
    std::size_t open = pos;
    ++pos;  // consume '['
    Atom atom;
    atom.bracketed = true;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      read_int();  // isotope, ignored
    if (pos >= s.size()) fail("unbalanced brackets", open);

    // Element symbol: uppercase + optional lowercase, or an aromatic
    // lowercase symbol (se/as allowed inside brackets).
    char c = s[pos];
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::string symbol(1, c);
      ++pos;
      if (pos < s.size() && std::islower(static_cast<unsigned char>(s[pos]))) {
        std::string two = symbol + s[pos];
        if (is_supported_element(two)) {
          symbol = two;
          ++pos;
        }
      }
      if (!is_supported_element(symbol)) fail("unknown element", open + 1);
      atom.element = symbol;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      std::string symbol(1, c);
      ++pos;
      if ((c == 's' && peek() == 'e') || (c == 'a' && peek() == 's')) {
        symbol += s[pos];
        ++pos;
      }
      if (symbol == "se")
        atom.element = "Se";
      else if (symbol == "as")
        atom.element = "As";
      else if (is_aromatic_organic(c))
        atom.element = std::string(1, std::toupper(c));
      else
        fail("unknown element", open + 1);
      atom.aromatic = true;
    } else {
      fail("expected element symbol in bracket atom", pos);
    }

    // Chirality, read and discarded.
    if (peek() == '@') {
      ++pos;
      if (peek() == '@') ++pos;
    }
    if (peek() == 'H') {
      ++pos;
      atom.explicit_h = 1;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        atom.explicit_h = read_int();
    }
    if (peek() == '+' || peek() == '-') {
      char sign = s[pos];
      int magnitude = 0;
      while (peek() == sign) {
        ++magnitude;
        ++pos;
      }
      if (magnitude == 1 && pos < s.size() &&
          std::isdigit(static_cast<unsigned char>(s[pos]))) {
        magnitude = read_int();
      }
      atom.formal_charge = sign == '+' ? magnitude : -magnitude;
      if (atom.formal_charge < -4 || atom.formal_charge > 4)
        fail("formal charge out of range [-4, 4]", open);
    }
    if (peek() == ':') {
      ++pos;
      read_int();  // atom class, ignored
    }
    if (peek() != ']') fail("unbalanced brackets", open);
    ++pos;
    return atom;
  }

  void run() {
    if (s.empty()) fail("empty SMILES", 0);
    while (pos < s.size()) {
      char c = s[pos];
      if (static_cast<unsigned char>(c) > 127)
        fail("non-ASCII byte in SMILES", pos);
      switch (c) {
        case '-': set_pending(BondOrder::Single); break;
        case '/':
        case '\\':
          // Stereo bond markers parse as single bonds.
          set_pending(BondOrder::Single);
          break;
        case '=': set_pending(BondOrder::Double); break;
        case '#': set_pending(BondOrder::Triple); break;
        case ':': set_pending(BondOrder::Aromatic); break;
        case '(':
          if (prev_atom < 0) fail("branch opens before any atom", pos);
          if (has_pending_order) fail("bond symbol before branch open", pos);
          branch_stack.push(prev_atom);
          ++pos;
          break;
        case ')':
          if (branch_stack.empty()) fail("unbalanced parentheses", pos);
          if (has_pending_order) fail("dangling bond symbol", pos);
          prev_atom = branch_stack.top();
          branch_stack.pop();
          ++pos;
          break;
        case '.':
          if (has_pending_order) fail("dangling bond symbol before dot", pos);
          if (!branch_stack.empty()) fail("dot inside branch", pos);
          prev_atom = -1;
          ++current_component;
          ++pos;
          break;
        case '%': {
          std::size_t at = pos;
          ++pos;
          if (pos + 1 >= s.size() + 0 ||
              !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected two digits after %", at);
          int hi = s[pos] - '0';
          ++pos;
          if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected two digits after %", at);
          int lo = s[pos] - '0';
          ++pos;
          on_ring_digit(hi * 10 + lo, at);
          break;
        }
        case '[': on_atom(read_bracket_atom(), pos); break;
        default:
          if (std::isdigit(static_cast<unsigned char>(c))) {
            on_ring_digit(c - '0', pos);
            ++pos;
          } else if (std::isupper(static_cast<unsigned char>(c))) {
            std::size_t at = pos;
            std::string symbol(1, c);
            ++pos;
            // Two-letter organic subset atoms: Cl, Br.
            if (pos < s.size() &&
                ((c == 'C' && s[pos] == 'l') || (c == 'B' && s[pos] == 'r'))) {
              symbol += s[pos];
              ++pos;
            }
            if (!in_organic_subset(symbol)) fail("unknown element", at);
            Atom atom;
            atom.element = symbol;
            on_atom(std::move(atom), at);
          } else if (is_aromatic_organic(c)) {
            Atom atom;
            atom.element = std::string(1, std::toupper(c));
            atom.aromatic = true;
            on_atom(std::move(atom), pos);
            ++pos;
          } else {
            fail("unexpected character", pos);
          }
      }
    }
    if (!branch_stack.empty()) fail("unbalanced parentheses", s.size());
    if (has_pending_order) fail("dangling bond symbol", pending_offset);
    if (!open_rings.empty())
      fail("unbalanced ring-closure digit", open_rings.begin()->second.offset);
  }

  void set_pending(BondOrder order) {
    if (prev_atom < 0) fail("bond symbol before any atom", pos);
    if (has_pending_order) fail("two bond symbols in a row", pos);
    has_pending_order = true;
    pending_order = order;
    pending_offset = pos;
    ++pos;
  }

  void check_valences() const {
    for (int i = 0; i < static_cast<int>(mol.atoms.size()); ++i) {
      const Atom& atom = mol.atoms[i];
      if (atom.bracketed || !in_organic_subset(atom.element)) continue;
      auto valences = default_valences(atom.element);
      if (valences.empty()) continue;
      int occupied =
          static_cast<int>(std::ceil(bond_order_sum(mol, i) - 1e-9));
      int max_allowed = 0;
      for (int v : valences) {
        max_allowed = std::max(
            max_allowed,
            charge_adjusted_valence(atom.element, v, atom.formal_charge));
      }
      if (occupied > max_allowed) fail("valence violation", atom_offset[i]);
    }
  }

  MolGraph keep_largest_component() {
    int n_components = current_component + 1;
    std::vector<int> sizes(n_components, 0);
    for (int c : component_of) ++sizes[c];
    int best = 0;
    for (int c = 1; c < n_components; ++c) {
      if (sizes[c] > sizes[best]) best = c;
    }
    if (n_components == 1) return std::move(mol);
    MolGraph out;
    std::vector<int> remap(mol.atoms.size(), -1);
    for (int i = 0; i < static_cast<int>(mol.atoms.size()); ++i) {
      if (component_of[i] != best) continue;
      remap[i] = static_cast<int>(out.atoms.size());
      out.atoms.push_back(std::move(mol.atoms[i]));
    }
    for (const Bond& b : mol.bonds) {
      if (remap[b.a] < 0 || remap[b.b] < 0) continue;
      out.bonds.push_back({remap[b.a], remap[b.b], b.order, b.ring_member});
    }
    return out;
  }
};

}  // namespace

MolGraph parse_smiles(std::string_view smiles) {
  Parser parser(smiles);
  parser.run();
  parser.check_valences();
  MolGraph mol = parser.keep_largest_component();
  annotate_rings(mol);
  return mol;
}

namespace {

bool needs_bracket(const Atom& atom) {
  if (atom.bracketed || atom.formal_charge != 0 || atom.explicit_h > 0)
    return true;
  if (atom.aromatic) return !is_aromatic_organic(std::tolower(atom.element[0])) ||
                            atom.element.size() > 1;
  return !in_organic_subset(atom.element);
}

void emit_atom(std::string& out, const Atom& atom) {
  std::string symbol = atom.element;
  if (atom.aromatic) {
    for (char& c : symbol) c = static_cast<char>(std::tolower(c));
  }
  if (!needs_bracket(atom)) {
    out += symbol;
    return;
  }
  out += '[';
  out += symbol;
  if (atom.explicit_h == 1)
    out += 'H';
  else if (atom.explicit_h > 1) {
    out += 'H';
    out += std::to_string(atom.explicit_h);
  }
  if (atom.formal_charge > 0) {
    out += '+';
    if (atom.formal_charge > 1) out += std::to_string(atom.formal_charge);
  } else if (atom.formal_charge < 0) {
    out += '-';
    if (atom.formal_charge < -1) out += std::to_string(-atom.formal_charge);
  }
  out += ']';
}

char order_symbol(const MolGraph& g, const Bond& b) {
  switch (b.order) {
    case BondOrder::Double: return '=';
    case BondOrder::Triple: return '#';
    case BondOrder::Aromatic:
      return '\0';  // default between aromatic atoms
    case BondOrder::Single:
      // A single bond between two aromatic atoms (biphenyl) must be written
      // out, or it would re-parse as aromatic.
      if (g.atoms[b.a].aromatic && g.atoms[b.b].aromatic) return '-';
      return '\0';
  }
  return '\0';
}

}  // namespace

std::string write_smiles(const MolGraph& g) {
  if (g.atoms.empty()) return "";
  auto inc = g.incident_bonds();

  std::vector<bool> atom_done(g.atoms.size(), false);
  std::vector<bool> bond_done(g.bonds.size(), false);
  // Ring-closure digits assigned to back edges, keyed by bond index.
  std::vector<int> ring_digit(g.bonds.size(), 0);
  std::vector<std::vector<int>> closures_at(g.atoms.size());
  int next_digit = 1;

  // First pass: DFS spanning tree; back edges get closure digits at both
  // endpoints.
  {
    std::stack<int> stack;
    stack.push(0);
    std::vector<bool> seen(g.atoms.size(), false);
    seen[0] = true;
    while (!stack.empty()) {
      int node = stack.top();
      stack.pop();
      for (int bi : inc[node]) {
        if (bond_done[bi]) continue;
        const Bond& b = g.bonds[bi];
        int other = b.a == node ? b.b : b.a;
        if (seen[other]) {
          bond_done[bi] = true;  // back edge
          ring_digit[bi] = next_digit++;
          closures_at[b.a].push_back(bi);
          closures_at[b.b].push_back(bi);
        } else {
          seen[other] = true;
          bond_done[bi] = true;
          stack.push(other);
        }
      }
    }
    std::fill(bond_done.begin(), bond_done.end(), false);
  }

  std::string out;
  struct Frame {
    int node;
    int via_bond;  // tree bond leading here, -1 at root
    bool needs_paren;
    bool emitted = false;
    std::vector<int> children;  // tree bond indices
    std::size_t child_pos = 0;
  };

  auto make_frame = [&](int node, int via_bond, bool needs_paren) {
    Frame f;
    f.node = node;
    f.via_bond = via_bond;
    f.needs_paren = needs_paren;
    for (int bi : inc[node]) {
      if (bi == via_bond || ring_digit[bi] != 0) continue;
      const Bond& b = g.bonds[bi];
      int other = b.a == node ? b.b : b.a;
      if (!atom_done[other]) f.children.push_back(bi);
    }
    return f;
  };

  std::vector<Frame> stack;
  atom_done[0] = true;
  stack.push_back(make_frame(0, -1, false));
  std::vector<bool> closure_open(g.bonds.size(), false);
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (!f.emitted) {
      f.emitted = true;
      if (f.via_bond >= 0) {
        char sym = order_symbol(g, g.bonds[f.via_bond]);
        if (sym) out += sym;
      }
      emit_atom(out, g.atoms[f.node]);
      for (int bi : closures_at[f.node]) {
        if (!closure_open[bi]) {
          closure_open[bi] = true;
          char sym = order_symbol(g, g.bonds[bi]);
          if (sym) out += sym;
        }
        if (ring_digit[bi] > 9) {
          out += '%';
          out += std::to_string(ring_digit[bi]);
        } else {
          out += static_cast<char>('0' + ring_digit[bi]);
        }
      }
    }
    if (f.child_pos < f.children.size()) {
      int bi = f.children[f.child_pos++];
      const Bond& b = g.bonds[bi];
      int other = b.a == f.node ? b.b : b.a;
      bool last = f.child_pos == f.children.size();
      if (!last) out += '(';
      atom_done[other] = true;
      stack.push_back(make_frame(other, bi, !last));
      continue;
    }
    bool close = f.needs_paren;
    stack.pop_back();
    if (close) out += ')';
  }
  return out;
}

}  // namespace fragx::chem
