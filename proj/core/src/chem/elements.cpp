// SPDX-License-Identifier: Apache-2.0

#include "fragx/chem/elements.hpp"

#include <cstdlib>

namespace fragx::chem {

namespace {

// Slot order matches the widely used 44-wide one-hot vocabulary for atom
// featurization; index 43 is the unknown slot and has no symbol here.
constexpr std::array<std::string_view, 43> kElements = {
    "C",  "N",  "O",  "S",  "F",  "Si", "P",  "Cl", "Br", "Mg", "Na",
    "Ca", "Fe", "As", "Al", "I",  "B",  "V",  "K",  "Tl", "Yb", "Sb",
    "Sn", "Ag", "Pd", "Co", "Se", "Ti", "Zn", "H",  "Li", "Ge", "Cu",
    "Au", "Ni", "Cd", "In", "Mn", "Zr", "Cr", "Pt", "Hg", "Pb"};

constexpr std::array<int, 1> kValence1 = {1};
constexpr std::array<int, 1> kValence2 = {2};
constexpr std::array<int, 1> kValence3 = {3};
constexpr std::array<int, 1> kValence4 = {4};
constexpr std::array<int, 2> kValenceN = {3, 5};
constexpr std::array<int, 3> kValenceS = {2, 4, 6};

}  // namespace

std::span<const std::string_view> element_table() { return kElements; }

std::optional<int> element_index(std::string_view symbol) {
  for (int i = 0; i < static_cast<int>(kElements.size()); ++i) {
    if (kElements[i] == symbol) return i;
  }
  return std::nullopt;
}

bool is_supported_element(std::string_view symbol) {
  return element_index(symbol).has_value();
}

std::span<const int> default_valences(std::string_view symbol) {
  if (symbol == "B") return kValence3;
  if (symbol == "C") return kValence4;
  if (symbol == "N") return kValenceN;
  if (symbol == "O") return kValence2;
  if (symbol == "P") return kValenceN;
  if (symbol == "S") return kValenceS;
  if (symbol == "F" || symbol == "Cl" || symbol == "Br" || symbol == "I")
    return kValence1;
  if (symbol == "H") return kValence1;
  return {};
}

bool in_organic_subset(std::string_view symbol) {
  return symbol == "B" || symbol == "C" || symbol == "N" || symbol == "O" ||
         symbol == "P" || symbol == "S" || symbol == "F" || symbol == "Cl" ||
         symbol == "Br" || symbol == "I";
}

int charge_adjusted_valence(std::string_view symbol, int valence,
                            int formal_charge) {
  if (formal_charge == 0) return valence;
  if (symbol == "C" || symbol == "Si") return valence - std::abs(formal_charge);
  if (symbol == "B" || symbol == "Al") return valence - formal_charge;
  // N, P, O, S, halogens: a positive charge adds a bond, a negative one
  // removes it.
  return valence + formal_charge;
}

}  // namespace fragx::chem
