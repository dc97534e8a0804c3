// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace fragx::chem {

/// Number of element slots in the atom feature layout: 43 named elements plus
/// one catch-all "unknown" slot.
inline constexpr int kElementSlots = 44;

/// Named elements, in feature-slot order. Index 43 is reserved for unknown.
std::span<const std::string_view> element_table();

/// Slot index for a symbol ("C" -> 0, "Pb" -> 42). Unlisted symbols get no
/// index; the featurizer maps them to the unknown slot instead.
std::optional<int> element_index(std::string_view symbol);

bool is_supported_element(std::string_view symbol);

/// Default valence alternatives for the SMILES organic subset, smallest
/// first (e.g. S -> {2, 4, 6}). Empty for every other element: atoms outside
/// the organic subset never receive valence-derived hydrogens.
std::span<const int> default_valences(std::string_view symbol);

/// True for B C N O P S F Cl Br I, the atoms SMILES may write without
/// brackets.
bool in_organic_subset(std::string_view symbol);

/// Adjusts a default valence for formal charge. The convention is group
/// based: N/P/O/S/halogens gain a bond per positive charge ([NH4+] has
/// valence 4), C/Si lose one per unit of charge of either sign, B/Al lose
/// one per positive charge and gain one per negative ([BH4-] has valence 4).
int charge_adjusted_valence(std::string_view symbol, int valence, int formal_charge);

}  // namespace fragx::chem
