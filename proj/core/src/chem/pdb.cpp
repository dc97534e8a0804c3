// SPDX-License-Identifier: Apache-2.0

#include "fragx/chem/pdb.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "fragx/errors.hpp"

namespace fragx::chem {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string_view field(std::string_view line, std::size_t begin,
                       std::size_t end) {
  if (begin >= line.size()) return {};
  return line.substr(begin, std::min(end, line.size()) - begin);
}

double parse_coord(std::string_view raw, std::size_t line_no) {
  std::string_view text = trim(raw);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ParseError("malformed coordinate field '" + std::string(raw) + "'",
                     line_no);
  }
  return value;
}

bool is_water(std::string_view residue) {
  return residue == "HOH" || residue == "WAT" || residue == "DOD" ||
         residue == "H2O";
}

std::string canonical_element(std::string_view raw) {
  std::string out;
  for (char c : raw) {
    if (std::isalpha(static_cast<unsigned char>(c))) out += c;
  }
  if (out.empty()) return out;
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  for (std::size_t i = 1; i < out.size(); ++i)
    out[i] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[i])));
  return out;
}

// Fallback when columns 77-78 are blank: strip digits from the atom name;
// hydrogens (1HB2, HG11, ...) reduce to H, everything else in a standard
// residue is the leading letter.
std::string element_from_name(std::string_view name) {
  std::string letters;
  for (char c : name) {
    if (std::isalpha(static_cast<unsigned char>(c))) letters += c;
  }
  if (letters.empty()) return "";
  if (letters[0] == 'H' || letters[0] == 'h') return "H";
  std::string out(1, static_cast<char>(std::toupper(
                         static_cast<unsigned char>(letters[0]))));
  return out;
}

}  // namespace

ProteinStructure parse_pdb(std::string_view text, std::string source_id) {
  ProteinStructure protein;
  protein.source_id = std::move(source_id);

  std::size_t line_no = 0;
  std::size_t pos = 0;
  int model_count = 0;
  bool done = false;
  while (pos <= text.size() && !done) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view record = field(line, 0, 6);

    if (record.starts_with("MODEL")) {
      ++model_count;
      if (model_count > 1) break;
      continue;
    }
    if (record.starts_with("ENDMDL")) {
      if (model_count >= 1) done = true;
      continue;
    }
    if (!record.starts_with("ATOM")) continue;

    std::string_view residue{trim(field(line, 17, 20))};
    if (is_water(residue)) continue;
    if (line.size() < 54)
      throw ParseError("ATOM record too short for coordinates", line_no);

    PdbAtom atom;
    atom.atom_name = std::string(trim(field(line, 12, 16)));
    atom.residue_name = std::string(residue);
    atom.chain_id = line.size() > 21 ? line[21] : ' ';
    std::string_view seq = trim(field(line, 22, 26));
    if (!seq.empty()) {
      auto [ptr, ec] =
          std::from_chars(seq.data(), seq.data() + seq.size(), atom.residue_seq);
      if (ec != std::errc{} || ptr != seq.data() + seq.size())
        throw ParseError("malformed residue sequence number", line_no);
    }
    atom.coords[0] = parse_coord(field(line, 30, 38), line_no);
    atom.coords[1] = parse_coord(field(line, 38, 46), line_no);
    atom.coords[2] = parse_coord(field(line, 46, 54), line_no);

    std::string element = canonical_element(field(line, 76, 78));
    if (element.empty()) element = element_from_name(atom.atom_name);
    if (element.empty())
      throw ParseError("cannot determine element for ATOM record", line_no);
    atom.element = element;
    protein.atoms.push_back(std::move(atom));
  }

  if (protein.atoms.empty())
    throw DataError("PDB text contains no usable ATOM records");
  return protein;
}

}  // namespace fragx::chem
