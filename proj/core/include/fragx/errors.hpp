// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fragx {

/// Lexical or structural failure while reading an input format. Carries the
/// byte offset (SMILES) or the 1-based line number (PDB, CSV) of the record
/// that could not be read.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Invalid configuration value or unknown configuration key.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dataset-level failure: missing records, single-class splits, schema or
/// version mismatches.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Non-finite loss or other numerical breakdown during training.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace fragx
