#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "epsmult/monomial_ideal.hpp"

namespace epsmult {

struct ParseOptions {
  /// Ambient dimension to use when the text names fewer variables.
  std::size_t min_dim = 0;
  /// Largest dimension accepted.
  std::size_t max_dim = 16;
};

/// Parses either the JSON ideal schema ({"dim": d, "generators": [...]}) or
/// the human syntax "x^2*y, y^3" over the variables x, y, z, w or x1..xd.
/// The dimension of human input is the highest variable index mentioned,
/// raised to options.min_dim. "0" or an empty list is the zero ideal and "1"
/// the unit monomial. Throws ParseError with line and column.
MonomialIdeal parse_ideal(std::string_view text, const ParseOptions& options = {});

/// parse_ideal on the contents of `path` if it names a readable file, and on
/// the argument itself otherwise.
MonomialIdeal load_ideal(const std::string& path_or_text,
                         const ParseOptions& options = {});

/// Contents of a file; throws ParseError if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace epsmult
