#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "closcount/poset.hpp"

namespace closcount {

/// Edge text: first data line "n", then one "u v" pair per line; '#' starts a
/// comment. Pairs may be covers or any order relations.
Poset parse_edge_text(std::istream& in);

/// {"n": 3, "edges": [[0,1],[1,2]], "labels": ["a","b","c"]}; labels optional.
Poset parse_structured(std::string_view text);

/// Structured when the first non-blank character is '{', edge text otherwise.
Poset parse_poset(std::string_view text);

/// Throws ParseError when the file cannot be read.
Poset load_poset_file(const std::filesystem::path& path);

/// Cover edges only, ascending.
std::string write_edge_text(const Poset& p);
std::string write_structured(const Poset& p);

}  // namespace closcount
