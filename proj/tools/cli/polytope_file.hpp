#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ehrhart/geometry.hpp"

namespace ehrhart::cli {

/// Plain-text vertex list: one vertex per line as whitespace-separated
/// integers; lines starting with '#' are comments, blank lines ignored.
struct PolytopeFile {
  std::string path;
  std::vector<std::string> comments;
  std::vector<LatticeVector> rows;
};

// Throws ParseError on non-integer tokens or ragged rows.
PolytopeFile read_polytope_text(std::string_view text, std::string path = "<memory>");

// Reads and parses `path`; std::runtime_error when it cannot be opened.
PolytopeFile load_polytope_file(const std::filesystem::path& path);

// read_polytope_text + build_polytope. Throws ParseError, NotFullDimensional.
Polytope parse_polytope_file(std::string_view text);

// "c0,c1,...,cn" with entries "p/q" or integers. Throws ParseError.
std::vector<Rational> parse_coefficient_list(std::string_view text);

}  // namespace ehrhart::cli
