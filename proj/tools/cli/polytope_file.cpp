#include "cli/polytope_file.hpp"

#include <fstream>
#include <sstream>

namespace ehrhart::cli {

PolytopeFile read_polytope_text(std::string_view text, std::string path) {
  PolytopeFile file;
  file.path = std::move(path);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      file.comments.push_back(line.substr(first + 1));
      continue;
    }
    std::istringstream tokens(line);
    std::vector<Integer> coords;
    std::string tok;
    while (tokens >> tok) {
      try {
        coords.push_back(parse_integer(tok));
      } catch (const std::invalid_argument&) {
        throw ParseError(file.path + ":" + std::to_string(line_no) + ": '" + tok +
                         "' is not an integer");
      }
    }
    if (!file.rows.empty() && coords.size() != file.rows.front().dim()) {
      throw ParseError(file.path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(file.rows.front().dim()) + " coordinates, got " +
                       std::to_string(coords.size()));
    }
    file.rows.emplace_back(std::move(coords));
  }
  if (file.rows.empty()) throw ParseError(file.path + ": no vertices");
  return file;
}

PolytopeFile load_polytope_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_polytope_text(buffer.str(), path.string());
}

Polytope parse_polytope_file(std::string_view text) {
  return build_polytope(read_polytope_text(text).rows);
}

std::vector<Rational> parse_coefficient_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad coefficient: ") + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace ehrhart::cli
