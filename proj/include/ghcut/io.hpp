#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ghcut/graph.hpp"
#include "ghcut/steiner_tree.hpp"

namespace ghcut {

enum class Format { Dimacs, Json };

Format parse_format(std::string_view name);

/// Malformed input. line() is 1-based, or 0 when no single line is at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format:
//   p <n> <m>
//   e <u> <v> <w>      (m lines, 0-based ids, integer w >= 1)
// Blank lines and lines starting with 'c' are ignored.
// JSON format: {"n": <n>, "m": <m>, "edges": [[u, v, w], ...]}.
Graph read_graph(std::istream& in, Format format);
void write_graph(std::ostream& out, const Graph& g, Format format);
Graph load_graph(const std::filesystem::path& path, Format format);
void save_graph(const std::filesystem::path& path, const Graph& g, Format format);

// Tree format:
//   t <k>              (vertex count)
//   e <u> <v>          (k - 1 lines)
//   s <source>
SteinerTree read_tree(std::istream& in);
void write_tree(std::ostream& out, const SteinerTree& t);
SteinerTree load_tree(const std::filesystem::path& path);

}  // namespace ghcut
