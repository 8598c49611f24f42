#include "ghcut/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ghcut {

namespace {

using nlohmann::json;

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == 'c' || line[first] == '#';
}

template <typename T>
T read_field(std::istringstream& fields, std::size_t line_no, const char* what) {
  T value{};
  if (!(fields >> value)) throw ParseError(line_no, std::string("expected ") + what);
  return value;
}

void expect_end(std::istringstream& fields, std::size_t line_no) {
  std::string rest;
  if (fields >> rest) throw ParseError(line_no, "unexpected trailing token '" + rest + "'");
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      n = read_field<long long>(fields, line_no, "vertex count");
      m = read_field<long long>(fields, line_no, "edge count");
      expect_end(fields, line_no);
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      have_header = true;
      header_line = line_no;
    } else if (tag == "e") {
      if (!have_header) throw ParseError(line_no, "edge before 'p' header");
      const auto u = read_field<long long>(fields, line_no, "endpoint u");
      const auto v = read_field<long long>(fields, line_no, "endpoint v");
      const auto w = read_field<long long>(fields, line_no, "weight");
      expect_end(fields, line_no);
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "endpoint out of range [0, n)");
      if (w < 1) throw ParseError(line_no, "weight must be a positive integer, got " + std::to_string(w));
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    } else {
      throw ParseError(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'p <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(header_line, "header declares m = " + std::to_string(m) + " but the file has " +
                                      std::to_string(edges.size()) + " edge lines");
  }
  try {
    return Graph(static_cast<Vertex>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

Graph read_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  try {
    const auto n = doc.at("n").get<long long>();
    const auto& list = doc.at("edges");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& item = list[i];
      if (!item.is_array() || item.size() != 3) {
        throw ParseError(0, "edge " + std::to_string(i) + " is not a [u, v, w] triple");
      }
      const auto w = item[2].get<long long>();
      if (w < 1) throw ParseError(0, "edge " + std::to_string(i) + ": weight must be a positive integer");
      edges.push_back({item[0].get<Vertex>(), item[1].get<Vertex>(), w});
    }
    if (doc.contains("m") && doc["m"].get<std::size_t>() != edges.size()) {
      throw ParseError(0, "declared m = " + std::to_string(doc["m"].get<std::size_t>()) + " but the file has " +
                              std::to_string(edges.size()) + " edges");
    }
    return Graph(static_cast<Vertex>(n), edges);
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

Format parse_format(std::string_view name) {
  if (name == "dimacs") return Format::Dimacs;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

Graph read_graph(std::istream& in, Format format) {
  return format == Format::Dimacs ? read_dimacs(in) : read_json(in);
}

void write_graph(std::ostream& out, const Graph& g, Format format) {
  if (format == Format::Dimacs) {
    out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
    return;
  }
  json doc;
  doc["n"] = g.num_vertices();
  doc["m"] = g.num_edges();
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v, e.w});
  out << doc.dump() << '\n';
}

Graph load_graph(const std::filesystem::path& path, Format format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_graph(in, format);
}

void save_graph(const std::filesystem::path& path, const Graph& g, Format format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_graph(out, g, format);
}

SteinerTree read_tree(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long k = -1;
  std::size_t header_line = 0;
  std::optional<Vertex> source;
  std::vector<TreeEdge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "t") {
      if (k >= 0) throw ParseError(line_no, "duplicate 't' header");
      k = read_field<long long>(fields, line_no, "vertex count");
      if (k < 1) throw ParseError(line_no, "tree needs at least one vertex");
      header_line = line_no;
    } else if (tag == "e") {
      const auto u = read_field<Vertex>(fields, line_no, "endpoint u");
      const auto v = read_field<Vertex>(fields, line_no, "endpoint v");
      edges.emplace_back(u, v);
    } else if (tag == "s") {
      source = read_field<Vertex>(fields, line_no, "source");
    } else if (tag == "w") {
      // Gomory-Hu output carries edge weights; a plain tree reader ignores them.
      continue;
    } else {
      throw ParseError(line_no, "unknown line tag '" + tag + "'");
    }
    expect_end(fields, line_no);
  }
  if (k < 0) throw ParseError(0, "missing 't <k>' header");
  if (!source) throw ParseError(0, "missing 's <source>' line");
  if (static_cast<long long>(edges.size()) != k - 1) {
    throw ParseError(header_line, "tree on " + std::to_string(k) + " vertices needs " + std::to_string(k - 1) +
                                      " edges, found " + std::to_string(edges.size()));
  }
  VertexSet vertices{*source};
  for (const auto& [u, v] : edges) {
    vertices.push_back(u);
    vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (static_cast<long long>(vertices.size()) != k) {
    throw ParseError(header_line, "header declares " + std::to_string(k) + " tree vertices, edges mention " +
                                      std::to_string(vertices.size()));
  }
  try {
    return SteinerTree(std::move(vertices), std::move(edges), *source);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

void write_tree(std::ostream& out, const SteinerTree& t) {
  out << "t " << t.size() << '\n';
  for (const auto& [u, v] : t.edges()) out << "e " << u << ' ' << v << '\n';
  out << "s " << t.source() << '\n';
}

SteinerTree load_tree(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_tree(in);
}

}  // namespace ghcut
