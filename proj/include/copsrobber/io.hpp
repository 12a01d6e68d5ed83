#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "copsrobber/decomposition.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/graph.hpp"
#include "copsrobber/interval.hpp"

namespace copsrobber {

namespace detail {

// Non-empty lines with '#' comments stripped, paired with their 1-based line numbers.
inline std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(number, line);
  }
  return out;
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline long long to_integer(const std::string& token, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw InputError("line " + std::to_string(line) + ": expected an integer, got '" + token + "'");
  }
  return value;
}

inline std::vector<long long> integers(const std::pair<int, std::string>& line, std::size_t expected) {
  const auto t = tokens(line.second);
  if (t.size() != expected) {
    throw InputError("line " + std::to_string(line.first) + ": expected " + std::to_string(expected) + " fields, got " +
                     std::to_string(t.size()));
  }
  std::vector<long long> out;
  for (const auto& s : t) out.push_back(to_integer(s, line.first));
  return out;
}

}  // namespace detail

/// "n m" followed by m lines "u v"; '#' starts a comment.
inline Graph read_graph(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw InputError("graph file: missing header 'n m'");
  const auto header = detail::integers(lines[0], 2);
  if (header[0] < 0 || header[1] < 0) throw InputError("graph file: negative counts");
  if (header[0] > 100000) throw CapabilityError("graph file: too many vertices");
  if (lines.size() - 1 != static_cast<std::size_t>(header[1])) {
    throw InputError("graph file: header announces " + std::to_string(header[1]) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto e = detail::integers(lines[i], 2);
    edges.emplace_back(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
  }
  return Graph(static_cast<int>(header[0]), std::move(edges));
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline std::string graph_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

/// "n" followed by n lines "l r" (decimal or p/q rationals), one per vertex in id order.
inline IntervalRepresentation read_intervals(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw InputError("interval file: missing header 'n'");
  const auto header = detail::integers(lines[0], 1);
  if (header[0] < 0 || lines.size() - 1 != static_cast<std::size_t>(header[0])) {
    throw InputError("interval file: header announces " + std::to_string(header[0]) + " intervals, found " +
                     std::to_string(lines.size() - 1));
  }
  IntervalRepresentation rep;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = detail::tokens(lines[i].second);
    if (t.size() != 2) throw InputError("line " + std::to_string(lines[i].first) + ": expected 'l r'");
    rep.intervals.push_back({Rational::parse(t[0]), Rational::parse(t[1])});
  }
  rep.check_endpoints();
  return rep;
}

inline void write_intervals(std::ostream& out, const IntervalRepresentation& rep) {
  out << rep.size() << "\n";
  for (const auto& iv : rep.intervals) out << iv.left.to_string() << " " << iv.right.to_string() << "\n";
}

/// "t b", then t lines "id k v_1 … v_k", then b lines "s u" of tree edges.
inline TreeDecomposition read_tree_decomposition(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw InputError("decomposition file: missing header 't b'");
  const auto header = detail::integers(lines[0], 2);
  const auto t = header[0], b = header[1];
  if (t < 0 || b < 0 || lines.size() != static_cast<std::size_t>(1 + t + b)) {
    throw InputError("decomposition file: header does not match the number of lines");
  }
  std::vector<VertexSet> bags(t);
  std::vector<char> seen(t, 0);
  for (long long i = 0; i < t; ++i) {
    const auto& line = lines[1 + i];
    const auto tok = detail::tokens(line.second);
    if (tok.size() < 2) throw InputError("line " + std::to_string(line.first) + ": expected 'id k v_1 ... v_k'");
    const auto id = detail::to_integer(tok[0], line.first);
    const auto k = detail::to_integer(tok[1], line.first);
    if (id < 0 || id >= t || seen[id]) throw InputError("line " + std::to_string(line.first) + ": bad or repeated node id");
    if (k < 0 || tok.size() != static_cast<std::size_t>(2 + k)) {
      throw InputError("line " + std::to_string(line.first) + ": bag size does not match");
    }
    std::vector<Vertex> members;
    for (long long j = 0; j < k; ++j) members.push_back(static_cast<Vertex>(detail::to_integer(tok[2 + j], line.first)));
    seen[id] = 1;
    bags[id] = VertexSet(std::move(members));
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < b; ++i) {
    const auto e = detail::integers(lines[1 + t + i], 2);
    edges.emplace_back(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
  }
  TreeDecomposition td;
  td.tree = Graph(static_cast<int>(t), std::move(edges));
  td.bags = std::move(bags);
  return td;
}

inline void write_tree_decomposition(std::ostream& out, const TreeDecomposition& td) {
  out << td.node_count() << " " << td.tree.edge_count() << "\n";
  for (int i = 0; i < td.node_count(); ++i) {
    out << i << " " << td.bags[i].size();
    for (Vertex v : td.bags[i]) out << " " << v;
    out << "\n";
  }
  for (auto [a, b] : td.tree.edges()) out << a << " " << b << "\n";
}

inline std::string accessible_annotation(const VertexSet& x, Vertex v) {
  std::string out = "X=";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out + "; v=" + std::to_string(v) + "\n";
}

template <typename T, typename Reader>
T read_file(const std::filesystem::path& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return reader(in);
}

/// Writes through a sibling temporary file and renames, so readers never see partial output.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw InputError("write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

/// Flat "key=value" document; the first line is the schema version.
class KeyValueDocument {
 public:
  static constexpr int kSchemaVersion = 1;

  KeyValueDocument() { add("schema_version", kSchemaVersion); }

  KeyValueDocument& add(const std::string& key, const std::string& value) {
    entries_.emplace_back(key, value);
    return *this;
  }
  KeyValueDocument& add(const std::string& key, const char* value) { return add(key, std::string(value)); }
  KeyValueDocument& add(const std::string& key, long long value) { return add(key, std::to_string(value)); }
  KeyValueDocument& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
  KeyValueDocument& add(const std::string& key, bool value) { return add(key, std::string(value ? "true" : "false")); }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : entries_) out += k + "=" + v + "\n";
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace copsrobber
