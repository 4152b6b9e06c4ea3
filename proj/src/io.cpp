#include "bg/io.hpp"

#include <istream>
#include <sstream>

namespace bg {

namespace {

constexpr std::string_view kHeaderTag = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

int checked_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) throw std::invalid_argument("graph6 character outside 63..126");
  return u - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view s = trim(text);
  if (s.substr(0, kHeaderTag.size()) == kHeaderTag) s = s.substr(kHeaderTag.size());
  if (s.empty()) throw std::invalid_argument("empty graph6 record");

  size_t pos = 0;
  long n;
  if (s[0] != '~') {
    n = checked_char(s[0]);
    pos = 1;
  } else if (s.size() >= 2 && s[1] != '~') {
    if (s.size() < 4) throw std::invalid_argument("graph6 header truncated");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | checked_char(s[static_cast<size_t>(i)]);
    pos = 4;
  } else {
    // 8-byte header encodes n up to 2^36; anything that large is far past the cap.
    throw std::invalid_argument("graph6 order exceeds cap " + std::to_string(kMaxVertices));
  }
  if (n > kMaxVertices)
    throw std::invalid_argument("graph6 order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxVertices));

  long nbits = n * (n - 1) / 2;
  size_t nchars = static_cast<size_t>((nbits + 5) / 6);
  if (s.size() - pos != nchars) throw std::invalid_argument("graph6 record has wrong length");

  std::vector<VertexSet> adj(static_cast<size_t>(n));
  long bit = 0;
  int col = 1, row = 0;
  for (size_t i = pos; i < s.size(); ++i) {
    int group = checked_char(s[i]);
    for (int k = 5; k >= 0; --k, ++bit) {
      bool set = (group >> k) & 1;
      if (bit >= nbits) {
        if (set) throw std::invalid_argument("graph6 trailing padding bits must be zero");
        continue;
      }
      if (set) {
        adj[static_cast<size_t>(row)].add(col);
        adj[static_cast<size_t>(col)].add(row);
      }
      if (++row == col) {
        ++col;
        row = 0;
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string to_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n;
  if (!(in >> n)) throw std::invalid_argument("edge list must start with the vertex count");
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("edge list vertex count out of range");
  std::vector<std::pair<int, int>> edges;
  long u, v;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("edge list has a dangling endpoint");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view s = trim(line);
    if (!s.empty()) out.push_back(parse_graph6(s));
  }
  return out;
}

}  // namespace bg
