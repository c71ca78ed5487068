#include "strucgraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "strucgraph/errors.hpp"

namespace strucgraph {

namespace {

std::size_t words_for(int n) { return n <= 0 ? 1 : (static_cast<std::size_t>(n) + 63) / 64; }

}  // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > kMaxVertices) throw InputError("vertex count " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  adj_.resize(n);
  rows_.assign(static_cast<std::size_t>(std::max(n, 1)) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    const std::string where = "edge #" + std::to_string(k) + " (" + std::to_string(u) + "," +
                              std::to_string(v) + ")";
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError(where + ": vertex out of range");
    if (u == v) throw InputError(where + ": loop");
    if (adjacent(u, v)) throw InputError(where + ": repeated edge");
    add_edge_unchecked(u, v);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void Graph::add_edge_unchecked(Vertex u, Vertex v) {
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_) throw InputError("label count does not match vertex count");
  Graph copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

Graph Graph::complement() const {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) es.emplace_back(u, v);
  return Graph(n_, es);
}

// ---- graph6 ---------------------------------------------------------------

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t offset = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    offset = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw InputError("graph6: empty input");

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw InputError("graph6: truncated at byte " + std::to_string(offset + i));
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw InputError("graph6: invalid byte " + std::to_string(c) + " at position " +
                       std::to_string(offset + i));
    return c - 63;
  };

  std::size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = byte_at(0);
    pos = 1;
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) != 126) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
    pos = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte_at(i);
    pos = 8;
  }
  if (n > kMaxVertices) throw InputError("graph6: vertex count " + std::to_string(n) + " too large");

  const long long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected)
    throw InputError("graph6: expected " + std::to_string(expected) + " bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size()));

  std::vector<Edge> es;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = byte_at(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) es.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int last = byte_at(expected - 1);
    const int pad_mask = (1 << (6 - k % 6)) - 1;
    if (last & pad_mask)
      throw InputError("graph6: nonzero padding bits at position " + std::to_string(offset + expected - 1));
  }
  return Graph(static_cast<int>(n), es);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

// ---- edge lists -----------------------------------------------------------

namespace {

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  // Returns the next integer token; line numbers are 1-based.
  long long next_int(const char* what) {
    skip_space();
    if (pos_ >= text_.size())
      throw InputError(std::string("edge list: missing ") + what + " at line " + std::to_string(line_));
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || (ptr != last && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw InputError(std::string("edge list: malformed ") + what + " at line " + std::to_string(line_));
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  int line() const { return line_; }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

Graph from_edge_list(std::string_view text) {
  TokenReader in(text);
  const long long n = in.next_int("vertex count");
  const long long m = in.next_int("edge count");
  if (n < 0 || n > kMaxVertices) throw InputError("edge list: bad vertex count " + std::to_string(n));
  if (m < 0) throw InputError("edge list: bad edge count " + std::to_string(m));
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    const long long u = in.next_int("edge endpoint");
    const int line = in.line();
    const long long v = in.next_int("edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge list: vertex out of range at line " + std::to_string(line));
    if (u == v) throw InputError("edge list: loop at line " + std::to_string(line));
    es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!in.at_end()) throw InputError("edge list: trailing data at line " + std::to_string(in.line()));
  return Graph(static_cast<int>(n), es);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_graph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) return from_edge_list(text);
  text.remove_prefix(i);
  const auto eol = text.find('\n');
  if (eol != std::string_view::npos) {
    auto rest = text.substr(eol);
    if (rest.find_first_not_of(" \r\n\t") != std::string_view::npos)
      throw InputError("graph6: expected a single graph per input");
    text = text.substr(0, eol);
  }
  return from_graph6(text);
}

Graph read_graph_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  return parse_graph(buf.str());
}

// ---- queries --------------------------------------------------------------

void validate_vertex_set(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw InputError("vertex " + std::to_string(v) + " repeated in vertex set");
    seen[v] = 1;
  }
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  validate_vertex_set(g, s);
  std::vector<Edge> es;
  const int k = static_cast<int>(s.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(s[i], s[j])) es.emplace_back(i, j);
  return {Graph(k, es), VertexSet(s.begin(), s.end())};
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) gone.at(v) = 1;
  VertexSet keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : removed) comp.at(v) = -2;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (Vertex w : g.neighbors(u))
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Components connectivity(const Graph& g) {
  Components c;
  c.components = components_without(g, {});
  c.is_connected = c.components.size() == 1;
  return c;
}

bool is_connected(const Graph& g) { return connectivity(g).is_connected; }

bool is_clique(const Graph& g, std::span<const Vertex> x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!g.adjacent(x[i], x[j])) return false;
  return true;
}

bool is_stable(const Graph& g, std::span<const Vertex> x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (g.adjacent(x[i], x[j])) return false;
  return true;
}

bool is_complete_between(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  for (Vertex a : x)
    for (Vertex b : y)
      if (!g.adjacent(a, b)) return false;
  return true;
}

bool is_anticomplete_between(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  for (Vertex a : x)
    for (Vertex b : y)
      if (g.adjacent(a, b)) return false;
  return true;
}

VertexSet neighborhood_of_set(const Graph& g, std::span<const Vertex> x) {
  std::vector<char> in_x(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : x) in_x.at(v) = 1;
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v))
      if (!in_x[w]) hit[w] = 1;
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

SetQueries set_queries(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  validate_vertex_set(g, x);
  validate_vertex_set(g, y);
  for (Vertex a : x)
    if (std::find(y.begin(), y.end(), a) != y.end())
      throw InputError("set_queries: vertex " + std::to_string(a) + " lies in both sets");
  return {is_clique(g, x), is_stable(g, x), is_complete_between(g, x, y),
          is_anticomplete_between(g, x, y), neighborhood_of_set(g, x)};
}

std::ostream& operator<<(std::ostream& os, const Graph& g) { return os << to_graph6(g); }

}  // namespace strucgraph
