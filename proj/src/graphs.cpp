#include "fascount/graphs.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

namespace fascount {

namespace {

constexpr int kWordBits = 64;

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

BitSet::BitSet(int universe) : universe_(universe) {
  if (universe < 0) throw std::invalid_argument("BitSet universe must be >= 0");
  words_.assign((universe + kWordBits - 1) / kWordBits, 0);
}

BitSet BitSet::of(int universe, std::span<const int> indices) {
  BitSet s(universe);
  for (int i : indices) s.set(i);
  return s;
}

void BitSet::check_index(int i) const {
  if (i < 0 || i >= universe_)
    throw std::invalid_argument("BitSet index " + std::to_string(i) + " outside universe of size " +
                                std::to_string(universe_));
}

int BitSet::count() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool BitSet::contains(int i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitSet::set(int i) {
  check_index(i);
  words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

void BitSet::reset(int i) {
  check_index(i);
  words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

bool BitSet::subset_of(const BitSet& other) const {
  if (universe_ != other.universe_) throw std::invalid_argument("BitSet universes differ");
  for (size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

std::vector<int> BitSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < universe_; ++i)
    if ((words_[i / kWordBits] >> (i % kWordBits)) & 1u) out.push_back(i);
  return out;
}

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs) : n_(vertex_count), arcs_(std::move(arcs)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be >= 0");
  std::sort(arcs_.begin(), arcs_.end());
  for (size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
      throw std::invalid_argument("arc endpoint out of range: " + pair_text(a.from, a.to));
    if (a.from == a.to) throw std::invalid_argument("loop arc not allowed: " + pair_text(a.from, a.to));
    if (i > 0 && arcs_[i - 1] == a)
      throw std::invalid_argument("duplicate arc: " + pair_text(a.from, a.to));
  }
}

std::optional<int> Digraph::arc_index(Arc a) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || *it != a) return std::nullopt;
  return static_cast<int>(it - arcs_.begin());
}

UGraph::UGraph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be >= 0");
  for (Edge& e : edges_)
    if (e.a > e.b) std::swap(e.a, e.b);
  std::sort(edges_.begin(), edges_.end());
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.a < 0 || e.a >= n_ || e.b < 0 || e.b >= n_)
      throw std::invalid_argument("edge endpoint out of range: " + pair_text(e.a, e.b));
    if (e.a == e.b) throw std::invalid_argument("loop edge not allowed: " + pair_text(e.a, e.b));
    if (i > 0 && edges_[i - 1] == e)
      throw std::invalid_argument("duplicate edge: " + pair_text(e.a, e.b));
  }
}

namespace {

// Kahn peeling over the kept arcs (all arcs when kept == nullptr).
bool acyclic_arcs(int n, const std::vector<Arc>& arcs, const ArcSet* kept) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    if (kept && !kept->contains(i)) continue;
    out[arcs[i].from].push_back(arcs[i].to);
    ++indeg[arcs[i].to];
  }
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int peeled = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++peeled;
    for (int w : out[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return peeled == n;
}

}  // namespace

bool is_acyclic(const Digraph& d) { return acyclic_arcs(d.vertex_count(), d.arcs(), nullptr); }

bool is_fas(const Digraph& d, const ArcSet& deleted) {
  if (deleted.universe() != d.arc_count())
    throw std::invalid_argument("ArcSet universe does not match digraph arc count");
  ArcSet kept(d.arc_count());
  for (int i = 0; i < d.arc_count(); ++i)
    if (!deleted.contains(i)) kept.set(i);
  return acyclic_arcs(d.vertex_count(), d.arcs(), &kept);
}

bool is_vc(const UGraph& g, const VertexSet& cover) {
  if (cover.universe() != g.vertex_count())
    throw std::invalid_argument("VertexSet universe does not match graph vertex count");
  for (const Edge& e : g.edges())
    if (!cover.contains(e.a) && !cover.contains(e.b)) return false;
  return true;
}

bool is_fvs(const Digraph& d, const VertexSet& deleted) {
  if (deleted.universe() != d.vertex_count())
    throw std::invalid_argument("VertexSet universe does not match digraph vertex count");
  // Arcs incident to a deleted vertex vanish; surviving isolated vertices
  // cannot lie on a cycle, so acyclicity of the kept arcs decides.
  ArcSet kept(d.arc_count());
  for (int i = 0; i < d.arc_count(); ++i) {
    const Arc& a = d.arc(i);
    if (!deleted.contains(a.from) && !deleted.contains(a.to)) kept.set(i);
  }
  return acyclic_arcs(d.vertex_count(), d.arcs(), &kept);
}

ArcSet arc_set(const Digraph& d, std::span<const Arc> arcs) {
  ArcSet s(d.arc_count());
  for (const Arc& a : arcs) {
    auto idx = d.arc_index(a);
    if (!idx) throw std::invalid_argument("not an arc of the digraph: " + pair_text(a.from, a.to));
    s.set(*idx);
  }
  return s;
}

std::string serialize(const Digraph& d) {
  std::string out = "digraph " + std::to_string(d.vertex_count()) + " " + std::to_string(d.arc_count()) + "\n";
  for (const Arc& a : d.arcs()) out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
  return out;
}

std::string serialize(const UGraph& g) {
  std::string out = "graph " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

namespace {

struct Token {
  std::string_view text;
  int line;  // 1-based, for diagnostics
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    size_t i = line.find_first_not_of(" \t");
    if (i != std::string_view::npos && line[i] != '#') {
      while (i != std::string_view::npos) {
        size_t j = line.find_first_of(" \t", i);
        tokens.push_back({line.substr(i, j == std::string_view::npos ? line.size() - i : j - i), line_no});
        i = (j == std::string_view::npos) ? j : line.find_first_not_of(" \t", j);
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return tokens;
}

int parse_int(const Token& tok, ParseError::Code code, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
    throw ParseError(code, "line " + std::to_string(tok.line) + ": expected " + what + ", got '" +
                               std::string(tok.text) + "'");
  return value;
}

struct Header {
  bool directed;
  int n;
  int m;
};

Header parse_header(const std::vector<Token>& tokens) {
  if (tokens.size() < 3)
    throw ParseError(ParseError::Code::malformed_header, "header requires '<kind> <n> <m>'");
  if (tokens[0].text != "digraph" && tokens[0].text != "graph")
    throw ParseError(ParseError::Code::malformed_header, "unknown graph kind '" + std::string(tokens[0].text) +
                                                             "' (expected 'digraph' or 'graph')");
  Header h;
  h.directed = tokens[0].text == "digraph";
  h.n = parse_int(tokens[1], ParseError::Code::malformed_header, "vertex count");
  h.m = parse_int(tokens[2], ParseError::Code::malformed_header, "arc count");
  if (h.n < 0 || h.m < 0) throw ParseError(ParseError::Code::malformed_header, "negative count in header");
  return h;
}

std::pair<int, int> parse_endpoints(const std::vector<Token>& tokens, size_t at, int n, int arc_no) {
  if (at + 1 >= tokens.size())
    throw ParseError(ParseError::Code::malformed_line, "truncated input: arc " + std::to_string(arc_no) + " missing");
  int u = parse_int(tokens[at], ParseError::Code::malformed_line, "endpoint");
  int v = parse_int(tokens[at + 1], ParseError::Code::malformed_line, "endpoint");
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw ParseError(ParseError::Code::endpoint_out_of_range,
                     "line " + std::to_string(tokens[at].line) + ": endpoint out of range in " + pair_text(u, v));
  if (u == v)
    throw ParseError(ParseError::Code::loop, "line " + std::to_string(tokens[at].line) + ": loop " + pair_text(u, v));
  return {u, v};
}

void expect_consumed(const std::vector<Token>& tokens, size_t at) {
  if (at < tokens.size())
    throw ParseError(ParseError::Code::malformed_line, "line " + std::to_string(tokens[at].line) +
                                                           ": trailing content '" + std::string(tokens[at].text) + "'");
}

Digraph parse_digraph_tokens(const std::vector<Token>& tokens, const Header& h) {
  std::vector<Arc> arcs;
  arcs.reserve(h.m);
  std::set<Arc> seen;
  for (int i = 0; i < h.m; ++i) {
    auto [u, v] = parse_endpoints(tokens, 3 + 2 * static_cast<size_t>(i), h.n, i);
    if (!seen.insert(Arc{u, v}).second)
      throw ParseError(ParseError::Code::duplicate, "line " + std::to_string(tokens[3 + 2 * i].line) +
                                                        ": duplicate arc " + pair_text(u, v));
    arcs.push_back(Arc{u, v});
  }
  expect_consumed(tokens, 3 + 2 * static_cast<size_t>(h.m));
  return Digraph(h.n, std::move(arcs));
}

UGraph parse_ugraph_tokens(const std::vector<Token>& tokens, const Header& h) {
  std::vector<Edge> edges;
  edges.reserve(h.m);
  std::set<Edge> seen;
  for (int i = 0; i < h.m; ++i) {
    auto [u, v] = parse_endpoints(tokens, 3 + 2 * static_cast<size_t>(i), h.n, i);
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second)
      throw ParseError(ParseError::Code::duplicate, "line " + std::to_string(tokens[3 + 2 * i].line) +
                                                        ": duplicate edge " + pair_text(u, v));
    edges.push_back(e);
  }
  expect_consumed(tokens, 3 + 2 * static_cast<size_t>(h.m));
  return UGraph(h.n, std::move(edges));
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  auto tokens = tokenize(text);
  Header h = parse_header(tokens);
  if (!h.directed) throw ParseError(ParseError::Code::wrong_kind, "expected 'digraph', input is 'graph'");
  return parse_digraph_tokens(tokens, h);
}

UGraph parse_ugraph(std::string_view text) {
  auto tokens = tokenize(text);
  Header h = parse_header(tokens);
  if (h.directed) throw ParseError(ParseError::Code::wrong_kind, "expected 'graph', input is 'digraph'");
  return parse_ugraph_tokens(tokens, h);
}

std::variant<Digraph, UGraph> parse_graph(std::string_view text) {
  auto tokens = tokenize(text);
  Header h = parse_header(tokens);
  if (h.directed) return parse_digraph_tokens(tokens, h);
  return parse_ugraph_tokens(tokens, h);
}

std::uint64_t SplitMix64::next() {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t probability_threshold(double p) {
  if (!(p >= 0.0) || p >= 1.0) throw std::invalid_argument("probability_threshold requires 0 <= p < 1");
  if (p == 0.0) return 0;
  // p = f * 2^e with f in [0.5, 1); f * 2^53 is an exact 53-bit integer, so
  // floor(p * 2^64) is that integer shifted by e + 11.
  int e = 0;
  double f = std::frexp(p, &e);
  auto sig = static_cast<std::uint64_t>(std::ldexp(f, 53));
  int shift = e + 11;
  if (shift >= 0) return sig << shift;
  if (shift <= -64) return 0;
  return sig >> (-shift);
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("inclusion probability must be in [0, 1]");
}

}  // namespace

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  check_probability(p);
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  const bool all = p >= 1.0;
  const std::uint64_t threshold = all ? 0 : probability_threshold(p);
  SplitMix64 rng{seed};
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      std::uint64_t draw = rng.next();
      if (all || draw < threshold) arcs.push_back(Arc{u, v});
    }
  return Digraph(n, std::move(arcs));
}

UGraph random_ugraph(int n, double p, std::uint64_t seed) {
  check_probability(p);
  if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
  const bool all = p >= 1.0;
  const std::uint64_t threshold = all ? 0 : probability_threshold(p);
  SplitMix64 rng{seed};
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t draw = rng.next();
      if (all || draw < threshold) edges.push_back(Edge{u, v});
    }
  return UGraph(n, std::move(edges));
}

}  // namespace fascount
