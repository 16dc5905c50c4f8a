#include "hue/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace hue {

int Hypergraph::min_edge_card() const {
  int m = n + 1;
  for (Mask e : edges) m = std::min(m, mask_card(e));
  return edges.empty() ? 0 : m;
}

int Hypergraph::max_edge_card() const {
  int m = 0;
  for (Mask e : edges) m = std::max(m, mask_card(e));
  return m;
}

bool Hypergraph::uniform() const {
  return edges.empty() || min_edge_card() == max_edge_card();
}

std::vector<int> Hypergraph::isolated_vertices() const {
  Mask covered = 0;
  for (Mask e : edges) covered |= e;
  return mask_vertices(full_mask(n) & ~covered);
}

bool Hypergraph::some_edge_inside(Mask m) const {
  for (Mask e : edges)
    if (mask_subset(e, m)) return true;
  return false;
}

std::vector<std::vector<int>> Hypergraph::edges_as_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(edges.size());
  for (Mask e : edges) out.push_back(mask_vertices(e));
  return out;
}

ParsedHypergraph make_hypergraph(int n, const std::vector<std::vector<int>>& edge_lists,
                                 bool reduce_to_minimal) {
  if (n < 1) throw ValidationError("vertex count must be at least 1");
  std::vector<Mask> edges;
  for (const auto& lst : edge_lists) {
    Mask e = mask_from_vertices(lst, n);
    if (mask_card(e) <= 1)
      throw ValidationError("loop edge {" + subset_to_string(e, n) + "} (fewer than 2 vertices)");
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end(), [](Mask a, Mask b) { return subset_lex_less(a, b); });
  if (reduce_to_minimal) {
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<Mask> minimal;
    for (Mask e : edges) {
      bool has_proper_subset = false;
      for (Mask f : edges)
        if (f != e && mask_subset(f, e)) {
          has_proper_subset = true;
          break;
        }
      if (!has_proper_subset) minimal.push_back(e);
    }
    edges = std::move(minimal);
  } else {
    for (size_t i = 0; i + 1 < edges.size(); ++i)
      if (edges[i] == edges[i + 1])
        throw ValidationError("duplicate edge {" + subset_to_string(edges[i], n) + "}");
    for (size_t i = 0; i < edges.size(); ++i)
      for (size_t j = 0; j < edges.size(); ++j)
        if (i != j && edges[i] != edges[j] && mask_subset(edges[i], edges[j]))
          throw ValidationError("nested edge pair {" + subset_to_string(edges[i], n) + "} inside {" +
                                subset_to_string(edges[j], n) + "}");
  }
  ParsedHypergraph out;
  out.H.n = n;
  out.H.edges = std::move(edges);
  std::vector<int> iso = out.H.isolated_vertices();
  if (!iso.empty()) {
    std::string msg = "isolated vertices:";
    for (int v : iso) msg += " " + std::to_string(v);
    out.warnings.push_back(msg);
  }
  return out;
}

namespace {

ParsedHypergraph parse_text_format(std::string_view text, bool reduce) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::vector<int>> edge_lists;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "n") {
      if (n != -1) throw ValidationError("line " + std::to_string(lineno) + ": repeated n");
      if (!(ls >> n)) throw ValidationError("line " + std::to_string(lineno) + ": malformed n");
      std::string rest;
      if (ls >> rest) throw ValidationError("line " + std::to_string(lineno) + ": trailing tokens after n");
    } else if (key == "edge") {
      if (n == -1) throw ValidationError("line " + std::to_string(lineno) + ": edge before n");
      std::vector<int> verts;
      int v;
      while (ls >> v) verts.push_back(v);
      if (!ls.eof()) throw ValidationError("line " + std::to_string(lineno) + ": malformed edge line");
      edge_lists.push_back(std::move(verts));
    } else {
      throw ValidationError("line " + std::to_string(lineno) + ": unknown directive '" + key + "'");
    }
  }
  if (n == -1) throw ValidationError("missing 'n <int>' line");
  return make_hypergraph(n, edge_lists, reduce);
}

ParsedHypergraph parse_json_format(std::string_view text, bool reduce) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ValidationError("JSON input must be an object with 'vertices' and 'edges'");
  if (!j["vertices"].is_number_integer())
    throw ValidationError("'vertices' must be an integer");
  int n = j["vertices"].get<int>();
  if (!j["edges"].is_array()) throw ValidationError("'edges' must be an array of arrays");
  std::vector<std::vector<int>> edge_lists;
  for (const auto& e : j["edges"]) {
    if (!e.is_array()) throw ValidationError("'edges' must be an array of arrays");
    std::vector<int> verts;
    for (const auto& v : e) {
      if (!v.is_number_integer()) throw ValidationError("edge entries must be integers");
      verts.push_back(v.get<int>());
    }
    edge_lists.push_back(std::move(verts));
  }
  return make_hypergraph(n, edge_lists, reduce);
}

}  // namespace

ParsedHypergraph parse_hypergraph(std::string_view text, bool reduce_to_minimal) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string_view::npos) throw ValidationError("empty input");
  if (text[i] == '{') return parse_json_format(text, reduce_to_minimal);
  return parse_text_format(text, reduce_to_minimal);
}

std::string to_text(const Hypergraph& H) {
  std::string out = "n " + std::to_string(H.n) + "\n";
  for (Mask e : H.edges) {
    out += "edge";
    for (int v : mask_vertices(e)) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ComponentPartition component_partition(const Hypergraph& H, EdgeSet S, ComponentMode mode) {
  if (S & ~H.all_edges())
    throw ValidationError("edge subset refers to edges outside the hypergraph");
  UnionFind uf(H.n);
  Mask covered = 0;
  for (int i = 0; i < H.edge_count(); ++i) {
    if (!((S >> i) & 1)) continue;
    std::vector<int> vs = mask_vertices(H.edges[i]);
    covered |= H.edges[i];
    for (size_t k = 1; k < vs.size(); ++k) uf.unite(vs[0] - 1, vs[k] - 1);
  }
  std::vector<Mask> blocks(H.n, 0);
  for (int v = 0; v < H.n; ++v) {
    bool in_scope = (mode == ComponentMode::ambient) || mask_test(covered, v + 1);
    if (in_scope) blocks[uf.find(v)] |= Mask(1) << v;
  }
  ComponentPartition out;
  out.ambient = (mode == ComponentMode::ambient);
  for (Mask b : blocks)
    if (b) out.blocks.push_back(b);
  std::sort(out.blocks.begin(), out.blocks.end(), SubsetOrder{});
  return out;
}

std::vector<Mask> ComponentPartition::merged_blocks() const {
  std::vector<Mask> out;
  for (Mask b : blocks)
    if (mask_card(b) >= 2) out.push_back(b);
  return out;
}

STable s_table(const Hypergraph& H) {
  int m = H.edge_count();
  if (m > kMaxEdgeEnumeration)
    throw BudgetExceeded("edge-subset enumeration over " + std::to_string(m) +
                         " edges exceeds the 2^" + std::to_string(kMaxEdgeEnumeration) + " budget");
  STable t;
  t.n = H.n;
  t.edge_count = m;
  t.s.assign(m + 1, std::vector<Int>(H.n + 1, 0));
  for (EdgeSet S = 0; S < (EdgeSet(1) << m); ++S) {
    int a = __builtin_popcountll(S);
    int b = component_partition(H, S, ComponentMode::ambient).count();
    t.s[a][b] += 1;
  }
  return t;
}

Int STable::row_sum(int a) const {
  Int acc = 0;
  for (const Int& x : s[a]) acc += x;
  return acc;
}

Hypergraph family_single_edge(int n, int s) {
  if (s < 2 || s > n) throw ValidationError("single_edge requires 2 <= s <= n");
  std::vector<int> edge(s);
  std::iota(edge.begin(), edge.end(), 1);
  return make_hypergraph(n, {edge}).H;
}

Hypergraph family_complete_graph(int n) {
  if (n < 2) throw ValidationError("complete_graph requires n >= 2");
  std::vector<std::vector<int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return make_hypergraph(n, edges).H;
}

Hypergraph family_multi_component(const std::vector<int>& a) {
  int m = static_cast<int>(a.size());
  if (m < 2) throw ValidationError("multi_component requires at least two block sizes");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) throw ValidationError("multi_component block sizes must be positive");
    if (i && a[i] > a[i - 1])
      throw ValidationError("multi_component block sizes must be non-increasing");
  }
  int band = std::max(3, a[0]);
  int n = m * band;
  if (n > kMaxGroundSize) throw ValidationError("multi_component ground set exceeds 62 vertices");
  std::vector<std::vector<int>> edges;
  for (int i = 1; i <= m; ++i) {
    // Every edge of the i-th group: all of [ (m-i)*band ], all of the bands
    // above the i-th, plus one choice vertex inside the i-th band.
    std::vector<int> base;
    for (int v = 1; v <= (m - i) * band; ++v) base.push_back(v);
    for (int v = (m - i + 1) * band + 1; v <= n; ++v) base.push_back(v);
    for (int j = (m - i) * band + 1; j <= (m - i) * band + a[i - 1]; ++j) {
      std::vector<int> e = base;
      e.push_back(j);
      edges.push_back(e);
    }
  }
  return make_hypergraph(n, edges).H;
}

Hypergraph family_torus9() {
  return make_hypergraph(9, {{1, 2, 3, 4, 7},
                             {1, 2, 3, 5, 8},
                             {1, 2, 3, 6, 9},
                             {1, 4, 5, 6, 7},
                             {2, 4, 5, 6, 8},
                             {3, 4, 5, 6, 9},
                             {1, 4, 7, 8, 9},
                             {2, 5, 7, 8, 9},
                             {3, 6, 7, 8, 9}})
      .H;
}

Hypergraph family_paper6_nonpartitionable() {
  return make_hypergraph(6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}}).H;
}

Hypergraph family_paper6_noncm() {
  return make_hypergraph(6, {{1, 2, 3}, {2, 3, 4}, {2, 4, 5}, {4, 5, 6}}).H;
}

Hypergraph generate_family(const std::string& name, const std::vector<int>& params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw ValidationError("family '" + name + "' expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "single_edge") {
    want(2);
    return family_single_edge(params[0], params[1]);
  }
  if (name == "complete_graph") {
    want(1);
    return family_complete_graph(params[0]);
  }
  if (name == "multi_component") {
    if (params.empty()) throw ValidationError("multi_component expects block sizes");
    return family_multi_component(params);
  }
  if (name == "torus9") {
    want(0);
    return family_torus9();
  }
  if (name == "paper_6_nonpart") {
    want(0);
    return family_paper6_nonpartitionable();
  }
  if (name == "paper_6_noncm") {
    want(0);
    return family_paper6_noncm();
  }
  throw ValidationError("unknown family '" + name + "'");
}

}  // namespace hue
