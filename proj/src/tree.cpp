#include "maxdla/tree.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>

#include "maxdla/errors.hpp"

namespace maxdla {

namespace {

struct Precedence {
  Vertex first = 0;
  Vertex second = 0;
  bool first_in_left = true;
};

Value level_of(const LevelEntry& e, Vertex v) {
  for (const PlacedVertex& p : e.witness) {
    if (p.vertex == v) return p.level;
  }
  throw InputError("vertex " + std::to_string(v) + " is not in the witness");
}

std::optional<LevelEntry> merge_pair(const LevelEntry& left, const LevelEntry& right, const Precedence* prec) {
  if (prec != nullptr) {
    const LevelEntry& holds_first = prec->first_in_left ? left : right;
    const LevelEntry& holds_second = prec->first_in_left ? right : left;
    if (level_of(holds_first, prec->first) < level_of(holds_second, prec->second)) return std::nullopt;
  }
  LevelEntry out;
  out.witness.reserve(left.witness.size() + right.witness.size());
  std::size_t i = 0;
  std::size_t j = 0;
  bool first_placed = prec == nullptr;
  while (i < left.witness.size() && j < right.witness.size()) {
    const PlacedVertex& a = left.witness[i];
    const PlacedVertex& b = right.witness[j];
    bool take_left;
    if (a.level != b.level) {
      take_left = a.level > b.level;
    } else if (!first_placed && (prec->first_in_left ? b.vertex : a.vertex) == prec->second) {
      // Equal levels: `second` waits until `first` is out.
      take_left = prec->first_in_left;
    } else {
      take_left = a.vertex < b.vertex;
    }
    const PlacedVertex& taken = take_left ? left.witness[i++] : right.witness[j++];
    if (prec != nullptr && taken.vertex == prec->first) first_placed = true;
    out.witness.push_back(taken);
  }
  out.witness.insert(out.witness.end(), left.witness.begin() + static_cast<std::ptrdiff_t>(i), left.witness.end());
  out.witness.insert(out.witness.end(), right.witness.begin() + static_cast<std::ptrdiff_t>(j), right.witness.end());
  return out;
}

WitnessedLevelSet merge_sets(const WitnessedLevelSet& a, const WitnessedLevelSet& b, const Precedence* prec) {
  std::vector<LevelEntry> merged;
  merged.reserve(a.entries.size() * b.entries.size());
  for (const LevelEntry& x : a.entries) {
    for (const LevelEntry& y : b.entries) {
      if (auto m = merge_pair(x, y, prec)) merged.push_back(std::move(*m));
    }
  }
  return maximal_entries(std::move(merged));
}

bool places_before(const LevelEntry& e, Vertex first, Vertex second) {
  for (const PlacedVertex& p : e.witness) {
    if (p.vertex == first) return true;
    if (p.vertex == second) return false;
  }
  return false;
}

// A connected piece of the current recursion, in global vertex ids.
struct Subproblem {
  std::vector<Vertex> vertices;     // sorted
  std::vector<WeightedEdge> edges;  // u < v, sorted, folded
  std::vector<Value> weights;       // aligned with `vertices`

  std::size_t local(Vertex v) const {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  }

  std::vector<Value> key() const {
    std::vector<Value> k;
    k.reserve(vertices.size() * 2 + edges.size() * 3 + 1);
    k.push_back(static_cast<Value>(vertices.size()));
    k.insert(k.end(), vertices.begin(), vertices.end());
    k.insert(k.end(), weights.begin(), weights.end());
    for (const WeightedEdge& e : edges) {
      k.push_back(e.u);
      k.push_back(e.v);
      k.push_back(e.multiplicity);
    }
    return k;
  }
};

struct KeyHash {
  std::size_t operator()(const std::vector<Value>& k) const {
    std::size_t h = k.size();
    for (Value x : k) h ^= std::hash<Value>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Splits `edges` over `vertices` into connected pieces carrying their weights.
std::vector<Subproblem> connected_pieces(const std::vector<Vertex>& vertices, const std::vector<Value>& weights,
                                         const std::vector<WeightedEdge>& edges) {
  const std::size_t n = vertices.size();
  auto local = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const WeightedEdge& e : edges) {
    const std::size_t a = find(local(e.u));
    const std::size_t b = find(local(e.v));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> piece_of(n, -1);
  std::vector<Subproblem> pieces;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (piece_of[root] < 0) {
      piece_of[root] = static_cast<int>(pieces.size());
      pieces.emplace_back();
    }
    Subproblem& p = pieces[piece_of[root]];
    p.vertices.push_back(vertices[i]);
    p.weights.push_back(weights[i]);
  }
  for (const WeightedEdge& e : edges) pieces[piece_of[find(local(e.u))]].edges.push_back(e);
  return pieces;
}

class SignatureSearch {
 public:
  explicit SignatureSearch(int edge_decrement) : decrement_(edge_decrement) {}

  std::shared_ptr<const WitnessedLevelSet> solve(const Subproblem& p) {
    std::vector<Value> key = p.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto result = std::make_shared<const WitnessedLevelSet>(compute(p));
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  WitnessedLevelSet compute(const Subproblem& p) {
    if (p.vertices.size() == 1) {
      LevelEntry single;
      single.witness.push_back({p.vertices[0], p.weights[0]});
      return WitnessedLevelSet{{std::move(single)}};
    }
    const WeightedEdge e = p.edges[balanced_edge(p)];
    const Vertex u = e.u;
    const Vertex v = e.v;

    std::vector<WeightedEdge> rest = p.edges;
    for (WeightedEdge& r : rest) {
      if (r.u == u && r.v == v) --r.multiplicity;
    }
    std::erase_if(rest, [](const WeightedEdge& r) { return r.multiplicity == 0; });

    auto lowered = [&](Vertex x) {
      std::vector<Value> w = p.weights;
      w[p.local(x)] -= decrement_;
      return w;
    };

    std::vector<LevelEntry> candidates;
    // Branch where v is later (v pays the edge), then where u is later.
    for (const auto& [first, second] : {std::pair(u, v), std::pair(v, u)}) {
      const std::vector<Value> weights = lowered(second);
      std::vector<Subproblem> pieces = connected_pieces(p.vertices, weights, rest);
      if (pieces.size() == 1) {
        for (const LevelEntry& entry : solve(pieces[0])->entries) {
          if (places_before(entry, first, second)) candidates.push_back(entry);
        }
        continue;
      }
      const Subproblem& a = pieces[0];
      const Subproblem& b = pieces[1];
      const bool first_in_a = std::binary_search(a.vertices.begin(), a.vertices.end(), first);
      const Precedence prec{first, second, first_in_a};
      WitnessedLevelSet merged = merge_sets(*solve(a), *solve(b), &prec);
      for (LevelEntry& entry : merged.entries) candidates.push_back(std::move(entry));
    }
    return maximal_entries(std::move(candidates));
  }

  // Edge whose removal minimizes the larger remaining piece; smallest index
  // on ties. Parallel copies and cycle edges leave the piece whole.
  std::size_t balanced_edge(const Subproblem& p) const {
    const std::size_t n = p.vertices.size();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      const std::size_t a = p.local(p.edges[i].u);
      const std::size_t b = p.local(p.edges[i].v);
      adj[a].emplace_back(b, i);
      adj[b].emplace_back(a, i);
    }
    // Lowlink DFS from local vertex 0; a tree edge to child c is a bridge iff
    // low[c] > disc[parent], and then it separates subtree_size[c] vertices.
    std::vector<std::size_t> disc(n, 0), low(n, 0), subtree(n, 1);
    std::vector<std::size_t> cut_size(p.edges.size(), n);
    std::size_t timer = 1;
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t x, std::size_t via) {
      disc[x] = low[x] = timer++;
      for (auto [y, edge] : adj[x]) {
        if (edge == via) continue;
        if (disc[y] != 0) {
          low[x] = std::min(low[x], disc[y]);
          continue;
        }
        dfs(y, edge);
        subtree[x] += subtree[y];
        low[x] = std::min(low[x], low[y]);
        if (low[y] > disc[x] && p.edges[edge].multiplicity == 1) {
          cut_size[edge] = std::max(subtree[y], n - subtree[y]);
        }
      }
    };
    dfs(0, p.edges.size());
    return static_cast<std::size_t>(std::min_element(cut_size.begin(), cut_size.end()) - cut_size.begin());
  }

  int decrement_;
  std::unordered_map<std::vector<Value>, std::shared_ptr<const WitnessedLevelSet>, KeyHash> memo_;
};

void check_forest_input(const WeightedGraph& g, const TreeOptions& options) {
  if (g.max_degree() > options.max_degree) {
    throw SizeLimitError("maximum degree " + std::to_string(g.max_degree()) + " exceeds the configured bound " +
                         std::to_string(options.max_degree) +
                         "; the number of level multisets grows like n^(2d), raise --max-degree deliberately");
  }
  if (!options.allow_cycles && !underlying_is_forest(g)) {
    throw InputError("the underlying graph has a cycle; maximal-signature search needs a forest");
  }
}

// Entries are ordered by value descending then witness sequence, so the
// front one is the canonical optimum.
const LevelEntry& best_entry(const WitnessedLevelSet& set) {
  if (set.entries.empty()) throw VerificationError("maximal-signature search returned no entries");
  return set.entries.front();
}

}  // namespace

// ------------------------------------------------------------ LevelEntry

std::vector<Vertex> LevelEntry::order() const {
  std::vector<Vertex> out;
  out.reserve(witness.size());
  for (const PlacedVertex& p : witness) out.push_back(p.vertex);
  return out;
}

std::map<Value, int> LevelEntry::level_multiset() const {
  std::map<Value, int> counts;
  for (const PlacedVertex& p : witness) ++counts[p.level];
  return counts;
}

Signature LevelEntry::canonical_signature() const {
  LevelProfile lp;
  lp.levels.reserve(witness.size());
  for (const PlacedVertex& p : witness) lp.levels.push_back(p.level);
  return lp.prefix_signature();
}

std::vector<Value> LevelEntry::prefix_sums() const {
  std::vector<Value> out;
  out.reserve(witness.size());
  Value running = 0;
  for (const PlacedVertex& p : witness) out.push_back(running += p.level);
  return out;
}

Value LevelEntry::value() const { return canonical_signature().sum(); }

// ------------------------------------------------------------ operations

EdgeSplit split_edge(const WeightedGraph& g, Vertex u, Vertex v) {
  WeightedGraph base = g;
  if (!base.remove_edge_copy(u, v)) {
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not in the graph");
  }
  EdgeSplit out{base, base};
  out.lowered_u.set_weight(u, g.weight(u) - g.edge_decrement());
  out.lowered_v.set_weight(v, g.weight(v) - g.edge_decrement());
  return out;
}

bool underlying_is_forest(const WeightedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const WeightedEdge& e : g.edges()) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

WitnessedLevelSet maximal_entries(std::vector<LevelEntry> entries) {
  struct Scored {
    Value value;
    std::vector<Value> prefix;  // prefix sums over all positions
    std::vector<Vertex> order;
    std::size_t index;
  };
  std::vector<Scored> scored;
  scored.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Scored s{0, {}, entries[i].order(), i};
    Value running = 0;
    for (const PlacedVertex& p : entries[i].witness) {
      running += p.level;
      s.prefix.push_back(running);
    }
    if (!s.prefix.empty()) s.value = std::accumulate(s.prefix.begin(), s.prefix.end() - 1, Value{0});
    scored.push_back(std::move(s));
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.order < b.order;
  });

  std::vector<const Scored*> kept;
  for (const Scored& s : scored) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Scored* k) {
      if (k->prefix.size() != s.prefix.size()) throw InputError("entries cover different vertex counts");
      for (std::size_t i = 0; i + 1 < s.prefix.size(); ++i) {
        if (k->prefix[i] < s.prefix[i]) return false;
      }
      return true;
    });
    if (!dominated) kept.push_back(&s);
  }
  WitnessedLevelSet out;
  out.entries.reserve(kept.size());
  for (const Scored* k : kept) out.entries.push_back(std::move(entries[k->index]));
  return out;
}

WitnessedLevelSet merge_components(const WitnessedLevelSet& a, const WitnessedLevelSet& b,
                                   std::optional<std::pair<Vertex, Vertex>> precedence) {
  auto vertex_set = [](const WitnessedLevelSet& s) {
    std::vector<Vertex> vs = s.entries.empty() ? std::vector<Vertex>{} : s.entries[0].order();
    std::sort(vs.begin(), vs.end());
    return vs;
  };
  const std::vector<Vertex> va = vertex_set(a);
  const std::vector<Vertex> vb = vertex_set(b);
  std::vector<Vertex> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  if (!common.empty()) {
    throw InputError("merge_components: vertex " + std::to_string(common[0]) + " appears in both components");
  }
  if (!precedence) return merge_sets(a, b, nullptr);

  auto in = [](const std::vector<Vertex>& vs, Vertex x) { return std::binary_search(vs.begin(), vs.end(), x); };
  const auto [first, second] = *precedence;
  Precedence prec{first, second, true};
  if (in(va, first) && in(vb, second)) {
    prec.first_in_left = true;
  } else if (in(vb, first) && in(va, second)) {
    prec.first_in_left = false;
  } else {
    throw InputError("merge_components: precedence pair must have one vertex in each component");
  }
  return merge_sets(a, b, &prec);
}

WitnessedLevelSet find_maximal_signatures(const WeightedGraph& g, const TreeOptions& options) {
  check_forest_input(g, options);
  const int n = g.num_vertices();
  WitnessedLevelSet result{{LevelEntry{}}};
  if (n == 0) return result;

  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  const std::vector<Value> weights(g.weights().begin(), g.weights().end());
  const std::vector<WeightedEdge> edges(g.edges().begin(), g.edges().end());
  SignatureSearch search(g.edge_decrement());
  for (const Subproblem& piece : connected_pieces(all, weights, edges)) {
    result = merge_sets(result, *search.solve(piece), nullptr);
  }
  return result;
}

ArrangementOptimum maxdla_forest(const Digraph& d, const TreeOptions& options) {
  for (const Arc& a : d.arcs()) {
    if (d.has_arc(a.head, a.tail)) {
      throw InputError("opposite arcs between " + std::to_string(a.tail) + " and " + std::to_string(a.head) +
                       "; not an oriented forest");
    }
  }
  const WeightedGraph g = to_weighted(d);
  TreeOptions forest_only = options;
  forest_only.allow_cycles = false;
  const WitnessedLevelSet set = find_maximal_signatures(g, forest_only);
  const LevelEntry& best = best_entry(set);
  const Value value = best.value();
  Arrangement arr(best.order());
  if (arrangement_value(d, arr) != value) {
    throw VerificationError("forest solver witness does not reproduce its signature value");
  }
  return {value, std::move(arr)};
}

ArrangementOptimum minla_complement(const UndirectedGraph& g, const TreeOptions& options) {
  const UndirectedGraph forest = g.complement();
  std::vector<WeightedEdge> edges;
  for (auto [u, v] : forest.edges()) edges.push_back({u, v, 1});
  const std::vector<int> deg = forest.degrees();
  // Each complement edge is a symmetric pair of arcs: out-degree equals the
  // forest degree, and whichever endpoint comes later loses both arcs.
  const WeightedGraph weighted(g.num_vertices(), edges, std::vector<Value>(deg.begin(), deg.end()), 2);
  if (!underlying_is_forest(weighted)) throw InputError("the complement of the graph is not a forest");
  TreeOptions forest_only = options;
  forest_only.allow_cycles = false;
  const WitnessedLevelSet set = find_maximal_signatures(weighted, forest_only);
  const LevelEntry& best = best_entry(set);
  const Value best_complement = best.value();
  Arrangement arr(best.order());
  const Value minla = complete_digraph_value(g.num_vertices()) - best_complement;
  if (linear_arrangement_cost(g, arr) != minla) {
    throw VerificationError("complement bridge witness does not reproduce the arrangement cost");
  }
  return {minla, std::move(arr)};
}

}  // namespace maxdla
