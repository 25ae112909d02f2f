#include "maxdla/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>

#include "maxdla/errors.hpp"

namespace maxdla {

namespace {

void enforce_limit(int n, int limit, const char* what) {
  if (n > limit) {
    throw SizeLimitError(std::string(what) + ": " + std::to_string(n) + " vertices exceeds the limit of " +
                         std::to_string(limit));
  }
}

// Best arrangement among those starting with `first`, in lexicographic order.
struct GroupBest {
  Value value = std::numeric_limits<Value>::min();
  std::vector<Vertex> order;
};

GroupBest search_group(const Digraph& d, Vertex first) {
  const int n = d.num_vertices();
  const auto arcs = d.arcs();
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(first);
  for (Vertex v = 0; v < n; ++v) {
    if (v != first) order.push_back(v);
  }
  std::vector<int> pos(n);
  GroupBest best;
  do {
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    Value value = 0;
    for (const Arc& a : arcs) {
      const int span = pos[a.head] - pos[a.tail];
      if (span > 0) value += Value{span} * a.multiplicity;
    }
    if (value > best.value) {
      best.value = value;
      best.order = order;
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return best;
}

}  // namespace

Value CutProfile::max() const {
  return per_k.empty() ? 0 : *std::max_element(per_k.begin(), per_k.end());
}

Value dicut_size(const Digraph& d, std::span<const Vertex> source_side) {
  std::vector<char> in_source(d.num_vertices(), 0);
  for (Vertex v : source_side) {
    if (v < 0 || v >= d.num_vertices()) throw InputError("dicut: vertex " + std::to_string(v) + " out of range");
    in_source[v] = 1;
  }
  Value size = 0;
  for (const Arc& a : d.arcs()) {
    if (in_source[a.tail] && !in_source[a.head]) size += a.multiplicity;
  }
  return size;
}

void validate_dicut(const Digraph& d, const DicutCertificate& cut) {
  std::vector<int> seen(d.num_vertices(), 0);
  auto mark = [&](std::span<const Vertex> side) {
    for (Vertex v : side) {
      if (v < 0 || v >= d.num_vertices()) throw InputError("dicut: vertex " + std::to_string(v) + " out of range");
      if (seen[v]++) throw InputError("dicut: vertex " + std::to_string(v) + " listed twice");
    }
  };
  mark(cut.source_side);
  mark(cut.sink_side);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InputError("dicut: sides do not cover every vertex");
  }
  if (dicut_size(d, cut.source_side) != cut.size) throw InputError("dicut: stated size does not match the arcs");
}

ArrangementOptimum brute_maxdla(const Digraph& d, int limit, int workers) {
  const int n = d.num_vertices();
  enforce_limit(n, limit, "brute_maxdla");
  if (n == 0) return {0, Arrangement()};

  std::vector<GroupBest> groups(n);
  const int pool = std::clamp(workers, 1, n);
  if (pool == 1) {
    for (Vertex first = 0; first < n; ++first) groups[first] = search_group(d, first);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < pool; ++w) {
      threads.emplace_back([&, w] {
        for (Vertex first = w; first < n; first += pool) groups[first] = search_group(d, first);
      });
    }
  }
  // Groups are in lexicographic order of their first vertex, so the first
  // strict improvement is the lexicographically smallest optimum.
  const GroupBest* best = &groups[0];
  for (const GroupBest& g : groups) {
    if (g.value > best->value) best = &g;
  }
  return {best->value, Arrangement(best->order)};
}

ArrangementOptimum subset_dp_maxdla(const Digraph& d, int limit) {
  const int n = d.num_vertices();
  std::vector<char> touched(n, 0);
  for (const Arc& a : d.arcs()) touched[a.tail] = touched[a.head] = 1;
  std::vector<Vertex> core;
  std::vector<Vertex> isolated;
  for (Vertex v = 0; v < n; ++v) (touched[v] ? core : isolated).push_back(v);
  const int c = static_cast<int>(core.size());
  const int iso = static_cast<int>(isolated.size());
  enforce_limit(c, limit, "subset_dp_maxdla");
  if (n == 0) return {0, Arrangement()};

  std::vector<int> local(n, -1);
  for (int i = 0; i < c; ++i) local[core[i]] = i;
  const std::uint32_t full = (c == 32) ? ~0u : ((1u << c) - 1);
  const std::size_t states = std::size_t{1} << c;

  // Directed cut out of each core subset; isolated vertices never contribute.
  std::vector<Value> cut(states, 0);
  for (std::size_t s = 0; s < states; ++s) {
    for (const Arc& a : d.arcs()) {
      const bool tail_in = (s >> local[a.tail]) & 1;
      const bool head_in = (s >> local[a.head]) & 1;
      if (tail_in && !head_in) cut[s] += a.multiplicity;
    }
  }

  // best[s * (iso+1) + j]: best sum of cuts over prefixes strictly before
  // reaching the state (core subset s, j isolated vertices placed).
  const Value unset = std::numeric_limits<Value>::min();
  const std::size_t width = static_cast<std::size_t>(iso) + 1;
  std::vector<Value> best(states * width, unset);
  std::vector<std::int8_t> came_by_isolate(states * width, 0);
  best[0] = 0;
  // States in order of total placed count (popcount + j) are visited by
  // increasing s then j, since both transitions increase one of them.
  for (std::size_t s = 0; s < states; ++s) {
    for (int j = 0; j <= iso; ++j) {
      const std::size_t idx = s * width + j;
      if (best[idx] == unset) continue;
      const int placed = std::popcount(static_cast<std::uint32_t>(s)) + j;
      const Value here = best[idx] + ((placed > 0 && placed < n) ? cut[s] : 0);
      for (int v = 0; v < c; ++v) {
        if ((s >> v) & 1) continue;
        const std::size_t next = (s | (std::size_t{1} << v)) * width + j;
        if (here > best[next]) {
          best[next] = here;
          came_by_isolate[next] = 0;
        }
      }
      if (j < iso) {
        const std::size_t next = idx + 1;
        if (here > best[next]) {
          best[next] = here;
          came_by_isolate[next] = 1;
        }
      }
    }
  }

  // Walk back from the full state. A core predecessor is any removable
  // vertex whose state reproduces the stored optimum.
  std::vector<Vertex> reversed_order;
  std::size_t s = full;
  int j = iso;
  while (s != 0 || j != 0) {
    const std::size_t idx = s * width + j;
    if (came_by_isolate[idx]) {
      reversed_order.push_back(isolated[j - 1]);
      --j;
      continue;
    }
    bool stepped = false;
    for (int v = c - 1; v >= 0 && !stepped; --v) {
      if (!((s >> v) & 1)) continue;
      const std::size_t prev_s = s & ~(std::size_t{1} << v);
      const std::size_t prev = prev_s * width + j;
      if (best[prev] == unset) continue;
      const int placed = std::popcount(static_cast<std::uint32_t>(prev_s)) + j;
      const Value via = best[prev] + ((placed > 0 && placed < n) ? cut[prev_s] : 0);
      if (via == best[idx]) {
        reversed_order.push_back(core[v]);
        s = prev_s;
        stepped = true;
      }
    }
    if (!stepped) throw VerificationError("subset_dp_maxdla: broken back-pointer chain");
  }
  std::reverse(reversed_order.begin(), reversed_order.end());
  return {best[full * width + iso], Arrangement(std::move(reversed_order))};
}

DicutCertificate brute_maxdicut(const Digraph& d, int limit) {
  const int n = d.num_vertices();
  enforce_limit(n, limit, "brute_maxdicut");
  DicutCertificate best;
  best.size = -1;
  std::vector<Vertex> side;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Value size = 0;
    for (const Arc& a : d.arcs()) {
      if (((mask >> a.tail) & 1) && !((mask >> a.head) & 1)) size += a.multiplicity;
    }
    if (size < best.size) continue;
    side.clear();
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1) side.push_back(v);
    }
    if (size > best.size || side < best.source_side) {
      best.size = size;
      best.source_side = side;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!std::binary_search(best.source_side.begin(), best.source_side.end(), v)) best.sink_side.push_back(v);
  }
  return best;
}

CutProfile cut_profile(const Digraph& d, int limit) {
  const int n = d.num_vertices();
  enforce_limit(n, limit, "cut_profile");
  CutProfile profile;
  if (n <= 1) return profile;
  profile.per_k.assign(n - 1, 0);
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    Value size = 0;
    for (const Arc& a : d.arcs()) {
      if (((mask >> a.tail) & 1) && !((mask >> a.head) & 1)) size += a.multiplicity;
    }
    Value& slot = profile.per_k[std::popcount(mask) - 1];
    slot = std::max(slot, size);
  }
  return profile;
}

bool is_maximum_arrangement(const Digraph& d, const Arrangement& arr, int limit) {
  return signature(d, arr).cuts == cut_profile(d, limit).per_k;
}

std::vector<WitnessedSignature> brute_maximal_signatures(const WeightedGraph& g, int limit) {
  const int n = g.num_vertices();
  enforce_limit(n, limit, "brute_maximal_signatures");
  std::map<Signature, Arrangement> first_witness;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    Arrangement arr(order);
    first_witness.try_emplace(weighted_signature(g, arr), arr);
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<Signature> all;
  all.reserve(first_witness.size());
  for (const auto& [sig, arr] : first_witness) all.push_back(sig);
  std::vector<WitnessedSignature> out;
  for (Signature& sig : maximal_filter(std::move(all))) {
    Arrangement witness = first_witness.at(sig);
    out.push_back({std::move(sig), std::move(witness)});
  }
  return out;
}

ArrangementOptimum brute_minla(const UndirectedGraph& g, int limit) {
  const int n = g.num_vertices();
  enforce_limit(n, limit, "brute_minla");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> pos(n);
  std::optional<ArrangementOptimum> best;
  do {
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    Value cost = 0;
    for (auto [u, v] : g.edges()) cost += std::abs(pos[u] - pos[v]);
    if (!best || cost < best->value) best = ArrangementOptimum{cost, Arrangement(order)};
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

}  // namespace maxdla
