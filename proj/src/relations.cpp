#include "maxdla/relations.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "maxdla/errors.hpp"

namespace maxdla {

TwoCnf::TwoCnf(int num_vars, std::vector<Clause> clauses) : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars < 0) throw InputError("negative variable count");
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    const auto& lits = clauses_[i].literals;
    const std::string where = "clause " + std::to_string(i + 1);
    if (lits.empty()) throw InputError(where + " is empty");
    if (lits.size() > 2) throw InputError(where + " has more than two literals");
    for (const Literal& l : lits) {
      if (l.variable < 0 || l.variable >= num_vars) {
        throw InputError(where + ": variable " + std::to_string(l.variable + 1) + " out of range");
      }
    }
    if (lits.size() == 2 && lits[0].variable == lits[1].variable) {
      throw InputError(where + " mentions variable " + std::to_string(lits[0].variable + 1) + " twice");
    }
  }
}

int TwoCnf::satisfied(std::uint64_t assignment) const {
  int count = 0;
  for (const Clause& c : clauses_) {
    const bool sat = std::any_of(c.literals.begin(), c.literals.end(), [&](const Literal& l) {
      const bool value = (assignment >> l.variable) & 1;
      return value != l.negated;
    });
    count += sat ? 1 : 0;
  }
  return count;
}

int brute_max2sat(const TwoCnf& phi, int max_vars) {
  if (phi.num_vars() > max_vars) {
    throw SizeLimitError("brute_max2sat: " + std::to_string(phi.num_vars()) + " variables exceeds the limit of " +
                         std::to_string(max_vars));
  }
  int best = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << phi.num_vars()); ++a) best = std::max(best, phi.satisfied(a));
  return best;
}

ReductionMap max2sat_to_dicut(const TwoCnf& phi) {
  const int vars = phi.num_vars();
  const int clauses = static_cast<int>(phi.clauses().size());
  ReductionMap map;
  map.digraph = Digraph(vars + clauses);
  map.var_vertex.resize(vars);
  std::iota(map.var_vertex.begin(), map.var_vertex.end(), 0);
  map.threshold_factor = 2;
  Digraph& d = map.digraph;
  for (int i = 0; i < clauses; ++i) {
    const Vertex x = vars + i;
    map.gadget_vertices.push_back(x);
    const auto& lits = phi.clauses()[i].literals;
    if (lits.size() == 1) {
      const Vertex v = lits[0].variable;
      if (lits[0].negated) {
        d.add_arc(v, x, 2);
      } else {
        d.add_arc(x, v, 2);
      }
      continue;
    }
    const Literal a = lits[0];
    const Literal b = lits[1];
    if (!a.negated && !b.negated) {
      d.add_arc(a.variable, b.variable);
      d.add_arc(b.variable, a.variable);
      d.add_arc(x, b.variable);
      d.add_arc(x, a.variable);
    } else if (a.negated && b.negated) {
      d.add_arc(a.variable, b.variable);
      d.add_arc(b.variable, a.variable);
      d.add_arc(b.variable, x);
      d.add_arc(a.variable, x);
    } else {
      const Vertex neg = a.negated ? a.variable : b.variable;
      const Vertex pos = a.negated ? b.variable : a.variable;
      d.add_arc(neg, x, 2);
      d.add_arc(x, pos, 2);
    }
  }
  return map;
}

DicutCertificate assignment_dicut(const ReductionMap& map, std::uint64_t assignment) {
  const Digraph& d = map.digraph;
  std::vector<char> in_source(d.num_vertices(), 0);
  for (std::size_t var = 0; var < map.var_vertex.size(); ++var) {
    in_source[map.var_vertex[var]] = ((assignment >> var) & 1) ? 0 : 1;
  }
  // Gadgets share no arcs with each other's added vertex, so each added
  // vertex can pick its side independently.
  for (Vertex x : map.gadget_vertices) {
    Value as_source = 0;
    Value as_sink = 0;
    for (const Arc& a : d.arcs()) {
      if (a.tail == x && !in_source[a.head]) as_source += a.multiplicity;
      if (a.head == x && in_source[a.tail]) as_sink += a.multiplicity;
    }
    in_source[x] = as_source > as_sink ? 1 : 0;
  }
  DicutCertificate cut;
  for (Vertex v = 0; v < d.num_vertices(); ++v) (in_source[v] ? cut.source_side : cut.sink_side).push_back(v);
  cut.size = dicut_size(d, cut.source_side);
  return cut;
}

ReductionMap dicut_to_dla(const Digraph& d) {
  if (d.total_multiplicity() == 0) {
    throw InputError("dicut_to_dla: the digraph needs at least one arc for the padding argument");
  }
  const int n = d.num_vertices();
  const Value cube = Value{n} * n * n;
  ReductionMap map;
  map.threshold_factor = cube;
  map.digraph = Digraph(static_cast<int>(n + cube), d.arcs());
  map.original_vertex.resize(n);
  std::iota(map.original_vertex.begin(), map.original_vertex.end(), 0);
  map.padding_vertices.resize(static_cast<std::size_t>(cube));
  std::iota(map.padding_vertices.begin(), map.padding_vertices.end(), n);
  return map;
}

Arrangement sandwich_arrangement(const ReductionMap& padded, const DicutCertificate& cut) {
  std::vector<Vertex> order;
  order.reserve(padded.digraph.num_vertices());
  for (Vertex v : cut.source_side) order.push_back(padded.original_vertex.at(v));
  order.insert(order.end(), padded.padding_vertices.begin(), padded.padding_vertices.end());
  for (Vertex v : cut.sink_side) order.push_back(padded.original_vertex.at(v));
  return Arrangement(std::move(order));
}

Arrangement lower_bound_arrangement(const Digraph& d, const DicutCertificate& cut) {
  validate_dicut(d, cut);
  std::vector<char> in_source(d.num_vertices(), 0);
  for (Vertex v : cut.source_side) in_source[v] = 1;
  std::vector<int> out_cut(d.num_vertices(), 0);
  std::vector<int> in_cut(d.num_vertices(), 0);
  for (const Arc& a : d.arcs()) {
    if (in_source[a.tail] && !in_source[a.head]) {
      out_cut[a.tail] += a.multiplicity;
      in_cut[a.head] += a.multiplicity;
    }
  }
  std::vector<Vertex> source = cut.source_side;
  std::vector<Vertex> sink = cut.sink_side;
  std::sort(source.begin(), source.end());
  std::sort(sink.begin(), sink.end());
  std::stable_sort(source.begin(), source.end(), [&](Vertex a, Vertex b) { return out_cut[a] > out_cut[b]; });
  std::stable_sort(sink.begin(), sink.end(), [&](Vertex a, Vertex b) { return in_cut[a] < in_cut[b]; });
  source.insert(source.end(), sink.begin(), sink.end());
  return Arrangement(std::move(source));
}

BoundsReport check_bounds(const Digraph& d, int limit) {
  BoundsReport r;
  r.n = d.num_vertices();
  r.max_dicut = brute_maxdicut(d).size;
  r.maxdla = brute_maxdla(d, limit).value;
  r.lower_doubled = Value{r.n} * r.max_dicut;
  r.upper = Value{std::max(r.n - 1, 0)} * r.max_dicut;
  r.holds = r.lower_doubled <= 2 * r.maxdla && r.maxdla <= r.upper;
  return r;
}

ComplementBridge complement_bridge(const Digraph& d, const Arrangement& arr) {
  ComplementBridge b;
  b.val_digraph = arrangement_value(d, arr);
  b.val_complement = arrangement_value(complement(d), arr);
  b.total = b.val_digraph + b.val_complement;
  if (b.total != complete_digraph_value(d.num_vertices())) {
    throw VerificationError("complement values do not add up to the complete-digraph value");
  }
  return b;
}

GadgetReport verify_gadget_reduction(const TwoCnf& phi, int limit) {
  GadgetReport r;
  r.max_satisfiable = brute_max2sat(phi);
  r.max_dicut = brute_maxdicut(max2sat_to_dicut(phi).digraph, limit).size;
  r.holds = r.max_dicut == 2 * Value{r.max_satisfiable};
  return r;
}

PaddingReport verify_padding_reduction(const Digraph& d, int limit) {
  PaddingReport r;
  const ReductionMap padded = dicut_to_dla(d);
  const DicutCertificate best_cut = brute_maxdicut(d, limit);
  r.n = d.num_vertices();
  r.max_dicut = best_cut.size;
  r.factor = padded.threshold_factor;
  r.sandwich_value = arrangement_value(padded.digraph, sandwich_arrangement(padded, best_cut));
  const ArrangementOptimum opt = subset_dp_maxdla(padded.digraph, limit);
  r.padded_optimum = opt.value;
  r.optimum_arrangement = opt.arrangement;
  r.cut_count_bound = r.max_dicut * (r.factor + r.n - 1);
  r.reaches_t = r.padded_optimum >= r.max_dicut * r.factor;
  r.misses_t_plus_one = r.padded_optimum < (r.max_dicut + 1) * r.factor;
  return r;
}

}  // namespace maxdla
