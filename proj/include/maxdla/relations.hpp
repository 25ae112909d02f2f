#pragma once

// Reductions Max2SAT -> MaxDiCut -> MaxDLA as instance transformers, the
// cut-based bounds on the optimum, and the complement identity.

#include <string>
#include <vector>

#include "maxdla/core.hpp"
#include "maxdla/oracle.hpp"

namespace maxdla {

struct Literal {
  int variable = 0;  // 0-based
  bool negated = false;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct Clause {
  std::vector<Literal> literals;  // one or two, distinct variables

  friend bool operator==(const Clause&, const Clause&) = default;
};

class TwoCnf {
 public:
  TwoCnf() = default;
  TwoCnf(int num_vars, std::vector<Clause> clauses);

  int num_vars() const { return num_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  // Number of clauses satisfied; bit i of `assignment` is variable i.
  int satisfied(std::uint64_t assignment) const;

  friend bool operator==(const TwoCnf&, const TwoCnf&) = default;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

struct ReductionMap {
  Digraph digraph;
  std::vector<Vertex> var_vertex;        // variable -> vertex (Max2SAT side)
  std::vector<Vertex> gadget_vertices;   // clause -> its added vertex
  std::vector<Vertex> original_vertex;   // input vertex -> vertex (padding side)
  std::vector<Vertex> padding_vertices;  // isolated vertices added by padding
  Value threshold_factor = 1;            // threshold k maps to k * factor

  std::string threshold_description() const { return "k*" + std::to_string(threshold_factor); }
};

// Largest number of simultaneously satisfiable clauses, by enumeration.
int brute_max2sat(const TwoCnf& phi, int max_vars = 24);

// One fresh vertex and one gadget per clause; the optimum cut is exactly
// twice the optimum number of satisfied clauses.
ReductionMap max2sat_to_dicut(const TwoCnf& phi);

// Places variable vertices by `assignment` (true on the sink side) and each
// gadget vertex on whichever side cuts more of its arcs.
DicutCertificate assignment_dicut(const ReductionMap& map, std::uint64_t assignment);

// Appends n^3 isolated vertices to a digraph with at least one arc.
ReductionMap dicut_to_dla(const Digraph& d);

// Source side of `cut`, then every padding vertex, then the sink side.
Arrangement sandwich_arrangement(const ReductionMap& padded, const DicutCertificate& cut);

// Source side by non-increasing out-degree into the sink side, then the sink
// side by non-decreasing in-degree from the source side.
Arrangement lower_bound_arrangement(const Digraph& d, const DicutCertificate& cut);

struct BoundsReport {
  int n = 0;
  Value max_dicut = 0;  // t
  Value maxdla = 0;
  Value lower_doubled = 0;  // n * t, twice the lower bound
  Value upper = 0;          // (n - 1) * t
  bool holds = false;

  double lower() const { return static_cast<double>(lower_doubled) / 2.0; }
};

BoundsReport check_bounds(const Digraph& d, int limit = kDefaultArrangementLimit);

struct ComplementBridge {
  Value val_digraph = 0;
  Value val_complement = 0;
  Value total = 0;
};

ComplementBridge complement_bridge(const Digraph& d, const Arrangement& arr);

struct GadgetReport {
  int max_satisfiable = 0;
  Value max_dicut = 0;
  bool holds = false;
};

GadgetReport verify_gadget_reduction(const TwoCnf& phi, int limit = kDefaultCutLimit);

struct PaddingReport {
  int n = 0;
  Value max_dicut = 0;       // t
  Value factor = 0;          // n^3
  Value padded_optimum = 0;  // exact MaxDLA of the padded digraph
  Value sandwich_value = 0;
  Value cut_count_bound = 0;  // t * (n^3 + n - 1)
  bool reaches_t = false;          // optimum >= t * n^3
  bool misses_t_plus_one = false;  // optimum < (t + 1) * n^3
  Arrangement optimum_arrangement;

  bool holds() const { return reaches_t && misses_t_plus_one; }
};

PaddingReport verify_padding_reduction(const Digraph& d, int limit = kDefaultCutLimit);

}  // namespace maxdla
