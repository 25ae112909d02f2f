#pragma once

// Exhaustive ground truth for small instances. Every search takes an explicit
// vertex limit and refuses (SizeLimitError) rather than truncating.

#include <vector>

#include "maxdla/core.hpp"

namespace maxdla {

inline constexpr int kDefaultArrangementLimit = 10;
inline constexpr int kDefaultCutLimit = 20;
inline constexpr int kDefaultSignatureLimit = 9;
inline constexpr int kDefaultSubsetDpLimit = 20;

struct ArrangementOptimum {
  Value value = 0;
  Arrangement arrangement;
};

struct DicutCertificate {
  std::vector<Vertex> source_side;  // sorted
  std::vector<Vertex> sink_side;    // sorted
  Value size = 0;
};

// Entry k-1 is the largest |E(X, Y)| over source sides X with exactly k
// vertices, k = 1..n-1.
struct CutProfile {
  std::vector<Value> per_k;

  Value max() const;
  friend bool operator==(const CutProfile&, const CutProfile&) = default;
};

struct WitnessedSignature {
  Signature signature;
  Arrangement witness;
};

// |E(S, V \ S)| counted with multiplicity.
Value dicut_size(const Digraph& d, std::span<const Vertex> source_side);
// Throws InputError unless the two sides partition V and `size` matches.
void validate_dicut(const Digraph& d, const DicutCertificate& cut);

// Best value over all n! arrangements; the lexicographically smallest optimal
// vertex sequence wins ties. `workers` > 1 splits the search by first vertex;
// the result does not depend on it.
ArrangementOptimum brute_maxdla(const Digraph& d, int limit = kDefaultArrangementLimit, int workers = 1);

// Exact optimum through a dynamic program over vertex subsets, treating
// isolated vertices as interchangeable. The limit applies to non-isolated
// vertices, so heavily padded instances stay cheap.
ArrangementOptimum subset_dp_maxdla(const Digraph& d, int limit = kDefaultSubsetDpLimit);

// Largest directed cut over all 2^n source sides; ties go to the
// lexicographically smallest sorted source side.
DicutCertificate brute_maxdicut(const Digraph& d, int limit = kDefaultCutLimit);

CutProfile cut_profile(const Digraph& d, int limit = kDefaultCutLimit);

// True iff every cut of `arr` is the largest cut for its source-side size.
bool is_maximum_arrangement(const Digraph& d, const Arrangement& arr, int limit = kDefaultCutLimit);

// Maximal signatures of the weighted abstraction, each with the
// lexicographically smallest arrangement attaining it; sorted by signature.
std::vector<WitnessedSignature> brute_maximal_signatures(const WeightedGraph& g,
                                                         int limit = kDefaultSignatureLimit);

// Minimum of sum |pi(u) - pi(v)| over all arrangements; lexicographically
// smallest optimum.
ArrangementOptimum brute_minla(const UndirectedGraph& g, int limit = kDefaultArrangementLimit);

}  // namespace maxdla
