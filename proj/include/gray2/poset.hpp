#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gray2 {

// Finite poset with a fixed element order. The element order is part of the
// data: every construction in this library enumerates elements the same way
// on every run, so indices are stable identifiers.
class FinPoset {
public:
  FinPoset() = default;

  // Validates reflexivity, antisymmetry and transitivity; labels must be
  // unique. Throws std::invalid_argument on violation.
  FinPoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(labels_.size()); }
  bool leq(int a, int b) const { return leq_[a][b]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& lab) const;  // -1 if absent

  // Pairs (a,b) with a < b and no c strictly between.
  std::vector<std::pair<int, int>> cover_relations() const;
  // Number of ordered pairs (a,b) with a <= b, a != b.
  int strict_pair_count() const;
  // Number of ordered pairs (a,b) with a <= b (reflexive ones included).
  int pair_count() const;

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

// Linear order 0 < 1 < ... < n (n+1 elements).
FinPoset ordinal_poset(int n);
// The subinterval {i, i+1, ..., j} of the integers, i <= j required.
FinPoset interval_poset(int i, int j);
// n pairwise incomparable elements.
FinPoset antichain_poset(int n);

// Componentwise order on pairs. Element (a,b) has index a*q.size()+b, so the
// first factor is the most significant digit.
FinPoset product(const FinPoset& p, const FinPoset& q);
// n-ary version with mixed-radix indexing (first factor most significant).
// The empty product is a singleton.
FinPoset product_multi(const std::vector<FinPoset>& factors);

// Mixed-radix index helper shared by everything that enumerates tuples.
struct ProductShape {
  std::vector<int> dims;
  explicit ProductShape(std::vector<int> d);
  int total() const { return total_; }
  int index(const std::vector<int>& tuple) const;
  std::vector<int> tuple(int index) const;

private:
  int total_ = 1;
};

// A monotone lattice path: H steps in the first coordinate, V steps in the
// second. Paths are relative; they do not remember where the rectangle sits.
struct LatticePath {
  std::string steps;  // characters 'H' and 'V'

  explicit LatticePath(std::string s = "");
  int h_count() const;
  int v_count() const;
  bool operator==(const LatticePath& o) const { return steps == o.steps; }
};

// All paths with k H steps and m V steps in lexicographic order ('H' < 'V').
// This order is the canonical element order of max_chain_poset(k, m).
std::vector<LatticePath> enumerate_paths(int k, int m);

// Dominance order generated by the elementary move that rewrites a
// consecutive "VH" to "HV" going down; equivalently p <= q iff every prefix
// of p has at most as many V steps as the same-length prefix of q. The
// all-H-then-all-V path is the bottom element.
bool path_leq(const LatticePath& p, const LatticePath& q);

// Concatenation. Counts add; there is no endpoint bookkeeping to get wrong
// because paths are relative.
LatticePath concat_paths(const LatticePath& p, const LatticePath& q);

// Swap the two coordinates (H <-> V).
LatticePath transpose_path(const LatticePath& p);

// Poset of maximal chains of [k] x [m], i.e. (k,m) lattice paths under the
// dominance order above.
FinPoset max_chain_poset(int k, int m);

// Order isomorphism search. Returns the image index per element of p, for
// the first isomorphism in lexicographic order, or nullopt.
std::optional<std::vector<int>> poset_iso(const FinPoset& p, const FinPoset& q);

}  // namespace gray2
