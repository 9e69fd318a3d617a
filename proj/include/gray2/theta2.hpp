#pragma once

#include <map>
#include <string>
#include <vector>

#include "gray2/poset.hpp"

namespace gray2 {

// Monotone map [m] -> [n] between finite ordinals ({0,...,m} etc).
struct DeltaMor {
  int src_n = 0;  // source is [src_n]
  int tgt_n = 0;
  std::vector<int> values;  // size src_n + 1, nondecreasing, within [0, tgt_n]

  DeltaMor() = default;
  DeltaMor(int src, int tgt, std::vector<int> vals);  // validates
  static DeltaMor identity(int n);
  int operator()(int i) const { return values[i]; }
  bool operator==(const DeltaMor&) const = default;

  // Subinterval inclusion: values[i] = values[0] + i.
  bool is_inert() const;
  // Endpoint preserving: values[0] = 0 and values[src_n] = tgt_n.
  bool is_active() const;
};

DeltaMor compose(const DeltaMor& g, const DeltaMor& f);  // g after f
std::vector<DeltaMor> all_delta_mors(int src_n, int tgt_n);

// A cell shape: width k with inner ordinal sizes (n_1, ..., n_k).
struct Theta2Obj {
  std::vector<int> ns;

  Theta2Obj() = default;
  explicit Theta2Obj(std::vector<int> sizes);
  int k() const { return static_cast<int>(ns.size()); }
  int n(int i) const { return ns[i - 1]; }  // 1-based, matching the shape notation
  bool operator==(const Theta2Obj&) const = default;
  bool operator<(const Theta2Obj& o) const { return ns < o.ns; }
};

// Notation "[k](n1,...,nk)", e.g. "[2](1,0)"; "[0]()" is the point.
std::string to_notation(const Theta2Obj& o);
Theta2Obj parse_theta2(const std::string& text);

// Morphism of cell shapes: a monotone phi on widths plus one inner monotone
// map psi_{i,j} for every i and every j with phi(i-1) < j <= phi(i).
struct Theta2Mor {
  Theta2Obj src, tgt;
  DeltaMor phi;
  std::map<std::pair<int, int>, DeltaMor> psis;

  Theta2Mor() = default;
  Theta2Mor(Theta2Obj s, Theta2Obj t, DeltaMor p, std::map<std::pair<int, int>, DeltaMor> psi);
  static Theta2Mor identity(const Theta2Obj& o);
  bool operator==(const Theta2Mor&) const = default;

  // The unique inner index i with phi(i-1) < j <= phi(i), or -1.
  int inner_source(int j) const;
};

Theta2Mor compose(const Theta2Mor& g, const Theta2Mor& f);  // g after f

struct MorClass {
  bool inert;
  bool active;
};
MorClass classify(const Theta2Mor& f);

// Unique factorization f = (inert) after (active) through a middle shape.
struct InertActiveFactorization {
  Theta2Obj middle;
  Theta2Mor active_part;  // src -> middle
  Theta2Mor inert_part;   // middle -> tgt
};
InertActiveFactorization factorize_inert_active(const Theta2Mor& f);

// The shape [k](n, ..., n), functorially in both coordinates.
Theta2Obj tau(int k, int n);
Theta2Mor tau_mor(const DeltaMor& phi, const DeltaMor& psi);

// Reversing all inner ordinals fixes the shape; the interesting data is the
// relabeling, returned as one reversal per inner ordinal.
struct TwoOpObj {
  Theta2Obj obj;
  std::vector<std::vector<int>> reversal;  // reversal[i][x] = ns[i] - x
};
TwoOpObj two_op_obj(const Theta2Obj& o);

// Reversing the outer ordinal reverses the list of inner sizes.
Theta2Obj one_op_obj(const Theta2Obj& o);

// Everything in the bounded universe: shapes with width <= max_k and inner
// sizes <= max_n, ordered by (k, ns) lexicographically.
std::vector<Theta2Obj> bounded_objects(int max_k, int max_n);
std::vector<Theta2Mor> all_theta2_mors(const Theta2Obj& src, const Theta2Obj& tgt);

}  // namespace gray2
