#pragma once

#include "gray2/gray.hpp"

namespace gray2 {

// The free 2-category [k]([n_1]x[m], ..., [n_k]x[m]) together with the data
// needed to index its hom objects.
struct PhiData {
  Theta2Obj I;
  int m = 0;
  CatGraph graph;
  TwoCatPtr cat;
};

// The cell shape [m](0,...,0): the ordinal [m] viewed as a shape without
// 2-cell data. Its realization is the walking chain of length m.
Theta2Obj bar_obj(int m);
// The shape morphism between bar objects carried by a monotone map.
Theta2Mor bar_mor(const DeltaMor& mu);

// Object counts for the hom of phi between grid rows i <= j: one interval
// pair category per crossed edge, packed as a * (m + 1) + b per edge.
std::vector<int> phi_dims(const Theta2Obj& I, int m, int i, int j);

PhiData phi_data(const Theta2Obj& I, int m);
TwoCatPtr phi_obj(const Theta2Obj& I, int m);

// Functoriality in the shape and in the ordinal parameter: edge components
// (a, b) map to (psi(a), mu(b)) across the reindexed spine.
TwoFunctor phi_mor(const Theta2Mor& F, const DeltaMor& mu, const PhiData& src, const PhiData& tgt);
TwoFunctor phi_mor(const Theta2Mor& F, const DeltaMor& mu);

// Index-identity isomorphism realize(I) -> phi_obj(I, 0).
TwoFunctor phi0_iso(TwoCatPtr realized, const PhiData& phi0);

// Comparison 2-functor out of the tensor with the bar shape: objects
// (x, r) |-> x, and a 1-cell (path, a, *) goes to the tuple pairing each
// component of a with the column where the path crosses that edge.
TwoFunctor nu(const GrayData& g, const PhiData& p);
TwoFunctor nu(const Theta2Obj& I, int m);

// The diagonal comparison realize(I) -> cotensor(phi_obj(I,m), m): identity
// on objects, and each 1-cell a goes to the functor r |-> (a paired with the
// constant column r).
struct EtaPrimeData {
  TwoCatPtr realized;
  PhiData phi;
  CotensorData ct;
  TwoFunctor eta;
};
EtaPrimeData eta_prime_data(const Theta2Obj& I, int m, Budget* budget = nullptr);
TwoFunctor eta_prime(const Theta2Obj& I, int m);

// Pushout square collapsing the ordinal direction of the tensor: the apex is
// phi_obj(I,m) and the diagram glues gray(I, bar) to the discrete object set
// along discrete x bar. With corrupt set, every leg is squashed onto column
// zero; the cocone still commutes but stops being a colimit once m > 0.
DiagramWithCocone odot_square(const Theta2Obj& I, int m, bool corrupt = false);
PushoutReport check_odot_pushout(const Theta2Obj& I, int m, const std::vector<NamedProbe>& probes,
                                 bool corrupt = false, Budget* budget = nullptr);

// Wide pushout decompositions of phi: along the spine of [k] (pieces are the
// single-edge shapes) and along the inner ordinal of one edge (pieces are
// phi([1](1), m) glued over phi([1](0), m)). The inner form needs n >= 1.
DiagramWithCocone phi_outer_decomposition(const Theta2Obj& I, int m);
DiagramWithCocone phi_inner_decomposition(int n, int m);

// Image of nu in the generated sense: objects are covered, the full column
// window over each adjacent pair covers that hom exactly (objects and
// morphisms), and every 1-cell of phi is the horizontal composite of its
// adjacent components.
struct NuImageReport {
  bool objects = false;
  bool windows = false;
  bool composites = false;
  bool pass() const { return objects && windows && composites; }
};
NuImageReport nu_image(const GrayData& g, const PhiData& p, const TwoFunctor& n);

// Index-level comparison of the two composites around the naturality square
// of nu at (F, mu): push a cell through the tensor map and then read columns
// off the stretched path, or read columns first and reindex them through mu.
// Pure arithmetic on the source tensor data; no functors are built.
bool nu_natural_at(const Theta2Mor& F, const DeltaMor& mu, const GrayData& src);

}  // namespace gray2
