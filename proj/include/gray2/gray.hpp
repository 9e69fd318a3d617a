#pragma once

#include <map>
#include <string>
#include <vector>

#include "gray2/theta2.hpp"
#include "gray2/twocat.hpp"

namespace gray2 {

// Hom bookkeeping for one ordered pair of grid objects in a Gray tensor
// product: the shuffle paths connecting them and the packing of
// (path, first component, second component) triples into object indices.
struct GrayHom {
  std::vector<LatticePath> paths;         // lexicographic order, 'H' < 'V'
  std::map<std::string, int> path_index;  // steps -> position in paths
  ProductShape icomps{std::vector<int>{}};
  ProductShape jcomps{std::vector<int>{}};

  int encode(int path, int a, int b) const {
    return (path * icomps.total() + a) * jcomps.total() + b;
  }
  int path_of(int obj) const { return obj / (icomps.total() * jcomps.total()); }
  int icomp_of(int obj) const { return obj / jcomps.total() % icomps.total(); }
  int jcomp_of(int obj) const { return obj % jcomps.total(); }
};

struct GrayData {
  Theta2Obj I, J;
  TwoCatPtr icat, jcat;  // realizations of the two factors
  TwoCatPtr cat;
  int rows = 0, cols = 0;
  std::vector<GrayHom> homs;  // per object pair x * n + y, empty for empty homs

  int obj(int i, int j) const { return i * cols + j; }
  int row(int x) const { return x / cols; }
  int col(int x) const { return x % cols; }
  const GrayHom& hom_data(int x, int y) const {
    return homs[static_cast<size_t>(x) * rows * cols + y];
  }
};

// Gray tensor product of the realizations of I and J, with the comparison
// 2-cell of each unit square pointing from the H-then-V route to the
// V-then-H route. Objects are grid pairs (i, j), row major. A 1-cell from
// (i, j) to (i', j') is a shuffle path from the lower corner to the upper
// one together with a 1-cell of each factor, ordered by path dominance times
// the factor orders.
GrayData gray_colax_data(const Theta2Obj& I, const Theta2Obj& J);
TwoCatPtr gray_colax(const Theta2Obj& I, const Theta2Obj& J);

// Same objects, comparison cells pointing the other way. Computed as the
// colax product with the factors swapped and the objects renamed back to
// (i, j) order.
TwoCatPtr gray_lax(const Theta2Obj& I, const Theta2Obj& J);

// Functoriality in both arguments: F tensor G on the chosen instances. Each
// H step of a path is sent to the run of H steps its column is stretched
// over, likewise for V, and the component 1-cells are pushed forward along
// the realized maps.
TwoFunctor gray_colax_mor(const Theta2Mor& F, const Theta2Mor& G, const GrayData& src,
                          const GrayData& tgt);
TwoFunctor gray_colax_mor(const Theta2Mor& F, const Theta2Mor& G);

// Projection to the binary product of the factors, forgetting paths.
TwoFunctor to_product(const GrayData& g, TwoCatPtr prod);
TwoFunctor to_product(const GrayData& g);

// Image of a path under the row and column reindexing maps, as used by
// gray_colax_mor: each step becomes the run of steps its unit segment is
// stretched over, and collapsed segments contribute nothing.
LatticePath stretch_path(const LatticePath& p, int i0, int j0, const DeltaMor& row,
                         const DeltaMor& col);

enum class GrayDecompCase { square, cylinder, cube };

// Pushout presentation of a low dimensional Gray tensor product: the square
// (arrow tensor arrow) as two commuting triangles glued along a diagonal
// 2-cell, and the cylinder and cube variants where one or both factors carry
// a 2-cell. With corrupt set, one leg collapses an object (square, cylinder)
// or one gluing edge is dropped (cube); the cocone still commutes, so only
// probe verification can tell it is no longer a colimit.
DiagramWithCocone gray_decomposition(GrayDecompCase c, bool corrupt = false);

// Builds the chosen decomposition and verifies it against the probes.
PushoutReport check_graytenscolim(GrayDecompCase c, const std::vector<NamedProbe>& probes,
                                  bool corrupt = false, Budget* budget = nullptr);

}  // namespace gray2
