#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gray2/fincat.hpp"
#include "gray2/theta2.hpp"

namespace gray2 {

// Strict 2-category with finitely many objects, hom categories given as
// FinCats, and horizontal composition given by complete tables. All axioms
// (functoriality of horizontal composition, strict unit and associativity
// laws) are checked on construction.
class TwoCat {
public:
  // Composition tables for one triple (x,y,z): obj is |hom(x,y)| x |hom(y,z)|
  // flat row-major, mor likewise on morphism counts.
  struct HCompTable {
    std::vector<int> obj;
    std::vector<int> mor;
  };

  TwoCat(std::vector<std::string> objects, std::vector<CatPtr> homs,
         std::vector<int> identity_cell, std::vector<HCompTable> hcomp);

  int n_objects() const { return static_cast<int>(obj_labels_.size()); }
  const std::string& object_label(int x) const { return obj_labels_[x]; }
  const FinCat& hom(int x, int y) const { return *homs_[pair_index(x, y)]; }
  CatPtr hom_ptr(int x, int y) const { return homs_[pair_index(x, y)]; }
  int identity_cell(int x) const { return id_cell_[x]; }

  // "f then g" for 1-cells f in hom(x,y), g in hom(y,z).
  int hcomp_cell(int x, int y, int z, int f, int g) const;
  // Same for 2-cells.
  int hcomp_2cell(int x, int y, int z, int a, int b) const;
  // Vertical composition "a then b" inside hom(x,y).
  int vcomp(int x, int y, int a, int b) const { return hom(x, y).then(a, b); }
  // Whisker a 2-cell b by the 1-cell f on its source side.
  int whisker_pre(int x, int y, int z, int f, int b) const;
  // Whisker a 2-cell a by the 1-cell g on its target side.
  int whisker_post(int x, int y, int z, int a, int g) const;

  int pair_index(int x, int y) const { return x * n_objects() + y; }
  int triple_index(int x, int y, int z) const {
    return (x * n_objects() + y) * n_objects() + z;
  }
  bool all_homs_posetal() const;

private:
  std::vector<std::string> obj_labels_;
  std::vector<CatPtr> homs_;
  std::vector<int> id_cell_;
  std::vector<HCompTable> hcomp_;
};

using TwoCatPtr = std::shared_ptr<const TwoCat>;

TwoCatPtr make_twocat(TwoCat t);

struct TwoFunctor {
  TwoCatPtr src, tgt;
  std::vector<int> omap;
  std::vector<FinFunctor> hmaps;  // per source pair (x * n + y)

  // Validates: hmaps are functors between the right homs, identity 1-cells
  // are preserved, and horizontal composition commutes on the nose.
  static TwoFunctor make(TwoCatPtr src, TwoCatPtr tgt, std::vector<int> omap,
                         std::vector<FinFunctor> hmaps);
  static TwoFunctor identity(TwoCatPtr c);
  const FinFunctor& hmap(int x, int y) const { return hmaps[x * src->n_objects() + y]; }
  bool equal_maps(const TwoFunctor& o) const;
};

TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f);  // g after f

// Deterministic fingerprint: object map followed by all hom maps in pair
// order. Two functors between the same 2-categories are equal iff their
// keys are equal.
std::vector<int> functor_key(const TwoFunctor& f);

// Linear graph 0 -> 1 -> ... -> k whose s-th edge carries a category.
struct CatGraph {
  std::vector<CatPtr> edges;
};

// Free 2-category on a CatGraph: hom(i,j) is the product of the edge
// categories strictly between i and j, horizontal composition concatenates
// tuples. hom(i,i) is the empty product (a point), hom(i,j) for i > j is
// empty.
TwoCatPtr free_linear(const CatGraph& g);

// The strict 2-category of a cell shape: hom(i,j) is the product of the
// inner interval categories.
TwoCatPtr realize(const Theta2Obj& o);

// Functoriality of realize.
TwoFunctor realize_mor(const Theta2Mor& f);

// 2-category with the given objects and only identity cells.
TwoCatPtr discrete_twocat(const std::vector<std::string>& objects);

TwoCatPtr product_twocat(TwoCatPtr x, TwoCatPtr y);

// Same 2-category with objects renamed and reordered: new object i is old
// object new_to_old[i].
TwoCatPtr relabel_objects(TwoCatPtr x, const std::vector<int>& new_to_old,
                          const std::vector<std::string>& labels);

// 2-functor determined by its object and 1-cell images alone: every 2-cell
// image is the unique parallel candidate, so the target homs must be
// posetal. Validates on construction.
TwoFunctor posetal_functor(TwoCatPtr src, TwoCatPtr tgt, std::vector<int> omap,
                           std::vector<std::vector<int>> cell_images);

// Variant listing only the interesting hom maps. Unlisted pairs must have an
// empty source hom (the map is empty) or be an identity pair (the lone cell
// goes to the identity).
TwoFunctor posetal_functor(TwoCatPtr src, TwoCatPtr tgt, std::vector<int> omap,
                           std::map<std::pair<int, int>, std::vector<int>> cells);

// f x g between the given product instances.
TwoFunctor product_two_functor(const TwoFunctor& f, const TwoFunctor& g, TwoCatPtr src_prod,
                               TwoCatPtr tgt_prod);

// Hom-wise functor category X^[n]: objects of X, hom(x,y) all functors
// [n] -> X(x,y), horizontal composition pointwise.
TwoCatPtr cotensor(TwoCatPtr x, int n, Budget* budget = nullptr);

// Cotensor together with the dictionaries identifying each hom object as an
// actual functor and each hom morphism as its component list.
struct CotensorData {
  TwoCatPtr base;
  TwoCatPtr cat;
  std::vector<FunctorCatData> homs;  // per object pair of base
};

CotensorData cotensor_data(TwoCatPtr x, int n, Budget* budget = nullptr);

// Evaluation at vertex r: cotensor(x, n) -> x.
TwoFunctor cotensor_eval(const CotensorData& ct, int r);

// Reverse all 2-cells (opposite hom categories).
TwoCatPtr two_op(TwoCatPtr x);
// Reverse all 1-cells (swap hom(x,y) with hom(y,x)).
TwoCatPtr one_op(TwoCatPtr x);

// Quotient that inverts every 2-cell: on poset-enriched inputs this takes
// connected components of each hom. Rejects inputs with parallel 2-cells.
FinCat localize_2morphisms(const TwoCat& x);

// All strict 2-functors src -> tgt in lexicographic order on functor_key.
std::vector<TwoFunctor> enumerate_two_functors(TwoCatPtr src, TwoCatPtr tgt,
                                               Budget* budget = nullptr);

// First isomorphism in canonical order together with its inverse.
std::optional<std::pair<TwoFunctor, TwoFunctor>> iso_two_cats(TwoCatPtr x, TwoCatPtr y,
                                                              Budget* budget = nullptr);

// A finite diagram of 2-categories and a candidate colimit cocone over it.
struct SpanDiagram {
  struct Edge {
    int src, tgt;
    TwoFunctor via;
  };
  std::vector<TwoCatPtr> nodes;
  std::vector<Edge> edges;
};

struct Cocone {
  TwoCatPtr apex;
  std::vector<TwoFunctor> legs;  // one per diagram node
};

struct NamedProbe {
  std::string name;
  TwoCatPtr probe;
};

struct ProbeOutcome {
  std::string probe;
  size_t apex_map_count = 0;
  size_t limit_count = 0;
  bool pass = false;
  std::string witness;  // set when the probe fails
};

struct PushoutReport {
  bool pass = false;
  std::string method;  // "verified against probe family (...)"
  std::vector<ProbeOutcome> probes;
};

// Checks that mapping out of the cocone apex agrees with the limit of
// mapping out of the diagram, one probe at a time, by exact enumeration.
// Throws std::invalid_argument if the cocone does not commute.
PushoutReport verify_pushout(const SpanDiagram& diagram, const Cocone& cocone,
                             const std::vector<NamedProbe>& probes, Budget* budget = nullptr);

struct DiagramWithCocone {
  SpanDiagram diagram;
  Cocone cocone;
};

// Decomposition of a free linear 2-category as the wide pushout of its
// single-edge pieces glued at points. Requires at least one edge.
DiagramWithCocone segal_decomposition(const CatGraph& g);

}  // namespace gray2
