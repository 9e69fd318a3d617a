#include <vector>

#include "doctest.h"

#include "gray2/theta2.hpp"
#include "gray2/twocat.hpp"

using namespace gray2;

TEST_CASE("realized cell shapes") {
  const TwoCatPtr pt = realize(parse_theta2("[0]()"));
  CHECK(pt->n_objects() == 1);

  const TwoCatPtr cell = realize(parse_theta2("[1](1)"));
  CHECK(cell->n_objects() == 2);
  CHECK(cell->hom(0, 1).n_objects() == 2);
  CHECK(cell->hom(0, 1).n_morphisms() == 3);
  CHECK(cell->hom(1, 0).n_objects() == 0);

  const TwoCatPtr pasted = realize(parse_theta2("[2](1,1)"));
  CHECK(pasted->n_objects() == 3);
  CHECK(pasted->hom(0, 2).n_objects() == 4);
  CHECK(pasted->hom(0, 2).n_morphisms() == 9);
  CHECK(pasted->all_homs_posetal());
}

TEST_CASE("horizontal composition respects the tables") {
  const TwoCatPtr x = realize(parse_theta2("[2](1,1)"));
  const FinCat& left = x->hom(0, 1);
  const FinCat& right = x->hom(1, 2);
  // interchange, exhaustively on the only composable triple
  for (int a = 0; a < left.n_morphisms(); ++a)
    for (int b = 0; b < left.n_morphisms(); ++b) {
      if (!left.composable(a, b)) continue;
      for (int c = 0; c < right.n_morphisms(); ++c)
        for (int d = 0; d < right.n_morphisms(); ++d) {
          if (!right.composable(c, d)) continue;
          const int lhs = x->hcomp_2cell(0, 1, 2, left.then(a, b), right.then(c, d));
          const int rhs = x->hom(0, 2).then(x->hcomp_2cell(0, 1, 2, a, c),
                                            x->hcomp_2cell(0, 1, 2, b, d));
          CHECK(lhs == rhs);
        }
    }
  // whiskering by an identity 1-cell is trivial on that side
  for (int a = 0; a < left.n_morphisms(); ++a)
    CHECK(x->whisker_post(0, 1, 1, a, x->identity_cell(1)) == a);
  for (int c = 0; c < right.n_morphisms(); ++c)
    CHECK(x->whisker_pre(1, 1, 2, x->identity_cell(1), c) == c);
}

TEST_CASE("two functor enumeration") {
  const TwoCatPtr arrow = realize(parse_theta2("[1](0)"));
  const TwoCatPtr cell = realize(parse_theta2("[1](1)"));
  CHECK(enumerate_two_functors(arrow, cell).size() == 4);
  CHECK(enumerate_two_functors(cell, cell).size() == 5);
  CHECK(enumerate_two_functors(cell, arrow).size() == 3);
}

TEST_CASE("free linear two categories") {
  CatGraph g;
  g.edges.push_back(make_cat(product_cat(ordinal_cat(1), ordinal_cat(1))));
  const TwoCatPtr f = free_linear(g);
  CHECK(f->n_objects() == 2);
  CHECK(f->hom(0, 1).n_objects() == 4);
  CHECK(f->hom(0, 1).n_morphisms() == 9);

  CatGraph two;
  two.edges.push_back(make_cat(ordinal_cat(1)));
  two.edges.push_back(make_cat(ordinal_cat(1)));
  const TwoCatPtr h = free_linear(two);
  // pasting of two 2-cells: hom(0,2) is the product of the edges
  CHECK(h->hom(0, 2).n_objects() == 4);
  CHECK(iso_two_cats(h, realize(parse_theta2("[2](1,1)"))).has_value());
}

TEST_CASE("cotensor by an ordinal") {
  const TwoCatPtr cell = realize(parse_theta2("[1](1)"));
  const TwoCatPtr ct = cotensor(cell, 1);
  CHECK(ct->n_objects() == 2);
  CHECK(ct->hom(0, 1).n_objects() == 3);
  CHECK(ct->hom(0, 1).n_morphisms() == 6);

  // cotensor by [0] returns the same two-category up to isomorphism
  CHECK(iso_two_cats(cotensor(cell, 0), cell).has_value());

  // evaluation at each vertex is a strict functor (validated on construction)
  const CotensorData data = cotensor_data(cell, 1);
  for (int r = 0; r <= 1; ++r) {
    const TwoFunctor ev = cotensor_eval(data, r);
    CHECK(ev.src->n_objects() == 2);
  }

  Budget tiny(3);
  CHECK_THROWS_AS(cotensor(cell, 2, &tiny), BudgetExceeded);
}

TEST_CASE("localization of 2-morphisms") {
  const FinCat loc = localize_2morphisms(*realize(parse_theta2("[2](1,1)")));
  CHECK(loc.n_objects() == 3);
  CHECK(loc.n_morphisms() == 6);  // each hom collapses to its components
  CHECK(pi0_count(loc) == 1);
}

TEST_CASE("segal decomposition of a free linear two category") {
  CatGraph g;
  g.edges.push_back(make_cat(ordinal_cat(1)));
  g.edges.push_back(make_cat(ordinal_cat(1)));
  const DiagramWithCocone d = segal_decomposition(g);
  CHECK(d.diagram.nodes.size() == 3);  // two edge pieces, one gluing point
  CHECK(d.cocone.legs.size() == d.diagram.nodes.size());

  const std::vector<NamedProbe> probes = {
      {"pt", realize(parse_theta2("[0]()"))},
      {"arrow", realize(parse_theta2("[1](0)"))},
      {"cell", realize(parse_theta2("[1](1)"))},
  };
  const PushoutReport pr = verify_pushout(d.diagram, d.cocone, probes);
  CHECK(pr.pass);
  REQUIRE(pr.probes.size() == 3);
  CHECK(pr.probes[0].apex_map_count == 1);
  CHECK(pr.probes[1].apex_map_count == 4);
  CHECK(pr.probes[2].apex_map_count == 8);
  for (const ProbeOutcome& p : pr.probes) CHECK(p.apex_map_count == p.limit_count);

  CHECK_THROWS_AS(segal_decomposition(CatGraph{}), std::invalid_argument);
}

TEST_CASE("pushout verifier rejects non commuting cocones") {
  const TwoCatPtr a = realize(parse_theta2("[1](0)"));
  SpanDiagram diagram;
  diagram.nodes = {a, a};
  diagram.edges.push_back({0, 1, TwoFunctor::identity(a)});
  Cocone cocone;
  cocone.apex = a;
  // leg 0 is the identity but leg 1 swaps the endpoints' images via the
  // constant functor, so the triangle over the edge does not commute
  const TwoFunctor collapse =
      posetal_functor(a, a, {0, 0}, std::vector<std::vector<int>>{{0}, {0}, {}, {0}});
  cocone.legs = {TwoFunctor::identity(a), collapse};
  CHECK_THROWS_AS(verify_pushout(diagram, cocone, {{"pt", realize(parse_theta2("[0]()"))}}),
                  std::invalid_argument);
}

TEST_CASE("duality involutions") {
  const TwoCatPtr x = realize(parse_theta2("[2](1,0)"));
  const TwoCatPtr xx = two_op(two_op(x));
  CHECK(iso_two_cats(x, xx).has_value());
  CHECK(two_op(x)->hom(0, 1).n_morphisms() == x->hom(0, 1).n_morphisms());

  const TwoCatPtr yy = one_op(one_op(x));
  CHECK(iso_two_cats(x, yy).has_value());
  // one_op flips the direction of 1-cells
  CHECK(one_op(x)->hom(1, 0).n_objects() == x->hom(0, 1).n_objects());
}

TEST_CASE("posetal functor construction") {
  const TwoCatPtr arrow = realize(parse_theta2("[1](0)"));
  const TwoCatPtr cell = realize(parse_theta2("[1](1)"));
  // dense form: one image list per ordered pair of source objects
  const TwoFunctor f =
      posetal_functor(arrow, cell, {0, 1}, std::vector<std::vector<int>>{{0}, {1}, {}, {0}});
  CHECK(f.hmap(0, 1).omap == std::vector<int>{1});

  // sparse form: pairs omitted from the map must need no data
  const TwoFunctor g = posetal_functor(arrow, cell, {0, 1},
                                       std::map<std::pair<int, int>, std::vector<int>>{
                                           {{0, 1}, {0}}});
  CHECK(g.hmap(0, 1).omap == std::vector<int>{0});

  // a non monotone image list is rejected by the hom functor validation
  CHECK_THROWS_AS(posetal_functor(cell, cell, {0, 1},
                                  std::vector<std::vector<int>>{{0}, {1, 0}, {}, {0}}),
                  std::invalid_argument);
}

TEST_CASE("products and relabelings") {
  const TwoCatPtr a = realize(parse_theta2("[1](0)"));
  const TwoCatPtr p = product_twocat(a, a);
  CHECK(p->n_objects() == 4);
  CHECK(p->hom(0, 3).n_objects() == 1);

  const TwoCatPtr d = discrete_twocat({"x", "y"});
  CHECK(d->hom(0, 1).n_objects() == 0);
  CHECK(d->hom(0, 0).n_objects() == 1);

  const TwoCatPtr r = relabel_objects(a, {1, 0}, {"one", "zero"});
  CHECK(r->object_label(0) == "one");
  CHECK(r->hom(1, 0).n_objects() == 1);  // the arrow now runs 1 -> 0
}
