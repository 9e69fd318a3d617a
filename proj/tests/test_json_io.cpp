#include <string>

#include "doctest.h"

#include "gray2/gray.hpp"
#include "gray2/json_io.hpp"
#include "gray2/mates.hpp"
#include "gray2/phi.hpp"

using namespace gray2;

TEST_CASE("poset emitters") {
  auto pj = poset_to_json(max_chain_poset(1, 1));
  CHECK(pj["elements"].size() == 2);
  CHECK(pj["covers"].size() == 1);
  CHECK(poset_to_json(max_chain_poset(3, 2))["elements"].size() == 10);

  // a single shuffle gives one node and no edges
  const std::string d = poset_dot(max_chain_poset(0, 5));
  CHECK(d.find("n0") != std::string::npos);
  CHECK(d.find("->") == std::string::npos);
}

TEST_CASE("category round trip") {
  const FinCat ord2 = ordinal_cat(2);
  const FinCat back = cat_from_json(cat_to_json(ord2));
  CHECK(back.n_objects() == 3);
  CHECK(back.n_morphisms() == 6);
  CHECK(cat_iso(make_cat(ord2), make_cat(back)).has_value());
}

TEST_CASE("two category round trip") {
  const TwoCatPtr g = gray_colax(parse_theta2("[1](1)"), parse_theta2("[1](0)"));
  const TwoCatPtr g2 = twocat_from_json(twocat_to_json(*g));
  REQUIRE(g->n_objects() == g2->n_objects());
  for (int x = 0; x < g->n_objects(); ++x)
    for (int y = 0; y < g->n_objects(); ++y) {
      CHECK(g->hom(x, y).n_objects() == g2->hom(x, y).n_objects());
      CHECK(g->hom(x, y).n_morphisms() == g2->hom(x, y).n_morphisms());
    }
  CHECK(iso_two_cats(g, g2).has_value());

  // serialization is deterministic
  CHECK(twocat_to_json(*g).dump(2) ==
        twocat_to_json(*gray_colax(parse_theta2("[1](1)"), parse_theta2("[1](0)"))).dump(2));
}

TEST_CASE("functor dump") {
  const TwoFunctor n = nu(parse_theta2("[1](1)"), 1);
  auto fj = two_functor_to_json(n);
  CHECK(fj["omap"].size() == static_cast<size_t>(n.src->n_objects()));
}

TEST_CASE("adjunction and square round trip") {
  const TwoCatPtr sign = sign_ambient();
  const auto adjs = find_adjunctions(sign);
  REQUIRE(adjs.size() == 2);
  const AdjunctionData a = adjunction_from_json(adjunction_to_json(adjs[1]), sign);
  CHECK(a.unit == adjs[1].unit);
  CHECK(a.counit == adjs[1].counit);

  const TwoCatPtr bed = pos_twocat({ordinal_poset(0), ordinal_poset(1)});
  const auto bed_adjs = find_adjunctions(bed);
  REQUIRE(bed_adjs.size() == 5);
  const auto squares = colax_squares_between(bed_adjs[0], bed_adjs[1]);
  REQUIRE(!squares.empty());
  const Square2 sq = square_from_json(square_to_json(squares[0]), bed);
  CHECK(sq.filler == squares[0].filler);
  CHECK(sq.direction == squares[0].direction);
}

TEST_CASE("whole input files") {
  const TwoCatPtr sign = sign_ambient();
  {
    nlohmann::json file;
    file["twocat"] = twocat_to_json(*sign);
    const TwoCatPtr parsed = parse_find_input(file.dump());
    CHECK(find_adjunctions(parsed).size() == 2);
  }
  {
    const TwoCatPtr bed = pos_twocat({ordinal_poset(0), ordinal_poset(1)});
    const auto bed_adjs = find_adjunctions(bed);
    const auto squares = colax_squares_between(bed_adjs[0], bed_adjs[1]);
    nlohmann::json file;
    file["twocat"] = twocat_to_json(*bed);
    file["square"] = square_to_json(squares[0]);
    file["left_adjunction"] = adjunction_to_json(bed_adjs[0]);
    file["right_adjunction"] = adjunction_to_json(bed_adjs[1]);
    const MateInput in = parse_mate_input(file.dump());
    const Square2 m = mate(in.square, in.left_adj, in.right_adj);
    CHECK(m.direction == Square2::Dir::lax);
    CHECK(mate(m, in.left_adj, in.right_adj) == in.square);
  }
}

TEST_CASE("malformed inputs") {
  CHECK_THROWS_AS(parse_find_input("{\"twoca\": 1}"), std::invalid_argument);

  bool prefixed = false;
  try {
    parse_find_input("not json");
  } catch (const std::invalid_argument& e) {
    prefixed = std::string(e.what()).find("bad JSON") == 0;
  }
  CHECK(prefixed);

  nlohmann::json bad = cat_to_json(ordinal_cat(2));
  bad["morphisms"][0]["src"] = 99;
  CHECK_THROWS_AS(cat_from_json(bad), std::invalid_argument);

  nlohmann::json not_int = cat_to_json(ordinal_cat(1));
  not_int["identities"][0] = "zero";
  CHECK_THROWS_AS(cat_from_json(not_int), std::invalid_argument);
}

TEST_CASE("text and dot output") {
  const TwoCatPtr g = gray_colax(parse_theta2("[1](1)"), parse_theta2("[1](0)"));
  CHECK(twocat_text(*g).find("hom(") != std::string::npos);

  const auto bed_adjs = find_adjunctions(pos_twocat({ordinal_poset(0), ordinal_poset(1)}));
  CHECK(adjunction_text(bed_adjs[0]).find("unit") != std::string::npos);

  CHECK(cat_dot(ordinal_cat(2)).find("label") != std::string::npos);
  const std::string td = twocat_dot(*g);
  CHECK(td.find("digraph") != std::string::npos);
}
