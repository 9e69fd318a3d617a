#include <array>
#include <vector>

#include "doctest.h"

#include "gray2/fincat.hpp"

using namespace gray2;

TEST_CASE("ordinal categories and poset categories") {
  const FinCat o2 = ordinal_cat(2);
  CHECK(o2.n_objects() == 3);
  CHECK(o2.n_morphisms() == 6);
  CHECK(o2.is_posetal());
  CHECK(o2.then(o2.unique_mor(0, 1), o2.unique_mor(1, 2)) == o2.unique_mor(0, 2));

  // from_poset of the underlying poset is the same category
  CHECK(cat_iso(make_cat(o2), from_poset_ptr(ordinal_poset(2))).has_value());

  CHECK(terminal_cat().n_morphisms() == 1);
  CHECK(discrete_cat(4).n_objects() == 4);
  CHECK(discrete_cat(4).n_morphisms() == 4);
}

TEST_CASE("category constructor rejects broken data") {
  using Mor = FinCat::Mor;
  const std::vector<std::string> objs{"a", "b"};
  const std::vector<Mor> mors{{0, 0, "ida"}, {1, 1, "idb"}, {0, 1, "f"}};
  // missing composite ida;f
  CHECK_THROWS_AS(FinCat(objs, mors, {0, 1},
                         std::vector<std::array<int, 3>>{{0, 0, 0}, {1, 1, 1}, {2, 1, 2}}),
                  std::invalid_argument);
  // wrong identity law: ida;f = ida is not even composable on the target side
  CHECK_THROWS_AS(FinCat(objs, mors, {0, 1},
                         std::vector<std::array<int, 3>>{
                             {0, 0, 0}, {1, 1, 1}, {0, 2, 0}, {2, 1, 2}}),
                  std::invalid_argument);
  // identity index pointing at a non-endomorphism
  CHECK_THROWS_AS(FinCat(objs, mors, {2, 1},
                         std::vector<std::array<int, 3>>{
                             {0, 0, 0}, {1, 1, 1}, {0, 2, 2}, {2, 1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("products opposites and components") {
  const FinCat p = product_cat(ordinal_cat(1), ordinal_cat(1));
  CHECK(p.n_objects() == 4);
  CHECK(p.n_morphisms() == 9);
  CHECK(p.is_posetal());

  const FinCat op = opposite(ordinal_cat(2));
  CHECK(op.n_morphisms() == 6);
  CHECK(op.has_mor(2, 0));
  CHECK_FALSE(op.has_mor(0, 2));
  CHECK(cat_iso(make_cat(opposite(op)), make_cat(ordinal_cat(2))).has_value());

  CHECK(pi0_count(discrete_cat(3)) == 3);
  CHECK(pi0_count(ordinal_cat(2)) == 1);
  CHECK(pi0_count(product_cat(discrete_cat(2), ordinal_cat(1))) == 2);
}

TEST_CASE("homsets and uniqueness queries") {
  const FinCat o1 = ordinal_cat(1);
  CHECK(o1.homset(0, 1).size() == 1);
  CHECK(o1.homset(1, 0).empty());
  CHECK(o1.unique_mor(1, 0) == -1);

  const FinCat two = product_cat(ordinal_cat(1), ordinal_cat(1));
  CHECK(two.unique_mor(0, 3) >= 0);  // the diagonal of the square is unique
  CHECK(two.morphisms_from(0).size() == 4);
}

TEST_CASE("functor enumeration counts monotone maps between chains") {
  const CatPtr a = make_cat(ordinal_cat(1));
  const CatPtr b = make_cat(ordinal_cat(2));
  CHECK(all_functors(a, a).size() == 3);
  CHECK(all_functors(b, b).size() == 10);
  CHECK(all_functors(a, b).size() == 6);
  CHECK(all_functors(make_cat(discrete_cat(2)), make_cat(discrete_cat(3))).size() == 9);
}

TEST_CASE("functor category of two chains is the pointwise order") {
  const CatPtr a = make_cat(ordinal_cat(1));
  const FunctorCatData fc = functor_cat(a, a);
  CHECK(fc.objects.size() == 3);
  CHECK(fc.cat->n_objects() == 3);
  CHECK(fc.cat->n_morphisms() == 6);  // the three maps form a chain
  CHECK(fc.cat->is_posetal());
}

TEST_CASE("functor validation") {
  const CatPtr a = make_cat(ordinal_cat(1));
  // mmap must respect sources and targets
  CHECK_THROWS_AS(FinFunctor::make(a, a, {0, 1}, {0, 0, 1}), std::invalid_argument);
  const FinFunctor id = FinFunctor::identity(a);
  CHECK(compose(id, id).equal_maps(id));

  const FinFunctor flip_target = FinFunctor::make(a, a, {0, 0}, {0, 0, 0});
  CHECK_FALSE(flip_target.equal_maps(id));
}

TEST_CASE("category isomorphism search") {
  CHECK(cat_iso(make_cat(ordinal_cat(2)), make_cat(ordinal_cat(2))).has_value());
  CHECK_FALSE(cat_iso(make_cat(ordinal_cat(2)), make_cat(discrete_cat(3))).has_value());
  CHECK_FALSE(cat_iso(make_cat(ordinal_cat(1)), make_cat(ordinal_cat(2))).has_value());
}

TEST_CASE("budgets abort long searches") {
  Budget tiny(5);
  for (int i = 0; i < 5; ++i) tiny.spend("warmup");
  CHECK_THROWS_AS(tiny.spend("over"), BudgetExceeded);

  Budget small(10);
  CHECK_THROWS_AS(all_functors(make_cat(ordinal_cat(2)), make_cat(ordinal_cat(2)), &small),
                  BudgetExceeded);
}
