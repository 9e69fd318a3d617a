#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "gray2/theta2.hpp"

using namespace gray2;

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("monotone ordinal maps") {
  // |Hom([m],[n])| counts weakly increasing (m+1)-tuples in {0..n}
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(all_delta_mors(m, n).size() == static_cast<size_t>(binomial(m + n + 1, m + 1)));
    }

  CHECK_THROWS_AS(DeltaMor(1, 1, {1, 0}), std::invalid_argument);  // not monotone
  CHECK_THROWS_AS(DeltaMor(1, 1, {0, 2}), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(DeltaMor(1, 1, {0}), std::invalid_argument);     // wrong arity

  const DeltaMor id2 = DeltaMor::identity(2);
  CHECK(id2.is_inert());
  CHECK(id2.is_active());
  CHECK(DeltaMor(1, 3, {1, 2}).is_inert());
  CHECK_FALSE(DeltaMor(1, 3, {1, 2}).is_active());
  CHECK(DeltaMor(2, 1, {0, 1, 1}).is_active());
  CHECK_FALSE(DeltaMor(2, 1, {0, 1, 1}).is_inert());
}

TEST_CASE("ordinal map composition") {
  const DeltaMor f(1, 2, {0, 2});
  const DeltaMor g(2, 3, {1, 1, 3});
  const DeltaMor gf = compose(g, f);
  CHECK(gf.src_n == 1);
  CHECK(gf.tgt_n == 3);
  CHECK(gf.values == std::vector<int>{1, 3});
  CHECK_THROWS_AS(compose(f, g), std::invalid_argument);

  // associativity over a small exhaustive grid
  for (const DeltaMor& a : all_delta_mors(1, 1))
    for (const DeltaMor& b : all_delta_mors(1, 2))
      for (const DeltaMor& c : all_delta_mors(2, 1))
        CHECK(compose(c, compose(b, a)) == compose(compose(c, b), a));
}

TEST_CASE("shape notation") {
  CHECK(to_notation(Theta2Obj(std::vector<int>{})) == "[0]()");
  CHECK(to_notation(Theta2Obj({1, 0})) == "[2](1,0)");
  CHECK(parse_theta2("[2](1,0)") == Theta2Obj({1, 0}));
  for (const Theta2Obj& o : bounded_objects(2, 2)) CHECK(parse_theta2(to_notation(o)) == o);

  CHECK_THROWS_AS(parse_theta2("[2](1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_theta2("2](1,0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_theta2("[1](-1)"), std::invalid_argument);

  CHECK(bounded_objects(2, 2).size() == 13);
  CHECK(bounded_objects(0, 5).size() == 1);
}

TEST_CASE("cell shape morphisms validate their inner maps") {
  const Theta2Obj c2({1});
  // psi key outside the window of phi
  CHECK_THROWS_AS(Theta2Mor(c2, c2, DeltaMor::identity(1),
                            {{{1, 1}, DeltaMor::identity(1)}, {{0, 1}, DeltaMor::identity(1)}}),
                  std::invalid_argument);
  // missing psi for a covered window
  CHECK_THROWS_AS(Theta2Mor(c2, c2, DeltaMor::identity(1), {}), std::invalid_argument);
  // psi with the wrong ordinal endpoints
  CHECK_THROWS_AS(Theta2Mor(c2, c2, DeltaMor::identity(1), {{{1, 1}, DeltaMor::identity(2)}}),
                  std::invalid_argument);

  const Theta2Mor id = Theta2Mor::identity(c2);
  CHECK(id.inner_source(1) == 1);
  CHECK(compose(id, id) == id);
}

TEST_CASE("inner_source solves the window condition") {
  const Theta2Obj src({1, 2});
  const Theta2Obj tgt({2, 0, 1});
  for (const Theta2Mor& f : all_theta2_mors(src, tgt))
    for (int j = 1; j <= tgt.k(); ++j) {
      const int i = f.inner_source(j);
      if (i == -1) {
        // j lies outside every window: no i with phi(i-1) < j <= phi(i)
        for (int cand = 1; cand <= src.k(); ++cand) {
          const bool in_window = f.phi(cand - 1) < j && j <= f.phi(cand);
          CHECK_FALSE(in_window);
        }
      } else {
        CHECK(f.phi(i - 1) < j);
        CHECK(j <= f.phi(i));
      }
    }
}

TEST_CASE("inert active factorization is unique over bounded middles") {
  const Theta2Obj c2({1});
  const std::vector<Theta2Obj> middles = bounded_objects(2, 2);
  for (const Theta2Mor& f : all_theta2_mors(c2, Theta2Obj({1, 1}))) {
    const InertActiveFactorization fac = factorize_inert_active(f);
    CHECK(classify(fac.active_part).active);
    CHECK(classify(fac.inert_part).inert);
    CHECK(compose(fac.inert_part, fac.active_part) == f);

    // brute force: exactly one (middle, active, inert) decomposition
    int decompositions = 0;
    for (const Theta2Obj& m : middles)
      for (const Theta2Mor& a : all_theta2_mors(c2, m)) {
        if (!classify(a).active) continue;
        for (const Theta2Mor& i : all_theta2_mors(m, Theta2Obj({1, 1}))) {
          if (!classify(i).inert) continue;
          if (compose(i, a) == f) ++decompositions;
        }
      }
    CHECK(decompositions == 1);
  }
}

TEST_CASE("classification of identities and composites") {
  for (const Theta2Obj& o : bounded_objects(2, 1)) {
    const MorClass c = classify(Theta2Mor::identity(o));
    CHECK(c.inert);
    CHECK(c.active);
  }
  // composing two inert maps stays inert, two active maps active
  const Theta2Obj a({1}), b({1, 1});
  for (const Theta2Mor& f : all_theta2_mors(a, b))
    for (const Theta2Mor& g : all_theta2_mors(b, b)) {
      const Theta2Mor gf = compose(g, f);
      if (classify(f).inert && classify(g).inert) CHECK(classify(gf).inert);
      if (classify(f).active && classify(g).active) CHECK(classify(gf).active);
    }
}

TEST_CASE("tau shapes and morphisms") {
  CHECK(tau(2, 1) == Theta2Obj({1, 1}));
  CHECK(tau(0, 3) == Theta2Obj(std::vector<int>{}));

  const DeltaMor phi(1, 2, {0, 2});
  const DeltaMor psi(1, 1, {0, 1});
  const Theta2Mor t = tau_mor(phi, psi);
  CHECK(t.src == tau(1, 1));
  CHECK(t.tgt == tau(2, 1));
  CHECK(t.phi == phi);

  // functorial in both coordinates
  const DeltaMor phi2(2, 2, {0, 1, 2});
  const DeltaMor psi2(1, 1, {0, 0});
  CHECK(compose(tau_mor(phi2, psi2), tau_mor(phi, psi)) ==
        tau_mor(compose(phi2, phi), compose(psi2, psi)));
}

TEST_CASE("shape dualities") {
  const Theta2Obj o({2, 0, 1});
  const TwoOpObj t = two_op_obj(o);
  CHECK(t.obj == o);
  REQUIRE(t.reversal.size() == 3);
  CHECK(t.reversal[0] == std::vector<int>{2, 1, 0});
  CHECK(t.reversal[2] == std::vector<int>{1, 0});

  CHECK(one_op_obj(o) == Theta2Obj({1, 0, 2}));
  CHECK(one_op_obj(one_op_obj(o)) == o);
}

TEST_CASE("hom cardinalities factor over windows") {
  // a morphism is phi plus an independent inner map per window, so the counts
  // multiply; check against the direct enumeration
  const Theta2Obj src({1, 1});
  const Theta2Obj tgt({2, 1});
  size_t expected = 0;
  for (const DeltaMor& phi : all_delta_mors(2, 2)) {
    size_t ways = 1;
    for (int j = 1; j <= tgt.k(); ++j) {
      int i = -1;
      for (int cand = 1; cand <= src.k(); ++cand)
        if (phi(cand - 1) < j && j <= phi(cand)) i = cand;
      if (i != -1) ways *= all_delta_mors(src.n(i), tgt.n(j)).size();
    }
    expected += ways;
  }
  CHECK(all_theta2_mors(src, tgt).size() == expected);
}
