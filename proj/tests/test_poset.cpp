#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"

#include "gray2/poset.hpp"

using namespace gray2;

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Independent cover count for the shuffle poset: each adjacent "HV" pair in a
// path can be swapped to "VH", and those swaps are exactly the covers.
int swap_cover_count(int k, int m) {
  int covers = 0;
  for (const LatticePath& p : enumerate_paths(k, m))
    for (size_t i = 0; i + 1 < p.steps.size(); ++i)
      if (p.steps[i] == 'H' && p.steps[i + 1] == 'V') ++covers;
  return covers;
}

}  // namespace

TEST_CASE("ordinal and interval posets") {
  const FinPoset o5 = ordinal_poset(5);
  CHECK(o5.size() == 6);
  CHECK(o5.strict_pair_count() == 15);
  CHECK(o5.pair_count() == 21);
  CHECK(o5.cover_relations().size() == 5);

  const FinPoset iv = interval_poset(2, 4);
  CHECK(iv.size() == 3);
  CHECK(poset_iso(iv, ordinal_poset(2)).has_value());
  CHECK(iv.label(0) == "2");

  CHECK(antichain_poset(4).strict_pair_count() == 0);
  CHECK(antichain_poset(0).size() == 0);
}

TEST_CASE("poset constructor validates the axioms") {
  // missing reflexivity
  CHECK_THROWS_AS(FinPoset({"a"}, {{false}}), std::invalid_argument);
  // a <= b <= a with a != b
  CHECK_THROWS_AS(FinPoset({"a", "b"}, {{true, true}, {true, true}}), std::invalid_argument);
  // transitivity gap: a <= b, b <= c, not a <= c
  CHECK_THROWS_AS(FinPoset({"a", "b", "c"}, {{true, true, false},
                                             {false, true, true},
                                             {false, false, true}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FinPoset({"x", "x"}, {{true, false}, {false, true}}), std::invalid_argument);
}

TEST_CASE("products multiply sizes and order pairs componentwise") {
  const FinPoset p = product(ordinal_poset(2), ordinal_poset(3));
  CHECK(p.size() == 12);
  CHECK(p.pair_count() == 60);  // 6 comparable pairs in [2] times 10 in [3]

  // index layout: first factor is the most significant digit
  CHECK(p.leq(0 * 4 + 1, 1 * 4 + 2));
  CHECK_FALSE(p.leq(1 * 4 + 0, 0 * 4 + 3));

  const FinPoset single = product_multi({});
  CHECK(single.size() == 1);

  ProductShape shape({3, 4, 2});
  CHECK(shape.total() == 24);
  for (int i = 0; i < shape.total(); ++i) CHECK(shape.index(shape.tuple(i)) == i);
}

TEST_CASE("lattice path enumeration matches binomial counts") {
  for (int k = 0; k <= 6; ++k)
    for (int m = 0; m <= 6; ++m) {
      CAPTURE(k);
      CAPTURE(m);
      CHECK(enumerate_paths(k, m).size() == static_cast<size_t>(binomial(k + m, k)));
      CHECK(max_chain_poset(k, m).size() == static_cast<int>(binomial(k + m, k)));
    }
  // lexicographic element order with H < V
  const auto paths = enumerate_paths(2, 1);
  CHECK(paths[0].steps == "HHV");
  CHECK(paths[1].steps == "HVH");
  CHECK(paths[2].steps == "VHH");
}

TEST_CASE("dominance order via prefix counts") {
  // p <= q iff every prefix of p has at most as many V steps as q's prefix
  const auto paths = enumerate_paths(3, 3);
  for (const LatticePath& p : paths)
    for (const LatticePath& q : paths) {
      bool dominated = true;
      int pv = 0, qv = 0;
      for (size_t i = 0; i < p.steps.size(); ++i) {
        pv += p.steps[i] == 'V';
        qv += q.steps[i] == 'V';
        if (pv > qv) dominated = false;
      }
      CHECK(path_leq(p, q) == dominated);
    }
}

TEST_CASE("shuffle poset covers are single swaps") {
  for (int k = 0; k <= 3; ++k)
    for (int m = 0; m <= 3; ++m) {
      CAPTURE(k);
      CAPTURE(m);
      CHECK(static_cast<int>(max_chain_poset(k, m).cover_relations().size()) ==
            swap_cover_count(k, m));
    }
  CHECK(max_chain_poset(2, 2).cover_relations().size() == 6);
}

TEST_CASE("path operations") {
  const LatticePath p("HV"), q("VH");
  CHECK(concat_paths(p, q).steps == "HVVH");
  CHECK(concat_paths(p, q).h_count() == 2);
  CHECK(transpose_path(p).steps == "VH");
  CHECK(transpose_path(transpose_path(q)) == q);

  // transposition reverses dominance
  for (const LatticePath& a : enumerate_paths(2, 2))
    for (const LatticePath& b : enumerate_paths(2, 2))
      CHECK(path_leq(a, b) == path_leq(transpose_path(b), transpose_path(a)));

  CHECK_THROWS_AS(LatticePath("HX"), std::invalid_argument);
}

TEST_CASE("poset isomorphism search") {
  CHECK(poset_iso(product(ordinal_poset(2), ordinal_poset(1)),
                  product(ordinal_poset(1), ordinal_poset(2)))
            .has_value());
  CHECK_FALSE(poset_iso(ordinal_poset(2), antichain_poset(3)).has_value());
  CHECK_FALSE(poset_iso(ordinal_poset(1), ordinal_poset(2)).has_value());

  // the shuffle poset of (1,1) is the 2-chain
  CHECK(poset_iso(max_chain_poset(1, 1), ordinal_poset(1)).has_value());
  // and (2,2) is not a chain: it has an incomparable pair
  const FinPoset s22 = max_chain_poset(2, 2);
  bool incomparable = false;
  for (int a = 0; a < s22.size(); ++a)
    for (int b = 0; b < s22.size(); ++b)
      if (a != b && !s22.leq(a, b) && !s22.leq(b, a)) incomparable = true;
  CHECK(incomparable);
}
