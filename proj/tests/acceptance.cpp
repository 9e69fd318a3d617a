// Acceptance gate: one line per criterion, exit code counts the failures.
// Each criterion carries the time limit it must meet on a stock desktop.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "gray2/gray.hpp"
#include "gray2/mates.hpp"
#include "gray2/phi.hpp"
#include "gray2/suites.hpp"

using namespace gray2;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

int failures = 0;

void run(int number, const char* label, long limit_ms, Outcome (*body)()) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const long took = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  bool pass = out.pass;
  if (limit_ms > 0 && took >= limit_ms) {
    pass = false;
    out.detail += "; over the time limit";
  }
  if (!pass) ++failures;
  if (limit_ms > 0)
    std::printf("criterion %2d (%s): %s (%s; %ld ms, limit %ld ms)\n", number, label,
                pass ? "PASS" : "FAIL", out.detail.c_str(), took, limit_ms);
  else
    std::printf("criterion %2d (%s): %s (%s; %ld ms)\n", number, label, pass ? "PASS" : "FAIL",
                out.detail.c_str(), took);
  std::fflush(stdout);
}

Outcome shuffle_counts() {
  bool ok = true;
  int corners = 0;
  for (int k = 0; k <= 6; ++k)
    for (int m = 0; m <= 6; ++m) {
      ++corners;
      const long expect = binomial(k + m, k);
      ok = ok && static_cast<long>(enumerate_paths(k, m).size()) == expect;
      ok = ok && static_cast<long>(max_chain_poset(k, m).size()) == expect;
    }
  return {ok, std::to_string(corners) + " grid corners against the binomial"};
}

Outcome tensor_square() {
  const Theta2Obj c1 = parse_theta2("[1](0)");
  const GrayData g = gray_colax_data(c1, c1);
  bool ok = g.cat->n_objects() == 4;

  const FinCat& diag = g.cat->hom(g.obj(0, 0), g.obj(1, 1));
  ok = ok && diag.n_objects() == 2 && diag.n_morphisms() == 3;
  const GrayHom& hd = g.hom_data(g.obj(0, 0), g.obj(1, 1));
  ok = ok && hd.paths.size() == 2 && hd.paths[0].steps == "HV" && hd.paths[1].steps == "VH";
  ok = ok && diag.unique_mor(hd.encode(0, 0, 0), hd.encode(1, 0, 0)) >= 0;
  ok = ok && diag.homset(hd.encode(1, 0, 0), hd.encode(0, 0, 0)).empty();

  for (int x = 0; x < 4 && ok; ++x)
    for (int y = 0; y < 4 && ok; ++y) {
      if (x == g.obj(0, 0) && y == g.obj(1, 1)) continue;
      ok = g.cat->hom(x, y).n_objects() <= 1 && g.cat->hom(x, y).n_morphisms() <= 1;
    }
  return {ok, "4 objects, diagonal hom a 2-element chain, all other homs subterminal"};
}

Outcome tensor_cylinder() {
  Budget budget(400'000'000LL);
  const TwoCatPtr g = gray_colax(parse_theta2("[1](1)"), parse_theta2("[1](0)"));
  const FinCat& diag = g->hom(0, 3);
  const FinCat square = product_cat(ordinal_cat(1), ordinal_cat(1));
  bool ok = diag.n_objects() == 4;
  ok = ok && cat_iso(make_cat(diag), make_cat(square), &budget).has_value();
  const FinCat loc = localize_2morphisms(*g);
  ok = ok && cat_iso(make_cat(loc), make_cat(square), &budget).has_value();
  return {ok, "diagonal hom and the localization both match the product square"};
}

Outcome tensor_decompositions() {
  Budget budget(400'000'000LL);
  const std::vector<NamedProbe> probes = default_probes();
  bool ok = true;
  for (GrayDecompCase c :
       {GrayDecompCase::square, GrayDecompCase::cylinder, GrayDecompCase::cube})
    ok = ok && check_graytenscolim(c, probes, false, &budget).pass;
  return {ok, "square, cylinder and cube pushouts exact at all " +
                  std::to_string(probes.size()) + " probes"};
}

Outcome linear_shape_pushouts() {
  const Config cfg;
  const RunReport r = run_segal(cfg);
  return {r.pass, std::to_string(r.checks.size()) + " linear shapes, all probes exact"};
}

Outcome comparison_generators() {
  bool ok =
      iso_two_cats(phi_obj(parse_theta2("[1](0)"), 1), realize(parse_theta2("[1](1)")))
          .has_value();
  CatGraph sq;
  sq.edges.push_back(make_cat(product_cat(ordinal_cat(1), ordinal_cat(1))));
  ok = ok && iso_two_cats(phi_obj(parse_theta2("[1](1)"), 1), free_linear(sq)).has_value();
  return {ok, "both generator isomorphisms found"};
}

Outcome comparison_naturality() {
  const std::vector<Theta2Obj> shapes = bounded_objects(2, 2);
  bool ok = true;
  size_t cases = 0, pairs = 0;
  for (const Theta2Obj& src : shapes)
    for (int m_src = 0; m_src <= 2; ++m_src) {
      const GrayData g = gray_colax_data(src, bar_obj(m_src));
      const PhiData p = phi_data(src, m_src);
      const TwoFunctor n = nu(g, p);
      ok = ok && nu_image(g, p, n).pass();
      ++cases;
      for (const Theta2Obj& tgt : shapes)
        for (const Theta2Mor& f : all_theta2_mors(src, tgt))
          for (int m_tgt = 0; m_tgt <= 2; ++m_tgt)
            for (const DeltaMor& mu : all_delta_mors(m_src, m_tgt)) {
              ++pairs;
              ok = ok && nu_natural_at(f, mu, g);
            }
    }
  ok = ok && cases == 39 && pairs == 168919;
  return {ok, std::to_string(cases) + " instances valid, " + std::to_string(pairs) +
                  " naturality squares commute"};
}

Outcome ordinal_collapse_pushout() {
  Budget budget(400'000'000LL);
  const std::vector<NamedProbe> probes = default_probes();
  const Theta2Obj c1 = parse_theta2("[1](0)");
  const Theta2Obj c2 = parse_theta2("[1](1)");
  bool ok = check_odot_pushout(c1, 1, probes, false, &budget).pass;
  ok = ok && check_odot_pushout(c2, 1, probes, false, &budget).pass;
  ok = ok && !check_odot_pushout(c1, 1, probes, true, &budget).pass;
  ok = ok && !check_odot_pushout(c2, 1, probes, true, &budget).pass;
  return {ok, "both generators pass, both collapsed variants fail"};
}

Outcome mate_calculus() {
  Budget budget(400'000'000LL);
  const TwoCatPtr bed = pos_twocat(bounded_posets(3));
  const std::vector<AdjunctionData> adjs = find_adjunctions(bed, &budget);
  bool ok = adjs.size() == 61;
  for (const AdjunctionData& a : adjs) ok = ok && check_triangle(a);

  size_t squares = 0;
  for (const AdjunctionData& va : adjs)
    for (const AdjunctionData& vb : adjs)
      for (const Square2& sq : colax_squares_between(va, vb)) {
        ++squares;
        if (!(mate(mate(sq, va, vb), va, vb) == sq)) ok = false;
      }
  ok = ok && squares == 149275;

  const TwoCatPtr chains = pos_twocat({ordinal_poset(0), ordinal_poset(1)});
  const std::vector<AdjunctionData> cadjs = find_adjunctions(chains, &budget);
  size_t pasted = 0;
  for (const AdjunctionData& va : cadjs)
    for (const AdjunctionData& vm : cadjs)
      for (const AdjunctionData& vb : cadjs)
        for (const Square2& ls : colax_squares_between(va, vm))
          for (const Square2& rs : colax_squares_between(vm, vb)) {
            ++pasted;
            if (!(mate(hpaste(ls, rs), va, vb) ==
                  hpaste(mate(ls, va, vm), mate(rs, vm, vb))))
              ok = false;
          }
  ok = ok && pasted == 1674;
  return {ok, std::to_string(adjs.size()) + " adjunctions, " + std::to_string(squares) +
                  " squares mate back, " + std::to_string(pasted) + " pasted pairs agree"};
}

Outcome duality() {
  Budget budget(400'000'000LL);
  const std::vector<Theta2Obj> shapes = bounded_objects(2, 1);
  bool ok = true;
  size_t n = 0;
  for (const Theta2Obj& i : shapes)
    for (const Theta2Obj& j : shapes) {
      ++n;
      ok = ok && iso_two_cats(two_op(gray_lax(i, j)), gray_colax(i, j), &budget).has_value();
    }
  ok = ok && n == 49;
  return {ok, std::to_string(n) + " shape pairs exchanged by the 2-cell duality"};
}

Outcome localization() {
  Budget budget(400'000'000LL);
  bool ok = true;
  size_t n = 0;
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      ++n;
      const Theta2Obj i(std::vector<int>(k, 0));
      const Theta2Obj j(std::vector<int>(l, 0));
      const FinCat loc = localize_2morphisms(*gray_colax(i, j));
      ok = ok &&
           cat_iso(make_cat(loc), make_cat(product_cat(ordinal_cat(k), ordinal_cat(l))),
                   &budget)
               .has_value();
    }
  return {ok, std::to_string(n) + " ordinal pairs recover the product category"};
}

Outcome negative_controls() {
  Config cfg;
  cfg.corrupt = true;
  const std::vector<RunReport> reports = run_suite("all", cfg);
  bool ok = reports.size() == 5;
  int witnessed = 0;
  for (const RunReport& r : reports) {
    bool has_witness = false;
    for (const CheckResult& c : r.checks)
      if (!c.pass && !c.detail.empty()) has_witness = true;
    if (!r.pass && has_witness) ++witnessed;
    ok = ok && !r.pass && has_witness;
  }
  return {ok, std::to_string(witnessed) + " of 5 suites fail with a concrete witness"};
}

}  // namespace

int main() {
  run(1, "shuffle counts", 1000, shuffle_counts);
  run(2, "tensor square", 1000, tensor_square);
  run(3, "tensor cylinder", 5000, tensor_cylinder);
  run(4, "tensor decompositions", 120000, tensor_decompositions);
  run(5, "linear shape pushouts", 60000, linear_shape_pushouts);
  run(6, "comparison generators", 1000, comparison_generators);
  run(7, "comparison naturality", 60000, comparison_naturality);
  run(8, "ordinal collapse pushout", 30000, ordinal_collapse_pushout);
  run(9, "mate calculus", 120000, mate_calculus);
  run(10, "duality", 60000, duality);
  run(11, "localization", 10000, localization);
  run(12, "negative controls", 0, negative_controls);
  std::printf("%d of 12 criteria pass\n", 12 - failures);
  return failures;
}
