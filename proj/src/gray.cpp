#include "gray2/gray.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace gray2 {

namespace {

// Object counts of the hom of a realization between grid rows a <= b: one
// interval category per crossed edge.
std::vector<int> hom_dims(const Theta2Obj& o, int a, int b) {
  std::vector<int> dims;
  for (int s = a + 1; s <= b; ++s) dims.push_back(o.n(s) + 1);
  return dims;
}

std::string path_label(const LatticePath& p) { return p.steps.empty() ? "e" : p.steps; }

// Reachability matrix of a posetal category, one scan over its morphisms.
std::vector<std::vector<bool>> le_matrix(const FinCat& c) {
  std::vector<std::vector<bool>> le(c.n_objects(), std::vector<bool>(c.n_objects(), false));
  for (int m = 0; m < c.n_morphisms(); ++m) le[c.src(m)][c.tgt(m)] = true;
  return le;
}

// Unique-morphism lookup table for a posetal category, -1 where empty.
std::vector<int> mor_table(const FinCat& c) {
  std::vector<int> t(static_cast<size_t>(c.n_objects()) * c.n_objects(), -1);
  for (int m = 0; m < c.n_morphisms(); ++m)
    t[static_cast<size_t>(c.src(m)) * c.n_objects() + c.tgt(m)] = m;
  return t;
}

}  // namespace

GrayData gray_colax_data(const Theta2Obj& I, const Theta2Obj& J) {
  GrayData d;
  d.I = I;
  d.J = J;
  d.icat = realize(I);
  d.jcat = realize(J);
  d.rows = I.k() + 1;
  d.cols = J.k() + 1;
  const int n = d.rows * d.cols;

  std::vector<std::string> objects(n);
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j)
      objects[d.obj(i, j)] = std::to_string(i) + std::to_string(j);

  d.homs.resize(static_cast<size_t>(n) * n);
  std::vector<CatPtr> homs(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = d.row(x), j = d.col(x);
      const int i2 = d.row(y), j2 = d.col(y);
      if (i > i2 || j > j2) {
        homs[static_cast<size_t>(x) * n + y] = make_cat(discrete_cat(0));
        continue;
      }
      GrayHom& h = d.homs[static_cast<size_t>(x) * n + y];
      h.paths = enumerate_paths(i2 - i, j2 - j);
      for (int p = 0; p < static_cast<int>(h.paths.size()); ++p)
        h.path_index[h.paths[p].steps] = p;
      h.icomps = ProductShape(hom_dims(I, i, i2));
      h.jcomps = ProductShape(hom_dims(J, j, j2));

      const FinCat& ih = d.icat->hom(i, i2);
      const FinCat& jh = d.jcat->hom(j, j2);
      const int np = static_cast<int>(h.paths.size());
      const int na = h.icomps.total(), nb = h.jcomps.total();
      const auto ile = le_matrix(ih);
      const auto jle = le_matrix(jh);
      std::vector<std::vector<bool>> ple(np, std::vector<bool>(np, false));
      for (int p = 0; p < np; ++p)
        for (int q = 0; q < np; ++q) ple[p][q] = path_leq(h.paths[p], h.paths[q]);

      const int total = np * na * nb;
      std::vector<std::string> labels(total);
      for (int p = 0; p < np; ++p)
        for (int a = 0; a < na; ++a)
          for (int b = 0; b < nb; ++b)
            labels[h.encode(p, a, b)] = "(path=" + path_label(h.paths[p]) +
                                        ", i=" + ih.object_label(a) +
                                        ", j=" + jh.object_label(b) + ")";
      std::vector<std::vector<bool>> leq(total, std::vector<bool>(total, false));
      for (int u = 0; u < total; ++u)
        for (int v = 0; v < total; ++v)
          leq[u][v] = ple[h.path_of(u)][h.path_of(v)] && ile[h.icomp_of(u)][h.icomp_of(v)] &&
                      jle[h.jcomp_of(u)][h.jcomp_of(v)];
      homs[static_cast<size_t>(x) * n + y] =
          from_poset_ptr(FinPoset(std::move(labels), std::move(leq)));
    }

  std::vector<TwoCat::HCompTable> tables(static_cast<size_t>(n) * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (d.row(x) > d.row(y) || d.col(x) > d.col(y)) continue;
        if (d.row(y) > d.row(z) || d.col(y) > d.col(z)) continue;
        const GrayHom& h1 = d.hom_data(x, y);
        const GrayHom& h2 = d.hom_data(y, z);
        const GrayHom& h3 = d.hom_data(x, z);
        const FinCat& c1 = *homs[static_cast<size_t>(x) * n + y];
        const FinCat& c2 = *homs[static_cast<size_t>(y) * n + z];
        const FinCat& c3 = *homs[static_cast<size_t>(x) * n + z];
        const auto c3mor = mor_table(c3);
        auto& t = tables[(static_cast<size_t>(x) * n + y) * n + z];
        const int o1 = c1.n_objects(), o2 = c2.n_objects();
        t.obj.resize(static_cast<size_t>(o1) * o2);
        for (int f = 0; f < o1; ++f)
          for (int g = 0; g < o2; ++g) {
            const LatticePath joined =
                concat_paths(h1.paths[h1.path_of(f)], h2.paths[h2.path_of(g)]);
            const int p = h3.path_index.at(joined.steps);
            const int a = h1.icomp_of(f) * h2.icomps.total() + h2.icomp_of(g);
            const int b = h1.jcomp_of(f) * h2.jcomps.total() + h2.jcomp_of(g);
            t.obj[static_cast<size_t>(f) * o2 + g] = h3.encode(p, a, b);
          }
        t.mor.resize(static_cast<size_t>(c1.n_morphisms()) * c2.n_morphisms());
        for (int u = 0; u < c1.n_morphisms(); ++u)
          for (int v = 0; v < c2.n_morphisms(); ++v) {
            const int s = t.obj[static_cast<size_t>(c1.src(u)) * o2 + c2.src(v)];
            const int tt = t.obj[static_cast<size_t>(c1.tgt(u)) * o2 + c2.tgt(v)];
            const int w = c3mor[static_cast<size_t>(s) * c3.n_objects() + tt];
            if (w < 0) throw std::logic_error("gray_colax_data: composite breaks the hom order");
            t.mor[static_cast<size_t>(u) * c2.n_morphisms() + v] = w;
          }
      }

  d.cat = make_twocat(
      TwoCat(std::move(objects), std::move(homs), std::vector<int>(n, 0), std::move(tables)));
  return d;
}

TwoCatPtr gray_colax(const Theta2Obj& I, const Theta2Obj& J) {
  return gray_colax_data(I, J).cat;
}

TwoCatPtr gray_lax(const Theta2Obj& I, const Theta2Obj& J) {
  GrayData sw = gray_colax_data(J, I);
  const int rows = I.k() + 1, cols = J.k() + 1;
  std::vector<int> new_to_old(static_cast<size_t>(rows) * cols);
  std::vector<std::string> labels(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      new_to_old[i * cols + j] = sw.obj(j, i);
      labels[i * cols + j] = std::to_string(i) + std::to_string(j);
    }
  return relabel_objects(sw.cat, new_to_old, labels);
}

LatticePath stretch_path(const LatticePath& p, int i0, int j0, const DeltaMor& row,
                         const DeltaMor& col) {
  std::string out;
  int u = i0, v = j0;
  for (char ch : p.steps) {
    if (ch == 'H') {
      out.append(static_cast<size_t>(row(u + 1) - row(u)), 'H');
      ++u;
    } else {
      out.append(static_cast<size_t>(col(v + 1) - col(v)), 'V');
      ++v;
    }
  }
  return LatticePath(std::move(out));
}

TwoFunctor gray_colax_mor(const Theta2Mor& F, const Theta2Mor& G, const GrayData& S,
                          const GrayData& T) {
  if (F.src.ns != S.I.ns || G.src.ns != S.J.ns || F.tgt.ns != T.I.ns || G.tgt.ns != T.J.ns)
    throw std::invalid_argument("gray_colax_mor: instances do not match the morphisms");
  const TwoFunctor rf = realize_mor(F);
  const TwoFunctor rg = realize_mor(G);
  const int n = S.rows * S.cols;
  std::vector<int> omap(n);
  for (int i = 0; i < S.rows; ++i)
    for (int j = 0; j < S.cols; ++j) omap[S.obj(i, j)] = T.obj(F.phi(i), G.phi(j));

  std::vector<std::vector<int>> cells(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = S.row(x), j = S.col(x);
      const int i2 = S.row(y), j2 = S.col(y);
      if (i > i2 || j > j2) continue;
      const GrayHom& h = S.hom_data(x, y);
      const GrayHom& ht = T.hom_data(omap[x], omap[y]);
      const std::vector<int>& ai = rf.hmap(i, i2).omap;
      const std::vector<int>& bj = rg.hmap(j, j2).omap;
      std::vector<int>& img = cells[static_cast<size_t>(x) * n + y];
      img.resize(S.cat->hom(x, y).n_objects());
      for (int o = 0; o < static_cast<int>(img.size()); ++o) {
        const LatticePath steps = stretch_path(h.paths[h.path_of(o)], i, j, F.phi, G.phi);
        img[o] = ht.encode(ht.path_index.at(steps.steps), ai[h.icomp_of(o)], bj[h.jcomp_of(o)]);
      }
    }
  return posetal_functor(S.cat, T.cat, std::move(omap), std::move(cells));
}

TwoFunctor gray_colax_mor(const Theta2Mor& F, const Theta2Mor& G) {
  GrayData s = gray_colax_data(F.src, G.src);
  GrayData t = gray_colax_data(F.tgt, G.tgt);
  return gray_colax_mor(F, G, s, t);
}

TwoFunctor to_product(const GrayData& g, TwoCatPtr prod) {
  const int n = g.rows * g.cols;
  if (prod->n_objects() != n)
    throw std::invalid_argument("to_product: product instance has the wrong object count");
  std::vector<int> omap(n);
  for (int x = 0; x < n; ++x) omap[x] = x;
  std::vector<std::vector<int>> cells(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (g.row(x) > g.row(y) || g.col(x) > g.col(y)) continue;
      const GrayHom& h = g.hom_data(x, y);
      const int comps = h.icomps.total() * h.jcomps.total();
      std::vector<int>& img = cells[static_cast<size_t>(x) * n + y];
      img.resize(g.cat->hom(x, y).n_objects());
      for (int o = 0; o < static_cast<int>(img.size()); ++o) img[o] = o % comps;
    }
  return posetal_functor(g.cat, std::move(prod), std::move(omap), std::move(cells));
}

TwoFunctor to_product(const GrayData& g) {
  return to_product(g, product_twocat(g.icat, g.jcat));
}

namespace {

TwoFunctor make_leg(TwoCatPtr src, TwoCatPtr tgt, std::vector<int> omap,
                    std::map<std::pair<int, int>, std::vector<int>> given) {
  return posetal_functor(std::move(src), std::move(tgt), std::move(omap), std::move(given));
}

}  // namespace

DiagramWithCocone gray_decomposition(GrayDecompCase c, bool corrupt) {
  Theta2Obj arrow;
  arrow.ns = {0};
  Theta2Obj cell;
  cell.ns = {1};

  DiagramWithCocone out;
  switch (c) {
    case GrayDecompCase::square: {
      Theta2Obj tri;
      tri.ns = {0, 0};
      GrayData apexd = gray_colax_data(arrow, arrow);
      TwoCatPtr apex = apexd.cat;
      TwoCatPtr d1 = realize(tri), d2 = realize(cell), d3 = realize(tri);
      TwoCatPtr g1 = realize(arrow), g2 = realize(arrow);
      out.diagram.nodes = {d1, d2, d3, g1, g2};
      TwoFunctor e10 = make_leg(g1, d1, {0, 2}, {{{0, 1}, {0}}});
      TwoFunctor e12 = make_leg(g1, d2, {0, 1}, {{{0, 1}, {0}}});
      TwoFunctor e22 = make_leg(g2, d2, {0, 1}, {{{0, 1}, {1}}});
      TwoFunctor e23 = make_leg(g2, d3, {0, 2}, {{{0, 1}, {0}}});
      out.diagram.edges = {{3, 0, e10}, {3, 1, e12}, {4, 1, e22}, {4, 2, e23}};
      TwoFunctor l1 =
          corrupt ? make_leg(d1, apex, {0, 3, 3},
                             {{{0, 1}, {0}}, {{1, 2}, {apex->identity_cell(3)}}, {{0, 2}, {0}}})
                  : make_leg(d1, apex, {0, 2, 3},
                             {{{0, 1}, {0}}, {{1, 2}, {0}}, {{0, 2}, {0}}});
      TwoFunctor l2 = make_leg(d2, apex, {0, 3}, {{{0, 1}, {0, 1}}});
      TwoFunctor l3 =
          make_leg(d3, apex, {0, 1, 3}, {{{0, 1}, {0}}, {{1, 2}, {0}}, {{0, 2}, {1}}});
      out.cocone.apex = apex;
      out.cocone.legs = {l1, l2, l3, compose(l1, e10), compose(l3, e23)};
      break;
    }
    case GrayDecompCase::cylinder: {
      Theta2Obj left;
      left.ns = {1, 0};
      Theta2Obj right;
      right.ns = {0, 1};
      GrayData apexd = gray_colax_data(cell, arrow);
      TwoCatPtr apex = apexd.cat;
      TwoCatPtr d1 = realize(left), d3 = realize(right);
      CatGraph sq;
      sq.edges = {make_cat(product_cat(ordinal_cat(1), ordinal_cat(1)))};
      TwoCatPtr d2 = free_linear(sq);
      TwoCatPtr g1 = realize(cell), g2 = realize(cell);
      out.diagram.nodes = {d1, d2, d3, g1, g2};
      TwoFunctor e10 = make_leg(g1, d1, {0, 2}, {{{0, 1}, {0, 1}}});
      TwoFunctor e12 = make_leg(g1, d2, {0, 1}, {{{0, 1}, {0, 1}}});
      TwoFunctor e22 = make_leg(g2, d2, {0, 1}, {{{0, 1}, {2, 3}}});
      TwoFunctor e23 = make_leg(g2, d3, {0, 2}, {{{0, 1}, {0, 1}}});
      out.diagram.edges = {{3, 0, e10}, {3, 1, e12}, {4, 1, e22}, {4, 2, e23}};
      TwoFunctor l1 =
          corrupt ? make_leg(d1, apex, {0, 3, 3},
                             {{{0, 1}, {0, 1}},
                              {{1, 2}, {apex->identity_cell(3)}},
                              {{0, 2}, {0, 1}}})
                  : make_leg(d1, apex, {0, 2, 3},
                             {{{0, 1}, {0, 1}}, {{1, 2}, {0}}, {{0, 2}, {0, 1}}});
      TwoFunctor l2 = make_leg(d2, apex, {0, 3}, {{{0, 1}, {0, 1, 2, 3}}});
      TwoFunctor l3 =
          make_leg(d3, apex, {0, 1, 3}, {{{0, 1}, {0}}, {{1, 2}, {0, 1}}, {{0, 2}, {2, 3}}});
      out.cocone.apex = apex;
      out.cocone.legs = {l1, l2, l3, compose(l1, e10), compose(l3, e23)};
      break;
    }
    case GrayDecompCase::cube: {
      Theta2Obj sq2;
      sq2.ns = {1, 1};
      GrayData apexd = gray_colax_data(cell, cell);
      TwoCatPtr apex = apexd.cat;
      TwoCatPtr d1 = realize(sq2), d3 = realize(sq2);
      const FinCat arrow_cat = ordinal_cat(1);
      CatGraph cubeg;
      cubeg.edges = {make_cat(product_cat_multi({&arrow_cat, &arrow_cat, &arrow_cat}))};
      TwoCatPtr d2 = free_linear(cubeg);
      CatGraph sqg;
      sqg.edges = {make_cat(product_cat(arrow_cat, arrow_cat))};
      TwoCatPtr g1 = free_linear(sqg);
      TwoCatPtr g2 = free_linear(sqg);
      out.diagram.nodes = {d1, d2, d3, g1, g2};
      TwoFunctor e10 = make_leg(g1, d1, {0, 2}, {{{0, 1}, {0, 1, 2, 3}}});
      TwoFunctor e12 = make_leg(g1, d2, {0, 1}, {{{0, 1}, {0, 1, 2, 3}}});
      TwoFunctor e22 = make_leg(g2, d2, {0, 1}, {{{0, 1}, {4, 6, 5, 7}}});
      TwoFunctor e23 = make_leg(g2, d3, {0, 2}, {{{0, 1}, {0, 1, 2, 3}}});
      out.diagram.edges = {{3, 0, e10}, {3, 1, e12}, {4, 1, e22}};
      if (!corrupt) out.diagram.edges.push_back({4, 2, e23});
      TwoFunctor l1 = make_leg(d1, apex, {0, 2, 3},
                               {{{0, 1}, {0, 1}}, {{1, 2}, {0, 1}}, {{0, 2}, {0, 1, 2, 3}}});
      TwoFunctor l2 = make_leg(d2, apex, {0, 3}, {{{0, 1}, {0, 1, 2, 3, 4, 5, 6, 7}}});
      TwoFunctor l3 = make_leg(d3, apex, {0, 1, 3},
                               {{{0, 1}, {0, 1}}, {{1, 2}, {0, 1}}, {{0, 2}, {4, 6, 5, 7}}});
      out.cocone.apex = apex;
      out.cocone.legs = {l1, l2, l3, compose(l1, e10), compose(l3, e23)};
      break;
    }
  }
  return out;
}

PushoutReport check_graytenscolim(GrayDecompCase c, const std::vector<NamedProbe>& probes,
                                  bool corrupt, Budget* budget) {
  DiagramWithCocone d = gray_decomposition(c, corrupt);
  return verify_pushout(d.diagram, d.cocone, probes, budget);
}

}  // namespace gray2
