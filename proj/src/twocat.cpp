#include "gray2/twocat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gray2 {

TwoCat::TwoCat(std::vector<std::string> objects, std::vector<CatPtr> homs,
               std::vector<int> identity_cell, std::vector<HCompTable> hcomp)
    : obj_labels_(std::move(objects)),
      homs_(std::move(homs)),
      id_cell_(std::move(identity_cell)),
      hcomp_(std::move(hcomp)) {
  const int n = n_objects();
  if (static_cast<int>(homs_.size()) != n * n)
    throw std::invalid_argument("TwoCat: hom grid size mismatch");
  for (const auto& h : homs_)
    if (!h) throw std::invalid_argument("TwoCat: null hom");
  if (static_cast<int>(id_cell_.size()) != n)
    throw std::invalid_argument("TwoCat: identity list size mismatch");
  if (static_cast<int>(hcomp_.size()) != n * n * n)
    throw std::invalid_argument("TwoCat: composition grid size mismatch");
  std::set<std::string> seen(obj_labels_.begin(), obj_labels_.end());
  if (static_cast<int>(seen.size()) != n)
    throw std::invalid_argument("TwoCat: duplicate object labels");

  for (int x = 0; x < n; ++x) {
    const FinCat& h = hom(x, x);
    if (id_cell_[x] < 0 || id_cell_[x] >= h.n_objects())
      throw std::invalid_argument("TwoCat: identity 1-cell out of range");
  }

  // Table shapes, ranges, endpoints.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const FinCat& a = hom(x, y);
        const FinCat& b = hom(y, z);
        const FinCat& c = hom(x, z);
        const HCompTable& t = hcomp_[triple_index(x, y, z)];
        if (t.obj.size() != static_cast<size_t>(a.n_objects()) * b.n_objects() ||
            t.mor.size() != static_cast<size_t>(a.n_morphisms()) * b.n_morphisms())
          throw std::invalid_argument("TwoCat: composition table has wrong shape");
        for (int v : t.obj)
          if (v < 0 || v >= c.n_objects())
            throw std::invalid_argument("TwoCat: composite 1-cell out of range");
        for (int f = 0; f < a.n_morphisms(); ++f)
          for (int g = 0; g < b.n_morphisms(); ++g) {
            const int v = t.mor[static_cast<size_t>(f) * b.n_morphisms() + g];
            if (v < 0 || v >= c.n_morphisms())
              throw std::invalid_argument("TwoCat: composite 2-cell out of range");
            if (c.src(v) != t.obj[static_cast<size_t>(a.src(f)) * b.n_objects() + b.src(g)] ||
                c.tgt(v) != t.obj[static_cast<size_t>(a.tgt(f)) * b.n_objects() + b.tgt(g)])
              throw std::invalid_argument("TwoCat: composite 2-cell has wrong boundary");
          }
      }

  // Horizontal composition is a functor: identities and vertical composites
  // are preserved (interchange).
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const FinCat& a = hom(x, y);
        const FinCat& b = hom(y, z);
        const FinCat& c = hom(x, z);
        for (int f = 0; f < a.n_objects(); ++f)
          for (int g = 0; g < b.n_objects(); ++g)
            if (hcomp_2cell(x, y, z, a.identity(f), b.identity(g)) !=
                c.identity(hcomp_cell(x, y, z, f, g)))
              throw std::invalid_argument("TwoCat: identity 2-cells not preserved");
        for (int a1 = 0; a1 < a.n_morphisms(); ++a1)
          for (int a2 : a.morphisms_from(a.tgt(a1)))
            for (int b1 = 0; b1 < b.n_morphisms(); ++b1)
              for (int b2 : b.morphisms_from(b.tgt(b1)))
                if (hcomp_2cell(x, y, z, a.then(a1, a2), b.then(b1, b2)) !=
                    c.then(hcomp_2cell(x, y, z, a1, b1), hcomp_2cell(x, y, z, a2, b2)))
                  throw std::invalid_argument("TwoCat: interchange fails");
      }

  // Strict units.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const FinCat& h = hom(x, y);
      const int ex = id_cell_[x], ey = id_cell_[y];
      const int idx2 = hom(x, x).identity(ex), idy2 = hom(y, y).identity(ey);
      for (int f = 0; f < h.n_objects(); ++f)
        if (hcomp_cell(x, x, y, ex, f) != f || hcomp_cell(x, y, y, f, ey) != f)
          throw std::invalid_argument("TwoCat: unit law fails on 1-cells");
      for (int a = 0; a < h.n_morphisms(); ++a)
        if (hcomp_2cell(x, x, y, idx2, a) != a || hcomp_2cell(x, y, y, a, idy2) != a)
          throw std::invalid_argument("TwoCat: unit law fails on 2-cells");
    }

  // Strict associativity.
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const FinCat& a = hom(w, x);
          const FinCat& b = hom(x, y);
          const FinCat& c = hom(y, z);
          if (a.n_objects() == 0 || b.n_objects() == 0 || c.n_objects() == 0) continue;
          for (int f = 0; f < a.n_objects(); ++f)
            for (int g = 0; g < b.n_objects(); ++g)
              for (int h = 0; h < c.n_objects(); ++h)
                if (hcomp_cell(w, y, z, hcomp_cell(w, x, y, f, g), h) !=
                    hcomp_cell(w, x, z, f, hcomp_cell(x, y, z, g, h)))
                  throw std::invalid_argument("TwoCat: associativity fails on 1-cells");
          for (int f = 0; f < a.n_morphisms(); ++f)
            for (int g = 0; g < b.n_morphisms(); ++g)
              for (int h = 0; h < c.n_morphisms(); ++h)
                if (hcomp_2cell(w, y, z, hcomp_2cell(w, x, y, f, g), h) !=
                    hcomp_2cell(w, x, z, f, hcomp_2cell(x, y, z, g, h)))
                  throw std::invalid_argument("TwoCat: associativity fails on 2-cells");
        }
}

int TwoCat::hcomp_cell(int x, int y, int z, int f, int g) const {
  const HCompTable& t = hcomp_[triple_index(x, y, z)];
  return t.obj[static_cast<size_t>(f) * hom(y, z).n_objects() + g];
}

int TwoCat::hcomp_2cell(int x, int y, int z, int a, int b) const {
  const HCompTable& t = hcomp_[triple_index(x, y, z)];
  return t.mor[static_cast<size_t>(a) * hom(y, z).n_morphisms() + b];
}

int TwoCat::whisker_pre(int x, int y, int z, int f, int b) const {
  return hcomp_2cell(x, y, z, hom(x, y).identity(f), b);
}

int TwoCat::whisker_post(int x, int y, int z, int a, int g) const {
  return hcomp_2cell(x, y, z, a, hom(y, z).identity(g));
}

bool TwoCat::all_homs_posetal() const {
  for (const auto& h : homs_)
    if (!h->is_posetal()) return false;
  return true;
}

TwoCatPtr make_twocat(TwoCat t) { return std::make_shared<const TwoCat>(std::move(t)); }

TwoFunctor TwoFunctor::make(TwoCatPtr src, TwoCatPtr tgt, std::vector<int> omap,
                            std::vector<FinFunctor> hmaps) {
  TwoFunctor F{std::move(src), std::move(tgt), std::move(omap), std::move(hmaps)};
  const TwoCat& s = *F.src;
  const TwoCat& t = *F.tgt;
  const int n = s.n_objects();
  if (static_cast<int>(F.omap.size()) != n || static_cast<int>(F.hmaps.size()) != n * n)
    throw std::invalid_argument("TwoFunctor: map size mismatch");
  for (int x : F.omap)
    if (x < 0 || x >= t.n_objects())
      throw std::invalid_argument("TwoFunctor: object image out of range");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const FinFunctor& h = F.hmap(x, y);
      if (h.src.get() != s.hom_ptr(x, y).get() ||
          h.tgt.get() != t.hom_ptr(F.omap[x], F.omap[y]).get())
        throw std::invalid_argument("TwoFunctor: hom map between wrong categories");
      // Re-validate the functor laws on the stored maps.
      FinFunctor::make(h.src, h.tgt, h.omap, h.mmap);
    }
  for (int x = 0; x < n; ++x)
    if (F.hmap(x, x).omap[s.identity_cell(x)] != t.identity_cell(F.omap[x]))
      throw std::invalid_argument("TwoFunctor: identity 1-cell not preserved");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const FinCat& a = s.hom(x, y);
        const FinCat& b = s.hom(y, z);
        const int tx = F.omap[x], ty = F.omap[y], tz = F.omap[z];
        for (int f = 0; f < a.n_objects(); ++f)
          for (int g = 0; g < b.n_objects(); ++g)
            if (F.hmap(x, z).omap[s.hcomp_cell(x, y, z, f, g)] !=
                t.hcomp_cell(tx, ty, tz, F.hmap(x, y).omap[f], F.hmap(y, z).omap[g]))
              throw std::invalid_argument("TwoFunctor: horizontal composition not preserved");
        for (int f = 0; f < a.n_morphisms(); ++f)
          for (int g = 0; g < b.n_morphisms(); ++g)
            if (F.hmap(x, z).mmap[s.hcomp_2cell(x, y, z, f, g)] !=
                t.hcomp_2cell(tx, ty, tz, F.hmap(x, y).mmap[f], F.hmap(y, z).mmap[g]))
              throw std::invalid_argument("TwoFunctor: whiskering not preserved");
      }
  return F;
}

TwoFunctor TwoFunctor::identity(TwoCatPtr c) {
  std::vector<int> omap(c->n_objects());
  std::iota(omap.begin(), omap.end(), 0);
  std::vector<FinFunctor> hmaps;
  for (int x = 0; x < c->n_objects(); ++x)
    for (int y = 0; y < c->n_objects(); ++y)
      hmaps.push_back(FinFunctor::identity(c->hom_ptr(x, y)));
  return TwoFunctor{c, c, std::move(omap), std::move(hmaps)};
}

bool TwoFunctor::equal_maps(const TwoFunctor& o) const {
  if (omap != o.omap || hmaps.size() != o.hmaps.size()) return false;
  for (size_t i = 0; i < hmaps.size(); ++i)
    if (!hmaps[i].equal_maps(o.hmaps[i])) return false;
  return true;
}

TwoFunctor compose(const TwoFunctor& g, const TwoFunctor& f) {
  if (f.tgt.get() != g.src.get())
    throw std::invalid_argument("compose(TwoFunctor): middle 2-categories differ");
  const int n = f.src->n_objects();
  std::vector<int> omap(n);
  for (int x = 0; x < n; ++x) omap[x] = g.omap[f.omap[x]];
  std::vector<FinFunctor> hmaps;
  hmaps.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      hmaps.push_back(compose(g.hmap(f.omap[x], f.omap[y]), f.hmap(x, y)));
  return TwoFunctor{f.src, g.tgt, std::move(omap), std::move(hmaps)};
}

TwoFunctor posetal_functor(TwoCatPtr src, TwoCatPtr tgt, std::vector<int> omap,
                           std::vector<std::vector<int>> cell_images) {
  const TwoCat& s = *src;
  const TwoCat& t = *tgt;
  const int n = s.n_objects();
  if (static_cast<int>(cell_images.size()) != n * n)
    throw std::invalid_argument("posetal_functor: one cell image list per object pair");
  std::vector<FinFunctor> hmaps;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const FinCat& hs = s.hom(x, y);
      const FinCat& ht = t.hom(omap[x], omap[y]);
      if (!ht.is_posetal())
        throw std::invalid_argument("posetal_functor: target hom has parallel 2-cells");
      const std::vector<int>& oimg = cell_images[x * n + y];
      std::vector<int> mimg(hs.n_morphisms());
      for (int m = 0; m < hs.n_morphisms(); ++m) {
        const int v = ht.unique_mor(oimg[hs.src(m)], oimg[hs.tgt(m)]);
        if (v < 0)
          throw std::invalid_argument("posetal_functor: no 2-cell between image 1-cells");
        mimg[m] = v;
      }
      hmaps.push_back(
          FinFunctor::make(s.hom_ptr(x, y), t.hom_ptr(omap[x], omap[y]), oimg, std::move(mimg)));
    }
  return TwoFunctor::make(std::move(src), std::move(tgt), std::move(omap), std::move(hmaps));
}

TwoFunctor posetal_functor(TwoCatPtr src, TwoCatPtr tgt, std::vector<int> omap,
                           std::map<std::pair<int, int>, std::vector<int>> cells) {
  const int n = src->n_objects();
  std::vector<std::vector<int>> full(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto it = cells.find({x, y});
      if (it != cells.end()) {
        full[static_cast<size_t>(x) * n + y] = std::move(it->second);
        continue;
      }
      if (src->hom(x, y).n_objects() == 0) continue;
      if (x == y) {
        full[static_cast<size_t>(x) * n + y] = {tgt->identity_cell(omap[x])};
        continue;
      }
      throw std::invalid_argument("posetal_functor: missing cell images for a nonempty hom");
    }
  return posetal_functor(std::move(src), std::move(tgt), std::move(omap), std::move(full));
}

TwoFunctor product_two_functor(const TwoFunctor& f, const TwoFunctor& g, TwoCatPtr src_prod,
                               TwoCatPtr tgt_prod) {
  const int nfy = g.src->n_objects();
  const int ngy = g.tgt->n_objects();
  const int n = src_prod->n_objects();
  std::vector<int> omap(n);
  for (int p = 0; p < n; ++p) omap[p] = f.omap[p / nfy] * ngy + g.omap[p % nfy];
  std::vector<FinFunctor> hmaps;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const FinFunctor& a = f.hmap(p / nfy, q / nfy);
      const FinFunctor& b = g.hmap(p % nfy, q % nfy);
      const int bo = static_cast<int>(b.omap.size());
      const int bm = static_cast<int>(b.mmap.size());
      const int to = b.tgt->n_objects();
      const int tm = b.tgt->n_morphisms();
      CatPtr hs = src_prod->hom_ptr(p, q);
      CatPtr ht = tgt_prod->hom_ptr(omap[p], omap[q]);
      std::vector<int> oimg(hs->n_objects()), mimg(hs->n_morphisms());
      for (int o = 0; o < hs->n_objects(); ++o)
        oimg[o] = a.omap[o / bo] * to + b.omap[o % bo];
      for (int m = 0; m < hs->n_morphisms(); ++m)
        mimg[m] = a.mmap[m / bm] * tm + b.mmap[m % bm];
      hmaps.push_back(FinFunctor::make(hs, ht, std::move(oimg), std::move(mimg)));
    }
  return TwoFunctor::make(src_prod, tgt_prod, std::move(omap), std::move(hmaps));
}

std::vector<int> functor_key(const TwoFunctor& f) {
  std::vector<int> key = f.omap;
  for (const auto& h : f.hmaps) {
    key.insert(key.end(), h.omap.begin(), h.omap.end());
    key.insert(key.end(), h.mmap.begin(), h.mmap.end());
  }
  return key;
}

namespace {

FinCat empty_cat() { return FinCat({}, {}, {}, {}); }

}  // namespace

TwoCatPtr free_linear(const CatGraph& g) {
  const int k = static_cast<int>(g.edges.size());
  const int n = k + 1;
  std::vector<std::string> objects(n);
  for (int i = 0; i < n; ++i) objects[i] = std::to_string(i);

  std::vector<CatPtr> homs(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i > j) {
        homs[i * n + j] = make_cat(empty_cat());
        continue;
      }
      std::vector<const FinCat*> facs;
      for (int s = i + 1; s <= j; ++s) facs.push_back(g.edges[s - 1].get());
      homs[i * n + j] = make_cat(product_cat_multi(facs));
    }

  std::vector<int> ids(n, 0);  // the empty tuple is the only object of hom(i,i)

  std::vector<TwoCat::HCompTable> tables(static_cast<size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        auto& t = tables[(i * n + j) * n + l];
        if (i > j || j > l) continue;  // some hom empty, tables stay empty
        const FinCat& a = *homs[i * n + j];
        const FinCat& b = *homs[j * n + l];
        t.obj.resize(static_cast<size_t>(a.n_objects()) * b.n_objects());
        t.mor.resize(static_cast<size_t>(a.n_morphisms()) * b.n_morphisms());
        // Concatenating tuples is mixed-radix arithmetic: the left block is
        // the high digits.
        for (int f = 0; f < a.n_objects(); ++f)
          for (int gg = 0; gg < b.n_objects(); ++gg)
            t.obj[static_cast<size_t>(f) * b.n_objects() + gg] = f * b.n_objects() + gg;
        for (int f = 0; f < a.n_morphisms(); ++f)
          for (int gg = 0; gg < b.n_morphisms(); ++gg)
            t.mor[static_cast<size_t>(f) * b.n_morphisms() + gg] = f * b.n_morphisms() + gg;
      }

  return make_twocat(TwoCat(std::move(objects), std::move(homs), std::move(ids),
                            std::move(tables)));
}

TwoCatPtr realize(const Theta2Obj& o) {
  CatGraph g;
  for (int i = 1; i <= o.k(); ++i) g.edges.push_back(from_poset_ptr(ordinal_poset(o.n(i))));
  return free_linear(g);
}

namespace {

// Mixed-radix dimensions of hom(i,j) in a realized shape.
struct RealizedHom {
  ProductShape objs, mors;
  RealizedHom(const TwoCat& c, int i, int j)
      : objs(dims(c, i, j, true)), mors(dims(c, i, j, false)) {}

  static std::vector<int> dims(const TwoCat& c, int i, int j, bool objects) {
    std::vector<int> d;
    for (int s = i + 1; s <= j; ++s) {
      const FinCat& edge = c.hom(s - 1, s);
      d.push_back(objects ? edge.n_objects() : edge.n_morphisms());
    }
    return d;
  }
};

}  // namespace

TwoFunctor realize_mor(const Theta2Mor& f) {
  TwoCatPtr src2 = realize(f.src);
  TwoCatPtr tgt2 = realize(f.tgt);
  const int n = src2->n_objects();
  std::vector<int> omap(n);
  for (int i = 0; i < n; ++i) omap[i] = f.phi(i);

  std::vector<FinFunctor> hmaps;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CatPtr hs = src2->hom_ptr(i, j);
      CatPtr ht = tgt2->hom_ptr(f.phi(i), f.phi(j));
      if (i > j) {
        hmaps.push_back(FinFunctor::make(hs, ht, {}, {}));
        continue;
      }
      RealizedHom shape_s(*src2, i, j);
      RealizedHom shape_t(*tgt2, f.phi(i), f.phi(j));
      std::vector<int> oimg(hs->n_objects()), mimg(hs->n_morphisms());
      for (int ob = 0; ob < hs->n_objects(); ++ob) {
        const auto a = shape_s.objs.tuple(ob);
        std::vector<int> b(shape_t.objs.dims.size());
        for (int t = f.phi(i) + 1; t <= f.phi(j); ++t) {
          const int s = f.inner_source(t);
          b[t - f.phi(i) - 1] = f.psis.at({s, t})(a[s - i - 1]);
        }
        oimg[ob] = shape_t.objs.index(b);
      }
      for (int mo = 0; mo < hs->n_morphisms(); ++mo) {
        const auto a = shape_s.mors.tuple(mo);
        std::vector<int> b(shape_t.mors.dims.size());
        for (int t = f.phi(i) + 1; t <= f.phi(j); ++t) {
          const int s = f.inner_source(t);
          const FinCat& edge_s = src2->hom(s - 1, s);
          const FinCat& edge_t = tgt2->hom(t - 1, t);
          const DeltaMor& psi = f.psis.at({s, t});
          const int comp = a[s - i - 1];
          b[t - f.phi(i) - 1] = edge_t.unique_mor(psi(edge_s.src(comp)), psi(edge_s.tgt(comp)));
        }
        mimg[mo] = shape_t.mors.index(b);
      }
      hmaps.push_back(FinFunctor::make(hs, ht, std::move(oimg), std::move(mimg)));
    }
  return TwoFunctor::make(src2, tgt2, std::move(omap), std::move(hmaps));
}

TwoCatPtr discrete_twocat(const std::vector<std::string>& objects) {
  const int n = static_cast<int>(objects.size());
  std::vector<CatPtr> homs(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      homs[x * n + y] = make_cat(x == y ? terminal_cat() : empty_cat());
  std::vector<int> ids(n, 0);
  std::vector<TwoCat::HCompTable> tables(static_cast<size_t>(n) * n * n);
  for (int x = 0; x < n; ++x) {
    auto& t = tables[(x * n + x) * n + x];
    t.obj = {0};
    t.mor = {0};
  }
  return make_twocat(TwoCat(objects, std::move(homs), std::move(ids), std::move(tables)));
}

TwoCatPtr product_twocat(TwoCatPtr xp, TwoCatPtr yp) {
  const TwoCat& X = *xp;
  const TwoCat& Y = *yp;
  const int nx = X.n_objects(), ny = Y.n_objects();
  const int n = nx * ny;
  auto obj_of = [&](int a, int b) { return a * ny + b; };

  std::vector<std::string> objects(n);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b)
      objects[obj_of(a, b)] = "(" + X.object_label(a) + "," + Y.object_label(b) + ")";

  std::vector<CatPtr> homs(static_cast<size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      homs[p * n + q] = make_cat(product_cat(X.hom(p / ny, q / ny), Y.hom(p % ny, q % ny)));

  std::vector<int> ids(n);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b) {
      const int p = obj_of(a, b);
      ids[p] = X.identity_cell(a) * Y.hom(b, b).n_objects() + Y.identity_cell(b);
    }

  std::vector<TwoCat::HCompTable> tables(static_cast<size_t>(n) * n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        const int xa = p / ny, xb = q / ny, xc = r / ny;
        const int ya = p % ny, yb = q % ny, yc = r % ny;
        const FinCat& a = *homs[p * n + q];
        const FinCat& b = *homs[q * n + r];
        auto& t = tables[(p * n + q) * n + r];
        t.obj.resize(static_cast<size_t>(a.n_objects()) * b.n_objects());
        t.mor.resize(static_cast<size_t>(a.n_morphisms()) * b.n_morphisms());
        const int byo = Y.hom(ya, yb).n_objects();
        const int bym = Y.hom(ya, yb).n_morphisms();
        const int cyo = Y.hom(yb, yc).n_objects();
        const int cym = Y.hom(yb, yc).n_morphisms();
        const int ryo = Y.hom(ya, yc).n_objects();
        const int rym = Y.hom(ya, yc).n_morphisms();
        for (int f = 0; f < a.n_objects(); ++f)
          for (int g = 0; g < b.n_objects(); ++g) {
            const int fx = f / byo, fy = f % byo, gx = g / cyo, gy = g % cyo;
            t.obj[static_cast<size_t>(f) * b.n_objects() + g] =
                X.hcomp_cell(xa, xb, xc, fx, gx) * ryo + Y.hcomp_cell(ya, yb, yc, fy, gy);
          }
        for (int f = 0; f < a.n_morphisms(); ++f)
          for (int g = 0; g < b.n_morphisms(); ++g) {
            const int fx = f / bym, fy = f % bym, gx = g / cym, gy = g % cym;
            t.mor[static_cast<size_t>(f) * b.n_morphisms() + g] =
                X.hcomp_2cell(xa, xb, xc, fx, gx) * rym + Y.hcomp_2cell(ya, yb, yc, fy, gy);
          }
      }

  return make_twocat(TwoCat(std::move(objects), std::move(homs), std::move(ids),
                            std::move(tables)));
}

TwoCatPtr relabel_objects(TwoCatPtr xp, const std::vector<int>& new_to_old,
                          const std::vector<std::string>& labels) {
  const TwoCat& X = *xp;
  const int n = X.n_objects();
  if (static_cast<int>(new_to_old.size()) != n || static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("relabel_objects: size mismatch");
  std::vector<CatPtr> homs(static_cast<size_t>(n) * n);
  std::vector<int> ids(n);
  std::vector<TwoCat::HCompTable> tables(static_cast<size_t>(n) * n * n);
  for (int x = 0; x < n; ++x) {
    ids[x] = X.identity_cell(new_to_old[x]);
    for (int y = 0; y < n; ++y) {
      homs[x * n + y] = X.hom_ptr(new_to_old[x], new_to_old[y]);
      for (int z = 0; z < n; ++z) {
        const int ox = new_to_old[x], oy = new_to_old[y], oz = new_to_old[z];
        const FinCat& a = X.hom(ox, oy);
        const FinCat& b = X.hom(oy, oz);
        auto& t = tables[(x * n + y) * n + z];
        t.obj.resize(static_cast<size_t>(a.n_objects()) * b.n_objects());
        t.mor.resize(static_cast<size_t>(a.n_morphisms()) * b.n_morphisms());
        for (int f = 0; f < a.n_objects(); ++f)
          for (int g = 0; g < b.n_objects(); ++g)
            t.obj[static_cast<size_t>(f) * b.n_objects() + g] = X.hcomp_cell(ox, oy, oz, f, g);
        for (int f = 0; f < a.n_morphisms(); ++f)
          for (int g = 0; g < b.n_morphisms(); ++g)
            t.mor[static_cast<size_t>(f) * b.n_morphisms() + g] =
                X.hcomp_2cell(ox, oy, oz, f, g);
      }
    }
  }
  return make_twocat(TwoCat(labels, std::move(homs), std::move(ids), std::move(tables)));
}

CotensorData cotensor_data(TwoCatPtr xp, int n, Budget* budget) {
  const TwoCat& X = *xp;
  const int no = X.n_objects();
  CatPtr base = make_cat(ordinal_cat(n));

  std::vector<FunctorCatData> data(static_cast<size_t>(no) * no);
  std::vector<std::map<std::pair<std::vector<int>, std::vector<int>>, int>> obj_index(
      data.size());
  std::vector<std::map<std::pair<std::pair<int, int>, std::vector<int>>, int>> mor_index(
      data.size());
  for (int x = 0; x < no; ++x)
    for (int y = 0; y < no; ++y) {
      const int p = x * no + y;
      data[p] = functor_cat(base, X.hom_ptr(x, y), budget);
      for (size_t i = 0; i < data[p].objects.size(); ++i)
        obj_index[p][{data[p].objects[i].omap, data[p].objects[i].mmap}] = static_cast<int>(i);
      for (size_t m = 0; m < data[p].components.size(); ++m)
        mor_index[p][{{data[p].cat->src(static_cast<int>(m)),
                       data[p].cat->tgt(static_cast<int>(m))},
                      data[p].components[m]}] = static_cast<int>(m);
    }

  std::vector<std::string> objects(no);
  std::vector<CatPtr> homs(static_cast<size_t>(no) * no);
  for (int x = 0; x < no; ++x) objects[x] = X.object_label(x);
  for (size_t p = 0; p < data.size(); ++p) homs[p] = data[p].cat;

  std::vector<int> ids(no);
  for (int x = 0; x < no; ++x) {
    const int p = x * no + x;
    std::vector<int> omap(base->n_objects(), X.identity_cell(x));
    std::vector<int> mmap(base->n_morphisms(),
                          X.hom(x, x).identity(X.identity_cell(x)));
    ids[x] = obj_index[p].at({omap, mmap});
  }

  std::vector<TwoCat::HCompTable> tables(static_cast<size_t>(no) * no * no);
  for (int x = 0; x < no; ++x)
    for (int y = 0; y < no; ++y)
      for (int z = 0; z < no; ++z) {
        const int pa = x * no + y, pb = y * no + z, pc = x * no + z;
        const FunctorCatData& A = data[pa];
        const FunctorCatData& B = data[pb];
        auto& t = tables[(x * no + y) * no + z];
        t.obj.resize(static_cast<size_t>(A.cat->n_objects()) * B.cat->n_objects());
        t.mor.resize(static_cast<size_t>(A.cat->n_morphisms()) * B.cat->n_morphisms());
        for (int f = 0; f < A.cat->n_objects(); ++f)
          for (int g = 0; g < B.cat->n_objects(); ++g) {
            std::vector<int> omap(base->n_objects()), mmap(base->n_morphisms());
            for (int r = 0; r < base->n_objects(); ++r)
              omap[r] = X.hcomp_cell(x, y, z, A.objects[f].omap[r], B.objects[g].omap[r]);
            for (int m = 0; m < base->n_morphisms(); ++m)
              mmap[m] = X.hcomp_2cell(x, y, z, A.objects[f].mmap[m], B.objects[g].mmap[m]);
            t.obj[static_cast<size_t>(f) * B.cat->n_objects() + g] =
                obj_index[pc].at({omap, mmap});
          }
        for (int f = 0; f < A.cat->n_morphisms(); ++f)
          for (int g = 0; g < B.cat->n_morphisms(); ++g) {
            std::vector<int> comp(base->n_objects());
            for (int r = 0; r < base->n_objects(); ++r)
              comp[r] = X.hcomp_2cell(x, y, z, A.components[f][r], B.components[g][r]);
            const int sf = t.obj[static_cast<size_t>(A.cat->src(f)) * B.cat->n_objects() +
                                 B.cat->src(g)];
            const int tf = t.obj[static_cast<size_t>(A.cat->tgt(f)) * B.cat->n_objects() +
                                 B.cat->tgt(g)];
            t.mor[static_cast<size_t>(f) * B.cat->n_morphisms() + g] =
                mor_index[pc].at({{sf, tf}, comp});
          }
      }

  CotensorData out;
  out.base = std::move(xp);
  out.cat = make_twocat(TwoCat(std::move(objects), std::move(homs), std::move(ids),
                               std::move(tables)));
  out.homs = std::move(data);
  return out;
}

TwoCatPtr cotensor(TwoCatPtr xp, int n, Budget* budget) {
  return cotensor_data(std::move(xp), n, budget).cat;
}

TwoFunctor cotensor_eval(const CotensorData& ct, int r) {
  const TwoCat& X = *ct.base;
  const int no = X.n_objects();
  std::vector<int> omap(no);
  std::iota(omap.begin(), omap.end(), 0);
  std::vector<FinFunctor> hmaps;
  for (int x = 0; x < no; ++x)
    for (int y = 0; y < no; ++y) {
      const FunctorCatData& fc = ct.homs[x * no + y];
      std::vector<int> oimg(fc.cat->n_objects()), mimg(fc.cat->n_morphisms());
      for (size_t i = 0; i < fc.objects.size(); ++i) oimg[i] = fc.objects[i].omap[r];
      for (size_t m = 0; m < fc.components.size(); ++m) mimg[m] = fc.components[m][r];
      hmaps.push_back(FinFunctor::make(ct.cat->hom_ptr(x, y), X.hom_ptr(x, y),
                                       std::move(oimg), std::move(mimg)));
    }
  return TwoFunctor::make(ct.cat, ct.base, std::move(omap), std::move(hmaps));
}

TwoCatPtr two_op(TwoCatPtr xp) {
  const TwoCat& X = *xp;
  const int n = X.n_objects();
  std::vector<std::string> objects(n);
  std::vector<CatPtr> homs(static_cast<size_t>(n) * n);
  std::vector<int> ids(n);
  std::vector<TwoCat::HCompTable> tables(static_cast<size_t>(n) * n * n);
  for (int x = 0; x < n; ++x) {
    objects[x] = X.object_label(x);
    ids[x] = X.identity_cell(x);
    for (int y = 0; y < n; ++y) homs[x * n + y] = make_cat(opposite(X.hom(x, y)));
  }
  // Object and morphism indices are unchanged by taking opposites, so the
  // tables carry over verbatim.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const FinCat& a = X.hom(x, y);
        const FinCat& b = X.hom(y, z);
        auto& t = tables[(x * n + y) * n + z];
        t.obj.resize(static_cast<size_t>(a.n_objects()) * b.n_objects());
        t.mor.resize(static_cast<size_t>(a.n_morphisms()) * b.n_morphisms());
        for (int f = 0; f < a.n_objects(); ++f)
          for (int g = 0; g < b.n_objects(); ++g)
            t.obj[static_cast<size_t>(f) * b.n_objects() + g] = X.hcomp_cell(x, y, z, f, g);
        for (int f = 0; f < a.n_morphisms(); ++f)
          for (int g = 0; g < b.n_morphisms(); ++g)
            t.mor[static_cast<size_t>(f) * b.n_morphisms() + g] = X.hcomp_2cell(x, y, z, f, g);
      }
  return make_twocat(TwoCat(std::move(objects), std::move(homs), std::move(ids),
                            std::move(tables)));
}

TwoCatPtr one_op(TwoCatPtr xp) {
  const TwoCat& X = *xp;
  const int n = X.n_objects();
  std::vector<std::string> objects(n);
  std::vector<CatPtr> homs(static_cast<size_t>(n) * n);
  std::vector<int> ids(n);
  std::vector<TwoCat::HCompTable> tables(static_cast<size_t>(n) * n * n);
  for (int x = 0; x < n; ++x) {
    objects[x] = X.object_label(x);
    ids[x] = X.identity_cell(x);
    for (int y = 0; y < n; ++y) homs[x * n + y] = X.hom_ptr(y, x);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const FinCat& a = X.hom(y, x);
        const FinCat& b = X.hom(z, y);
        auto& t = tables[(x * n + y) * n + z];
        t.obj.resize(static_cast<size_t>(a.n_objects()) * b.n_objects());
        t.mor.resize(static_cast<size_t>(a.n_morphisms()) * b.n_morphisms());
        for (int f = 0; f < a.n_objects(); ++f)
          for (int g = 0; g < b.n_objects(); ++g)
            t.obj[static_cast<size_t>(f) * b.n_objects() + g] = X.hcomp_cell(z, y, x, g, f);
        for (int f = 0; f < a.n_morphisms(); ++f)
          for (int g = 0; g < b.n_morphisms(); ++g)
            t.mor[static_cast<size_t>(f) * b.n_morphisms() + g] = X.hcomp_2cell(z, y, x, g, f);
      }
  return make_twocat(TwoCat(std::move(objects), std::move(homs), std::move(ids),
                            std::move(tables)));
}

FinCat localize_2morphisms(const TwoCat& X) {
  const int n = X.n_objects();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!X.hom(x, y).is_posetal())
        throw std::invalid_argument(
            "localize_2morphisms: parallel 2-cells in hom(" + X.object_label(x) + "," +
            X.object_label(y) + "); only poset-enriched inputs are supported");

  std::vector<std::string> objects(n);
  for (int x = 0; x < n; ++x) objects[x] = X.object_label(x);

  // One morphism per connected component of each hom.
  std::vector<std::vector<int>> comp(static_cast<size_t>(n) * n);
  std::vector<std::vector<int>> rep(static_cast<size_t>(n) * n);   // component -> some cell
  std::vector<std::vector<int>> base(static_cast<size_t>(n) * n);  // component -> morphism id
  std::vector<FinCat::Mor> mors;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int p = x * n + y;
      comp[p] = pi0(X.hom(x, y));
      const int nc = X.hom(x, y).n_objects() ? pi0_count(X.hom(x, y)) : 0;
      rep[p].assign(nc, -1);
      base[p].resize(nc);
      for (int f = 0; f < X.hom(x, y).n_objects(); ++f)
        if (rep[p][comp[p][f]] == -1) rep[p][comp[p][f]] = f;
      for (int c = 0; c < nc; ++c) {
        base[p][c] = static_cast<int>(mors.size());
        mors.push_back({x, y, X.hom(x, y).object_label(rep[p][c])});
      }
    }

  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) {
    const int p = x * n + x;
    ids[x] = base[p][comp[p][X.identity_cell(x)]];
  }

  std::vector<std::array<int, 3>> comp_triples;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int pa = x * n + y, pb = y * n + z, pc = x * n + z;
        std::map<std::pair<int, int>, int> image;
        for (int f = 0; f < X.hom(x, y).n_objects(); ++f)
          for (int g = 0; g < X.hom(y, z).n_objects(); ++g) {
            const int h = comp[pc][X.hcomp_cell(x, y, z, f, g)];
            const auto key = std::pair{comp[pa][f], comp[pb][g]};
            auto it = image.find(key);
            if (it == image.end())
              image.emplace(key, h);
            else if (it->second != h)
              throw std::logic_error("localize_2morphisms: composition does not descend");
          }
        for (const auto& [key, h] : image)
          comp_triples.push_back({base[pa][key.first], base[pb][key.second], base[pc][h]});
      }

  return FinCat(std::move(objects), std::move(mors), std::move(ids), comp_triples);
}

namespace {

// Backtracking enumeration of strict 2-functors. One-cell images are chosen
// slot by slot with composites propagated eagerly through the horizontal
// composition tables; 2-cell images follow the same pattern afterwards.
struct TwoSearch {
  TwoCatPtr Sp, Tp;
  const TwoCat& S;
  const TwoCat& T;
  Budget* budget;
  bool bijective = false;
  bool stop_at_first = false;

  int nS, nT;
  std::vector<int> omap;
  std::vector<std::pair<int, int>> pair_order;
  std::vector<std::vector<int>> oassign, massign;
  std::vector<std::vector<bool>> oused, mused;  // bijective mode only
  std::vector<std::pair<int, int>> otrail, mtrail;
  std::vector<TwoFunctor> found;

  TwoSearch(TwoCatPtr sp, TwoCatPtr tp, Budget* b)
      : Sp(std::move(sp)), Tp(std::move(tp)), S(*Sp), T(*Tp), budget(b) {
    nS = S.n_objects();
    nT = T.n_objects();
    for (int x = 0; x < nS; ++x)
      for (int y = 0; y < nS; ++y) pair_order.emplace_back(x, y);
    // Small homs first so that composite homs are mostly forced.
    std::stable_sort(pair_order.begin(), pair_order.end(), [&](auto a, auto b) {
      return S.hom(a.first, a.second).n_objects() < S.hom(b.first, b.second).n_objects();
    });
    oassign.resize(static_cast<size_t>(nS) * nS);
    massign.resize(static_cast<size_t>(nS) * nS);
  }

  void spend() {
    if (budget) budget->spend("enumerate_two_functors");
  }

  const FinCat& tgt_hom(int x, int y) const { return T.hom(omap[x], omap[y]); }

  // ---- 1-cell stage ----

  bool oset(int p, int f, int v) {
    int& slot = oassign[p][f];
    if (slot != -1) return slot == v;
    const int x = p / nS, y = p % nS;
    if (bijective) {
      if (oused[p][v]) return false;
      oused[p][v] = true;
    }
    slot = v;
    otrail.emplace_back(p, f);
    // All 2-cells at f with the other endpoint assigned need an image
    // candidate to exist.
    const FinCat& hs = S.hom(x, y);
    const FinCat& ht = tgt_hom(x, y);
    for (int m = 0; m < hs.n_morphisms(); ++m) {
      const int a = oassign[p][hs.src(m)], b = oassign[p][hs.tgt(m)];
      if (a != -1 && b != -1 && !ht.has_mor(a, b)) return false;
    }
    return true;
  }

  bool opropagate(size_t from) {
    for (size_t i = from; i < otrail.size(); ++i) {
      const auto [p, f] = otrail[i];
      const int x = p / nS, y = p % nS;
      for (int z = 0; z < nS; ++z) {
        // (x,y) then (y,z)
        const FinCat& b = S.hom(y, z);
        for (int g = 0; g < b.n_objects(); ++g) {
          const int gv = oassign[y * nS + z][g];
          if (gv == -1) continue;
          if (!oset(x * nS + z, S.hcomp_cell(x, y, z, f, g),
                    T.hcomp_cell(omap[x], omap[y], omap[z], oassign[p][f], gv)))
            return false;
        }
        // (z,x) then (x,y)
        const FinCat& a = S.hom(z, x);
        for (int e = 0; e < a.n_objects(); ++e) {
          const int ev = oassign[z * nS + x][e];
          if (ev == -1) continue;
          if (!oset(z * nS + y, S.hcomp_cell(z, x, y, e, f),
                    T.hcomp_cell(omap[z], omap[x], omap[y], ev, oassign[p][f])))
            return false;
        }
      }
    }
    return true;
  }

  void orollback(size_t mark) {
    while (otrail.size() > mark) {
      const auto [p, f] = otrail.back();
      otrail.pop_back();
      if (bijective) oused[p][oassign[p][f]] = false;
      oassign[p][f] = -1;
    }
  }

  bool ocells(size_t slot_pair, int next_obj) {
    if (slot_pair == pair_order.size()) return start_mor_stage();
    const auto [x, y] = pair_order[slot_pair];
    const int p = x * nS + y;
    const FinCat& hs = S.hom(x, y);
    if (next_obj == hs.n_objects()) return ocells(slot_pair + 1, 0);
    if (oassign[p][next_obj] != -1) return ocells(slot_pair, next_obj + 1);
    const FinCat& ht = tgt_hom(x, y);
    bool done = false;
    for (int v = 0; v < ht.n_objects() && !done; ++v) {
      spend();
      const size_t mark = otrail.size();
      if (oset(p, next_obj, v) && opropagate(mark)) {
        done = ocells(slot_pair, next_obj + 1) && stop_at_first;
      }
      if (!done) orollback(mark);
    }
    return done;
  }

  // ---- 2-cell stage ----

  bool mset(int p, int m, int v) {
    int& slot = massign[p][m];
    if (slot != -1) return slot == v;
    if (bijective) {
      if (mused[p][v]) return false;
      mused[p][v] = true;
    }
    slot = v;
    mtrail.emplace_back(p, m);
    return true;
  }

  bool mpropagate(size_t from) {
    for (size_t i = from; i < mtrail.size(); ++i) {
      const auto [p, m] = mtrail[i];
      const int x = p / nS, y = p % nS;
      const FinCat& hs = S.hom(x, y);
      const FinCat& ht = tgt_hom(x, y);
      // Vertical closure inside hom(x,y).
      for (int m2 : hs.morphisms_from(hs.tgt(m))) {
        if (massign[p][m2] == -1) continue;
        if (!mset(p, hs.then(m, m2), ht.then(massign[p][m], massign[p][m2]))) return false;
      }
      for (int m0 = 0; m0 < hs.n_morphisms(); ++m0) {
        if (hs.tgt(m0) != hs.src(m) || massign[p][m0] == -1) continue;
        if (!mset(p, hs.then(m0, m), ht.then(massign[p][m0], massign[p][m]))) return false;
      }
      // Horizontal closure.
      for (int z = 0; z < nS; ++z) {
        const FinCat& b = S.hom(y, z);
        for (int g = 0; g < b.n_morphisms(); ++g) {
          const int gv = massign[y * nS + z][g];
          if (gv == -1) continue;
          if (!mset(x * nS + z, S.hcomp_2cell(x, y, z, m, g),
                    T.hcomp_2cell(omap[x], omap[y], omap[z], massign[p][m], gv)))
            return false;
        }
        const FinCat& a = S.hom(z, x);
        for (int e = 0; e < a.n_morphisms(); ++e) {
          const int ev = massign[z * nS + x][e];
          if (ev == -1) continue;
          if (!mset(z * nS + y, S.hcomp_2cell(z, x, y, e, m),
                    T.hcomp_2cell(omap[z], omap[x], omap[y], ev, massign[p][m])))
            return false;
        }
      }
    }
    return true;
  }

  void mrollback(size_t mark) {
    while (mtrail.size() > mark) {
      const auto [p, m] = mtrail.back();
      mtrail.pop_back();
      if (bijective) mused[p][massign[p][m]] = false;
      massign[p][m] = -1;
    }
  }

  bool start_mor_stage() {
    for (auto& v : massign) std::fill(v.begin(), v.end(), -1);
    if (bijective) {
      mused.assign(static_cast<size_t>(nS) * nS, {});
      for (int x = 0; x < nS; ++x)
        for (int y = 0; y < nS; ++y)
          mused[x * nS + y].assign(tgt_hom(x, y).n_morphisms(), false);
    }
    const size_t mark = mtrail.size();
    bool ok = true;
    // Identity 2-cells on every 1-cell are forced.
    for (int x = 0; x < nS && ok; ++x)
      for (int y = 0; y < nS && ok; ++y) {
        const int p = x * nS + y;
        const FinCat& hs = S.hom(x, y);
        const FinCat& ht = tgt_hom(x, y);
        for (int f = 0; f < hs.n_objects() && ok; ++f)
          ok = mset(p, hs.identity(f), ht.identity(oassign[p][f]));
      }
    bool done = false;
    if (ok && mpropagate(mark)) done = mcells(0, 0);
    if (!done) mrollback(mark);
    return done;
  }

  bool mcells(size_t slot_pair, int next_mor) {
    if (slot_pair == pair_order.size()) {
      emit();
      return stop_at_first;
    }
    const auto [x, y] = pair_order[slot_pair];
    const int p = x * nS + y;
    const FinCat& hs = S.hom(x, y);
    if (next_mor == hs.n_morphisms()) return mcells(slot_pair + 1, 0);
    if (massign[p][next_mor] != -1) return mcells(slot_pair, next_mor + 1);
    const FinCat& ht = tgt_hom(x, y);
    bool done = false;
    for (int v : ht.homset(oassign[p][hs.src(next_mor)], oassign[p][hs.tgt(next_mor)])) {
      if (done) break;
      spend();
      const size_t mark = mtrail.size();
      if (mset(p, next_mor, v) && mpropagate(mark)) {
        done = mcells(slot_pair, next_mor + 1) && stop_at_first;
      }
      if (!done) mrollback(mark);
    }
    return done;
  }

  void emit() {
    // The propagation rules force exactly the functor laws, so a complete
    // assignment is already valid; re-running the full validator here would
    // dominate the cost of bulk enumeration.
    std::vector<FinFunctor> hmaps;
    hmaps.reserve(oassign.size());
    for (int x = 0; x < nS; ++x)
      for (int y = 0; y < nS; ++y) {
        const int p = x * nS + y;
        hmaps.push_back(
            FinFunctor{S.hom_ptr(x, y), T.hom_ptr(omap[x], omap[y]), oassign[p], massign[p]});
      }
    found.push_back(TwoFunctor{Sp, Tp, omap, std::move(hmaps)});
  }

  bool feasible_pairs(int upto) const {
    for (int x = 0; x <= upto; ++x)
      for (int y = 0; y <= upto; ++y) {
        const FinCat& hs = S.hom(x, y);
        const FinCat& ht = T.hom(omap[x], omap[y]);
        if (hs.n_objects() > 0 && ht.n_objects() == 0) return false;
        if (bijective && (hs.n_objects() != ht.n_objects() ||
                          hs.n_morphisms() != ht.n_morphisms()))
          return false;
      }
    return true;
  }

  bool objects_dfs(int x, std::vector<bool>& tused) {
    if (x == nS) {
      for (int p = 0; p < nS * nS; ++p) {
        oassign[p].assign(S.hom(p / nS, p % nS).n_objects(), -1);
        massign[p].assign(S.hom(p / nS, p % nS).n_morphisms(), -1);
      }
      if (bijective) {
        oused.assign(static_cast<size_t>(nS) * nS, {});
        for (int a = 0; a < nS; ++a)
          for (int b = 0; b < nS; ++b)
            oused[a * nS + b].assign(tgt_hom(a, b).n_objects(), false);
      }
      const size_t mark = otrail.size();
      bool ok = true;
      for (int a = 0; a < nS && ok; ++a)
        ok = oset(a * nS + a, S.identity_cell(a), T.identity_cell(omap[a]));
      bool done = false;
      if (ok && opropagate(mark)) done = ocells(0, 0);
      if (!done) orollback(mark);
      return done;
    }
    for (int v = 0; v < nT; ++v) {
      if (bijective && tused[v]) continue;
      spend();
      omap[x] = v;
      if (feasible_pairs(x)) {
        tused[v] = true;
        if (objects_dfs(x + 1, tused) && stop_at_first) return true;
        tused[v] = false;
      }
      omap[x] = -1;
    }
    return false;
  }

  void run() {
    if (bijective && (nS != nT)) return;
    omap.assign(nS, -1);
    std::vector<bool> tused(nT, false);
    objects_dfs(0, tused);
  }
};

}  // namespace

std::vector<TwoFunctor> enumerate_two_functors(TwoCatPtr src, TwoCatPtr tgt, Budget* budget) {
  TwoSearch search(std::move(src), std::move(tgt), budget);
  search.run();
  std::sort(search.found.begin(), search.found.end(), [](const auto& a, const auto& b) {
    return functor_key(a) < functor_key(b);
  });
  return std::move(search.found);
}

std::optional<std::pair<TwoFunctor, TwoFunctor>> iso_two_cats(TwoCatPtr x, TwoCatPtr y,
                                                              Budget* budget) {
  TwoSearch search(x, y, budget);
  search.bijective = true;
  search.stop_at_first = true;
  search.run();
  if (search.found.empty()) return std::nullopt;
  const TwoFunctor& fwd = search.found.front();
  const int n = x->n_objects();
  std::vector<int> iomap(n);
  for (int o = 0; o < n; ++o) iomap[fwd.omap[o]] = o;
  std::vector<FinFunctor> ihmaps;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int a = iomap[u], b = iomap[v];
      const FinFunctor& h = fwd.hmap(a, b);
      std::vector<int> io(h.tgt->n_objects()), im(h.tgt->n_morphisms());
      for (size_t i = 0; i < h.omap.size(); ++i) io[h.omap[i]] = static_cast<int>(i);
      for (size_t i = 0; i < h.mmap.size(); ++i) im[h.mmap[i]] = static_cast<int>(i);
      ihmaps.push_back(FinFunctor::make(y->hom_ptr(u, v), x->hom_ptr(a, b), std::move(io),
                                        std::move(im)));
    }
  TwoFunctor bwd = TwoFunctor::make(y, x, std::move(iomap), std::move(ihmaps));
  return std::make_pair(fwd, std::move(bwd));
}

namespace {

// The 2-functor from the one-object 2-category to x that picks the object o.
TwoFunctor point_functor(TwoCatPtr point, TwoCatPtr x, int o) {
  const int e = x->identity_cell(o);
  FinFunctor h = FinFunctor::make(point->hom_ptr(0, 0), x->hom_ptr(o, o), {e},
                                  {x->hom(o, o).identity(e)});
  return TwoFunctor::make(std::move(point), std::move(x), {o}, {std::move(h)});
}

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

DiagramWithCocone segal_decomposition(const CatGraph& g) {
  const int k = static_cast<int>(g.edges.size());
  if (k == 0) throw std::invalid_argument("segal_decomposition: needs at least one edge");
  TwoCatPtr apex = free_linear(g);
  TwoCatPtr point = free_linear({});

  DiagramWithCocone out;
  out.cocone.apex = apex;

  std::vector<TwoCatPtr> pieces;
  for (int s = 1; s <= k; ++s) {
    CatGraph one;
    one.edges = {g.edges[s - 1]};
    pieces.push_back(free_linear(one));
  }

  for (int s = 1; s <= k; ++s) {
    out.diagram.nodes.push_back(pieces[s - 1]);
    const TwoCatPtr& piece = pieces[s - 1];
    // The single-edge piece includes into the apex at objects s-1, s; its hom
    // categories coincide with the corresponding apex homs index for index.
    std::vector<FinFunctor> hmaps;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        const FinCat& hs = piece->hom(x, y);
        hmaps.push_back(FinFunctor::make(piece->hom_ptr(x, y),
                                         apex->hom_ptr(s - 1 + x, s - 1 + y),
                                         iota_vec(hs.n_objects()), iota_vec(hs.n_morphisms())));
      }
    out.cocone.legs.push_back(TwoFunctor::make(piece, apex, {s - 1, s}, std::move(hmaps)));
  }
  for (int s = 1; s < k; ++s) {
    const int p_index = static_cast<int>(out.diagram.nodes.size());
    out.diagram.nodes.push_back(point);
    out.cocone.legs.push_back(point_functor(point, apex, s));
    out.diagram.edges.push_back({p_index, s - 1, point_functor(point, pieces[s - 1], 1)});
    out.diagram.edges.push_back({p_index, s, point_functor(point, pieces[s], 0)});
  }
  return out;
}

PushoutReport verify_pushout(const SpanDiagram& diagram, const Cocone& cocone,
                             const std::vector<NamedProbe>& probes, Budget* budget) {
  const size_t nn = diagram.nodes.size();
  if (cocone.legs.size() != nn)
    throw std::invalid_argument("verify_pushout: one leg per diagram node required");
  for (size_t i = 0; i < nn; ++i) {
    if (cocone.legs[i].src.get() != diagram.nodes[i].get() ||
        cocone.legs[i].tgt.get() != cocone.apex.get())
      throw std::invalid_argument("verify_pushout: leg endpoints are wrong");
  }
  for (const auto& e : diagram.edges) {
    if (e.via.src.get() != diagram.nodes[e.src].get() ||
        e.via.tgt.get() != diagram.nodes[e.tgt].get())
      throw std::invalid_argument("verify_pushout: edge endpoints are wrong");
    if (!compose(cocone.legs[e.tgt], e.via).equal_maps(cocone.legs[e.src]))
      throw std::invalid_argument("verify_pushout: cocone does not commute");
  }

  PushoutReport report;
  report.method = "verified against probe family (" + std::to_string(probes.size()) + " probes)";
  report.pass = true;

  for (const auto& [name, probe] : probes) {
    ProbeOutcome out;
    out.probe = name;

    const auto apex_maps = enumerate_two_functors(cocone.apex, probe, budget);
    out.apex_map_count = apex_maps.size();

    std::vector<std::vector<TwoFunctor>> node_maps(nn);
    for (size_t i = 0; i < nn; ++i) node_maps[i] = enumerate_two_functors(diagram.nodes[i], probe, budget);

    // Keys of the node maps, and of each edge's precomposition.
    std::vector<std::map<std::vector<int>, int>> node_key_index(nn);
    for (size_t i = 0; i < nn; ++i)
      for (size_t c = 0; c < node_maps[i].size(); ++c)
        node_key_index[i][functor_key(node_maps[i][c])] = static_cast<int>(c);
    // edge_target[e][g] = index of (node_maps[tgt][g] after via) among the
    // source node's maps.
    std::vector<std::vector<int>> edge_target(diagram.edges.size());
    for (size_t e = 0; e < diagram.edges.size(); ++e)
      for (const auto& g : node_maps[diagram.edges[e].tgt]) {
        const auto key = functor_key(compose(g, diagram.edges[e].via));
        const auto it = node_key_index[diagram.edges[e].src].find(key);
        edge_target[e].push_back(it == node_key_index[diagram.edges[e].src].end() ? -1
                                                                                  : it->second);
      }

    // Assignment order: grow along edges so constraints fire early.
    std::vector<size_t> order;
    {
      std::vector<bool> placed(nn, false);
      while (order.size() < nn) {
        size_t best = nn;
        int best_links = -1;
        for (size_t i = 0; i < nn; ++i) {
          if (placed[i]) continue;
          int links = 0;
          for (const auto& ed : diagram.edges)
            if ((placed[ed.src] && static_cast<size_t>(ed.tgt) == i) ||
                (placed[ed.tgt] && static_cast<size_t>(ed.src) == i))
              ++links;
          if (links > best_links ||
              (links == best_links && best < nn &&
               node_maps[i].size() < node_maps[best].size())) {
            best = i;
            best_links = links;
          }
        }
        placed[best] = true;
        order.push_back(best);
      }
    }

    // Enumerate the limit: one map per node, compatible along every edge.
    std::set<std::vector<int>> limit;
    std::vector<int> choice(nn, -1);
    auto rec = [&](auto&& self, size_t step) -> void {
      if (budget) budget->spend("verify_pushout");
      if (step == nn) {
        limit.insert(choice);
        return;
      }
      const size_t i = order[step];
      for (size_t c = 0; c < node_maps[i].size(); ++c) {
        choice[i] = static_cast<int>(c);
        bool ok = true;
        for (size_t e = 0; e < diagram.edges.size() && ok; ++e) {
          const auto& ed = diagram.edges[e];
          if (choice[ed.src] == -1 || choice[ed.tgt] == -1) continue;
          ok = edge_target[e][choice[ed.tgt]] == choice[ed.src];
        }
        if (ok) self(self, step + 1);
        choice[i] = -1;
      }
    };
    rec(rec, 0);
    out.limit_count = limit.size();

    // Restrict each apex map along the legs and compare.
    std::set<std::vector<int>> image;
    std::vector<std::vector<int>> image_list;
    for (const auto& s : apex_maps) {
      std::vector<int> key;
      for (size_t j = 0; j < nn; ++j) {
        const auto restricted = functor_key(compose(s, cocone.legs[j]));
        const auto it = node_key_index[j].find(restricted);
        key.push_back(it == node_key_index[j].end() ? -1 : it->second);
      }
      image.insert(key);
      image_list.push_back(std::move(key));
    }

    out.pass = image.size() == apex_maps.size() && image == limit;
    if (!out.pass) {
      if (image.size() != apex_maps.size()) {
        for (size_t a = 0; a < image_list.size() && out.witness.empty(); ++a)
          for (size_t b = a + 1; b < image_list.size(); ++b)
            if (image_list[a] == image_list[b]) {
              out.witness = "maps " + std::to_string(a) + " and " + std::to_string(b) +
                            " out of the apex restrict to the same family";
              break;
            }
      } else {
        for (const auto& elt : limit)
          if (!image.count(elt)) {
            std::string desc;
            for (size_t j = 0; j < elt.size(); ++j)
              desc += (j ? "," : "") + std::to_string(elt[j]);
            out.witness = "compatible family (" + desc + ") is not a restriction of any apex map";
            break;
          }
        if (out.witness.empty())
          out.witness = "image of the apex maps differs from the compatible families";
      }
      report.pass = false;
    }
    report.probes.push_back(std::move(out));
  }
  return report;
}

}  // namespace gray2
