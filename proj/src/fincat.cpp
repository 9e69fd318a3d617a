#include "gray2/fincat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gray2 {

FinCat::FinCat(std::vector<std::string> objects, std::vector<Mor> morphisms,
               std::vector<int> identities, const std::vector<std::array<int, 3>>& comp_triples)
    : obj_labels_(std::move(objects)), mors_(std::move(morphisms)), idmor_(std::move(identities)) {
  const int no = n_objects();
  const int nm = n_morphisms();
  std::set<std::string> seen(obj_labels_.begin(), obj_labels_.end());
  if (static_cast<int>(seen.size()) != no)
    throw std::invalid_argument("FinCat: duplicate object labels");
  for (const auto& m : mors_)
    if (m.src < 0 || m.src >= no || m.tgt < 0 || m.tgt >= no)
      throw std::invalid_argument("FinCat: morphism endpoint out of range");
  if (static_cast<int>(idmor_.size()) != no)
    throw std::invalid_argument("FinCat: identity table size mismatch");
  for (int o = 0; o < no; ++o) {
    const int e = idmor_[o];
    if (e < 0 || e >= nm || mors_[e].src != o || mors_[e].tgt != o)
      throw std::invalid_argument("FinCat: bad identity morphism");
  }

  comp_.assign(static_cast<size_t>(nm) * nm, -1);
  for (const auto& t : comp_triples) {
    auto [f, g, h] = t;
    if (f < 0 || f >= nm || g < 0 || g >= nm || h < 0 || h >= nm)
      throw std::invalid_argument("FinCat: composition index out of range");
    if (mors_[f].tgt != mors_[g].src)
      throw std::invalid_argument("FinCat: composition of incomposable pair");
    if (mors_[h].src != mors_[f].src || mors_[h].tgt != mors_[g].tgt)
      throw std::invalid_argument("FinCat: composite has wrong endpoints");
    int& slot = comp_[static_cast<size_t>(g) * nm + f];
    if (slot != -1 && slot != h)
      throw std::invalid_argument("FinCat: conflicting composition entries");
    slot = h;
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (mors_[f].tgt == mors_[g].src && comp_[static_cast<size_t>(g) * nm + f] == -1)
        throw std::invalid_argument("FinCat: composition table not closed");

  by_src_.assign(no, {});
  for (int m = 0; m < nm; ++m) by_src_[mors_[m].src].push_back(m);

  for (int f = 0; f < nm; ++f) {
    if (then(idmor_[mors_[f].src], f) != f || then(f, idmor_[mors_[f].tgt]) != f)
      throw std::invalid_argument("FinCat: identity law fails");
  }
  for (int f = 0; f < nm; ++f)
    for (int g : by_src_[mors_[f].tgt])
      for (int h : by_src_[mors_[g].tgt])
        if (then(then(f, g), h) != then(f, then(g, h)))
          throw std::invalid_argument("FinCat: associativity fails");

  unique_.assign(static_cast<size_t>(no) * no, -1);
  for (int m = 0; m < nm; ++m) {
    int& slot = unique_[static_cast<size_t>(mors_[m].src) * no + mors_[m].tgt];
    slot = (slot == -1) ? m : -2;
  }
  posetal_ = std::none_of(unique_.begin(), unique_.end(), [](int u) { return u == -2; });
}

bool FinCat::is_identity(int m) const { return idmor_[mors_[m].src] == m && mors_[m].src == mors_[m].tgt; }

int FinCat::then(int f, int g) const {
  const int h = comp_[static_cast<size_t>(g) * n_morphisms() + f];
  if (h == -1) throw std::invalid_argument("FinCat::then: incomposable");
  return h;
}

std::vector<int> FinCat::homset(int a, int b) const {
  std::vector<int> out;
  for (int m : by_src_[a])
    if (mors_[m].tgt == b) out.push_back(m);
  return out;
}

CatPtr make_cat(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

FinCat from_poset(const FinPoset& p) {
  const int n = p.size();
  std::vector<std::string> objects = p.labels();
  std::vector<FinCat::Mor> mors;
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.leq(a, b)) {
        pair_index[a][b] = static_cast<int>(mors.size());
        mors.push_back({a, b, p.label(a) + "<=" + p.label(b)});
      }
  std::vector<int> ids(n);
  for (int a = 0; a < n; ++a) ids[a] = pair_index[a][a];
  std::vector<std::array<int, 3>> comp;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.leq(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (p.leq(b, c))
          comp.push_back({pair_index[a][b], pair_index[b][c], pair_index[a][c]});
    }
  return FinCat(std::move(objects), std::move(mors), std::move(ids), comp);
}

CatPtr from_poset_ptr(const FinPoset& p) { return make_cat(from_poset(p)); }

FinCat terminal_cat() { return from_poset(ordinal_poset(0)); }

FinCat discrete_cat(int n) { return from_poset(antichain_poset(n)); }

FinCat ordinal_cat(int n) { return from_poset(ordinal_poset(n)); }

FinCat product_cat(const FinCat& c, const FinCat& d) { return product_cat_multi({&c, &d}); }

FinCat product_cat_multi(const std::vector<const FinCat*>& factors) {
  std::vector<int> odims, mdims;
  for (const auto* f : factors) {
    odims.push_back(f->n_objects());
    mdims.push_back(f->n_morphisms());
  }
  ProductShape oshape(odims), mshape(mdims);
  const size_t nf = factors.size();

  auto tuple_label = [&](const std::vector<int>& t, bool objects) {
    if (nf == 0) return std::string("()");
    if (nf == 1)
      return objects ? factors[0]->object_label(t[0]) : factors[0]->mor_label(t[0]);
    std::string lab = "(";
    for (size_t s = 0; s < nf; ++s) {
      if (s) lab += ",";
      lab += objects ? factors[s]->object_label(t[s]) : factors[s]->mor_label(t[s]);
    }
    return lab + ")";
  };

  std::vector<std::string> objects(oshape.total());
  for (int o = 0; o < oshape.total(); ++o) objects[o] = tuple_label(oshape.tuple(o), true);

  std::vector<FinCat::Mor> mors(mshape.total());
  for (int m = 0; m < mshape.total(); ++m) {
    const auto t = mshape.tuple(m);
    std::vector<int> s(nf), g(nf);
    for (size_t i = 0; i < nf; ++i) {
      s[i] = factors[i]->src(t[i]);
      g[i] = factors[i]->tgt(t[i]);
    }
    mors[m] = {oshape.index(s), oshape.index(g), tuple_label(t, false)};
  }

  std::vector<int> ids(oshape.total());
  for (int o = 0; o < oshape.total(); ++o) {
    const auto t = oshape.tuple(o);
    std::vector<int> e(nf);
    for (size_t i = 0; i < nf; ++i) e[i] = factors[i]->identity(t[i]);
    ids[o] = mshape.index(e);
  }

  std::vector<std::array<int, 3>> comp;
  for (int f = 0; f < mshape.total(); ++f) {
    const auto tf = mshape.tuple(f);
    for (int g = 0; g < mshape.total(); ++g) {
      const auto tg = mshape.tuple(g);
      bool ok = true;
      std::vector<int> th(nf);
      for (size_t i = 0; i < nf && ok; ++i) {
        if (factors[i]->tgt(tf[i]) != factors[i]->src(tg[i]))
          ok = false;
        else
          th[i] = factors[i]->then(tf[i], tg[i]);
      }
      if (ok) comp.push_back({f, g, mshape.index(th)});
    }
  }
  return FinCat(std::move(objects), std::move(mors), std::move(ids), comp);
}

FinCat opposite(const FinCat& c) {
  std::vector<std::string> objects(c.n_objects());
  for (int o = 0; o < c.n_objects(); ++o) objects[o] = c.object_label(o);
  std::vector<FinCat::Mor> mors(c.n_morphisms());
  for (int m = 0; m < c.n_morphisms(); ++m)
    mors[m] = {c.tgt(m), c.src(m), c.mor_label(m)};
  std::vector<int> ids(c.n_objects());
  for (int o = 0; o < c.n_objects(); ++o) ids[o] = c.identity(o);
  std::vector<std::array<int, 3>> comp;
  for (int f = 0; f < c.n_morphisms(); ++f)
    for (int g = 0; g < c.n_morphisms(); ++g)
      if (c.src(f) == c.tgt(g)) comp.push_back({f, g, c.then(g, f)});
  return FinCat(std::move(objects), std::move(mors), std::move(ids), comp);
}

std::vector<int> pi0(const FinCat& c) {
  std::vector<int> parent(c.n_objects());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int m = 0; m < c.n_morphisms(); ++m) parent[find(c.src(m))] = find(c.tgt(m));
  std::vector<int> comp(c.n_objects(), -1);
  int next = 0;
  for (int o = 0; o < c.n_objects(); ++o) {
    const int r = find(o);
    if (comp[r] == -1) comp[r] = next++;
    comp[o] = comp[r];
  }
  return comp;
}

int pi0_count(const FinCat& c) {
  const auto comp = pi0(c);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

FinFunctor FinFunctor::make(CatPtr src, CatPtr tgt, std::vector<int> omap, std::vector<int> mmap) {
  FinFunctor f{std::move(src), std::move(tgt), std::move(omap), std::move(mmap)};
  const FinCat& c = *f.src;
  const FinCat& d = *f.tgt;
  if (static_cast<int>(f.omap.size()) != c.n_objects() ||
      static_cast<int>(f.mmap.size()) != c.n_morphisms())
    throw std::invalid_argument("FinFunctor: map size mismatch");
  for (int o = 0; o < c.n_objects(); ++o)
    if (f.omap[o] < 0 || f.omap[o] >= d.n_objects())
      throw std::invalid_argument("FinFunctor: object image out of range");
  for (int m = 0; m < c.n_morphisms(); ++m) {
    const int i = f.mmap[m];
    if (i < 0 || i >= d.n_morphisms())
      throw std::invalid_argument("FinFunctor: morphism image out of range");
    if (d.src(i) != f.omap[c.src(m)] || d.tgt(i) != f.omap[c.tgt(m)])
      throw std::invalid_argument("FinFunctor: morphism image has wrong endpoints");
  }
  for (int o = 0; o < c.n_objects(); ++o)
    if (f.mmap[c.identity(o)] != d.identity(f.omap[o]))
      throw std::invalid_argument("FinFunctor: identity not preserved");
  for (int m = 0; m < c.n_morphisms(); ++m)
    for (int g : c.morphisms_from(c.tgt(m)))
      if (f.mmap[c.then(m, g)] != d.then(f.mmap[m], f.mmap[g]))
        throw std::invalid_argument("FinFunctor: composition not preserved");
  return f;
}

FinFunctor FinFunctor::identity(CatPtr c) {
  std::vector<int> omap(c->n_objects()), mmap(c->n_morphisms());
  std::iota(omap.begin(), omap.end(), 0);
  std::iota(mmap.begin(), mmap.end(), 0);
  return FinFunctor{c, c, std::move(omap), std::move(mmap)};
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (f.tgt.get() != g.src.get())
    throw std::invalid_argument("compose(FinFunctor): middle categories differ");
  std::vector<int> omap(f.omap.size()), mmap(f.mmap.size());
  for (size_t o = 0; o < omap.size(); ++o) omap[o] = g.omap[f.omap[o]];
  for (size_t m = 0; m < mmap.size(); ++m) mmap[m] = g.mmap[f.mmap[m]];
  return FinFunctor{f.src, g.tgt, std::move(omap), std::move(mmap)};
}

namespace {

// Backtracking core shared by all_functors: assigns object images in index
// order, pruning as soon as some morphism has no possible image, then fills
// in morphism images with composition checks.
struct FunctorSearch {
  const FinCat& c;
  const FinCat& d;
  Budget* budget;
  std::vector<int> omap, mmap;
  std::vector<std::pair<int, int>> composable;  // (f, g) with f then g defined
  std::vector<FinFunctor> out;
  CatPtr csp, dsp;

  FunctorSearch(CatPtr cp, CatPtr dp, Budget* b)
      : c(*cp), d(*dp), budget(b), csp(std::move(cp)), dsp(std::move(dp)) {
    omap.assign(c.n_objects(), -1);
    mmap.assign(c.n_morphisms(), -1);
    for (int f = 0; f < c.n_morphisms(); ++f)
      for (int g : c.morphisms_from(c.tgt(f))) composable.emplace_back(f, g);
  }

  void spend() {
    if (budget) budget->spend("all_functors");
  }

  bool objects_feasible() const {
    for (int m = 0; m < c.n_morphisms(); ++m) {
      const int a = omap[c.src(m)], b = omap[c.tgt(m)];
      if (a != -1 && b != -1 && !d.has_mor(a, b)) return false;
    }
    return true;
  }

  bool mor_consistent(int upto) const {
    for (const auto& [f, g] : composable) {
      const int h = c.then(f, g);
      if (f > upto || g > upto || h > upto) continue;
      if (d.then(mmap[f], mmap[g]) != mmap[h]) return false;
    }
    return true;
  }

  void assign_mors(int m) {
    if (m == c.n_morphisms()) {
      out.push_back(FinFunctor{csp, dsp, omap, mmap});
      return;
    }
    if (c.is_identity(m)) {
      mmap[m] = d.identity(omap[c.src(m)]);
      if (mor_consistent(m)) assign_mors(m + 1);
      mmap[m] = -1;
      return;
    }
    for (int i : d.homset(omap[c.src(m)], omap[c.tgt(m)])) {
      spend();
      mmap[m] = i;
      if (mor_consistent(m)) assign_mors(m + 1);
      mmap[m] = -1;
    }
  }

  void assign_objects(int o) {
    if (o == c.n_objects()) {
      assign_mors(0);
      return;
    }
    for (int b = 0; b < d.n_objects(); ++b) {
      spend();
      omap[o] = b;
      if (objects_feasible()) assign_objects(o + 1);
      omap[o] = -1;
    }
  }
};

}  // namespace

std::vector<FinFunctor> all_functors(CatPtr c, CatPtr d, Budget* budget) {
  FunctorSearch search(std::move(c), std::move(d), budget);
  search.assign_objects(0);
  return std::move(search.out);
}

FunctorCatData functor_cat(CatPtr c, CatPtr d, Budget* budget) {
  FunctorCatData data;
  data.objects = all_functors(c, d, budget);
  const int nf = static_cast<int>(data.objects.size());
  const FinCat& cc = *c;
  const FinCat& dd = *d;

  std::vector<FinCat::Mor> mors;
  std::vector<std::pair<int, int>> ends;  // (src functor, tgt functor)
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> index_of;

  for (int fi = 0; fi < nf; ++fi)
    for (int gi = 0; gi < nf; ++gi) {
      const auto& F = data.objects[fi];
      const auto& G = data.objects[gi];
      // Enumerate natural transformations F => G componentwise.
      std::vector<int> comp(cc.n_objects(), -1);
      auto rec = [&](auto&& self, int x) -> void {
        if (budget) budget->spend("functor_cat");
        if (x == cc.n_objects()) {
          const int id = static_cast<int>(mors.size());
          index_of[{{fi, gi}, comp}] = id;
          mors.push_back({fi, gi, "n" + std::to_string(id)});
          ends.emplace_back(fi, gi);
          data.components.push_back(comp);
          return;
        }
        for (int cand : dd.homset(F.omap[x], G.omap[x])) {
          comp[x] = cand;
          bool ok = true;
          for (int m = 0; m < cc.n_morphisms() && ok; ++m) {
            const int s = cc.src(m), t = cc.tgt(m);
            if (comp[s] == -1 || comp[t] == -1) continue;
            if (dd.then(comp[s], G.mmap[m]) != dd.then(F.mmap[m], comp[t])) ok = false;
          }
          if (ok) self(self, x + 1);
          comp[x] = -1;
        }
      };
      rec(rec, 0);
    }

  std::vector<std::string> objects(nf);
  for (int i = 0; i < nf; ++i) objects[i] = "F" + std::to_string(i);

  std::vector<int> ids(nf);
  for (int i = 0; i < nf; ++i) {
    std::vector<int> comp(cc.n_objects());
    for (int x = 0; x < cc.n_objects(); ++x) comp[x] = dd.identity(data.objects[i].omap[x]);
    ids[i] = index_of.at({{i, i}, comp});
  }

  std::vector<std::array<int, 3>> comp_triples;
  for (size_t a = 0; a < mors.size(); ++a)
    for (size_t b = 0; b < mors.size(); ++b) {
      if (ends[a].second != ends[b].first) continue;
      std::vector<int> comp(cc.n_objects());
      for (int x = 0; x < cc.n_objects(); ++x)
        comp[x] = dd.then(data.components[a][x], data.components[b][x]);
      comp_triples.push_back({static_cast<int>(a), static_cast<int>(b),
                              index_of.at({{ends[a].first, ends[b].second}, comp})});
    }

  data.cat = make_cat(FinCat(std::move(objects), std::move(mors), std::move(ids), comp_triples));
  return data;
}

namespace {

struct IsoSearch {
  const FinCat& c;
  const FinCat& d;
  Budget* budget;
  std::vector<int> omap, mmap;
  std::vector<bool> oused, mused;

  IsoSearch(const FinCat& cc, const FinCat& dd, Budget* b) : c(cc), d(dd), budget(b) {
    omap.assign(c.n_objects(), -1);
    mmap.assign(c.n_morphisms(), -1);
    oused.assign(d.n_objects(), false);
    mused.assign(d.n_morphisms(), false);
  }

  void spend() {
    if (budget) budget->spend("cat_iso");
  }

  bool mor_consistent(int upto) const {
    for (int f = 0; f <= upto; ++f) {
      for (int g = 0; g <= upto; ++g) {
        if (!c.composable(f, g)) continue;
        const int h = c.then(f, g);
        if (h > upto) continue;
        if (d.then(mmap[f], mmap[g]) != mmap[h]) return false;
      }
    }
    return true;
  }

  bool assign_mor(int m) {
    if (m == c.n_morphisms()) return true;
    const int a = omap[c.src(m)], b = omap[c.tgt(m)];
    if (c.is_identity(m)) {
      const int i = d.identity(a);
      if (mused[i]) return false;
      mmap[m] = i;
      mused[i] = true;
      if (mor_consistent(m) && assign_mor(m + 1)) return true;
      mused[i] = false;
      mmap[m] = -1;
      return false;
    }
    for (int i : d.homset(a, b)) {
      if (mused[i] || d.is_identity(i)) continue;
      spend();
      mmap[m] = i;
      mused[i] = true;
      if (mor_consistent(m) && assign_mor(m + 1)) return true;
      mused[i] = false;
      mmap[m] = -1;
    }
    return false;
  }

  bool assign_obj(int o) {
    if (o == c.n_objects()) return assign_mor(0);
    for (int b = 0; b < d.n_objects(); ++b) {
      if (oused[b]) continue;
      spend();
      bool ok = true;
      for (int o2 = 0; o2 <= o && ok; ++o2) {
        const int b2 = (o2 == o) ? b : omap[o2];
        if (b2 == -1) continue;
        if (c.homset(o, o2).size() != d.homset(b, b2).size()) ok = false;
        if (ok && c.homset(o2, o).size() != d.homset(b2, b).size()) ok = false;
      }
      if (!ok) continue;
      omap[o] = b;
      oused[b] = true;
      if (assign_obj(o + 1)) return true;
      oused[b] = false;
      omap[o] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::pair<FinFunctor, FinFunctor>> cat_iso(CatPtr c, CatPtr d, Budget* budget) {
  if (c->n_objects() != d->n_objects() || c->n_morphisms() != d->n_morphisms())
    return std::nullopt;
  IsoSearch search(*c, *d, budget);
  if (!search.assign_obj(0)) return std::nullopt;
  FinFunctor fwd = FinFunctor::make(c, d, search.omap, search.mmap);
  std::vector<int> iomap(d->n_objects()), immap(d->n_morphisms());
  for (int o = 0; o < c->n_objects(); ++o) iomap[fwd.omap[o]] = o;
  for (int m = 0; m < c->n_morphisms(); ++m) immap[fwd.mmap[m]] = m;
  FinFunctor bwd = FinFunctor::make(d, c, std::move(iomap), std::move(immap));
  return std::make_pair(std::move(fwd), std::move(bwd));
}

}  // namespace gray2
