#include "gray2/phi.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace gray2 {

namespace {

std::vector<int> iota_map(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

Theta2Obj bar_obj(int m) {
  Theta2Obj o;
  o.ns.assign(m, 0);
  return o;
}

Theta2Mor bar_mor(const DeltaMor& mu) {
  std::map<std::pair<int, int>, DeltaMor> psis;
  for (int i = 1; i <= mu.src_n; ++i)
    for (int j = mu(i - 1) + 1; j <= mu(i); ++j) psis[{i, j}] = DeltaMor(0, 0, {0});
  return Theta2Mor(bar_obj(mu.src_n), bar_obj(mu.tgt_n), mu, std::move(psis));
}

std::vector<int> phi_dims(const Theta2Obj& I, int m, int i, int j) {
  std::vector<int> dims;
  for (int s = i + 1; s <= j; ++s) dims.push_back((I.n(s) + 1) * (m + 1));
  return dims;
}

PhiData phi_data(const Theta2Obj& I, int m) {
  PhiData d;
  d.I = I;
  d.m = m;
  for (int s = 1; s <= I.k(); ++s)
    d.graph.edges.push_back(from_poset_ptr(product(ordinal_poset(I.n(s)), ordinal_poset(m))));
  d.cat = free_linear(d.graph);
  return d;
}

TwoCatPtr phi_obj(const Theta2Obj& I, int m) { return phi_data(I, m).cat; }

TwoFunctor phi_mor(const Theta2Mor& F, const DeltaMor& mu, const PhiData& S, const PhiData& T) {
  if (F.src.ns != S.I.ns || F.tgt.ns != T.I.ns)
    throw std::invalid_argument("phi_mor: shape instances do not match the morphism");
  if (mu.src_n != S.m || mu.tgt_n != T.m)
    throw std::invalid_argument("phi_mor: ordinal map does not match the instances");
  const int n = S.I.k() + 1;
  std::vector<int> omap(n);
  for (int i = 0; i < n; ++i) omap[i] = F.phi(i);

  std::vector<std::vector<int>> cells(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int i2 = i; i2 < n; ++i2) {
      const ProductShape ss(phi_dims(S.I, S.m, i, i2));
      const ProductShape ts(phi_dims(T.I, T.m, omap[i], omap[i2]));
      std::vector<int>& img = cells[static_cast<size_t>(i) * n + i2];
      img.resize(ss.total());
      for (int o = 0; o < ss.total(); ++o) {
        const std::vector<int> c = ss.tuple(o);
        std::vector<int> out;
        out.reserve(static_cast<size_t>(omap[i2] - omap[i]));
        for (int t = omap[i] + 1; t <= omap[i2]; ++t) {
          const int s = F.inner_source(t);
          const int comp = c[s - i - 1];
          const int a = comp / (S.m + 1), b = comp % (S.m + 1);
          out.push_back(F.psis.at({s, t})(a) * (T.m + 1) + mu(b));
        }
        img[o] = ts.index(out);
      }
    }
  return posetal_functor(S.cat, T.cat, std::move(omap), std::move(cells));
}

TwoFunctor phi_mor(const Theta2Mor& F, const DeltaMor& mu) {
  PhiData s = phi_data(F.src, mu.src_n);
  PhiData t = phi_data(F.tgt, mu.tgt_n);
  return phi_mor(F, mu, s, t);
}

TwoFunctor phi0_iso(TwoCatPtr realized, const PhiData& phi0) {
  if (phi0.m != 0) throw std::invalid_argument("phi0_iso: ordinal parameter must be 0");
  if (realized->n_objects() != phi0.cat->n_objects())
    throw std::invalid_argument("phi0_iso: instance mismatch");
  const int n = realized->n_objects();
  std::vector<std::vector<int>> cells(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int i2 = i; i2 < n; ++i2) {
      const int count = realized->hom(i, i2).n_objects();
      if (count != phi0.cat->hom(i, i2).n_objects())
        throw std::logic_error("phi0_iso: hom sizes differ");
      cells[static_cast<size_t>(i) * n + i2] = iota_map(count);
    }
  return posetal_functor(realized, phi0.cat, iota_map(n), std::move(cells));
}

TwoFunctor nu(const GrayData& g, const PhiData& p) {
  if (g.I.ns != p.I.ns) throw std::invalid_argument("nu: shape mismatch");
  if (g.J.ns != std::vector<int>(p.m, 0))
    throw std::invalid_argument("nu: second tensor factor is not the bar shape");
  const int m = p.m;
  const int n = g.rows * g.cols;
  std::vector<int> omap(n);
  for (int x = 0; x < n; ++x) omap[x] = g.row(x);

  std::vector<std::vector<int>> cells(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = g.row(x), j = g.col(x);
      const int i2 = g.row(y), j2 = g.col(y);
      if (i > i2 || j > j2) continue;
      const GrayHom& h = g.hom_data(x, y);
      const ProductShape ts(phi_dims(p.I, m, i, i2));
      std::vector<int>& img = cells[static_cast<size_t>(x) * n + y];
      img.resize(g.cat->hom(x, y).n_objects());
      for (int o = 0; o < static_cast<int>(img.size()); ++o) {
        const std::vector<int> av = h.icomps.tuple(h.icomp_of(o));
        std::vector<int> out;
        out.reserve(av.size());
        int col = j;
        size_t next = 0;
        for (char ch : h.paths[h.path_of(o)].steps) {
          if (ch == 'H')
            out.push_back(av[next++] * (m + 1) + col);
          else
            ++col;
        }
        img[o] = ts.index(out);
      }
    }
  return posetal_functor(g.cat, p.cat, std::move(omap), std::move(cells));
}

TwoFunctor nu(const Theta2Obj& I, int m) {
  GrayData g = gray_colax_data(I, bar_obj(m));
  PhiData p = phi_data(I, m);
  return nu(g, p);
}

EtaPrimeData eta_prime_data(const Theta2Obj& I, int m, Budget* budget) {
  EtaPrimeData d{realize(I), phi_data(I, m), {}, {}};
  d.ct = cotensor_data(d.phi.cat, m, budget);
  const int n = d.realized->n_objects();
  std::vector<std::vector<int>> cells(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int i2 = i; i2 < n; ++i2) {
      const FinCat& hs = d.realized->hom(i, i2);
      const ProductShape ts(phi_dims(I, m, i, i2));
      const ProductShape rs(phi_dims(I, 0, i, i2));
      const FunctorCatData& fc = d.ct.homs[static_cast<size_t>(i) * n + i2];
      std::vector<int>& img = cells[static_cast<size_t>(i) * n + i2];
      img.resize(hs.n_objects());
      for (int a = 0; a < hs.n_objects(); ++a) {
        // the diagonal functor [m] -> phi hom: vertex r goes to the tuple
        // pairing each component of a with the constant column r
        const std::vector<int> av = rs.tuple(a);
        std::vector<int> vertex(m + 1);
        for (int r = 0; r <= m; ++r) {
          std::vector<int> out(av.size());
          for (size_t s = 0; s < av.size(); ++s) out[s] = av[s] * (m + 1) + r;
          vertex[r] = ts.index(out);
        }
        int found = -1;
        for (int c = 0; c < static_cast<int>(fc.objects.size()); ++c)
          if (fc.objects[c].omap == vertex) {
            found = c;
            break;
          }
        if (found < 0) throw std::logic_error("eta_prime_data: diagonal functor not in cotensor");
        img[a] = found;
      }
    }
  d.eta = posetal_functor(d.realized, d.ct.cat, iota_map(n), std::move(cells));
  return d;
}

TwoFunctor eta_prime(const Theta2Obj& I, int m) { return eta_prime_data(I, m).eta; }

DiagramWithCocone odot_square(const Theta2Obj& I, int m, bool corrupt) {
  GrayData g = gray_colax_data(I, bar_obj(m));
  PhiData p = phi_data(I, m);
  TwoFunctor v = nu(g, p);
  const int k = I.k();

  std::vector<std::string> names(k + 1);
  for (int x = 0; x <= k; ++x) names[x] = std::to_string(x);
  TwoCatPtr disc = discrete_twocat(names);
  TwoCatPtr bar = realize(bar_obj(m));
  TwoCatPtr prod = product_twocat(disc, bar);

  std::map<std::pair<int, int>, std::vector<int>> cone_cells;
  for (int x = 0; x <= k; ++x)
    for (int r = 0; r <= m; ++r)
      for (int r2 = r + 1; r2 <= m; ++r2) cone_cells[{x * (m + 1) + r, x * (m + 1) + r2}] = {0};

  TwoFunctor e_gray = posetal_functor(prod, g.cat, iota_map(prod->n_objects()), cone_cells);
  std::vector<int> proj(prod->n_objects());
  for (int x = 0; x <= k; ++x)
    for (int r = 0; r <= m; ++r) proj[x * (m + 1) + r] = x;
  TwoFunctor e_disc = posetal_functor(prod, disc, std::move(proj), cone_cells);

  TwoFunctor leg_gray = v;
  TwoFunctor leg_prod = compose(v, e_gray);
  TwoFunctor leg_disc = posetal_functor(disc, p.cat, iota_map(k + 1),
                                        std::map<std::pair<int, int>, std::vector<int>>{});

  if (corrupt) {
    // squash every phi component onto column zero; a valid endofunctor, so
    // the cocone still commutes, but distinct columns become unobservable
    const int n = k + 1;
    std::vector<std::vector<int>> sq(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int i2 = i; i2 < n; ++i2) {
        const ProductShape sh(phi_dims(I, m, i, i2));
        std::vector<int>& img = sq[static_cast<size_t>(i) * n + i2];
        img.resize(sh.total());
        for (int o = 0; o < sh.total(); ++o) {
          std::vector<int> c = sh.tuple(o);
          for (int& comp : c) comp = comp / (m + 1) * (m + 1);
          img[o] = sh.index(c);
        }
      }
    TwoFunctor squash = posetal_functor(p.cat, p.cat, iota_map(n), std::move(sq));
    leg_gray = compose(squash, leg_gray);
    leg_prod = compose(squash, leg_prod);
    leg_disc = compose(squash, leg_disc);
  }

  DiagramWithCocone out;
  out.diagram.nodes = {g.cat, prod, disc};
  out.diagram.edges = {{1, 0, e_gray}, {1, 2, e_disc}};
  out.cocone.apex = p.cat;
  out.cocone.legs = {leg_gray, leg_prod, leg_disc};
  return out;
}

PushoutReport check_odot_pushout(const Theta2Obj& I, int m, const std::vector<NamedProbe>& probes,
                                 bool corrupt, Budget* budget) {
  DiagramWithCocone d = odot_square(I, m, corrupt);
  return verify_pushout(d.diagram, d.cocone, probes, budget);
}

DiagramWithCocone phi_outer_decomposition(const Theta2Obj& I, int m) {
  if (I.k() < 1) throw std::invalid_argument("phi_outer_decomposition: needs at least one edge");
  return segal_decomposition(phi_data(I, m).graph);
}

DiagramWithCocone phi_inner_decomposition(int n, int m) {
  if (n < 1) throw std::invalid_argument("phi_inner_decomposition: needs n >= 1");
  const Theta2Obj big(std::vector<int>{n});
  const Theta2Obj unit(std::vector<int>{1});
  const Theta2Obj point(std::vector<int>{0});
  PhiData bigd = phi_data(big, m);
  PhiData unitd = phi_data(unit, m);
  PhiData pointd = phi_data(point, m);
  const DeltaMor mu = DeltaMor::identity(m);
  const DeltaMor phi01(1, 1, {0, 1});

  DiagramWithCocone out;
  out.cocone.apex = bigd.cat;
  for (int s = 1; s <= n; ++s) {
    out.diagram.nodes.push_back(unitd.cat);
    const Theta2Mor inc(unit, big, phi01, {{{1, 1}, DeltaMor(1, n, {s - 1, s})}});
    out.cocone.legs.push_back(phi_mor(inc, mu, unitd, bigd));
  }
  for (int s = 1; s < n; ++s) {
    const int gi = static_cast<int>(out.diagram.nodes.size());
    out.diagram.nodes.push_back(pointd.cat);
    const Theta2Mor at_top(point, unit, phi01, {{{1, 1}, DeltaMor(0, 1, {1})}});
    const Theta2Mor at_bottom(point, unit, phi01, {{{1, 1}, DeltaMor(0, 1, {0})}});
    out.diagram.edges.push_back({gi, s - 1, phi_mor(at_top, mu, pointd, unitd)});
    out.diagram.edges.push_back({gi, s, phi_mor(at_bottom, mu, pointd, unitd)});
    const Theta2Mor glue(point, big, phi01, {{{1, 1}, DeltaMor(0, n, {s})}});
    out.cocone.legs.push_back(phi_mor(glue, mu, pointd, bigd));
  }
  return out;
}

NuImageReport nu_image(const GrayData& g, const PhiData& p, const TwoFunctor& n) {
  NuImageReport rep;
  const int m = p.m;
  const int k = p.I.k();

  std::vector<char> hit(p.cat->n_objects(), 0);
  for (int x = 0; x < g.cat->n_objects(); ++x) hit[n.omap[x]] = 1;
  rep.objects = true;
  for (char h : hit) rep.objects = rep.objects && h;

  rep.windows = true;
  for (int i = 1; i <= k; ++i) {
    const FinFunctor& w = n.hmap(g.obj(i - 1, 0), g.obj(i, m));
    const FinCat& th = p.cat->hom(i - 1, i);
    std::vector<char> oh(th.n_objects(), 0), mh(th.n_morphisms(), 0);
    for (int o : w.omap) oh[o] = 1;
    for (int mm : w.mmap) mh[mm] = 1;
    for (char h : oh) rep.windows = rep.windows && h;
    for (char h : mh) rep.windows = rep.windows && h;
  }

  rep.composites = true;
  for (int i = 0; i <= k; ++i)
    for (int i2 = i + 2; i2 <= k; ++i2) {
      const ProductShape sh(phi_dims(p.I, m, i, i2));
      for (int o = 0; o < sh.total(); ++o) {
        const std::vector<int> c = sh.tuple(o);
        int acc = c[0];
        for (int s = i + 1; s < i2; ++s) acc = p.cat->hcomp_cell(i, s, s + 1, acc, c[s - i]);
        rep.composites = rep.composites && acc == o;
      }
    }
  return rep;
}

bool nu_natural_at(const Theta2Mor& F, const DeltaMor& mu, const GrayData& g) {
  if (F.src.ns != g.I.ns || g.J.ns != std::vector<int>(mu.src_n, 0))
    throw std::invalid_argument("nu_natural_at: instance mismatch");
  // Both composite routes produce, at a cell (path, a, *), the tuple with
  // entry psi(a component) * (m' + 1) + column at each crossed edge. The psi
  // part is the same expression on both sides, and equality of packed pairs
  // with equal first halves reduces to equality of the column halves, so the
  // square commutes on every cell over a path exactly when the two column
  // vectors of that path agree: mu of the source columns against the columns
  // read off the stretched path.
  const int n = g.rows * g.cols;
  std::vector<int> cols, image_cols;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = g.row(x), j = g.col(x);
      const int i2 = g.row(y), j2 = g.col(y);
      if (i > i2 || j > j2) continue;
      const GrayHom& h = g.hom_data(x, y);
      for (const LatticePath& path : h.paths) {
        // columns of the source path, then reindexed through mu; the crossed
        // edge of H step sigma is sigma itself, and the image edges of that
        // step are the run phi(i+sigma)+1 .. phi(i+sigma+1)
        cols.clear();
        {
          int col = j;
          for (char ch : path.steps)
            if (ch == 'H')
              cols.push_back(col);
            else
              ++col;
        }
        image_cols.clear();
        for (int sigma = 0; sigma < static_cast<int>(cols.size()); ++sigma)
          for (int t = F.phi(i + sigma) + 1; t <= F.phi(i + sigma + 1); ++t)
            image_cols.push_back(mu(cols[sigma]));

        // tensor map first, then read columns off the stretched path
        const LatticePath stretched = stretch_path(path, i, j, F.phi, mu);
        size_t idx = 0;
        int col = mu(j);
        bool agree = true;
        for (char ch : stretched.steps) {
          if (ch == 'H') {
            if (idx >= image_cols.size() || image_cols[idx] != col) {
              agree = false;
              break;
            }
            ++idx;
          } else {
            ++col;
          }
        }
        if (!agree || idx != image_cols.size()) return false;
      }
    }
  return true;
}

}  // namespace gray2
