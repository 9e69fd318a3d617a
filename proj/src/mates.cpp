#include "gray2/mates.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace gray2 {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<int> identity_values(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// All monotone maps p -> q as value vectors, lexicographic.
std::vector<std::vector<int>> monotone_maps(const FinPoset& p, const FinPoset& q) {
  std::vector<std::vector<int>> out;
  const int n = p.size(), m = q.size();
  if (m == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<int> v(n, 0);
  while (true) {
    bool mono = true;
    for (int a = 0; a < n && mono; ++a)
      for (int b = 0; b < n && mono; ++b)
        if (p.leq(a, b) && !q.leq(v[a], v[b])) mono = false;
    if (mono) out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == m - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

}  // namespace

AdjunctionData AdjunctionData::make(TwoCatPtr ambient, int obj_a, int obj_b, int l, int r,
                                    int unit, int counit) {
  require(ambient != nullptr, "AdjunctionData: null ambient");
  const TwoCat& x = *ambient;
  const int n = x.n_objects();
  require(obj_a >= 0 && obj_a < n && obj_b >= 0 && obj_b < n, "AdjunctionData: object out of range");
  require(l >= 0 && l < x.hom(obj_a, obj_b).n_objects(), "AdjunctionData: l out of range");
  require(r >= 0 && r < x.hom(obj_b, obj_a).n_objects(), "AdjunctionData: r out of range");
  const FinCat& haa = x.hom(obj_a, obj_a);
  const FinCat& hbb = x.hom(obj_b, obj_b);
  require(unit >= 0 && unit < haa.n_morphisms(), "AdjunctionData: unit out of range");
  require(counit >= 0 && counit < hbb.n_morphisms(), "AdjunctionData: counit out of range");
  require(haa.src(unit) == x.identity_cell(obj_a) &&
              haa.tgt(unit) == x.hcomp_cell(obj_a, obj_b, obj_a, l, r),
          "AdjunctionData: unit endpoints");
  require(hbb.src(counit) == x.hcomp_cell(obj_b, obj_a, obj_b, r, l) &&
              hbb.tgt(counit) == x.identity_cell(obj_b),
          "AdjunctionData: counit endpoints");
  AdjunctionData out{std::move(ambient), obj_a, obj_b, l, r, unit, counit};
  require(check_triangle(out), "AdjunctionData: triangle identities fail");
  return out;
}

AdjunctionData AdjunctionData::identity(TwoCatPtr ambient, int obj) {
  const int idc = ambient->identity_cell(obj);
  const int idm = ambient->hom(obj, obj).identity(idc);
  return make(std::move(ambient), obj, obj, idc, idc, idm, idm);
}

bool check_triangle(const AdjunctionData& adj) {
  const TwoCat& x = *adj.ambient;
  const int a = adj.obj_a, b = adj.obj_b;
  const int t1 = x.vcomp(a, b, x.whisker_post(a, a, b, adj.unit, adj.l),
                         x.whisker_pre(a, b, b, adj.l, adj.counit));
  const int t2 = x.vcomp(b, a, x.whisker_pre(b, a, a, adj.r, adj.unit),
                         x.whisker_post(b, b, a, adj.counit, adj.r));
  return t1 == x.hom(a, b).identity(adj.l) && t2 == x.hom(b, a).identity(adj.r);
}

std::vector<AdjunctionData> find_adjunctions(TwoCatPtr x, Budget* budget) {
  std::vector<AdjunctionData> out;
  const TwoCat& cat = *x;
  const int n = cat.n_objects();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const FinCat& haa = cat.hom(a, a);
      const FinCat& hbb = cat.hom(b, b);
      const int nl = cat.hom(a, b).n_objects();
      const int nr = cat.hom(b, a).n_objects();
      for (int l = 0; l < nl; ++l)
        for (int r = 0; r < nr; ++r) {
          const int lr = cat.hcomp_cell(a, b, a, l, r);
          const int rl = cat.hcomp_cell(b, a, b, r, l);
          for (int unit : haa.homset(cat.identity_cell(a), lr))
            for (int counit : hbb.homset(rl, cat.identity_cell(b))) {
              if (budget) budget->spend("find_adjunctions");
              AdjunctionData cand{x, a, b, l, r, unit, counit};
              if (check_triangle(cand)) out.push_back(cand);
            }
        }
    }
  return out;
}

Square2 Square2::make(TwoCatPtr ambient, Dir direction, int tl, int tr, int bl, int br, int top,
                      int bottom, int left, int right, int filler) {
  require(ambient != nullptr, "Square2: null ambient");
  const TwoCat& x = *ambient;
  const int n = x.n_objects();
  require(tl >= 0 && tl < n && tr >= 0 && tr < n && bl >= 0 && bl < n && br >= 0 && br < n,
          "Square2: corner out of range");
  require(top >= 0 && top < x.hom(tl, tr).n_objects(), "Square2: top out of range");
  require(bottom >= 0 && bottom < x.hom(bl, br).n_objects(), "Square2: bottom out of range");
  if (direction == Dir::colax) {
    require(left >= 0 && left < x.hom(tl, bl).n_objects(), "Square2: left out of range");
    require(right >= 0 && right < x.hom(tr, br).n_objects(), "Square2: right out of range");
    const FinCat& h = x.hom(tl, br);
    require(filler >= 0 && filler < h.n_morphisms(), "Square2: filler out of range");
    require(h.src(filler) == x.hcomp_cell(tl, tr, br, top, right) &&
                h.tgt(filler) == x.hcomp_cell(tl, bl, br, left, bottom),
            "Square2: filler endpoints do not match a colax square");
  } else {
    require(left >= 0 && left < x.hom(bl, tl).n_objects(), "Square2: left out of range");
    require(right >= 0 && right < x.hom(br, tr).n_objects(), "Square2: right out of range");
    const FinCat& h = x.hom(bl, tr);
    require(filler >= 0 && filler < h.n_morphisms(), "Square2: filler out of range");
    require(h.src(filler) == x.hcomp_cell(bl, tl, tr, left, top) &&
                h.tgt(filler) == x.hcomp_cell(bl, br, tr, bottom, right),
            "Square2: filler endpoints do not match a lax square");
  }
  return Square2{std::move(ambient), direction, tl, tr, bl, br, top, bottom, left, right, filler};
}

Square2 mate(const Square2& sq, const AdjunctionData& left_adj, const AdjunctionData& right_adj) {
  require(left_adj.ambient == sq.ambient && right_adj.ambient == sq.ambient,
          "mate: adjunctions live in a different ambient");
  require(left_adj.obj_a == sq.tl && left_adj.obj_b == sq.bl, "mate: left adjunction corners");
  require(right_adj.obj_a == sq.tr && right_adj.obj_b == sq.br, "mate: right adjunction corners");
  const TwoCat& x = *sq.ambient;
  const int a = sq.tl, a2 = sq.tr, b = sq.bl, b2 = sq.br;
  if (sq.direction == Square2::Dir::colax) {
    require(left_adj.l == sq.left && right_adj.l == sq.right,
            "mate: colax verticals must be the left adjoints");
    const int start = x.whisker_pre(b, a2, a2, x.hcomp_cell(b, a, a2, left_adj.r, sq.top),
                                    right_adj.unit);
    const int middle = x.whisker_post(
        b, b2, a2, x.whisker_pre(b, a, b2, left_adj.r, sq.filler), right_adj.r);
    const int finish = x.whisker_post(b, b, a2, left_adj.counit,
                                      x.hcomp_cell(b, b2, a2, sq.bottom, right_adj.r));
    const int filler = x.vcomp(b, a2, x.vcomp(b, a2, start, middle), finish);
    return Square2::make(sq.ambient, Square2::Dir::lax, a, a2, b, b2, sq.top, sq.bottom,
                         left_adj.r, right_adj.r, filler);
  }
  require(left_adj.r == sq.left && right_adj.r == sq.right,
          "mate: lax verticals must be the right adjoints");
  const int start = x.whisker_post(a, a, b2, left_adj.unit,
                                   x.hcomp_cell(a, a2, b2, sq.top, right_adj.l));
  const int middle =
      x.whisker_post(a, a2, b2, x.whisker_pre(a, b, a2, left_adj.l, sq.filler), right_adj.l);
  const int finish = x.whisker_pre(a, b2, b2, x.hcomp_cell(a, b, b2, left_adj.l, sq.bottom),
                                   right_adj.counit);
  const int filler = x.vcomp(a, b2, x.vcomp(a, b2, start, middle), finish);
  return Square2::make(sq.ambient, Square2::Dir::colax, a, a2, b, b2, sq.top, sq.bottom,
                       left_adj.l, right_adj.l, filler);
}

Square2 hpaste(const Square2& left_sq, const Square2& right_sq) {
  require(left_sq.ambient == right_sq.ambient, "hpaste: different ambients");
  require(left_sq.direction == right_sq.direction, "hpaste: mixed directions");
  require(left_sq.tr == right_sq.tl && left_sq.br == right_sq.bl, "hpaste: corners do not meet");
  require(left_sq.right == right_sq.left, "hpaste: middle vertical differs");
  const TwoCat& x = *left_sq.ambient;
  const int top = x.hcomp_cell(left_sq.tl, left_sq.tr, right_sq.tr, left_sq.top, right_sq.top);
  const int bottom =
      x.hcomp_cell(left_sq.bl, left_sq.br, right_sq.br, left_sq.bottom, right_sq.bottom);
  int filler;
  if (left_sq.direction == Square2::Dir::colax) {
    const int stepped = x.whisker_pre(left_sq.tl, left_sq.tr, right_sq.br, left_sq.top,
                                      right_sq.filler);
    const int landed = x.whisker_post(left_sq.tl, left_sq.br, right_sq.br, left_sq.filler,
                                      right_sq.bottom);
    filler = x.vcomp(left_sq.tl, right_sq.br, stepped, landed);
  } else {
    const int stepped = x.whisker_post(left_sq.bl, left_sq.tr, right_sq.tr, left_sq.filler,
                                       right_sq.top);
    const int landed = x.whisker_pre(left_sq.bl, left_sq.br, right_sq.tr, left_sq.bottom,
                                     right_sq.filler);
    filler = x.vcomp(left_sq.bl, right_sq.tr, stepped, landed);
  }
  return Square2::make(left_sq.ambient, left_sq.direction, left_sq.tl, right_sq.tr, left_sq.bl,
                       right_sq.br, top, bottom, left_sq.left, right_sq.right, filler);
}

AdjunctionData compose_adjunctions(const AdjunctionData& second, const AdjunctionData& first) {
  require(first.ambient == second.ambient, "compose_adjunctions: different ambients");
  require(first.obj_b == second.obj_a, "compose_adjunctions: objects do not meet");
  const TwoCat& x = *first.ambient;
  const int a = first.obj_a, b = first.obj_b, c = second.obj_b;
  const int l = x.hcomp_cell(a, b, c, first.l, second.l);
  const int r = x.hcomp_cell(c, b, a, second.r, first.r);
  const int unit =
      x.vcomp(a, a, first.unit,
              x.whisker_post(a, b, a, x.whisker_pre(a, b, b, first.l, second.unit), first.r));
  const int counit =
      x.vcomp(c, c,
              x.whisker_post(c, b, c, x.whisker_pre(c, b, b, second.r, first.counit), second.l),
              second.counit);
  return AdjunctionData::make(first.ambient, a, c, l, r, unit, counit);
}

std::vector<Square2> colax_squares_between(const AdjunctionData& va, const AdjunctionData& vb) {
  require(va.ambient == vb.ambient, "colax_squares_between: different ambients");
  const TwoCat& x = *va.ambient;
  const int tl = va.obj_a, bl = va.obj_b, tr = vb.obj_a, br = vb.obj_b;
  std::vector<Square2> out;
  const FinCat& fills = x.hom(tl, br);
  for (int top = 0; top < x.hom(tl, tr).n_objects(); ++top)
    for (int bottom = 0; bottom < x.hom(bl, br).n_objects(); ++bottom) {
      const int src = x.hcomp_cell(tl, tr, br, top, vb.l);
      const int tgt = x.hcomp_cell(tl, bl, br, va.l, bottom);
      for (int filler : fills.homset(src, tgt))
        out.push_back(Square2{va.ambient, Square2::Dir::colax, tl, tr, bl, br, top, bottom, va.l,
                              vb.l, filler});
    }
  return out;
}

namespace {

std::optional<AdjunctionData> first_right_adjoint(const TwoCatPtr& x, int a, int b, int l,
                                                  Budget* budget) {
  const TwoCat& cat = *x;
  const FinCat& haa = cat.hom(a, a);
  const FinCat& hbb = cat.hom(b, b);
  for (int r = 0; r < cat.hom(b, a).n_objects(); ++r) {
    const int lr = cat.hcomp_cell(a, b, a, l, r);
    const int rl = cat.hcomp_cell(b, a, b, r, l);
    for (int unit : haa.homset(cat.identity_cell(a), lr))
      for (int counit : hbb.homset(rl, cat.identity_cell(b))) {
        if (budget) budget->spend("first_right_adjoint");
        AdjunctionData cand{x, a, b, l, r, unit, counit};
        if (check_triangle(cand)) return cand;
      }
  }
  return std::nullopt;
}

bool is_invertible(const FinCat& h, int m) {
  for (int inv : h.homset(h.tgt(m), h.src(m)))
    if (h.then(m, inv) == h.identity(h.src(m)) && h.then(inv, m) == h.identity(h.tgt(m)))
      return true;
  return false;
}

}  // namespace

MateCoherence laxfunadj_unit_counit(const Square2& sq, Budget* budget) {
  require(sq.direction == Square2::Dir::colax, "laxfunadj_unit_counit: needs a colax square");
  const TwoCat& x = *sq.ambient;
  require(is_invertible(x.hom(sq.tl, sq.br), sq.filler),
          "laxfunadj_unit_counit: filler is not invertible");
  auto la = first_right_adjoint(sq.ambient, sq.tl, sq.bl, sq.left, budget);
  require(la.has_value(), "laxfunadj_unit_counit: left vertical has no right adjoint");
  auto ra = first_right_adjoint(sq.ambient, sq.tr, sq.br, sq.right, budget);
  require(ra.has_value(), "laxfunadj_unit_counit: right vertical has no right adjoint");

  MateCoherence out;
  out.left_adj = *la;
  out.right_adj = *ra;
  out.mate_square = mate(sq, *la, *ra);
  const int a = sq.tl, a2 = sq.tr, b = sq.bl, b2 = sq.br;
  out.unit_via_filler = x.vcomp(a, a2, x.whisker_pre(a, a2, a2, sq.top, ra->unit),
                                x.whisker_post(a, b2, a2, sq.filler, ra->r));
  out.unit_via_mate = x.vcomp(a, a2, x.whisker_post(a, a, a2, la->unit, sq.top),
                              x.whisker_pre(a, b, a2, la->l, out.mate_square.filler));
  out.counit_via_mate = x.vcomp(b, b2, x.whisker_post(b, a2, b2, out.mate_square.filler, ra->l),
                                x.whisker_pre(b, b2, b2, sq.bottom, ra->counit));
  out.counit_via_filler = x.vcomp(b, b2, x.whisker_pre(b, a, b2, la->r, sq.filler),
                                  x.whisker_post(b, b, b2, la->counit, sq.bottom));
  out.pass = out.unit_via_filler == out.unit_via_mate &&
             out.counit_via_mate == out.counit_via_filler;
  return out;
}

PosTwoCatData pos_twocat_data(const std::vector<FinPoset>& ps) {
  const int n = static_cast<int>(ps.size());
  PosTwoCatData d;
  d.posets = ps;
  d.maps.resize(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "P" + std::to_string(i);
  std::vector<CatPtr> homs(static_cast<size_t>(n) * n);
  std::vector<std::map<std::vector<int>, int>> index(static_cast<size_t>(n) * n);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<std::vector<int>> ms = monotone_maps(ps[x], ps[y]);
      std::vector<std::string> mlabels(ms.size());
      std::vector<std::vector<bool>> leq(ms.size(), std::vector<bool>(ms.size()));
      for (size_t f = 0; f < ms.size(); ++f) {
        std::string lab = "(";
        for (size_t e = 0; e < ms[f].size(); ++e) {
          if (e) lab += ' ';
          lab += std::to_string(ms[f][e]);
        }
        lab += ')';
        mlabels[f] = std::move(lab);
        for (size_t g = 0; g < ms.size(); ++g) {
          bool le = true;
          for (size_t e = 0; e < ms[f].size() && le; ++e) le = ps[y].leq(ms[f][e], ms[g][e]);
          leq[f][g] = le;
        }
      }
      homs[static_cast<size_t>(x) * n + y] =
          from_poset_ptr(FinPoset(std::move(mlabels), std::move(leq)));
      for (size_t f = 0; f < ms.size(); ++f)
        index[static_cast<size_t>(x) * n + y][ms[f]] = static_cast<int>(f);
      d.maps[static_cast<size_t>(x) * n + y] = std::move(ms);
    }

  std::vector<TwoCat::HCompTable> tables(static_cast<size_t>(n) * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const auto& mf = d.maps[static_cast<size_t>(x) * n + y];
        const auto& mg = d.maps[static_cast<size_t>(y) * n + z];
        const auto& target = index[static_cast<size_t>(x) * n + z];
        TwoCat::HCompTable t;
        t.obj.resize(mf.size() * mg.size());
        std::vector<int> comp;
        for (size_t f = 0; f < mf.size(); ++f)
          for (size_t g = 0; g < mg.size(); ++g) {
            comp.resize(mf[f].size());
            for (size_t e = 0; e < mf[f].size(); ++e) comp[e] = mg[g][mf[f][e]];
            t.obj[f * mg.size() + g] = target.at(comp);
          }
        const FinCat& cf = *homs[static_cast<size_t>(x) * n + y];
        const FinCat& cg = *homs[static_cast<size_t>(y) * n + z];
        const FinCat& ch = *homs[static_cast<size_t>(x) * n + z];
        t.mor.resize(static_cast<size_t>(cf.n_morphisms()) * cg.n_morphisms());
        for (int u = 0; u < cf.n_morphisms(); ++u)
          for (int v = 0; v < cg.n_morphisms(); ++v) {
            const int s = t.obj[static_cast<size_t>(cf.src(u)) * mg.size() + cg.src(v)];
            const int tt = t.obj[static_cast<size_t>(cf.tgt(u)) * mg.size() + cg.tgt(v)];
            const int m = ch.unique_mor(s, tt);
            if (m < 0) throw std::logic_error("pos_twocat: composite breaks the pointwise order");
            t.mor[static_cast<size_t>(u) * cg.n_morphisms() + v] = m;
          }
        tables[(static_cast<size_t>(x) * n + y) * n + z] = std::move(t);
      }

  std::vector<int> idc(n);
  for (int x = 0; x < n; ++x)
    idc[x] = index[static_cast<size_t>(x) * n + x].at(identity_values(ps[x].size()));
  d.cat = make_twocat(TwoCat(std::move(labels), std::move(homs), std::move(idc), std::move(tables)));
  return d;
}

TwoCatPtr pos_twocat(const std::vector<FinPoset>& ps) { return pos_twocat_data(ps).cat; }

namespace {

bool is_partial_order(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) return false;
      if (!leq[a][b]) continue;
      for (int c = 0; c < n; ++c)
        if (leq[b][c] && !leq[a][c]) return false;
    }
  return true;
}

std::string canonical_form(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s(static_cast<size_t>(n) * n, '0');
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (leq[perm[a]][perm[b]]) s[static_cast<size_t>(a) * n + b] = '1';
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FinPoset> bounded_posets(int max_size) {
  if (max_size > 4) throw std::invalid_argument("bounded_posets: sizes above 4 are too many");
  std::vector<FinPoset> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<std::pair<int, int>> offs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) offs.emplace_back(a, b);
    std::set<std::string> seen;
    for (long long mask = 0; mask < (1LL << offs.size()); ++mask) {
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
      for (int a = 0; a < n; ++a) leq[a][a] = true;
      for (size_t i = 0; i < offs.size(); ++i)
        if (mask >> i & 1) leq[offs[i].first][offs[i].second] = true;
      if (!is_partial_order(leq)) continue;
      if (!seen.insert(canonical_form(leq)).second) continue;
      std::vector<std::string> labels(n);
      for (int a = 0; a < n; ++a) labels[a] = std::to_string(a);
      out.push_back(FinPoset(std::move(labels), std::move(leq)));
    }
  }
  return out;
}

TwoCatPtr sign_ambient() {
  FinCat hom({"I"}, {{0, 0, "1"}, {0, 0, "s"}}, {0}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  TwoCat::HCompTable t;
  t.obj = {0};
  t.mor = {0, 1, 1, 0};
  return make_twocat(TwoCat({"*"}, {make_cat(std::move(hom))}, {0}, {std::move(t)}));
}

}  // namespace gray2
