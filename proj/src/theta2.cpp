#include "gray2/theta2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gray2 {

DeltaMor::DeltaMor(int src, int tgt, std::vector<int> vals)
    : src_n(src), tgt_n(tgt), values(std::move(vals)) {
  if (src_n < 0 || tgt_n < 0) throw std::invalid_argument("DeltaMor: negative ordinal");
  if (static_cast<int>(values.size()) != src_n + 1)
    throw std::invalid_argument("DeltaMor: value list has wrong length");
  for (int i = 0; i <= src_n; ++i) {
    if (values[i] < 0 || values[i] > tgt_n)
      throw std::invalid_argument("DeltaMor: value out of range");
    if (i > 0 && values[i] < values[i - 1])
      throw std::invalid_argument("DeltaMor: not monotone");
  }
}

DeltaMor DeltaMor::identity(int n) {
  std::vector<int> vals(n + 1);
  std::iota(vals.begin(), vals.end(), 0);
  return DeltaMor(n, n, std::move(vals));
}

bool DeltaMor::is_inert() const {
  for (int i = 0; i <= src_n; ++i)
    if (values[i] != values[0] + i) return false;
  return true;
}

bool DeltaMor::is_active() const { return values[0] == 0 && values[src_n] == tgt_n; }

DeltaMor compose(const DeltaMor& g, const DeltaMor& f) {
  if (f.tgt_n != g.src_n) throw std::invalid_argument("compose(DeltaMor): ordinal mismatch");
  std::vector<int> vals(f.src_n + 1);
  for (int i = 0; i <= f.src_n; ++i) vals[i] = g(f(i));
  return DeltaMor(f.src_n, g.tgt_n, std::move(vals));
}

std::vector<DeltaMor> all_delta_mors(int src_n, int tgt_n) {
  std::vector<DeltaMor> out;
  std::vector<int> vals(src_n + 1, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == src_n + 1) {
      out.emplace_back(src_n, tgt_n, vals);
      return;
    }
    for (int v = (i == 0) ? 0 : vals[i - 1]; v <= tgt_n; ++v) {
      vals[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Theta2Obj::Theta2Obj(std::vector<int> sizes) : ns(std::move(sizes)) {
  for (int n : ns)
    if (n < 0) throw std::invalid_argument("Theta2Obj: negative inner size");
}

std::string to_notation(const Theta2Obj& o) {
  std::string s = "[" + std::to_string(o.k()) + "](";
  for (int i = 0; i < o.k(); ++i) {
    if (i) s += ",";
    s += std::to_string(o.ns[i]);
  }
  return s + ")";
}

Theta2Obj parse_theta2(const std::string& text) {
  size_t pos = 0;
  auto fail = [&]() -> void {
    throw std::invalid_argument("parse_theta2: malformed shape notation: " + text);
  };
  auto skip_ws = [&]() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail();
    ++pos;
  };
  auto number = [&]() -> int {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail();
    return std::stoi(text.substr(start, pos - start));
  };

  expect('[');
  const int k = number();
  expect(']');
  expect('(');
  std::vector<int> ns;
  skip_ws();
  if (pos < text.size() && text[pos] != ')') {
    ns.push_back(number());
    skip_ws();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      ns.push_back(number());
      skip_ws();
    }
  }
  expect(')');
  skip_ws();
  if (pos != text.size()) fail();
  if (static_cast<int>(ns.size()) != k) fail();
  return Theta2Obj(std::move(ns));
}

Theta2Mor::Theta2Mor(Theta2Obj s, Theta2Obj t, DeltaMor p, std::map<std::pair<int, int>, DeltaMor> psi)
    : src(std::move(s)), tgt(std::move(t)), phi(std::move(p)), psis(std::move(psi)) {
  if (phi.src_n != src.k() || phi.tgt_n != tgt.k())
    throw std::invalid_argument("Theta2Mor: phi endpoints differ from shapes");
  // The index set is exactly {(i, j) : phi(i-1) < j <= phi(i)}.
  size_t expected = 0;
  for (int i = 1; i <= src.k(); ++i)
    for (int j = phi(i - 1) + 1; j <= phi(i); ++j) {
      ++expected;
      auto it = psis.find({i, j});
      if (it == psis.end()) throw std::invalid_argument("Theta2Mor: missing inner map");
      if (it->second.src_n != src.n(i) || it->second.tgt_n != tgt.n(j))
        throw std::invalid_argument("Theta2Mor: inner map has wrong ordinals");
    }
  if (psis.size() != expected)
    throw std::invalid_argument("Theta2Mor: stray inner map outside the index set");
}

Theta2Mor Theta2Mor::identity(const Theta2Obj& o) {
  std::map<std::pair<int, int>, DeltaMor> psis;
  for (int i = 1; i <= o.k(); ++i) psis.emplace(std::pair{i, i}, DeltaMor::identity(o.n(i)));
  return Theta2Mor(o, o, DeltaMor::identity(o.k()), std::move(psis));
}

int Theta2Mor::inner_source(int j) const {
  for (int i = 1; i <= src.k(); ++i)
    if (phi(i - 1) < j && j <= phi(i)) return i;
  return -1;
}

Theta2Mor compose(const Theta2Mor& g, const Theta2Mor& f) {
  if (!(f.tgt == g.src)) throw std::invalid_argument("compose(Theta2Mor): shape mismatch");
  DeltaMor phi = compose(g.phi, f.phi);
  std::map<std::pair<int, int>, DeltaMor> psis;
  for (int i = 1; i <= f.src.k(); ++i)
    for (int j = phi(i - 1) + 1; j <= phi(i); ++j) {
      // The intervals given by g.phi tile (phi(i-1), phi(i)], so there is a
      // unique middle index r with f.phi(i-1) < r <= f.phi(i) that owns j.
      int r = -1;
      for (int cand = f.phi(i - 1) + 1; cand <= f.phi(i); ++cand)
        if (g.phi(cand - 1) < j && j <= g.phi(cand)) {
          r = cand;
          break;
        }
      if (r == -1) throw std::logic_error("compose(Theta2Mor): no middle index");
      psis.emplace(std::pair{i, j}, compose(g.psis.at({r, j}), f.psis.at({i, r})));
    }
  return Theta2Mor(f.src, g.tgt, std::move(phi), std::move(psis));
}

MorClass classify(const Theta2Mor& f) {
  MorClass cls{f.phi.is_inert(), f.phi.is_active()};
  for (const auto& [ij, psi] : f.psis) {
    cls.inert = cls.inert && psi.is_inert();
    cls.active = cls.active && psi.is_active();
  }
  return cls;
}

InertActiveFactorization factorize_inert_active(const Theta2Mor& f) {
  const int base = f.phi(0);
  const int mid_k = f.phi(f.src.k()) - base;

  // Middle inner sizes: the image extent of the inner map responsible for
  // each middle index.
  std::vector<int> mid_ns(mid_k, 0);
  for (int j = base + 1; j <= base + mid_k; ++j) {
    const int i = f.inner_source(j);
    const DeltaMor& psi = f.psis.at({i, j});
    mid_ns[j - base - 1] = psi(psi.src_n) - psi(0);
  }
  Theta2Obj middle(mid_ns);

  std::vector<int> act_vals(f.src.k() + 1);
  for (int i = 0; i <= f.src.k(); ++i) act_vals[i] = f.phi(i) - base;
  std::map<std::pair<int, int>, DeltaMor> act_psis;
  for (int i = 1; i <= f.src.k(); ++i)
    for (int j = f.phi(i - 1) + 1; j <= f.phi(i); ++j) {
      const DeltaMor& psi = f.psis.at({i, j});
      std::vector<int> vals(psi.src_n + 1);
      for (int x = 0; x <= psi.src_n; ++x) vals[x] = psi(x) - psi(0);
      act_psis.emplace(std::pair{i, j - base},
                       DeltaMor(psi.src_n, middle.n(j - base), std::move(vals)));
    }
  Theta2Mor active(f.src, middle, DeltaMor(f.src.k(), mid_k, std::move(act_vals)),
                   std::move(act_psis));

  std::vector<int> in_vals(mid_k + 1);
  for (int j = 0; j <= mid_k; ++j) in_vals[j] = base + j;
  std::map<std::pair<int, int>, DeltaMor> in_psis;
  for (int jm = 1; jm <= mid_k; ++jm) {
    const int j = base + jm;
    const int i = f.inner_source(j);
    const DeltaMor& psi = f.psis.at({i, j});
    std::vector<int> vals(middle.n(jm) + 1);
    for (int x = 0; x <= middle.n(jm); ++x) vals[x] = psi(0) + x;
    in_psis.emplace(std::pair{jm, j}, DeltaMor(middle.n(jm), f.tgt.n(j), std::move(vals)));
  }
  Theta2Mor inert(middle, f.tgt, DeltaMor(mid_k, f.tgt.k(), std::move(in_vals)),
                  std::move(in_psis));

  return {std::move(middle), std::move(active), std::move(inert)};
}

Theta2Obj tau(int k, int n) { return Theta2Obj(std::vector<int>(k, n)); }

Theta2Mor tau_mor(const DeltaMor& phi, const DeltaMor& psi) {
  std::map<std::pair<int, int>, DeltaMor> psis;
  for (int i = 1; i <= phi.src_n; ++i)
    for (int j = phi(i - 1) + 1; j <= phi(i); ++j) psis.emplace(std::pair{i, j}, psi);
  return Theta2Mor(tau(phi.src_n, psi.src_n), tau(phi.tgt_n, psi.tgt_n), phi, std::move(psis));
}

TwoOpObj two_op_obj(const Theta2Obj& o) {
  TwoOpObj out{o, {}};
  out.reversal.resize(o.k());
  for (int i = 1; i <= o.k(); ++i) {
    out.reversal[i - 1].resize(o.n(i) + 1);
    for (int x = 0; x <= o.n(i); ++x) out.reversal[i - 1][x] = o.n(i) - x;
  }
  return out;
}

Theta2Obj one_op_obj(const Theta2Obj& o) {
  std::vector<int> ns(o.ns.rbegin(), o.ns.rend());
  return Theta2Obj(std::move(ns));
}

std::vector<Theta2Obj> bounded_objects(int max_k, int max_n) {
  std::vector<Theta2Obj> out;
  for (int k = 0; k <= max_k; ++k) {
    std::vector<int> ns(k, 0);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == k) {
        out.emplace_back(ns);
        return;
      }
      for (int n = 0; n <= max_n; ++n) {
        ns[i] = n;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  return out;
}

std::vector<Theta2Mor> all_theta2_mors(const Theta2Obj& src, const Theta2Obj& tgt) {
  std::vector<Theta2Mor> out;
  for (const DeltaMor& phi : all_delta_mors(src.k(), tgt.k())) {
    // Collect the index set, then take every combination of inner maps.
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= src.k(); ++i)
      for (int j = phi(i - 1) + 1; j <= phi(i); ++j) slots.emplace_back(i, j);
    std::map<std::pair<int, int>, DeltaMor> psis;
    auto rec = [&](auto&& self, size_t s) -> void {
      if (s == slots.size()) {
        out.emplace_back(src, tgt, phi, psis);
        return;
      }
      const auto [i, j] = slots[s];
      for (const DeltaMor& psi : all_delta_mors(src.n(i), tgt.n(j))) {
        psis.insert_or_assign({i, j}, psi);
        self(self, s + 1);
      }
      psis.erase({i, j});
    };
    rec(rec, 0);
  }
  return out;
}

}  // namespace gray2
