#include "gray2/poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gray2 {

FinPoset::FinPoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  const size_t n = labels_.size();
  if (leq_.size() != n)
    throw std::invalid_argument("FinPoset: relation size mismatch");
  for (const auto& row : leq_)
    if (row.size() != n) throw std::invalid_argument("FinPoset: relation row size mismatch");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != n) throw std::invalid_argument("FinPoset: duplicate labels");
  for (size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw std::invalid_argument("FinPoset: not reflexive");
    for (size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a])
        throw std::invalid_argument("FinPoset: not antisymmetric");
      if (!leq_[a][b]) continue;
      for (size_t c = 0; c < n; ++c)
        if (leq_[b][c] && !leq_[a][c])
          throw std::invalid_argument("FinPoset: not transitive");
    }
  }
}

int FinPoset::index_of(const std::string& lab) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == lab) return i;
  return -1;
}

std::vector<std::pair<int, int>> FinPoset::cover_relations() const {
  std::vector<std::pair<int, int>> covers;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq_[a][b]) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c)
        if (c != a && c != b && leq_[a][c] && leq_[c][b]) direct = false;
      if (direct) covers.emplace_back(a, b);
    }
  return covers;
}

int FinPoset::strict_pair_count() const {
  int count = 0;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (a != b && leq_[a][b]) ++count;
  return count;
}

int FinPoset::pair_count() const { return strict_pair_count() + size(); }

FinPoset ordinal_poset(int n) {
  if (n < 0) throw std::invalid_argument("ordinal_poset: negative bound");
  return interval_poset(0, n);
}

FinPoset interval_poset(int i, int j) {
  if (i > j) throw std::invalid_argument("interval_poset: empty interval");
  const int n = j - i + 1;
  std::vector<std::string> labels(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(i + a);
    for (int b = a; b < n; ++b) leq[a][b] = true;
  }
  return FinPoset(std::move(labels), std::move(leq));
}

FinPoset antichain_poset(int n) {
  std::vector<std::string> labels(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    leq[a][a] = true;
  }
  return FinPoset(std::move(labels), std::move(leq));
}

FinPoset product(const FinPoset& p, const FinPoset& q) {
  return product_multi({p, q});
}

FinPoset product_multi(const std::vector<FinPoset>& factors) {
  std::vector<int> dims;
  dims.reserve(factors.size());
  for (const auto& f : factors) dims.push_back(f.size());
  ProductShape shape(dims);
  const int n = shape.total();
  std::vector<std::string> labels(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    const auto ta = shape.tuple(a);
    if (factors.empty()) {
      labels[a] = "()";
    } else if (factors.size() == 1) {
      labels[a] = factors[0].label(ta[0]);
    } else {
      std::string lab = "(";
      for (size_t s = 0; s < factors.size(); ++s) {
        if (s) lab += ",";
        lab += factors[s].label(ta[s]);
      }
      lab += ")";
      labels[a] = lab;
    }
    for (int b = 0; b < n; ++b) {
      const auto tb = shape.tuple(b);
      bool le = true;
      for (size_t s = 0; s < factors.size() && le; ++s)
        le = factors[s].leq(ta[s], tb[s]);
      leq[a][b] = le;
    }
  }
  return FinPoset(std::move(labels), std::move(leq));
}

ProductShape::ProductShape(std::vector<int> d) : dims(std::move(d)) {
  for (int x : dims) {
    if (x < 0) throw std::invalid_argument("ProductShape: negative dimension");
    total_ *= x;
  }
}

int ProductShape::index(const std::vector<int>& tuple) const {
  if (tuple.size() != dims.size())
    throw std::invalid_argument("ProductShape::index: arity mismatch");
  int idx = 0;
  for (size_t s = 0; s < dims.size(); ++s) {
    if (tuple[s] < 0 || tuple[s] >= dims[s])
      throw std::invalid_argument("ProductShape::index: component out of range");
    idx = idx * dims[s] + tuple[s];
  }
  return idx;
}

std::vector<int> ProductShape::tuple(int index) const {
  std::vector<int> t(dims.size(), 0);
  for (size_t s = dims.size(); s-- > 0;) {
    t[s] = index % dims[s];
    index /= dims[s];
  }
  return t;
}

LatticePath::LatticePath(std::string s) : steps(std::move(s)) {
  for (char c : steps)
    if (c != 'H' && c != 'V')
      throw std::invalid_argument("LatticePath: steps must be 'H' or 'V'");
}

int LatticePath::h_count() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), 'H'));
}

int LatticePath::v_count() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), 'V'));
}

std::vector<LatticePath> enumerate_paths(int k, int m) {
  if (k < 0 || m < 0) throw std::invalid_argument("enumerate_paths: negative counts");
  std::vector<LatticePath> out;
  std::string cur;
  // Depth-first with 'H' before 'V' yields lexicographic order directly.
  auto rec = [&](auto&& self, int hs, int vs) -> void {
    if (hs == 0 && vs == 0) {
      out.emplace_back(cur);
      return;
    }
    if (hs > 0) {
      cur.push_back('H');
      self(self, hs - 1, vs);
      cur.pop_back();
    }
    if (vs > 0) {
      cur.push_back('V');
      self(self, hs, vs - 1);
      cur.pop_back();
    }
  };
  rec(rec, k, m);
  return out;
}

bool path_leq(const LatticePath& p, const LatticePath& q) {
  if (p.steps.size() != q.steps.size() || p.h_count() != q.h_count())
    throw std::invalid_argument("path_leq: paths live in different rectangles");
  int vp = 0, vq = 0;
  for (size_t t = 0; t < p.steps.size(); ++t) {
    if (p.steps[t] == 'V') ++vp;
    if (q.steps[t] == 'V') ++vq;
    if (vp > vq) return false;
  }
  return true;
}

LatticePath concat_paths(const LatticePath& p, const LatticePath& q) {
  return LatticePath(p.steps + q.steps);
}

LatticePath transpose_path(const LatticePath& p) {
  std::string s = p.steps;
  for (char& c : s) c = (c == 'H') ? 'V' : 'H';
  return LatticePath(s);
}

FinPoset max_chain_poset(int k, int m) {
  const auto paths = enumerate_paths(k, m);
  const int n = static_cast<int>(paths.size());
  std::vector<std::string> labels(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    labels[a] = paths[a].steps.empty() ? "e" : paths[a].steps;
    for (int b = 0; b < n; ++b) leq[a][b] = path_leq(paths[a], paths[b]);
  }
  return FinPoset(std::move(labels), std::move(leq));
}

namespace {

// Per-element fingerprint used to prune the isomorphism search.
struct ElementSignature {
  int below, above, covers_up, covers_down;
  bool operator==(const ElementSignature&) const = default;
};

std::vector<ElementSignature> signatures(const FinPoset& p) {
  const int n = p.size();
  std::vector<ElementSignature> sig(n, {0, 0, 0, 0});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      ++sig[a].above;
      ++sig[b].below;
    }
  for (auto [a, b] : p.cover_relations()) {
    ++sig[a].covers_up;
    ++sig[b].covers_down;
  }
  return sig;
}

}  // namespace

std::optional<std::vector<int>> poset_iso(const FinPoset& p, const FinPoset& q) {
  const int n = p.size();
  if (n != q.size()) return std::nullopt;
  const auto sp = signatures(p);
  const auto sq = signatures(q);
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);

  auto rec = [&](auto&& self, int a) -> bool {
    if (a == n) return true;
    for (int b = 0; b < n; ++b) {
      if (used[b] || !(sp[a] == sq[b])) continue;
      bool ok = true;
      for (int a2 = 0; a2 < a && ok; ++a2) {
        if (p.leq(a, a2) != q.leq(b, image[a2])) ok = false;
        if (ok && p.leq(a2, a) != q.leq(image[a2], b)) ok = false;
      }
      if (!ok) continue;
      image[a] = b;
      used[b] = true;
      if (self(self, a + 1)) return true;
      image[a] = -1;
      used[b] = false;
    }
    return false;
  };
  if (rec(rec, 0)) return image;
  return std::nullopt;
}

}  // namespace gray2
