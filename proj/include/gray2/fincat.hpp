#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gray2/poset.hpp"

namespace gray2 {

// Thrown when a search walks past its node budget. Callers distinguish this
// from ordinary failures: running out of budget is not a "no".
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Search budget shared down a call tree. Counts nodes, throws when spent.
class Budget {
public:
  explicit Budget(long long nodes) : left_(nodes) {}
  void spend(const char* site) {
    if (--left_ < 0) throw BudgetExceeded(std::string("search budget exceeded in ") + site);
  }
  long long remaining() const { return left_; }

private:
  long long left_;
};

// Finite category given by complete tables. Objects and morphisms are dense
// integer indices; labels exist for printing only. Parallel morphisms are
// allowed and distinguished purely by index.
class FinCat {
public:
  struct Mor {
    int src;
    int tgt;
    std::string label;
  };

  FinCat() = default;

  // comp_triples lists every composable pair once: [f, g, h] means h is
  // "f then g" (g after f). Identity and associativity laws as well as
  // closure are checked; throws std::invalid_argument on any violation.
  FinCat(std::vector<std::string> objects, std::vector<Mor> morphisms,
         std::vector<int> identities, const std::vector<std::array<int, 3>>& comp_triples);

  int n_objects() const { return static_cast<int>(obj_labels_.size()); }
  int n_morphisms() const { return static_cast<int>(mors_.size()); }
  int identity(int obj) const { return idmor_[obj]; }
  bool is_identity(int m) const;
  int src(int m) const { return mors_[m].src; }
  int tgt(int m) const { return mors_[m].tgt; }

  // "f then g"; throws on incomposable arguments.
  int then(int f, int g) const;
  bool composable(int f, int g) const { return mors_[f].tgt == mors_[g].src; }

  const std::string& object_label(int o) const { return obj_labels_[o]; }
  const std::string& mor_label(int m) const { return mors_[m].label; }
  const std::vector<int>& morphisms_from(int obj) const { return by_src_[obj]; }
  std::vector<int> homset(int a, int b) const;

  // Unique morphism a -> b: index if exactly one, -1 if none, -2 if several.
  int unique_mor(int a, int b) const { return unique_[a * n_objects() + b]; }
  bool has_mor(int a, int b) const { return unique_mor(a, b) != -1; }
  // At most one morphism between any ordered pair of objects.
  bool is_posetal() const { return posetal_; }

private:
  std::vector<std::string> obj_labels_;
  std::vector<Mor> mors_;
  std::vector<int> idmor_;
  std::vector<int> comp_;  // flat n_mor x n_mor, -1 when incomposable
  std::vector<std::vector<int>> by_src_;
  std::vector<int> unique_;
  bool posetal_ = true;
};

using CatPtr = std::shared_ptr<const FinCat>;

CatPtr make_cat(FinCat c);

// Category of a poset: morphisms are the pairs a <= b, enumerated in
// lexicographic (a, b) order. Composition is forced.
FinCat from_poset(const FinPoset& p);
CatPtr from_poset_ptr(const FinPoset& p);

// Terminal category (one object, its identity).
FinCat terminal_cat();
// Discrete category on n objects.
FinCat discrete_cat(int n);
// The ordinal n as a category (chain with n+1 objects).
FinCat ordinal_cat(int n);

// Binary and n-ary products. Object (a, b) has index a * d.n_objects() + b,
// morphisms likewise; the first factor is most significant.
FinCat product_cat(const FinCat& c, const FinCat& d);
FinCat product_cat_multi(const std::vector<const FinCat*>& factors);

FinCat opposite(const FinCat& c);

// Connected components of the underlying graph: component index per object,
// numbered by first appearance.
std::vector<int> pi0(const FinCat& c);
int pi0_count(const FinCat& c);

struct FinFunctor {
  CatPtr src, tgt;
  std::vector<int> omap;  // per source object
  std::vector<int> mmap;  // per source morphism

  // Checks identity and composition preservation; throws on violation.
  static FinFunctor make(CatPtr src, CatPtr tgt, std::vector<int> omap, std::vector<int> mmap);
  static FinFunctor identity(CatPtr c);
  bool equal_maps(const FinFunctor& o) const { return omap == o.omap && mmap == o.mmap; }
};

// "f then g" on functors.
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);

// All functors c -> d in lexicographic order on (omap, mmap). Backtracking
// with forced-composite propagation; spends the budget if given.
std::vector<FinFunctor> all_functors(CatPtr c, CatPtr d, Budget* budget = nullptr);

// Functor category together with the dictionaries needed to use it: the
// objects as actual functors and each morphism as its component list.
struct FunctorCatData {
  CatPtr cat;
  std::vector<FinFunctor> objects;
  std::vector<std::vector<int>> components;  // per morphism, per source object
};

FunctorCatData functor_cat(CatPtr c, CatPtr d, Budget* budget = nullptr);

// First isomorphism in lexicographic order, with its inverse.
std::optional<std::pair<FinFunctor, FinFunctor>> cat_iso(CatPtr c, CatPtr d,
                                                         Budget* budget = nullptr);

}  // namespace gray2
