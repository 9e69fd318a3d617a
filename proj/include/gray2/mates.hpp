#pragma once

#include "gray2/twocat.hpp"

// Adjunctions between objects of a finite strict 2-category and the mate
// calculus on squares of 1-cells. Every composite here is written in diagram
// order: hcomp_cell(x, y, z, f, g) is "f then g", vcomp is "first then
// second", and a whiskered chain like r . phi . r' is evaluated left to
// right along the 1-cell composition.

namespace gray2 {

// l -| r between two objects, with chosen unit and counit 2-cells.
// unit:   id_{obj_a} => (l then r)   in hom(obj_a, obj_a)
// counit: (r then l) => id_{obj_b}   in hom(obj_b, obj_b)
struct AdjunctionData {
  TwoCatPtr ambient;
  int obj_a = 0, obj_b = 0;  // l : obj_a -> obj_b
  int l = 0, r = 0;
  int unit = 0, counit = 0;

  // Validates endpoints and both triangle identities; throws on violation.
  static AdjunctionData make(TwoCatPtr ambient, int obj_a, int obj_b, int l, int r, int unit,
                             int counit);
  static AdjunctionData identity(TwoCatPtr ambient, int obj);
  bool operator==(const AdjunctionData&) const = default;
};

// Evaluates both triangle composites on raw data: true iff
// (unit whiskered by l) then (l whiskered by counit) is id_l and
// (r whiskered by unit) then (counit whiskered by r) is id_r.
bool check_triangle(const AdjunctionData& adj);

// All (obj_a, obj_b, l, r, unit, counit) tuples satisfying the triangle
// identities, in lexicographic order on those indices.
std::vector<AdjunctionData> find_adjunctions(TwoCatPtr x, Budget* budget = nullptr);

// A square of 1-cells commuting up to a directed 2-cell. Corners are named
// by position; top: tl -> tr and bottom: bl -> br always point rightwards.
// The verticals point down for a colax square and up for a lax one, and the
// filler lives accordingly:
//   colax: left: tl -> bl, right: tr -> br, filler (top;right) => (left;bottom)
//   lax:   left: bl -> tl, right: br -> tr, filler (left;top) => (bottom;right)
struct Square2 {
  enum class Dir { colax, lax };

  TwoCatPtr ambient;
  Dir direction = Dir::colax;
  int tl = 0, tr = 0, bl = 0, br = 0;
  int top = 0, bottom = 0;
  int left = 0, right = 0;
  int filler = 0;

  // Validates that the filler is a 2-cell between the composites dictated by
  // the direction; throws on violation.
  static Square2 make(TwoCatPtr ambient, Dir direction, int tl, int tr, int bl, int br, int top,
                      int bottom, int left, int right, int filler);
  bool operator==(const Square2&) const = default;
};

// The same square in the opposite direction, with the verticals replaced by
// the other adjoints. A colax filler phi: (top;l') => (l;bottom) becomes the
// lax composite
//   (r;top) => (r;top;l';r') => (r;l;bottom;r') => (bottom;r')
// built from the unit of the right adjunction, r . phi . r', and the counit
// of the left one; the lax-to-colax direction is dual. Requires the matching
// verticals: colax input uses the l of each adjunction, lax input the r.
Square2 mate(const Square2& sq, const AdjunctionData& left_adj, const AdjunctionData& right_adj);

// Horizontal pasting of two squares of the same direction sharing their
// middle vertical.
Square2 hpaste(const Square2& left_sq, const Square2& right_sq);

// The composite adjunction (l1;l2) -| (r2;r1) of first: A -> B then
// second: B -> C.
AdjunctionData compose_adjunctions(const AdjunctionData& second, const AdjunctionData& first);

// All colax squares whose verticals are the left 1-cells of the two given
// adjunctions: every top, bottom, and filler, in index order.
std::vector<Square2> colax_squares_between(const AdjunctionData& va, const AdjunctionData& vb);

// For a colax square with invertible filler whose verticals admit right
// adjoints in the ambient: finds those adjoints (first in canonical order),
// builds the mate, and checks the two coherence squares tying the original
// filler to the mate through unit and counit. Throws if the filler is not
// invertible or an adjoint is missing.
struct MateCoherence {
  AdjunctionData left_adj, right_adj;
  Square2 mate_square;
  // parallel 2-cells top => (left;bottom;r') computed two ways
  int unit_via_filler = 0, unit_via_mate = 0;
  // parallel 2-cells (r;top;l') => bottom computed two ways
  int counit_via_mate = 0, counit_via_filler = 0;
  bool pass = false;
};
MateCoherence laxfunadj_unit_counit(const Square2& sq, Budget* budget = nullptr);

// Sub-2-category of finite posets and monotone maps: objects are the given
// posets, hom(P, Q) is the pointwise-ordered poset of all monotone maps
// P -> Q (enumerated in lexicographic order on value vectors), and
// horizontal composition composes maps.
struct PosTwoCatData {
  TwoCatPtr cat;
  std::vector<FinPoset> posets;
  // maps[x * n + y][k] = value vector of hom object k
  std::vector<std::vector<std::vector<int>>> maps;
};
PosTwoCatData pos_twocat_data(const std::vector<FinPoset>& ps);
TwoCatPtr pos_twocat(const std::vector<FinPoset>& ps);

// All posets with 1..max_size elements up to isomorphism, smallest first,
// found by filtering every reflexive relation matrix and deduplicating over
// permutations. Sizes up to 4 stay cheap.
std::vector<FinPoset> bounded_posets(int max_size);

// One object, one 1-cell, and a sign 2-cell squaring to the identity: the
// smallest ambient where parallel 2-cells differ, used to exercise mate and
// triangle arithmetic beyond posetal homs.
TwoCatPtr sign_ambient();

}  // namespace gray2
