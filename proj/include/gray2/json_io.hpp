#pragma once

#include <string>

#include "json.hpp"

#include "gray2/mates.hpp"

namespace gray2 {

// JSON, DOT, and plain-text renderings of the core structures, plus the
// parsers the command line needs. Every emitter is deterministic: the same
// input yields the same bytes.
//
// Conventions shared by all JSON forms:
//   - objects and morphisms are referred to by index into their arrays
//   - "composition" lists one triple [f, g, h] per composable pair, where h
//     is "f then g" (that is, g after f)
//   - a two-category's "homs" array carries one entry per ordered object
//     pair, and "hcomp" one entry per triple whose tables are nonempty

nlohmann::json poset_to_json(const FinPoset& p);
nlohmann::json cat_to_json(const FinCat& c);
nlohmann::json twocat_to_json(const TwoCat& t);
nlohmann::json two_functor_to_json(const TwoFunctor& f);
nlohmann::json adjunction_to_json(const AdjunctionData& a);
nlohmann::json square_to_json(const Square2& s);

std::string poset_dot(const FinPoset& p);
std::string cat_dot(const FinCat& c);
// One edge per 1-cell; 2-cells are not drawn.
std::string twocat_dot(const TwoCat& t);

std::string poset_text(const FinPoset& p);
std::string cat_text(const FinCat& c);
std::string twocat_text(const TwoCat& t);
std::string two_functor_text(const TwoFunctor& f);
std::string adjunction_text(const AdjunctionData& a);
std::string square_text(const Square2& s);

// Parsers for the mates subcommands. They throw std::invalid_argument with a
// readable message on malformed input; the structural laws themselves are
// enforced by the validating constructors they call into.
FinCat cat_from_json(const nlohmann::json& j);
TwoCatPtr twocat_from_json(const nlohmann::json& j);
AdjunctionData adjunction_from_json(const nlohmann::json& j, TwoCatPtr ambient);
Square2 square_from_json(const nlohmann::json& j, TwoCatPtr ambient);

struct MateInput {
  TwoCatPtr ambient;
  Square2 square;
  AdjunctionData left_adj;
  AdjunctionData right_adj;
};

// File format for `mates find`: {"twocat": {...}}.
TwoCatPtr parse_find_input(const std::string& text);
// File format for `mates mate`: {"twocat": {...}, "square": {...},
// "left_adjunction": {...}, "right_adjunction": {...}}.
MateInput parse_mate_input(const std::string& text);

}  // namespace gray2
