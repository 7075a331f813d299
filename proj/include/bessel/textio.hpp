#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bessel/lfactor.hpp"
#include "bessel/tsmod.hpp"

namespace bessel {

// Readers for the plain-text forms produced by str()/pretty().
//
//   TModule   : blocks joined by '+' or '⊕'; a block is `chi`, `chi^(m)` or `(chi)^(m)`
//   TSModule  : terms joined by '+' or '⊕'; a term is `0`, `S`, `𝕊`, `E[X]`,
//               `E[X -> Y]`, `E[X -> X mod chi]`, `i_*(X)` or a bare finite block
//   L-factors : `1` or a product of `L(s, chi)` with optional `^k`
TModule parse_tmodule(std::string_view text, const CharacterContext& ctx);
TSModule parse_tsmodule(std::string_view text, const CharacterContext& ctx);
LFactorProduct parse_lfactor(std::string_view text, const CharacterContext& ctx);
// `{a, b, ...}`, `∅` or `{}`
CharMultiset parse_multiset(std::string_view text, const CharacterContext& ctx);

// top-level split on any of the separators, ignoring bracketed text
std::vector<std::string> split_top(std::string_view text, const std::vector<std::string>& seps);
std::string trim(std::string_view s);
// whole-word replacement of an identifier
std::string replace_word(std::string_view text, std::string_view word, std::string_view by);

}  // namespace bessel
