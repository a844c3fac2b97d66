#pragma once

#include <string>
#include <string_view>

#include "romankit/rules.hpp"
#include "romankit/unicode.hpp"

namespace romankit {

enum class FallbackTerminal {
  kDrop,         // unmappable codepoints vanish
  kPlaceholder,  // unmappable codepoints become the placeholder character
};

struct RomanizeOptions {
  FallbackTerminal terminal = FallbackTerminal::kDrop;
  char placeholder = '?';  // single printable ASCII; used with kPlaceholder
  bool lowercase_output = true;
  // Map codepoints with the Unicode decimal-digit property to ASCII digits
  // (fallback step 1). When false, foreign digits continue down the chain
  // and are typically dropped.
  bool map_digits = true;
};

// UTF-8 → Latin rewriting: compatibility-decompose, then greedy longest
// match left-to-right against the rule trie; positions with no applicable
// rule go through the total fallback chain. Printable ASCII and whitespace
// pass through unchanged, so whitespace structure is preserved and output
// is a fixed point; remaining ASCII (C0 controls, DEL) is unmappable and
// takes the fallback terminal action. Throws Utf8Error on malformed input.
std::string romanize(std::string_view text, const RuleSet& rules,
                     const RomanizeOptions& opts = {});

// The per-codepoint fallback chain, total over all scalar values:
//   1. decimal-digit property → ASCII digit
//   2. character-name heuristic: the single token following the last of the
//      name markers LETTER / SYLLABLE / SIGN / VOWEL, lowercased (declines
//      when more than one token follows, e.g. "...LETTER E WITH ACUTE")
//   3. compatibility decomposition, recursing on base characters and
//      dropping combining marks
//   4. terminal action from RomanizeOptions (drop or placeholder)
std::string fallback_romanize(char32_t cp, const RomanizeOptions& opts = {});

// Loads every ".rules" file in dir (sorted by filename) into one merged
// RuleSet. Duplicate (source, scope) pairs across files are conflicts.
RuleSet load_table_dir(const std::string& dir,
                       std::string provenance = "universal-default");

// Shipped default table directory: the ROMANKIT_TABLE_DIR environment
// variable when set, else the build-time default.
std::string default_table_dir();

}  // namespace romankit
