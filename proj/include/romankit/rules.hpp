#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "romankit/unicode.hpp"

namespace romankit {

// One source→target rewrite. source is held in the same normal form the
// engine matches against (compatibility-decomposed, joiners kept).
struct RomanizationRule {
  std::u32string source;
  std::string target;
  std::optional<Script> script_scope;
  int priority = 0;
  int line = 0;   // 1-based line in the table it was loaded from
  int order = 0;  // position among loaded rules; breaks remaining ties
};

// Parse or conflict error in a rule table. line() is the offending line;
// conflicts also carry the earlier line via other_line().
class RuleError : public std::runtime_error {
 public:
  RuleError(std::string message, int line, int other_line = 0);
  int line() const noexcept { return line_; }
  int other_line() const noexcept { return other_line_; }

 private:
  int line_;
  int other_line_;
};

struct RuleMatch {
  const RomanizationRule* rule;
  size_t length;  // codepoints consumed
};

// Immutable rule collection with a longest-match trie over sources.
class RuleSet {
 public:
  RuleSet() = default;

  // Parses the tab-separated table format:
  //   source<TAB>target[<TAB>scope=<ScriptTag>][<TAB>prio=<int>]
  // '#' lines and blank lines are ignored. Sources are normalized
  // (compatibility-decomposed, joiners kept) before indexing; rules whose
  // source contains ASCII are rejected so ASCII passthrough cannot be
  // shadowed. Throws RuleError.
  static RuleSet load(std::istream& in, std::string provenance);
  static RuleSet load(std::string_view text, std::string provenance);
  static RuleSet load_file(const std::string& path);

  const std::string& provenance() const noexcept { return provenance_; }
  size_t size() const noexcept { return rules_.size(); }
  const std::vector<RomanizationRule>& rules() const noexcept {
    return rules_;
  }

  // Longest applicable match starting at text[pos]. Among matches of equal
  // length, higher priority wins, then earlier table order. A scoped rule
  // applies only if every matched codepoint's script is the scope itself,
  // Common, or Inherited.
  std::optional<RuleMatch> match(std::u32string_view text, size_t pos) const;

  // Exact lookup by (source, scope), mainly for table introspection.
  const RomanizationRule* find(std::u32string_view source,
                               std::optional<Script> scope) const;

 private:
  struct TrieNode {
    std::unordered_map<char32_t, uint32_t> children;
    std::vector<uint32_t> terminal_rules;  // indices into rules_
  };

  void index_rule(uint32_t rule_index);

  std::string provenance_;
  std::vector<RomanizationRule> rules_;
  std::vector<TrieNode> nodes_{1};  // nodes_[0] is the root
};

}  // namespace romankit
