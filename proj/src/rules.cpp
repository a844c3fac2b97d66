#include "romankit/rules.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace romankit {

namespace {

bool printable_ascii(std::string_view s) {
  for (unsigned char c : s) {
    if (c < 0x20 || c > 0x7E) return false;
  }
  return true;
}

bool whitespace_only(std::string_view s) {
  return s.find_first_not_of(" \t") == std::string_view::npos;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (true) {
    size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

std::string describe_source(const std::u32string& source) {
  std::ostringstream out;
  out << '"' << encode_utf8(source) << '"';
  return out.str();
}

}  // namespace

RuleError::RuleError(std::string message, int line, int other_line)
    : std::runtime_error(std::move(message)),
      line_(line),
      other_line_(other_line) {}

RuleSet RuleSet::load(std::istream& in, std::string provenance) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(std::string_view(buf.view()), std::move(provenance));
}

RuleSet RuleSet::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw RuleError("cannot open rule table: " + path, 0);
  }
  std::string stem = path;
  if (size_t slash = stem.find_last_of("/\\"); slash != std::string::npos) {
    stem = stem.substr(slash + 1);
  }
  if (stem.size() > 6 && stem.ends_with(".rules")) {
    stem.resize(stem.size() - 6);
  }
  return load(in, stem);
}

RuleSet RuleSet::load(std::string_view text, std::string provenance) {
  RuleSet set;
  set.provenance_ = std::move(provenance);

  // For duplicate detection: (normalized source, scope id) → line number.
  std::unordered_map<std::string, int> seen;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (eol == std::string_view::npos && line.empty()) break;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (whitespace_only(line) || line.front() == '#') continue;

    auto fields = split_fields(line);
    if (fields.size() < 2 || fields.size() > 4) {
      throw RuleError("line " + std::to_string(line_no) +
                          ": expected 2-4 tab-separated fields, got " +
                          std::to_string(fields.size()),
                      line_no);
    }

    RomanizationRule rule;
    rule.line = line_no;
    rule.order = static_cast<int>(set.rules_.size());

    if (fields[0].empty()) {
      throw RuleError("line " + std::to_string(line_no) + ": empty source",
                      line_no);
    }
    std::u32string raw_source;
    try {
      raw_source = decode_utf8(fields[0]);
    } catch (const Utf8Error&) {
      throw RuleError(
          "line " + std::to_string(line_no) + ": source is not valid UTF-8",
          line_no);
    }
    // Sources are matched against compatibility-decomposed text, so store
    // them in that form (joiners kept: a rule may match them explicitly).
    rule.source = nfkd(raw_source);
    for (char32_t cp : rule.source) {
      if (cp < 0x80) {
        throw RuleError("line " + std::to_string(line_no) + ": source " +
                            describe_source(rule.source) +
                            " contains ASCII; ASCII always passes through",
                        line_no);
      }
    }

    if (!printable_ascii(fields[1])) {
      throw RuleError("line " + std::to_string(line_no) +
                          ": target must be printable ASCII",
                      line_no);
    }
    rule.target = std::string(fields[1]);

    bool saw_scope = false;
    bool saw_prio = false;
    for (size_t f = 2; f < fields.size(); ++f) {
      std::string_view field = fields[f];
      if (field.starts_with("scope=")) {
        if (saw_scope) {
          throw RuleError(
              "line " + std::to_string(line_no) + ": duplicate scope=",
              line_no);
        }
        saw_scope = true;
        std::string_view name = field.substr(6);
        auto script = script_from_name(name);
        if (!script) {
          throw RuleError("line " + std::to_string(line_no) +
                              ": unknown script tag \"" + std::string(name) +
                              "\"",
                          line_no);
        }
        rule.script_scope = *script;
      } else if (field.starts_with("prio=")) {
        if (saw_prio) {
          throw RuleError(
              "line " + std::to_string(line_no) + ": duplicate prio=",
              line_no);
        }
        saw_prio = true;
        std::string_view value = field.substr(5);
        int parsed = 0;
        auto [end, ec] = std::from_chars(value.data(),
                                         value.data() + value.size(), parsed);
        if (ec != std::errc() || end != value.data() + value.size()) {
          throw RuleError("line " + std::to_string(line_no) +
                              ": prio= expects an integer, got \"" +
                              std::string(value) + "\"",
                          line_no);
        }
        rule.priority = parsed;
      } else {
        throw RuleError("line " + std::to_string(line_no) +
                            ": unrecognized field \"" + std::string(field) +
                            "\" (expected scope=... or prio=...)",
                        line_no);
      }
    }

    std::string key = encode_utf8(rule.source) + '\x1F' +
                      (rule.script_scope
                           ? std::string(script_name(*rule.script_scope))
                           : std::string());
    if (auto [it, inserted] = seen.emplace(key, line_no); !inserted) {
      throw RuleError("duplicate rule for source " +
                          describe_source(rule.source) + ": lines " +
                          std::to_string(it->second) + " and " +
                          std::to_string(line_no),
                      line_no, it->second);
    }

    set.rules_.push_back(std::move(rule));
  }

  for (uint32_t i = 0; i < set.rules_.size(); ++i) set.index_rule(i);
  return set;
}

void RuleSet::index_rule(uint32_t rule_index) {
  uint32_t node = 0;
  for (char32_t cp : rules_[rule_index].source) {
    auto it = nodes_[node].children.find(cp);
    if (it == nodes_[node].children.end()) {
      uint32_t next = static_cast<uint32_t>(nodes_.size());
      nodes_[node].children.emplace(cp, next);
      nodes_.emplace_back();
      node = next;
    } else {
      node = it->second;
    }
  }
  nodes_[node].terminal_rules.push_back(rule_index);
}

namespace {

bool scope_allows(Script scope, std::u32string_view text, size_t pos,
                  size_t length) {
  for (size_t i = pos; i < pos + length; ++i) {
    Script s = script_of(text[i]);
    if (s != scope && s != Script::Common && s != Script::Inherited) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<RuleMatch> RuleSet::match(std::u32string_view text,
                                        size_t pos) const {
  const RomanizationRule* best = nullptr;
  size_t best_len = 0;
  uint32_t node = 0;
  for (size_t i = pos; i < text.size(); ++i) {
    auto it = nodes_[node].children.find(text[i]);
    if (it == nodes_[node].children.end()) break;
    node = it->second;
    size_t len = i - pos + 1;
    for (uint32_t rule_index : nodes_[node].terminal_rules) {
      const RomanizationRule& rule = rules_[rule_index];
      if (rule.script_scope &&
          !scope_allows(*rule.script_scope, text, pos, len)) {
        continue;
      }
      // Longer always wins; at equal length: higher priority, then earlier
      // table order.
      if (!best || len > best_len ||
          (len == best_len && (rule.priority > best->priority ||
                               (rule.priority == best->priority &&
                                rule.order < best->order)))) {
        best = &rule;
        best_len = len;
      }
    }
  }
  if (!best) return std::nullopt;
  return RuleMatch{best, best_len};
}

const RomanizationRule* RuleSet::find(std::u32string_view source,
                                      std::optional<Script> scope) const {
  uint32_t node = 0;
  for (char32_t cp : source) {
    auto it = nodes_[node].children.find(cp);
    if (it == nodes_[node].children.end()) return nullptr;
    node = it->second;
  }
  for (uint32_t rule_index : nodes_[node].terminal_rules) {
    if (rules_[rule_index].script_scope == scope) return &rules_[rule_index];
  }
  return nullptr;
}

}  // namespace romankit
