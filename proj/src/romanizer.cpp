#include "romankit/romanizer.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#ifndef ROMANKIT_DEFAULT_TABLE_DIR
#define ROMANKIT_DEFAULT_TABLE_DIR ""
#endif

namespace romankit {

namespace {

// Name markers after which a single trailing token is read as the sound of
// the character ("GEORGIAN LETTER AN" → "an", "ETHIOPIC SYLLABLE SEE" →
// "see"). Multi-token tails decline so decomposable names like "LATIN SMALL
// LETTER E WITH ACUTE" fall through to decomposition instead.
constexpr std::string_view kNameMarkers[] = {"LETTER", "SYLLABLE", "SIGN",
                                             "VOWEL"};

std::optional<std::string> name_heuristic(char32_t cp) {
  std::string name = unicode_name(cp);
  if (name.empty()) return std::nullopt;
  std::vector<std::string_view> tokens;
  std::string_view view = name;
  size_t pos = 0;
  while (pos < view.size()) {
    size_t space = view.find(' ', pos);
    if (space == std::string_view::npos) space = view.size();
    if (space > pos) tokens.push_back(view.substr(pos, space - pos));
    pos = space + 1;
  }
  size_t marker = tokens.size();
  for (size_t i = 0; i < tokens.size(); ++i) {
    for (std::string_view m : kNameMarkers) {
      if (tokens[i] == m) marker = i;
    }
  }
  if (marker == tokens.size() || marker + 2 != tokens.size()) {
    return std::nullopt;  // no marker, or not exactly one token after it
  }
  std::string out;
  for (char c : tokens.back()) {
    if (c >= 'A' && c <= 'Z') out.push_back(static_cast<char>(c - 'A' + 'a'));
    if (c >= 'a' && c <= 'z') out.push_back(c);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::string fallback_impl(char32_t cp, const RomanizeOptions& opts,
                          int depth) {
  if (cp < 0x80) return std::string(1, static_cast<char>(cp));
  if (opts.map_digits) {
    if (auto digit = decimal_digit_value(cp)) {
      return std::string(1, static_cast<char>('0' + *digit));
    }
  }
  if (auto named = name_heuristic(cp)) return *named;
  if (depth < 4) {
    std::u32string seq = nfkd(std::u32string_view(&cp, 1));
    if (!(seq.size() == 1 && seq[0] == cp)) {
      std::string out;
      for (char32_t c : seq) {
        if (is_combining_mark(c) || c == kZwj || c == kZwnj) continue;
        out += fallback_impl(c, opts, depth + 1);
      }
      return out;
    }
  }
  if (opts.terminal == FallbackTerminal::kPlaceholder) {
    return std::string(1, opts.placeholder);
  }
  return std::string();
}

void lowercase_ascii(std::string& s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
}

bool is_devanagari_consonant(char32_t cp) {
  return (cp >= 0x0915 && cp <= 0x0939) || (cp >= 0x0958 && cp <= 0x095F);
}

}  // namespace

std::string fallback_romanize(char32_t cp, const RomanizeOptions& opts) {
  std::string out = fallback_impl(cp, opts, 0);
  if (opts.lowercase_output) lowercase_ascii(out);
  return out;
}

std::string romanize(std::string_view text, const RuleSet& rules,
                     const RomanizeOptions& opts) {
  std::u32string norm = nfkd(decode_utf8(text));
  std::string out;
  out.reserve(norm.size());

  // Word-final schwa deletion for Devanagari: when a run of Devanagari
  // letters ends, a trailing bare consonant drops its inherent "a"
  // ("jorjiyana" → "jorjiyan"). A lone consonant keeps it (ज → "ja").
  int run_units = 0;
  bool tail_deletable = false;
  auto end_run = [&] {
    if (run_units >= 2 && tail_deletable && !out.empty() &&
        out.back() == 'a') {
      out.pop_back();
    }
    run_units = 0;
    tail_deletable = false;
  };

  size_t i = 0;
  while (i < norm.size()) {
    char32_t cp = norm[i];
    if (cp < 0x80) {
      end_run();
      // The output alphabet admits printable ASCII and whitespace only;
      // other ASCII (C0 controls, DEL) is unmappable — no digit value, no
      // usable name, no decomposition — and takes the terminal action.
      if (is_ascii_printable_or_ws(cp)) {
        out.push_back(static_cast<char>(cp));
      } else if (opts.terminal == FallbackTerminal::kPlaceholder) {
        out.push_back(opts.placeholder);
      }
      ++i;
      continue;
    }

    std::string emitted;
    size_t consumed = 1;
    if (auto m = rules.match(norm, i)) {
      emitted = m->rule->target;
      consumed = m->length;
    } else if (cp == kZwj || cp == kZwnj) {
      // Joiners carry rendering information only; stripped unless a rule
      // explicitly matched them. They do not interrupt a letter run.
      ++i;
      continue;
    } else {
      emitted = fallback_impl(cp, opts, 0);
    }
    if (opts.lowercase_output) lowercase_ascii(emitted);

    if (script_of(cp) == Script::Devanagari &&
        (is_letter(cp) || is_combining_mark(cp))) {
      ++run_units;
      tail_deletable = consumed == 1 && is_devanagari_consonant(cp) &&
                       emitted.size() >= 2 && emitted.back() == 'a';
    } else {
      end_run();
    }
    out += emitted;
    i += consumed;
  }
  end_run();
  return out;
}

RuleSet load_table_dir(const std::string& dir, std::string provenance) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::directory_iterator it(dir, ec);
  if (ec) {
    throw RuleError("cannot open table directory: " + dir + " (" +
                        ec.message() + ")",
                    0);
  }
  std::vector<fs::path> files;
  for (const auto& entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == ".rules") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw RuleError("no .rules files in table directory: " + dir, 0);
  }

  // Concatenate once so duplicate detection spans files; a leading comment
  // per chunk keeps RuleError line numbers mappable back to the file.
  std::ostringstream merged;
  std::vector<std::pair<int, std::string>> file_starts;  // line -> filename
  int line = 0;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw RuleError("cannot open rule table: " + path.string(), 0);
    std::ostringstream chunk;
    chunk << in.rdbuf();
    std::string body = chunk.str();
    file_starts.emplace_back(line + 1, path.filename().string());
    merged << "# table: " << path.filename().string() << "\n";
    ++line;
    merged << body;
    line += static_cast<int>(std::count(body.begin(), body.end(), '\n'));
    if (!body.empty() && body.back() != '\n') {
      merged << "\n";
      ++line;
    }
  }

  auto locate = [&](int merged_line) -> std::string {
    std::string file = "?";
    int start = 1;
    for (const auto& [first_line, name] : file_starts) {
      if (merged_line >= first_line) {
        file = name;
        start = first_line;
      }
    }
    return file + " line " + std::to_string(merged_line - start);
  };

  try {
    return RuleSet::load(std::string_view(merged.view()),
                         std::move(provenance));
  } catch (const RuleError& e) {
    std::string where = locate(e.line());
    if (e.other_line() > 0) where += " and " + locate(e.other_line());
    throw RuleError(std::string(e.what()) + " [" + where + "]", e.line(),
                    e.other_line());
  }
}

std::string default_table_dir() {
  if (const char* env = std::getenv("ROMANKIT_TABLE_DIR");
      env && *env != '\0') {
    return env;
  }
  return ROMANKIT_DEFAULT_TABLE_DIR;
}

}  // namespace romankit
