#include "romankit/wordpiece.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <thread>
#include <utility>

#include "romankit/digest.hpp"
#include "romankit/unicode.hpp"

namespace romankit {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// ASCII-whitespace word splitting; multibyte UTF-8 units are all >= 0x80 so
// this is codepoint-safe.
std::vector<std::string_view> split_words(std::string_view text) {
  std::vector<std::string_view> words;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !is_ascii_space(text[i])) ++i;
    if (i > start) words.push_back(text.substr(start, i - start));
  }
  return words;
}

using WordCounts = std::unordered_map<std::string, std::uint64_t>;

WordCounts count_words_range(const std::vector<std::string>& sentences,
                             size_t begin, size_t end) {
  WordCounts counts;
  for (size_t i = begin; i < end; ++i) {
    for (std::string_view w : split_words(sentences[i])) {
      counts[std::string(w)] += 1;
    }
  }
  return counts;
}

WordCounts count_words(const std::vector<std::string>& sentences,
                       size_t workers) {
  if (workers <= 1 || sentences.size() < 2 * workers) {
    return count_words_range(sentences, 0, sentences.size());
  }
  std::vector<WordCounts> shards(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (size_t t = 0; t < workers; ++t) {
    size_t begin = sentences.size() * t / workers;
    size_t end = sentences.size() * (t + 1) / workers;
    threads.emplace_back([&, t, begin, end] {
      shards[t] = count_words_range(sentences, begin, end);
    });
  }
  for (auto& th : threads) th.join();
  WordCounts merged = std::move(shards[0]);
  for (size_t t = 1; t < workers; ++t) {
    for (auto& [word, n] : shards[t]) merged[word] += n;
  }
  return merged;
}

// Codepoint-boundary byte offsets of a valid UTF-8 string (first byte of
// each codepoint, plus the end offset).
std::vector<size_t> codepoint_offsets(std::string_view word) {
  std::vector<size_t> offs;
  for (size_t i = 0; i < word.size(); ++i) {
    if ((static_cast<unsigned char>(word[i]) & 0xC0) != 0x80) {
      offs.push_back(i);
    }
  }
  offs.push_back(word.size());
  return offs;
}

struct PairKey {
  std::int32_t left;
  std::int32_t right;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  size_t operator()(const PairKey& k) const noexcept {
    return std::hash<std::uint64_t>()(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.left))
         << 32) |
        static_cast<std::uint32_t>(k.right));
  }
};

}  // namespace

bool TokenizerModel::is_special(const std::string& token) const {
  return std::find(special_tokens.begin(), special_tokens.end(), token) !=
         special_tokens.end();
}

TokenizerModel train_wordpiece(const std::vector<std::string>& sentences,
                               const TrainConfig& config) {
  if (config.continuation_prefix.empty()) {
    throw TokenizerError("continuation_prefix must be non-empty");
  }
  for (const auto& s : config.specials) {
    if (s.empty()) throw TokenizerError("special tokens must be non-empty");
    if (std::count(config.specials.begin(), config.specials.end(), s) != 1) {
      throw TokenizerError("duplicate special token: " + s);
    }
  }
  if (std::find(config.specials.begin(), config.specials.end(),
                config.unk_token) == config.specials.end()) {
    throw TokenizerError("unk_token \"" + config.unk_token +
                         "\" must appear in the specials list");
  }

  WordCounts word_counts = count_words(sentences, config.workers);
  if (word_counts.empty()) {
    throw TokenizerError("cannot train on an empty corpus (no words)");
  }

  // Intern table over current symbols; splits reference symbols by id.
  std::vector<std::string> sym_text;
  std::unordered_map<std::string, std::int32_t> sym_id;
  auto intern = [&](const std::string& text) {
    auto it = sym_id.find(text);
    if (it != sym_id.end()) return it->second;
    auto id = static_cast<std::int32_t>(sym_text.size());
    sym_text.push_back(text);
    sym_id.emplace(text, id);
    return id;
  };

  std::vector<std::pair<std::vector<std::int32_t>, std::uint64_t>> words;
  words.reserve(word_counts.size());
  std::uint64_t total_weight = 0;
  for (const auto& [word, freq] : word_counts) {
    decode_utf8(word);  // throws Utf8Error on malformed corpus bytes
    std::vector<size_t> offs = codepoint_offsets(word);
    std::vector<std::int32_t> split;
    split.reserve(offs.size() - 1);
    for (size_t i = 0; i + 1 < offs.size(); ++i) {
      std::string piece = word.substr(offs[i], offs[i + 1] - offs[i]);
      if (i > 0) piece = config.continuation_prefix + piece;
      split.push_back(intern(piece));
    }
    total_weight += freq * split.size();
    words.emplace_back(std::move(split), freq);
  }
  if (total_weight >= (1ull << 42)) {
    throw TokenizerError(
        "corpus too large for exact pair-score arithmetic (>= 2^42 symbol "
        "occurrences)");
  }

  // Vocabulary: specials, then the alphabet sorted lexicographically.
  TokenizerModel model;
  model.special_tokens = config.specials;
  model.unk_token = config.unk_token;
  model.continuation_prefix = config.continuation_prefix;
  model.max_word_chars = config.max_word_chars;
  model.corpus_digest = config.corpus_digest;
  auto add_token = [&](const std::string& token) {
    if (model.token_to_id.find(token) != model.token_to_id.end()) return;
    model.token_to_id.emplace(
        token, static_cast<std::int32_t>(model.id_to_token.size()));
    model.id_to_token.push_back(token);
  };
  for (const auto& s : config.specials) add_token(s);
  {
    std::vector<std::string> alphabet = sym_text;
    std::sort(alphabet.begin(), alphabet.end());
    for (const auto& a : alphabet) add_token(a);
  }
  if (config.vocab_size < model.id_to_token.size()) {
    throw TokenizerError(
        "vocab_size " + std::to_string(config.vocab_size) +
        " is below the minimum " + std::to_string(model.id_to_token.size()) +
        " (special tokens + corpus alphabet)");
  }

  // Merge loop: recount pair and symbol frequencies, pick the best-scoring
  // pair, rewrite splits. Scores freq(ab)/(freq(a)*freq(b)) are compared by
  // exact integer cross-multiplication, never floating point.
  std::vector<std::uint64_t> sym_freq;
  std::unordered_map<PairKey, std::uint64_t, PairKeyHash> pair_freq;
  while (model.id_to_token.size() < config.vocab_size) {
    sym_freq.assign(sym_text.size(), 0);
    pair_freq.clear();
    for (const auto& [split, freq] : words) {
      for (size_t i = 0; i < split.size(); ++i) {
        sym_freq[static_cast<size_t>(split[i])] += freq;
        if (i + 1 < split.size()) {
          pair_freq[PairKey{split[i], split[i + 1]}] += freq;
        }
      }
    }
    if (pair_freq.empty()) break;

    bool have_best = false;
    PairKey best{};
    std::uint64_t best_count = 0;
    std::string best_merged;
    for (const auto& [key, count] : pair_freq) {
      std::string merged =
          sym_text[static_cast<size_t>(key.left)] +
          sym_text[static_cast<size_t>(key.right)].substr(
              config.continuation_prefix.size());
      if (have_best) {
        // score(key) vs score(best):
        //   count/(fl*fr)  <=>  best_count/(bl*br)
        auto fl = sym_freq[static_cast<size_t>(key.left)];
        auto fr = sym_freq[static_cast<size_t>(key.right)];
        auto bl = sym_freq[static_cast<size_t>(best.left)];
        auto br = sym_freq[static_cast<size_t>(best.right)];
        unsigned __int128 lhs = static_cast<unsigned __int128>(count) * bl * br;
        unsigned __int128 rhs =
            static_cast<unsigned __int128>(best_count) * fl * fr;
        if (lhs < rhs) continue;
        if (lhs == rhs) {
          int c = merged.compare(best_merged);
          if (c > 0) continue;
          if (c == 0 &&
              sym_text[static_cast<size_t>(key.left)] >=
                  sym_text[static_cast<size_t>(best.left)]) {
            continue;
          }
        }
      }
      have_best = true;
      best = key;
      best_count = count;
      best_merged = std::move(merged);
    }

    std::int32_t merged_id = intern(best_merged);
    add_token(best_merged);
    for (auto& [split, freq] : words) {
      (void)freq;
      size_t w = 0;
      for (size_t r = 0; r < split.size();) {
        if (r + 1 < split.size() && split[r] == best.left &&
            split[r + 1] == best.right) {
          split[w++] = merged_id;
          r += 2;
        } else {
          split[w++] = split[r++];
        }
      }
      split.resize(w);
    }
  }
  return model;
}

std::vector<std::string> encode_word(std::string_view word,
                                     const TokenizerModel& model) {
  if (word.empty()) return {};
  std::u32string cps = decode_utf8(word);
  if (cps.size() > model.max_word_chars) return {model.unk_token};
  std::vector<size_t> offs = codepoint_offsets(word);
  size_t n = offs.size() - 1;

  std::vector<std::string> out;
  size_t pos = 0;
  bool first = true;
  while (pos < n) {
    bool found = false;
    std::string hit;
    for (size_t end = n; end > pos; --end) {
      std::string cand(word.substr(offs[pos], offs[end] - offs[pos]));
      if (!first) cand.insert(0, model.continuation_prefix);
      if (model.contains(cand)) {
        found = true;
        hit = std::move(cand);
        pos = end;
        break;
      }
    }
    if (!found) return {model.unk_token};
    out.push_back(std::move(hit));
    first = false;
  }
  return out;
}

TokenizationResult encode(std::string_view text, const TokenizerModel& model) {
  TokenizationResult result;
  for (std::string_view word : split_words(text)) {
    std::vector<std::string> tokens = encode_word(word, model);
    result.total_words += 1;
    result.total_subwords += tokens.size();
    for (const auto& t : tokens) {
      if (t == model.unk_token) result.unk_count += 1;
    }
    if (tokens.size() >= 2) result.words_split += 1;
    result.word_tokens.push_back(std::move(tokens));
  }
  return result;
}

void save_model(const TokenizerModel& model, const std::string& vocab_path) {
  {
    std::ofstream out(vocab_path, std::ios::binary);
    if (!out) {
      throw TokenizerError("cannot write vocabulary file: " + vocab_path);
    }
    for (const auto& token : model.id_to_token) out << token << '\n';
    out.flush();
    if (!out) {
      throw TokenizerError("write failed for vocabulary file: " + vocab_path);
    }
  }
  nlohmann::json meta{
      {"continuation_prefix", model.continuation_prefix},
      {"corpus_digest", model.corpus_digest},
      {"max_word_chars", model.max_word_chars},
      {"special_tokens", model.special_tokens},
      {"unk_token", model.unk_token},
      {"vocab_size", model.id_to_token.size()},
  };
  std::ofstream out(vocab_path + ".json", std::ios::binary);
  if (!out) {
    throw TokenizerError("cannot write model sidecar: " + vocab_path +
                         ".json");
  }
  out << meta.dump(2) << '\n';
  out.flush();
  if (!out) {
    throw TokenizerError("write failed for model sidecar: " + vocab_path +
                         ".json");
  }
}

namespace {

std::vector<std::string> read_token_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TokenizerError("cannot open vocabulary file: " + path);
  std::vector<std::string> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      throw TokenizerError("empty vocabulary line " + std::to_string(line_no) +
                           " in " + path);
    }
    tokens.push_back(line);
  }
  return tokens;
}

bool looks_bracketed(const std::string& token) {
  return token.size() >= 3 && token.front() == '[' && token.back() == ']';
}

}  // namespace

TokenizerModel load_model(const std::string& vocab_path) {
  TokenizerModel model;
  model.id_to_token = read_token_lines(vocab_path);
  for (size_t i = 0; i < model.id_to_token.size(); ++i) {
    auto [it, inserted] = model.token_to_id.emplace(
        model.id_to_token[i], static_cast<std::int32_t>(i));
    if (!inserted) {
      throw TokenizerError("duplicate vocabulary token \"" +
                           model.id_to_token[i] + "\" at lines " +
                           std::to_string(it->second + 1) + " and " +
                           std::to_string(i + 1) + " in " + vocab_path);
    }
  }

  std::ifstream meta_in(vocab_path + ".json", std::ios::binary);
  if (meta_in) {
    nlohmann::json meta;
    try {
      meta_in >> meta;
    } catch (const nlohmann::json::exception& e) {
      throw TokenizerError("malformed model sidecar " + vocab_path +
                           ".json: " + e.what());
    }
    model.unk_token = meta.value("unk_token", model.unk_token);
    model.continuation_prefix =
        meta.value("continuation_prefix", model.continuation_prefix);
    model.max_word_chars = meta.value("max_word_chars", model.max_word_chars);
    model.corpus_digest = meta.value("corpus_digest", model.corpus_digest);
    model.special_tokens = meta.value("special_tokens", model.special_tokens);
    for (const auto& s : model.special_tokens) {
      if (!model.contains(s)) {
        throw TokenizerError("sidecar special token \"" + s +
                             "\" is not in the vocabulary: " + vocab_path);
      }
    }
  } else {
    // Stock vocab file: bracketed entries are specials by convention.
    for (const auto& token : model.id_to_token) {
      if (looks_bracketed(token)) model.special_tokens.push_back(token);
    }
  }
  if (!model.contains(model.unk_token)) {
    throw TokenizerError("unk token \"" + model.unk_token +
                         "\" is not in the vocabulary: " + vocab_path);
  }
  for (const auto& token : model.id_to_token) {
    if (token.starts_with(model.continuation_prefix) &&
        token.size() == model.continuation_prefix.size() &&
        !model.is_special(token)) {
      throw TokenizerError("vocabulary token \"" + token +
                           "\" is a bare continuation prefix: " + vocab_path);
    }
  }
  return model;
}

std::vector<std::string> load_vocab_tokens(const std::string& vocab_path) {
  return read_token_lines(vocab_path);
}

std::string model_digest(const TokenizerModel& model) {
  return digest_of_lines(model.id_to_token);
}

}  // namespace romankit
