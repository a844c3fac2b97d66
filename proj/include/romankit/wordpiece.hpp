#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace romankit {

// Error in tokenizer training, configuration, or model serialization.
class TokenizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A trained WordPiece vocabulary. Token ids are dense 0..|vocab|-1 in file
// order; special tokens come first, then the corpus alphabet sorted
// lexicographically, then merged tokens in the order they were learned.
struct TokenizerModel {
  std::vector<std::string> id_to_token;
  std::unordered_map<std::string, std::int32_t> token_to_id;
  std::vector<std::string> special_tokens;
  std::string unk_token = "[UNK]";
  std::string continuation_prefix = "##";
  std::size_t max_word_chars = 100;
  // Digest of the training corpus, when known ("" otherwise); recorded in
  // the sidecar so reports can tie a model back to its corpus.
  std::string corpus_digest;

  std::size_t size() const noexcept { return id_to_token.size(); }
  bool contains(const std::string& token) const {
    return token_to_id.find(token) != token_to_id.end();
  }
  bool is_special(const std::string& token) const;
};

struct TrainConfig {
  std::size_t vocab_size = 10000;
  std::vector<std::string> specials = {"[PAD]", "[UNK]", "[CLS]", "[SEP]",
                                       "[MASK]"};
  std::string unk_token = "[UNK]";
  std::string continuation_prefix = "##";
  std::size_t max_word_chars = 100;
  // Worker threads for pre-tokenization counting. Counts are merged
  // associatively, so any worker count produces identical models.
  std::size_t workers = 1;
  std::string corpus_digest;  // recorded on the model verbatim
};

// Trains a WordPiece model over whitespace-pre-tokenized sentences.
// Pair selection maximizes the likelihood score freq(ab)/(freq(a)*freq(b)),
// compared exactly in integer arithmetic; ties break on the
// lexicographically smallest merged token string (then smallest left part).
// Stops at vocab_size entries or when no pairs remain.
// Throws TokenizerError on an empty corpus (no words) or when vocab_size
// is smaller than |specials| + |corpus alphabet| (the message names that
// minimum).
TokenizerModel train_wordpiece(const std::vector<std::string>& sentences,
                               const TrainConfig& config);

// Greedy longest-prefix-first WordPiece encoding of one whitespace-free
// word. Words longer than max_word_chars codepoints, or hitting a position
// with no matching vocabulary entry, become a single unk_token.
std::vector<std::string> encode_word(std::string_view word,
                                     const TokenizerModel& model);

struct TokenizationResult {
  std::vector<std::vector<std::string>> word_tokens;  // per word, in order
  std::uint64_t total_words = 0;
  std::uint64_t total_subwords = 0;
  std::uint64_t unk_count = 0;
  std::uint64_t words_split = 0;  // words yielding >= 2 subwords
};

// Whitespace-splits text (ASCII space/tab/newline family), encodes each
// word, and aggregates counts. Throws Utf8Error on malformed input.
TokenizationResult encode(std::string_view text, const TokenizerModel& model);

// Serialization: the vocabulary itself is plain one-token-per-line UTF-8
// (the standard vocab.txt convention, line number = id, ".vocab"
// extension); a JSON sidecar at path + ".json" records unk_token,
// continuation_prefix, max_word_chars, special_tokens, vocab_size, and the
// training corpus digest. save → load → save is byte-identical.
void save_model(const TokenizerModel& model, const std::string& vocab_path);

// Loads a model. When the sidecar is absent (e.g. a stock mPLM vocab file),
// defaults apply and special tokens are detected as bracketed "[...]"
// entries. Throws TokenizerError on unreadable files, duplicate or empty
// vocabulary lines, or a missing unk token.
TokenizerModel load_model(const std::string& vocab_path);

// Reads a plain one-token-per-line vocabulary as a raw token list (no
// sidecar, no unk requirement) — the base-vocabulary side of overlap
// planning. Throws TokenizerError on unreadable files or empty lines.
std::vector<std::string> load_vocab_tokens(const std::string& vocab_path);

// SHA-256 over the canonical vocabulary serialization (each token + '\n');
// identifies a vocabulary independently of where it is stored.
std::string model_digest(const TokenizerModel& model);

}  // namespace romankit
