#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace romankit {

// Ingest or sampling error; line() is 1-based when the failure is tied to
// an input line, 0 otherwise.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::string message, int line = 0)
      : std::runtime_error(std::move(message)), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

enum class CorpusFormat {
  kPlainLines,         // UTF-8, LF-separated, one sentence per line
  kWikiJsonLines,      // one JSON object per line with a "text" field
};

// Immutable after construction. Sentence order is exactly source order;
// the digest is SHA-256 over each sentence followed by '\n', so it changes
// iff the content does.
struct SentenceStore {
  std::vector<std::string> sentences;
  std::string digest;
  std::string source_label;
};

// Builds a store from in-memory lines (digest computed here).
SentenceStore make_store(std::vector<std::string> sentences,
                         std::string source_label);

// Reads path under the named format: blank (empty or whitespace-only)
// lines are dropped, every sentence is validated as UTF-8, and errors name
// the offending 1-based line. For wiki JSON lines the mandatory "text"
// field is split on embedded newlines, each part becoming one sentence.
SentenceStore ingest(const std::string& path, CorpusFormat format);

// Sample-size request: the full store, or exactly min(n, |store|) sentences.
struct SampleSpec {
  bool full = false;
  std::uint64_t n = 0;      // >= 1 when !full
  std::uint64_t seed = 0;
};

// Uniform sample without replacement in sampled order, drawn by a partial
// Fisher–Yates shuffle over splitmix64 (platform-independent; same seed →
// same sample forever). "full" returns the store unchanged. Throws
// CorpusError when spec.n is 0 with full unset.
SentenceStore sample(const SentenceStore& store, const SampleSpec& spec);

// Writes sentences as LF-terminated lines (the plain-lines format).
void write_store(const SentenceStore& store, const std::string& path);

}  // namespace romankit
