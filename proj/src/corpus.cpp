#include "romankit/corpus.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "romankit/digest.hpp"
#include "romankit/rng.hpp"
#include "romankit/unicode.hpp"

namespace romankit {

namespace {

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  });
}

void append_sentence(std::vector<std::string>& out, std::string sentence,
                     int line_no) {
  try {
    decode_utf8(sentence);
  } catch (const Utf8Error& e) {
    throw CorpusError("line " + std::to_string(line_no) +
                          ": invalid UTF-8 at byte offset " +
                          std::to_string(e.byte_offset()),
                      line_no);
  }
  out.push_back(std::move(sentence));
}

}  // namespace

SentenceStore make_store(std::vector<std::string> sentences,
                         std::string source_label) {
  SentenceStore store;
  store.digest = digest_of_lines(sentences);
  store.sentences = std::move(sentences);
  store.source_label = std::move(source_label);
  return store;
}

SentenceStore ingest(const std::string& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open corpus file: " + path);

  std::vector<std::string> sentences;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    switch (format) {
      case CorpusFormat::kPlainLines:
        append_sentence(sentences, std::move(line), line_no);
        break;
      case CorpusFormat::kWikiJsonLines: {
        nlohmann::json record;
        try {
          record = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
          throw CorpusError("line " + std::to_string(line_no) +
                                ": malformed JSON record: " + e.what(),
                            line_no);
        }
        if (!record.is_object() || !record.contains("text") ||
            !record["text"].is_string()) {
          throw CorpusError("line " + std::to_string(line_no) +
                                ": JSON record lacks a string \"text\" field",
                            line_no);
        }
        // "text" may span paragraphs; each embedded line is one sentence.
        std::istringstream text(record["text"].get<std::string>());
        std::string part;
        while (std::getline(text, part)) {
          if (!part.empty() && part.back() == '\r') part.pop_back();
          if (is_blank(part)) continue;
          append_sentence(sentences, std::move(part), line_no);
        }
        break;
      }
    }
  }
  if (in.bad()) throw CorpusError("read failure on corpus file: " + path);
  return make_store(std::move(sentences), path);
}

SentenceStore sample(const SentenceStore& store, const SampleSpec& spec) {
  if (spec.full) return store;
  if (spec.n == 0) {
    throw CorpusError("sample size must be at least 1 (or full)");
  }
  size_t n = store.sentences.size();
  size_t k = std::min<size_t>(spec.n, n);

  // Partial Fisher–Yates: after i steps the prefix holds a uniform
  // without-replacement draw of i indices, in draw order.
  std::vector<std::uint32_t> indices(n);
  std::iota(indices.begin(), indices.end(), 0);
  SplitMix64 rng(spec.seed);
  std::vector<std::string> picked;
  picked.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + static_cast<size_t>(rng.next_below(n - i));
    std::swap(indices[i], indices[j]);
    picked.push_back(store.sentences[indices[i]]);
  }
  SentenceStore out = make_store(std::move(picked), store.source_label);
  return out;
}

void write_store(const SentenceStore& store, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot write corpus file: " + path);
  for (const std::string& s : store.sentences) out << s << '\n';
  out.flush();
  if (!out) throw CorpusError("write failure on corpus file: " + path);
}

}  // namespace romankit
