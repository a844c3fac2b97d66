#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "romankit/wordpiece.hpp"

namespace romankit {

// The three tokenizer-quality metrics: %UNK (token-level rate over
// subwords), fertility (subwords per word), and the proportion of words
// split into two or more subwords. Empty denominators yield 0 with the
// warning flag set instead of dividing by zero.
struct TokenizerMetrics {
  double pct_unk = 0.0;
  double fertility = 0.0;
  double continued_proportion = 0.0;
  std::uint64_t total_words = 0;
  std::uint64_t total_subwords = 0;
  std::uint64_t unk_count = 0;
  std::uint64_t words_split = 0;
  bool empty_corpus_warning = false;
};

// Signed after-minus-before differences alongside both inputs.
struct MetricsDelta {
  TokenizerMetrics before;
  TokenizerMetrics after;
  double delta_pct_unk = 0.0;
  double delta_fertility = 0.0;
  double delta_continued_proportion = 0.0;
};

// Exact metric formulas over integer counts.
TokenizerMetrics metrics_from_counts(std::uint64_t total_words,
                                     std::uint64_t total_subwords,
                                     std::uint64_t unk_count,
                                     std::uint64_t words_split);

// Encodes every sentence and tallies; counts reduce associatively, so the
// result is independent of sentence order and duplication-invariant.
TokenizerMetrics compute_metrics(const std::vector<std::string>& sentences,
                                 const TokenizerModel& model);

MetricsDelta compare(const TokenizerMetrics& before,
                     const TokenizerMetrics& after);

// Report serialization. Digest arguments tie the numbers to the exact
// corpus and model bytes they were computed from.
nlohmann::json metrics_report_json(const TokenizerMetrics& metrics,
                                   const std::string& corpus_digest,
                                   const std::string& model_digest);
// CSV variant: a header line plus one data row.
std::string metrics_report_csv(const TokenizerMetrics& metrics,
                               const std::string& corpus_digest,
                               const std::string& model_digest);

nlohmann::json delta_report_json(const MetricsDelta& delta);
// Plot-ready rows: language,metric,before,after.
std::string delta_plot_csv(const MetricsDelta& delta,
                           const std::string& language);

// Deterministic shortest-roundtrip decimal rendering used by every report
// writer; identical doubles render identically on all platforms.
std::string format_double(double value);

}  // namespace romankit
