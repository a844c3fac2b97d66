#include "romankit/metrics.hpp"

#include <charconv>
#include <system_error>

namespace romankit {

TokenizerMetrics metrics_from_counts(std::uint64_t total_words,
                                     std::uint64_t total_subwords,
                                     std::uint64_t unk_count,
                                     std::uint64_t words_split) {
  TokenizerMetrics m;
  m.total_words = total_words;
  m.total_subwords = total_subwords;
  m.unk_count = unk_count;
  m.words_split = words_split;
  if (total_subwords > 0) {
    m.pct_unk = static_cast<double>(unk_count) /
                static_cast<double>(total_subwords);
  }
  if (total_words > 0) {
    m.fertility = static_cast<double>(total_subwords) /
                  static_cast<double>(total_words);
    m.continued_proportion = static_cast<double>(words_split) /
                             static_cast<double>(total_words);
  }
  m.empty_corpus_warning = total_words == 0;
  return m;
}

TokenizerMetrics compute_metrics(const std::vector<std::string>& sentences,
                                 const TokenizerModel& model) {
  std::uint64_t words = 0, subwords = 0, unks = 0, split = 0;
  for (const std::string& sentence : sentences) {
    TokenizationResult r = encode(sentence, model);
    words += r.total_words;
    subwords += r.total_subwords;
    unks += r.unk_count;
    split += r.words_split;
  }
  return metrics_from_counts(words, subwords, unks, split);
}

MetricsDelta compare(const TokenizerMetrics& before,
                     const TokenizerMetrics& after) {
  MetricsDelta d;
  d.before = before;
  d.after = after;
  d.delta_pct_unk = after.pct_unk - before.pct_unk;
  d.delta_fertility = after.fertility - before.fertility;
  d.delta_continued_proportion =
      after.continued_proportion - before.continued_proportion;
  return d;
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "0";
  return std::string(buf, end);
}

namespace {

nlohmann::json metrics_to_json(const TokenizerMetrics& m) {
  return nlohmann::json{
      {"pct_unk", m.pct_unk},
      {"fertility", m.fertility},
      {"continued_proportion", m.continued_proportion},
      {"counts",
       {{"total_words", m.total_words},
        {"total_subwords", m.total_subwords},
        {"unk_count", m.unk_count},
        {"words_split", m.words_split}}},
      {"empty_corpus_warning", m.empty_corpus_warning},
  };
}

}  // namespace

nlohmann::json metrics_report_json(const TokenizerMetrics& metrics,
                                   const std::string& corpus_digest,
                                   const std::string& model_digest) {
  nlohmann::json report = metrics_to_json(metrics);
  report["corpus_digest"] = corpus_digest;
  report["model_digest"] = model_digest;
  return report;
}

std::string metrics_report_csv(const TokenizerMetrics& m,
                               const std::string& corpus_digest,
                               const std::string& model_digest) {
  std::string out =
      "pct_unk,fertility,continued_proportion,total_words,total_subwords,"
      "unk_count,words_split,empty_corpus_warning,corpus_digest,model_"
      "digest\n";
  out += format_double(m.pct_unk) + "," + format_double(m.fertility) + "," +
         format_double(m.continued_proportion) + "," +
         std::to_string(m.total_words) + "," +
         std::to_string(m.total_subwords) + "," +
         std::to_string(m.unk_count) + "," + std::to_string(m.words_split) +
         "," + (m.empty_corpus_warning ? "true" : "false") + "," +
         corpus_digest + "," + model_digest + "\n";
  return out;
}

nlohmann::json delta_report_json(const MetricsDelta& delta) {
  return nlohmann::json{
      {"before", metrics_to_json(delta.before)},
      {"after", metrics_to_json(delta.after)},
      {"delta",
       {{"pct_unk", delta.delta_pct_unk},
        {"fertility", delta.delta_fertility},
        {"continued_proportion", delta.delta_continued_proportion}}},
  };
}

std::string delta_plot_csv(const MetricsDelta& delta,
                           const std::string& language) {
  std::string out = "language,metric,before,after\n";
  auto row = [&](const char* metric, double before, double after) {
    out += language + "," + metric + "," + format_double(before) + "," +
           format_double(after) + "\n";
  };
  row("pct_unk", delta.before.pct_unk, delta.after.pct_unk);
  row("fertility", delta.before.fertility, delta.after.fertility);
  row("continued_proportion", delta.before.continued_proportion,
      delta.after.continued_proportion);
  return out;
}

}  // namespace romankit
