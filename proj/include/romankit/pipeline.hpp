#pragma once

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "romankit/corpus.hpp"
#include "romankit/metrics.hpp"
#include "romankit/overlap.hpp"
#include "romankit/strategy.hpp"
#include "romankit/wordpiece.hpp"

namespace romankit {

// Failure of one pipeline stage; the first failing stage aborts the run.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& message)
      : std::runtime_error("stage " + stage + ": " + message),
        stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

struct PipelineConfig {
  std::string input_path;
  CorpusFormat format = CorpusFormat::kPlainLines;
  std::string label = "corpus";
  SampleSpec sample_spec{.full = true, .n = 0, .seed = 0};
  bool transform = true;  // apply the strategy stage
  StrategySpec strategy;
  RomanizeOptions roman_opts;
  std::size_t vocab_size = 10000;
  std::vector<std::string> specials = {"[PAD]", "[UNK]", "[CLS]", "[SEP]",
                                       "[MASK]"};
  std::size_t workers = 1;
  std::string base_vocab_path;  // "" → skip overlap and base metrics
  std::string output_dir;
  std::size_t overlap_top_n = 20;
  bool emit_timestamp = true;
};

// Cross-field consistency, checked before any work starts. Throws
// std::invalid_argument (a usage error, not a data error).
void validate(const PipelineConfig& config);

// sample → (optional) transform → train → metrics (own model, plus against
// the base vocabulary when given) → overlap plan. Writes every intermediate
// artifact plus report.json into output_dir and returns the consolidated
// report, which embeds content digests of the input and all artifacts.
// Stage failures raise PipelineError naming the stage.
nlohmann::json run_pipeline(const PipelineConfig& config);

// Before/after comparison over two pipeline reports. Refuses reports whose
// corpus input digests differ (the message carries both digests); likewise
// for base-vocabulary digests when both reports have base metrics. Returns
// the delta report.
nlohmann::json compare_reports(const nlohmann::json& before,
                               const nlohmann::json& after);

// Plot-ready rows (language,metric,before,after) for a delta report from
// compare_reports; base-vocabulary metrics get a "base_" prefix.
std::string compare_plot_csv(const nlohmann::json& delta_report);

// "key,value" rows of every scalar in a report (JSON-pointer keys, sorted) —
// the CSV rendering of arbitrary report objects.
std::string report_to_csv(const nlohmann::json& report);

}  // namespace romankit
