#include "romankit/pipeline.hpp"

#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "romankit/digest.hpp"

namespace romankit {

namespace {

std::string iso_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot re-read artifact: " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_bytes(const std::filesystem::path& path,
                      const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write artifact: " + path.string());
  }
  out << bytes;
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed for artifact: " + path.string());
  }
}

TokenizerMetrics metrics_from_json(const nlohmann::json& j) {
  const nlohmann::json& c = j.at("counts");
  return metrics_from_counts(c.at("total_words").get<std::uint64_t>(),
                             c.at("total_subwords").get<std::uint64_t>(),
                             c.at("unk_count").get<std::uint64_t>(),
                             c.at("words_split").get<std::uint64_t>());
}

std::string csv_escape(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

void validate(const PipelineConfig& config) {
  if (config.input_path.empty()) {
    throw std::invalid_argument("pipeline config: input path is required");
  }
  if (config.output_dir.empty()) {
    throw std::invalid_argument("pipeline config: output directory is "
                                "required");
  }
  if (!config.sample_spec.full && config.sample_spec.n == 0) {
    throw std::invalid_argument(
        "pipeline config: sample size must be at least 1 (or full)");
  }
  if (config.vocab_size == 0) {
    throw std::invalid_argument("pipeline config: vocab_size must be "
                                "positive");
  }
  if (config.workers == 0) {
    throw std::invalid_argument("pipeline config: workers must be at least "
                                "1");
  }
  if (config.transform && config.strategy.kind == StrategyKind::kBorrow &&
      config.strategy.table_path.empty()) {
    throw std::invalid_argument(
        "pipeline config: the borrow strategy requires a table path");
  }
}

nlohmann::json run_pipeline(const PipelineConfig& config) {
  validate(config);

  auto guard = [](const char* stage, auto&& fn) {
    try {
      return fn();
    } catch (const PipelineError&) {
      throw;
    } catch (const std::exception& e) {
      throw PipelineError(stage, e.what());
    }
  };

  SentenceStore input = guard("ingest", [&] {
    return ingest(config.input_path, config.format);
  });
  SentenceStore sampled = guard("sample", [&] {
    return sample(input, config.sample_spec);
  });

  SentenceStore working = sampled;
  if (config.transform) {
    working = guard("transform", [&] {
      auto strategy = make_strategy(config.strategy, config.roman_opts);
      std::vector<std::string> lines;
      lines.reserve(sampled.sentences.size());
      for (const std::string& s : sampled.sentences) {
        lines.push_back(strategy->apply(s));
      }
      return make_store(std::move(lines), sampled.source_label);
    });
  }

  TokenizerModel model = guard("train", [&] {
    TrainConfig tc;
    tc.vocab_size = config.vocab_size;
    tc.specials = config.specials;
    tc.workers = config.workers;
    tc.corpus_digest = working.digest;
    return train_wordpiece(working.sentences, tc);
  });

  TokenizerMetrics own_metrics = guard("metrics", [&] {
    return compute_metrics(working.sentences, model);
  });

  const bool have_base = !config.base_vocab_path.empty();
  TokenizerModel base_model;
  TokenizerMetrics base_metrics;
  OverlapPlan plan;
  if (have_base) {
    base_model = guard("base-vocab", [&] {
      return load_model(config.base_vocab_path);
    });
    base_metrics = guard("base-metrics", [&] {
      return compute_metrics(working.sentences, base_model);
    });
    plan = guard("overlap", [&] {
      return overlap_plan(model, base_model.id_to_token);
    });
  }

  nlohmann::json strategy_json(nullptr);
  if (config.transform) {
    switch (config.strategy.kind) {
      case StrategyKind::kUniversal:
        strategy_json = {{"kind", "universal"}};
        break;
      case StrategyKind::kBorrow:
        strategy_json = {{"kind", "borrow"},
                         {"table_path", config.strategy.table_path}};
        break;
      case StrategyKind::kRand:
        strategy_json = {{"kind", "rand"}, {"seed", config.strategy.seed}};
        break;
    }
  }

  std::string own_model_digest = model_digest(model);
  nlohmann::json report{
      {"artifact", "romankit-pipeline-report"},
      {"format_version", 1},
      {"label", config.label},
      {"config",
       {{"input_path", config.input_path},
        {"corpus_format", config.format == CorpusFormat::kPlainLines
                              ? "plain-lines"
                              : "wiki-extracted-json-lines"},
        {"sample",
         {{"full", config.sample_spec.full},
          {"n", config.sample_spec.n},
          {"seed", config.sample_spec.seed}}},
        {"transform", config.transform},
        {"strategy", strategy_json},
        // The worker count is execution detail, not semantics: reports are
        // byte-identical across worker settings, so it is not echoed.
        {"vocab_size", config.vocab_size},
        {"specials", config.specials},
        {"base_vocab_path", config.base_vocab_path}}},
      {"corpus",
       {{"input_digest", input.digest},
        {"input_sentences", input.sentences.size()},
        {"sampled_digest", sampled.digest},
        {"sampled_sentences", sampled.sentences.size()},
        {"training_digest", working.digest}}},
      {"tokenizer",
       {{"vocab_size", model.size()}, {"model_digest", own_model_digest}}},
      {"metrics",
       metrics_report_json(own_metrics, working.digest, own_model_digest)},
      {"base_metrics", nlohmann::json(nullptr)},
      {"overlap", nlohmann::json(nullptr)},
  };
  if (have_base) {
    report["base_metrics"] = metrics_report_json(
        base_metrics, working.digest, model_digest(base_model));
    nlohmann::json overlap_summary = overlap_report(plan, config.overlap_top_n);
    overlap_summary.erase("entries");
    report["overlap"] = std::move(overlap_summary);
  }

  guard("write", [&] {
    namespace fs = std::filesystem;
    fs::path dir(config.output_dir);
    fs::create_directories(dir);

    nlohmann::json files{{"sampled", "sampled.txt"},
                         {"vocab", "model.vocab"},
                         {"vocab_sidecar", "model.vocab.json"},
                         {"report", "report.json"}};
    nlohmann::json digests{{"sampled.txt", sampled.digest},
                           {"model.vocab", own_model_digest}};

    std::string sampled_bytes;
    for (const std::string& s : sampled.sentences) sampled_bytes += s + "\n";
    write_file_bytes(dir / "sampled.txt", sampled_bytes);

    if (config.transform) {
      std::string transformed_bytes;
      for (const std::string& s : working.sentences) {
        transformed_bytes += s + "\n";
      }
      write_file_bytes(dir / "transformed.txt", transformed_bytes);
      files["transformed"] = "transformed.txt";
      digests["transformed.txt"] = working.digest;
    }

    save_model(model, (dir / "model.vocab").string());
    digests["model.vocab.json"] =
        sha256_hex(read_file_bytes(dir / "model.vocab.json"));

    if (have_base) {
      std::string plan_bytes =
          overlap_report(plan, config.overlap_top_n).dump(2) + "\n";
      write_file_bytes(dir / "overlap_plan.json", plan_bytes);
      files["overlap_plan"] = "overlap_plan.json";
      digests["overlap_plan.json"] = sha256_hex(plan_bytes);
    }

    files["digests"] = std::move(digests);
    report["artifacts"] = std::move(files);
    if (config.emit_timestamp) report["generated_at"] = iso_utc_now();
    write_file_bytes(dir / "report.json", report.dump(2) + "\n");
    return 0;
  });

  return report;
}

nlohmann::json compare_reports(const nlohmann::json& before,
                               const nlohmann::json& after) {
  std::string before_digest, after_digest;
  try {
    before_digest = before.at("corpus").at("input_digest").get<std::string>();
    after_digest = after.at("corpus").at("input_digest").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw PipelineError("compare",
                        std::string("report lacks corpus digests: ") +
                            e.what());
  }
  if (before_digest != after_digest) {
    throw PipelineError("compare",
                        "corpus digest mismatch: before=" + before_digest +
                            " after=" + after_digest);
  }

  nlohmann::json out{
      {"artifact", "romankit-compare-report"},
      {"format_version", 1},
      {"label",
       {{"before", before.value("label", "")},
        {"after", after.value("label", "")}}},
      {"corpus_digest", before_digest},
      {"metrics",
       delta_report_json(compare(metrics_from_json(before.at("metrics")),
                                 metrics_from_json(after.at("metrics"))))},
      {"base_metrics", nlohmann::json(nullptr)},
  };

  bool before_base = before.contains("base_metrics") &&
                     !before.at("base_metrics").is_null();
  bool after_base =
      after.contains("base_metrics") && !after.at("base_metrics").is_null();
  if (before_base && after_base) {
    std::string before_model =
        before.at("base_metrics").at("model_digest").get<std::string>();
    std::string after_model =
        after.at("base_metrics").at("model_digest").get<std::string>();
    if (before_model != after_model) {
      throw PipelineError(
          "compare", "base vocabulary digest mismatch: before=" +
                         before_model + " after=" + after_model);
    }
    out["base_metrics"] = delta_report_json(
        compare(metrics_from_json(before.at("base_metrics")),
                metrics_from_json(after.at("base_metrics"))));
  }
  return out;
}

std::string compare_plot_csv(const nlohmann::json& delta_report) {
  std::string language =
      delta_report.at("label").at("before").get<std::string>();
  std::string out = "language,metric,before,after\n";
  auto emit = [&](const nlohmann::json& delta, const std::string& prefix) {
    const nlohmann::json& b = delta.at("before");
    const nlohmann::json& a = delta.at("after");
    for (const char* key : {"pct_unk", "fertility", "continued_proportion"}) {
      out += csv_escape(language) + "," + prefix + key + "," +
             format_double(b.at(key).get<double>()) + "," +
             format_double(a.at(key).get<double>()) + "\n";
    }
  };
  emit(delta_report.at("metrics"), "");
  if (delta_report.contains("base_metrics") &&
      !delta_report.at("base_metrics").is_null()) {
    emit(delta_report.at("base_metrics"), "base_");
  }
  return out;
}

std::string report_to_csv(const nlohmann::json& report) {
  nlohmann::json flat = report.flatten();
  std::string out = "key,value\n";
  for (const auto& [key, value] : flat.items()) {
    std::string rendered;
    if (value.is_string()) {
      rendered = value.get<std::string>();
    } else if (value.is_number_float()) {
      rendered = format_double(value.get<double>());
    } else {
      rendered = value.dump();
    }
    out += csv_escape(key) + "," + csv_escape(rendered) + "\n";
  }
  return out;
}

}  // namespace romankit
