// romankit — romanization and tokenizer-adaptation toolkit, command line.
//
// Exit codes: 0 success, 1 usage/config error, 2 data error, 3 internal
// error. Failures print a one-line JSON error record to stderr.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "romankit/corpus.hpp"
#include "romankit/digest.hpp"
#include "romankit/metrics.hpp"
#include "romankit/overlap.hpp"
#include "romankit/pipeline.hpp"
#include "romankit/rules.hpp"
#include "romankit/strategy.hpp"
#include "romankit/unicode.hpp"
#include "romankit/wordpiece.hpp"

namespace {

using namespace romankit;

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string format = "json";  // report format: json | csv
  bool quiet = false;
};

void note(const GlobalOpts& global, const std::string& message) {
  if (!global.quiet) std::cerr << message << "\n";
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot write output file: " + path);
  out << bytes;
  out.flush();
  if (!out) throw CorpusError("write failed for output file: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string store_bytes(const SentenceStore& store) {
  std::string out;
  for (const auto& s : store.sentences) out += s + "\n";
  return out;
}

CorpusFormat parse_corpus_format(const std::string& name) {
  if (name == "plain-lines") return CorpusFormat::kPlainLines;
  if (name == "wiki-json-lines" || name == "wiki-extracted-json-lines") {
    return CorpusFormat::kWikiJsonLines;
  }
  throw std::invalid_argument("unknown corpus format: " + name);
}

StrategyKind parse_strategy_kind(const std::string& name) {
  if (name == "universal") return StrategyKind::kUniversal;
  if (name == "borrow") return StrategyKind::kBorrow;
  if (name == "rand") return StrategyKind::kRand;
  throw std::invalid_argument("unknown strategy: " + name);
}

std::string cp_label(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

char32_t parse_codepoint(std::string text) {
  if (text.size() > 2 && (text[0] == 'U' || text[0] == 'u') &&
      text[1] == '+') {
    text = "0x" + text.substr(2);
  }
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &pos, 0);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad codepoint: " + text);
  }
  if (pos != text.size() || value > 0x10FFFF) {
    throw std::invalid_argument("bad codepoint: " + text);
  }
  return static_cast<char32_t>(value);
}

std::pair<char32_t, char32_t> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("--range expects LO:HI codepoints");
  }
  char32_t lo = parse_codepoint(text.substr(0, colon));
  char32_t hi = parse_codepoint(text.substr(colon + 1));
  if (lo > hi) {
    throw std::invalid_argument("--range low end exceeds high end");
  }
  return {lo, hi};
}

// Shared romanization-related options (romanize and pipeline).
struct TransformOpts {
  std::string strategy = "universal";
  std::string table;
  bool keep_case = false;
  std::string placeholder;  // single printable ASCII char, if given
  bool no_digit_map = false;
};

void add_transform_options(CLI::App* cmd, TransformOpts& opts) {
  cmd->add_option("--strategy", opts.strategy,
                  "Transliteration strategy: universal | borrow | rand")
      ->capture_default_str();
  cmd->add_option("--table", opts.table,
                  "Rule table file or directory (borrow strategy)");
  cmd->add_flag("--keep-case", opts.keep_case,
                "Do not lowercase the romanized output");
  cmd->add_option("--placeholder", opts.placeholder,
                  "Emit this character instead of dropping unmappable "
                  "codepoints");
  cmd->add_flag("--no-digit-map", opts.no_digit_map,
                "Do not map foreign decimal digits to ASCII digits");
}

RomanizeOptions make_roman_options(const TransformOpts& opts) {
  RomanizeOptions roman;
  roman.lowercase_output = !opts.keep_case;
  roman.map_digits = !opts.no_digit_map;
  if (!opts.placeholder.empty()) {
    if (opts.placeholder.size() != 1 || opts.placeholder[0] < 0x20 ||
        opts.placeholder[0] > 0x7E) {
      throw std::invalid_argument(
          "--placeholder must be one printable ASCII character");
    }
    roman.terminal = FallbackTerminal::kPlaceholder;
    roman.placeholder = opts.placeholder[0];
  }
  return roman;
}

StrategySpec make_strategy_spec(const TransformOpts& opts,
                                const GlobalOpts& global) {
  StrategySpec spec;
  spec.kind = parse_strategy_kind(opts.strategy);
  spec.table_path = opts.table;
  spec.seed = global.seed;
  return spec;
}

// ---------------------------------------------------------------- romanize
struct RomanizeCmd {
  std::string input;
  std::string text;
  std::string input_format = "plain-lines";
  std::string output = "-";
  TransformOpts transform;
};

void run_romanize(const RomanizeCmd& cmd, const GlobalOpts& global) {
  if (cmd.input.empty() == cmd.text.empty()) {
    throw std::invalid_argument("romanize: provide exactly one of --input "
                                "or --text");
  }
  auto strategy =
      make_strategy(make_strategy_spec(cmd.transform, global),
                    make_roman_options(cmd.transform));
  if (!cmd.text.empty()) {
    write_output(cmd.output, strategy->apply(cmd.text) + "\n");
    return;
  }
  SentenceStore store =
      ingest(cmd.input, parse_corpus_format(cmd.input_format));
  std::vector<std::string> transformed;
  transformed.reserve(store.sentences.size());
  for (const auto& s : store.sentences) {
    transformed.push_back(strategy->apply(s));
  }
  SentenceStore out = make_store(std::move(transformed), store.source_label);
  write_output(cmd.output, store_bytes(out));
  note(global, "romanized " + std::to_string(out.sentences.size()) +
                   " sentences (" + std::string(strategy->name()) +
                   "); input digest " + store.digest + ", output digest " +
                   out.digest);
}

// ---------------------------------------------------------------- rand-map
struct RandMapCmd {
  std::string text;
  std::string range;
  std::string output = "-";
};

void run_rand_map(const RandMapCmd& cmd, const GlobalOpts& global) {
  if (cmd.text.empty() == cmd.range.empty()) {
    throw std::invalid_argument("rand-map: provide exactly one of --text "
                                "or --range");
  }
  std::set<char32_t> cps;
  if (!cmd.text.empty()) {
    for (char32_t cp : decode_utf8(cmd.text)) {
      if (cp > 127) cps.insert(cp);
    }
  } else {
    auto [lo, hi] = parse_range(cmd.range);
    for (char32_t cp = std::max<char32_t>(lo, 128); cp <= hi; ++cp) {
      if (cp >= 0xD800 && cp <= 0xDFFF) continue;  // not scalar values
      cps.insert(cp);
    }
  }

  RandMap map(global.seed);
  if (global.format == "csv") {
    std::string out = "codepoint,source,target\n";
    for (char32_t cp : cps) {
      out += cp_label(cp) + "," + encode_utf8(cp) + "," + map.map(cp) + "\n";
    }
    write_output(cmd.output, out);
    return;
  }
  nlohmann::json entries = nlohmann::json::array();
  for (char32_t cp : cps) {
    entries.push_back({{"codepoint", cp_label(cp)},
                       {"source", encode_utf8(cp)},
                       {"target", map.map(cp)}});
  }
  nlohmann::json report{{"artifact", "romankit-rand-map"},
                        {"seed", map.seed()},
                        {"entries", std::move(entries)}};
  write_output(cmd.output, report.dump(2) + "\n");
}

// ---------------------------------------------------------- train-tokenizer
struct TrainCmd {
  std::string input;
  std::string input_format = "plain-lines";
  std::string output;
  std::uint64_t vocab_size = 10000;
  std::vector<std::string> specials;
  std::string unk = "[UNK]";
  std::string continuation_prefix = "##";
  std::uint64_t max_word_chars = 100;
  std::uint64_t workers = 1;
};

void run_train(const TrainCmd& cmd, const GlobalOpts& global) {
  SentenceStore store =
      ingest(cmd.input, parse_corpus_format(cmd.input_format));
  TrainConfig config;
  config.vocab_size = cmd.vocab_size;
  if (!cmd.specials.empty()) config.specials = cmd.specials;
  config.unk_token = cmd.unk;
  config.continuation_prefix = cmd.continuation_prefix;
  config.max_word_chars = cmd.max_word_chars;
  config.workers = cmd.workers;
  config.corpus_digest = store.digest;
  TokenizerModel model = train_wordpiece(store.sentences, config);
  save_model(model, cmd.output);

  std::string digest = model_digest(model);
  if (global.format == "csv") {
    std::cout << "vocab_size,model_digest,corpus_digest,output\n"
              << model.size() << "," << digest << "," << store.digest << ","
              << cmd.output << "\n";
  } else {
    nlohmann::json summary{{"artifact", "romankit-train-summary"},
                           {"vocab_size", model.size()},
                           {"model_digest", digest},
                           {"corpus_digest", store.digest},
                           {"output", cmd.output}};
    std::cout << summary.dump(2) << "\n";
  }
}

// ---------------------------------------------------------------- tokenize
struct TokenizeCmd {
  std::string vocab;
  std::string input;
  std::string text;
  std::string input_format = "plain-lines";
  std::string output = "-";
};

void run_tokenize(const TokenizeCmd& cmd, const GlobalOpts& global) {
  if (cmd.input.empty() == cmd.text.empty()) {
    throw std::invalid_argument("tokenize: provide exactly one of --input "
                                "or --text");
  }
  TokenizerModel model = load_model(cmd.vocab);
  std::vector<std::string> lines;
  if (!cmd.text.empty()) {
    lines.push_back(cmd.text);
  } else {
    lines = ingest(cmd.input, parse_corpus_format(cmd.input_format))
                .sentences;
  }
  std::string out;
  std::uint64_t subwords = 0, unks = 0;
  for (const auto& line : lines) {
    TokenizationResult result = encode(line, model);
    subwords += result.total_subwords;
    unks += result.unk_count;
    std::string rendered;
    for (const auto& word : result.word_tokens) {
      for (const auto& token : word) {
        if (!rendered.empty()) rendered += ' ';
        rendered += token;
      }
    }
    out += rendered + "\n";
  }
  write_output(cmd.output, out);
  note(global, "tokenized " + std::to_string(lines.size()) + " lines into " +
                   std::to_string(subwords) + " subwords (" +
                   std::to_string(unks) + " UNK)");
}

// ----------------------------------------------------------------- metrics
struct MetricsCmd {
  std::string vocab;
  std::string input;
  std::string input_format = "plain-lines";
  std::string output = "-";
};

void run_metrics(const MetricsCmd& cmd, const GlobalOpts& global) {
  TokenizerModel model = load_model(cmd.vocab);
  SentenceStore store =
      ingest(cmd.input, parse_corpus_format(cmd.input_format));
  TokenizerMetrics metrics = compute_metrics(store.sentences, model);
  std::string digest = model_digest(model);
  if (global.format == "csv") {
    write_output(cmd.output, metrics_report_csv(metrics, store.digest,
                                                digest));
  } else {
    write_output(cmd.output, metrics_report_json(metrics, store.digest,
                                                 digest).dump(2) + "\n");
  }
}

// ----------------------------------------------------------------- overlap
struct OverlapCmd {
  std::string new_vocab;
  std::string base_vocab;
  std::uint64_t top_n = 20;
  std::string output = "-";
};

void run_overlap(const OverlapCmd& cmd, const GlobalOpts& global) {
  TokenizerModel model = load_model(cmd.new_vocab);
  std::vector<std::string> base = load_vocab_tokens(cmd.base_vocab);
  OverlapPlan plan = overlap_plan(model, base);
  if (global.format == "csv") {
    write_output(cmd.output, overlap_plan_csv(plan));
  } else {
    write_output(cmd.output, overlap_report(plan, cmd.top_n).dump(2) + "\n");
  }
}

// ------------------------------------------------------------------ sample
struct SampleCmd {
  std::string input;
  std::string input_format = "plain-lines";
  std::uint64_t n = 0;
  bool full = false;
  std::string output = "-";
};

void run_sample(const SampleCmd& cmd, const GlobalOpts& global) {
  if (cmd.full == (cmd.n > 0)) {
    throw std::invalid_argument("sample: provide exactly one of --n or "
                                "--full");
  }
  SentenceStore store =
      ingest(cmd.input, parse_corpus_format(cmd.input_format));
  SampleSpec spec{.full = cmd.full, .n = cmd.n, .seed = global.seed};
  SentenceStore sampled = sample(store, spec);
  write_output(cmd.output, store_bytes(sampled));
  note(global, "sampled " + std::to_string(sampled.sentences.size()) +
                   " of " + std::to_string(store.sentences.size()) +
                   " sentences; digest " + sampled.digest);
}

// ---------------------------------------------------------------- pipeline
struct PipelineCmd {
  std::string input;
  std::string input_format = "plain-lines";
  std::string label = "corpus";
  std::uint64_t n = 0;  // 0 → full
  bool no_transform = false;
  TransformOpts transform;
  std::uint64_t vocab_size = 10000;
  std::vector<std::string> specials;
  std::uint64_t workers = 1;
  std::string base_vocab;
  std::string output_dir;
  std::uint64_t top_n = 20;
  bool no_timestamp = false;
};

void run_pipeline_cmd(const PipelineCmd& cmd, const GlobalOpts& global) {
  PipelineConfig config;
  config.input_path = cmd.input;
  config.format = parse_corpus_format(cmd.input_format);
  config.label = cmd.label;
  config.sample_spec = cmd.n == 0
                           ? SampleSpec{.full = true, .n = 0, .seed = 0}
                           : SampleSpec{.full = false,
                                        .n = cmd.n,
                                        .seed = global.seed};
  config.transform = !cmd.no_transform;
  config.strategy = make_strategy_spec(cmd.transform, global);
  config.roman_opts = make_roman_options(cmd.transform);
  config.vocab_size = cmd.vocab_size;
  if (!cmd.specials.empty()) config.specials = cmd.specials;
  config.workers = cmd.workers;
  config.base_vocab_path = cmd.base_vocab;
  config.output_dir = cmd.output_dir;
  config.overlap_top_n = cmd.top_n;
  config.emit_timestamp = !cmd.no_timestamp;

  nlohmann::json report = run_pipeline(config);
  if (global.format == "csv") {
    std::cout << report_to_csv(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
  note(global, "pipeline artifacts written to " + cmd.output_dir);
}

// ----------------------------------------------------------------- compare
struct CompareCmd {
  std::string before;
  std::string after;
  std::string output = "-";
};

void run_compare(const CompareCmd& cmd, const GlobalOpts& global) {
  nlohmann::json before = nlohmann::json::parse(read_text_file(cmd.before));
  nlohmann::json after = nlohmann::json::parse(read_text_file(cmd.after));
  nlohmann::json delta = compare_reports(before, after);
  if (global.format == "csv") {
    write_output(cmd.output, compare_plot_csv(delta));
  } else {
    write_output(cmd.output, delta.dump(2) + "\n");
  }
}

void emit_error(const std::string& type, const std::string& message,
                const std::string& stage = "") {
  nlohmann::json record{{"error", {{"type", type}, {"message", message}}}};
  if (!stage.empty()) record["error"]["stage"] = stage;
  std::cerr << record.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"romankit — universal romanization and tokenizer adaptation"};
  app.require_subcommand(1);

  GlobalOpts global;
  app.add_option("--seed", global.seed,
                 "Seed for sampling and the rand strategy")
      ->capture_default_str();
  app.add_option("--format", global.format, "Report format: json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--quiet", global.quiet,
               "Suppress informational notes on stderr");

  RomanizeCmd romanize_cmd;
  {
    auto* cmd = app.add_subcommand(
        "romanize", "Transform a corpus or string into Latin script");
    cmd->fallthrough();
    cmd->add_option("--input,-i", romanize_cmd.input, "Input corpus file");
    cmd->add_option("--text", romanize_cmd.text, "Romanize one string");
    cmd->add_option("--input-format", romanize_cmd.input_format,
                    "plain-lines | wiki-json-lines")
        ->capture_default_str();
    cmd->add_option("--output,-o", romanize_cmd.output,
                    "Output file (- for stdout)")
        ->capture_default_str();
    add_transform_options(cmd, romanize_cmd.transform);
    cmd->callback([&] { run_romanize(romanize_cmd, global); });
  }

  RandMapCmd rand_map_cmd;
  {
    auto* cmd = app.add_subcommand(
        "rand-map", "Dump the seeded RAND codepoint→letter association");
    cmd->fallthrough();
    cmd->add_option("--text", rand_map_cmd.text,
                    "Dump the mapping of every non-ASCII codepoint in this "
                    "string");
    cmd->add_option("--range", rand_map_cmd.range,
                    "Dump a codepoint range, e.g. 0x900:0x97F or "
                    "U+0980:U+09FF");
    cmd->add_option("--output,-o", rand_map_cmd.output,
                    "Output file (- for stdout)")
        ->capture_default_str();
    cmd->callback([&] { run_rand_map(rand_map_cmd, global); });
  }

  TrainCmd train_cmd;
  {
    auto* cmd = app.add_subcommand("train-tokenizer",
                                   "Train a WordPiece vocabulary");
    cmd->fallthrough();
    cmd->add_option("--input,-i", train_cmd.input, "Training corpus")
        ->required();
    cmd->add_option("--input-format", train_cmd.input_format,
                    "plain-lines | wiki-json-lines")
        ->capture_default_str();
    cmd->add_option("--output,-o", train_cmd.output,
                    "Vocabulary file to write (sidecar .json added)")
        ->required();
    cmd->add_option("--vocab-size", train_cmd.vocab_size, "Vocabulary size")
        ->capture_default_str();
    cmd->add_option("--special", train_cmd.specials,
                    "Special token (repeatable; default [PAD] [UNK] [CLS] "
                    "[SEP] [MASK])");
    cmd->add_option("--unk", train_cmd.unk, "Unknown token")
        ->capture_default_str();
    cmd->add_option("--continuation-prefix", train_cmd.continuation_prefix,
                    "Continuation prefix")
        ->capture_default_str();
    cmd->add_option("--max-word-chars", train_cmd.max_word_chars,
                    "Words longer than this many codepoints become UNK")
        ->capture_default_str();
    cmd->add_option("--workers", train_cmd.workers,
                    "Counting threads (any value gives identical models)")
        ->capture_default_str();
    cmd->callback([&] { run_train(train_cmd, global); });
  }

  TokenizeCmd tokenize_cmd;
  {
    auto* cmd = app.add_subcommand(
        "tokenize", "Encode a corpus or string with a trained vocabulary");
    cmd->fallthrough();
    cmd->add_option("--vocab", tokenize_cmd.vocab, "Vocabulary file")
        ->required();
    cmd->add_option("--input,-i", tokenize_cmd.input, "Input corpus file");
    cmd->add_option("--text", tokenize_cmd.text, "Tokenize one string");
    cmd->add_option("--input-format", tokenize_cmd.input_format,
                    "plain-lines | wiki-json-lines")
        ->capture_default_str();
    cmd->add_option("--output,-o", tokenize_cmd.output,
                    "Output file (- for stdout)")
        ->capture_default_str();
    cmd->callback([&] { run_tokenize(tokenize_cmd, global); });
  }

  MetricsCmd metrics_cmd;
  {
    auto* cmd = app.add_subcommand(
        "metrics", "Tokenizer quality metrics of a vocabulary on a corpus");
    cmd->fallthrough();
    cmd->add_option("--vocab", metrics_cmd.vocab, "Vocabulary file")
        ->required();
    cmd->add_option("--input,-i", metrics_cmd.input, "Evaluation corpus")
        ->required();
    cmd->add_option("--input-format", metrics_cmd.input_format,
                    "plain-lines | wiki-json-lines")
        ->capture_default_str();
    cmd->add_option("--output,-o", metrics_cmd.output,
                    "Output file (- for stdout)")
        ->capture_default_str();
    cmd->callback([&] { run_metrics(metrics_cmd, global); });
  }

  OverlapCmd overlap_cmd;
  {
    auto* cmd = app.add_subcommand(
        "overlap", "Lexical overlap and embedding-initialization plan");
    cmd->fallthrough();
    cmd->add_option("--new", overlap_cmd.new_vocab, "New vocabulary file")
        ->required();
    cmd->add_option("--base", overlap_cmd.base_vocab, "Base vocabulary file")
        ->required();
    cmd->add_option("--top", overlap_cmd.top_n,
                    "Shared tokens listed in the JSON report")
        ->capture_default_str();
    cmd->add_option("--output,-o", overlap_cmd.output,
                    "Output file (- for stdout)")
        ->capture_default_str();
    cmd->callback([&] { run_overlap(overlap_cmd, global); });
  }

  SampleCmd sample_cmd;
  {
    auto* cmd = app.add_subcommand(
        "sample", "Seeded uniform sentence sample without replacement");
    cmd->fallthrough();
    cmd->add_option("--input,-i", sample_cmd.input, "Input corpus file")
        ->required();
    cmd->add_option("--input-format", sample_cmd.input_format,
                    "plain-lines | wiki-json-lines")
        ->capture_default_str();
    cmd->add_option("--n", sample_cmd.n, "Sample size");
    cmd->add_flag("--full", sample_cmd.full, "Keep the whole corpus");
    cmd->add_option("--output,-o", sample_cmd.output,
                    "Output file (- for stdout)")
        ->capture_default_str();
    cmd->callback([&] { run_sample(sample_cmd, global); });
  }

  PipelineCmd pipeline_cmd;
  {
    auto* cmd = app.add_subcommand(
        "pipeline",
        "ingest → sample → transform → train → metrics → overlap");
    cmd->fallthrough();
    cmd->add_option("--input,-i", pipeline_cmd.input, "Input corpus file")
        ->required();
    cmd->add_option("--input-format", pipeline_cmd.input_format,
                    "plain-lines | wiki-json-lines")
        ->capture_default_str();
    cmd->add_option("--label", pipeline_cmd.label,
                    "Corpus label used in reports")
        ->capture_default_str();
    cmd->add_option("--sample", pipeline_cmd.n,
                    "Sample size (omit for the full corpus)");
    cmd->add_flag("--no-transform", pipeline_cmd.no_transform,
                  "Tokenize the original script without romanizing");
    add_transform_options(cmd, pipeline_cmd.transform);
    cmd->add_option("--vocab-size", pipeline_cmd.vocab_size,
                    "Vocabulary size")
        ->capture_default_str();
    cmd->add_option("--special", pipeline_cmd.specials,
                    "Special token (repeatable)");
    cmd->add_option("--workers", pipeline_cmd.workers, "Counting threads")
        ->capture_default_str();
    cmd->add_option("--base-vocab", pipeline_cmd.base_vocab,
                    "Base vocabulary for base metrics and the overlap plan");
    cmd->add_option("--output-dir", pipeline_cmd.output_dir,
                    "Directory for artifacts and report.json")
        ->required();
    cmd->add_option("--top", pipeline_cmd.top_n,
                    "Shared tokens listed in the overlap report")
        ->capture_default_str();
    cmd->add_flag("--no-timestamp", pipeline_cmd.no_timestamp,
                  "Omit generated_at for byte-reproducible reports");
    cmd->callback([&] { run_pipeline_cmd(pipeline_cmd, global); });
  }

  CompareCmd compare_cmd;
  {
    auto* cmd = app.add_subcommand(
        "compare", "Diff two pipeline reports over the same corpus");
    cmd->fallthrough();
    cmd->add_option("--before", compare_cmd.before,
                    "Pipeline report.json before")
        ->required();
    cmd->add_option("--after", compare_cmd.after,
                    "Pipeline report.json after")
        ->required();
    cmd->add_option("--output,-o", compare_cmd.output,
                    "Output file (- for stdout)")
        ->capture_default_str();
    cmd->callback([&] { run_compare(compare_cmd, global); });
  }

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    emit_error("usage", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    emit_error("usage", e.what());
    return 1;
  } catch (const PipelineError& e) {
    emit_error("data", e.what(), e.stage());
    return 2;
  } catch (const CorpusError& e) {
    emit_error("data", e.what());
    return 2;
  } catch (const TokenizerError& e) {
    emit_error("data", e.what());
    return 2;
  } catch (const OverlapError& e) {
    emit_error("data", e.what());
    return 2;
  } catch (const RuleError& e) {
    emit_error("data", e.what());
    return 2;
  } catch (const Utf8Error& e) {
    emit_error("data", e.what());
    return 2;
  } catch (const nlohmann::json::exception& e) {
    emit_error("data", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 3;
  }
}
