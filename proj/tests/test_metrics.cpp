#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "reference_impls.hpp"
#include "romankit/metrics.hpp"

using namespace romankit;

namespace {

TokenizerModel make_model(const std::vector<std::string>& tokens) {
  TokenizerModel m;
  m.special_tokens = {"[UNK]"};
  m.id_to_token.push_back("[UNK]");
  for (const auto& t : tokens) m.id_to_token.push_back(t);
  for (size_t i = 0; i < m.id_to_token.size(); ++i) {
    m.token_to_id.emplace(m.id_to_token[i], static_cast<std::int32_t>(i));
  }
  return m;
}

bool metrics_equal(const TokenizerMetrics& a, const TokenizerMetrics& b) {
  return a.total_words == b.total_words &&
         a.total_subwords == b.total_subwords &&
         a.unk_count == b.unk_count && a.words_split == b.words_split &&
         a.pct_unk == b.pct_unk && a.fertility == b.fertility &&
         a.continued_proportion == b.continued_proportion;
}

}  // namespace

TEST_CASE("whole-word hits: pct_unk 0, fertility 1, continued 0") {
  TokenizerModel m = make_model({"aa", "bb"});
  TokenizerMetrics r = compute_metrics({"aa bb"}, m);
  CHECK(r.pct_unk == 0.0);
  CHECK(r.fertility == 1.0);
  CHECK(r.continued_proportion == 0.0);
  CHECK(r.total_words == 2);
  CHECK(r.total_subwords == 2);
  CHECK_FALSE(r.empty_corpus_warning);
}

TEST_CASE("forced split: fertility 3, continued 1, pct_unk 0") {
  TokenizerModel m = make_model({"a", "##b", "##c"});
  TokenizerMetrics r = compute_metrics({"abc"}, m);
  CHECK(r.pct_unk == 0.0);
  CHECK(r.fertility == 3.0);
  CHECK(r.continued_proportion == 1.0);
}

TEST_CASE("all words out of alphabet: unk == subwords == words") {
  TokenizerModel m = make_model({"a"});
  TokenizerMetrics r = compute_metrics({"qq rr", "ss"}, m);
  CHECK(r.unk_count == 3);
  CHECK(r.total_subwords == 3);
  CHECK(r.total_words == 3);
  CHECK(r.pct_unk == 1.0);
  CHECK(r.fertility == 1.0);
  CHECK(r.continued_proportion == 0.0);
}

TEST_CASE("empty corpus: zeros with the warning flag") {
  TokenizerModel m = make_model({"a"});
  for (const std::vector<std::string>& corpus :
       {std::vector<std::string>{}, std::vector<std::string>{"", "  \t"}}) {
    TokenizerMetrics r = compute_metrics(corpus, m);
    CHECK(r.pct_unk == 0.0);
    CHECK(r.fertility == 0.0);
    CHECK(r.continued_proportion == 0.0);
    CHECK(r.empty_corpus_warning);
  }
}

TEST_CASE("sentence-order permutation leaves metrics unchanged") {
  std::vector<std::string> corpus =
      rkref::random_corpus(3, {"a", "b", "c", "d"}, 50, 6, 6);
  TokenizerModel m =
      train_wordpiece(corpus, TrainConfig{.vocab_size = 60,
                                          .specials = {"[UNK]"}});
  TokenizerMetrics base = compute_metrics(corpus, m);
  std::vector<std::string> shuffled = corpus;
  SplitMix64 rng(9);
  for (size_t i = shuffled.size(); i > 1; --i) {
    std::swap(shuffled[i - 1], shuffled[rng.next_below(i)]);
  }
  CHECK(shuffled != corpus);
  CHECK(metrics_equal(base, compute_metrics(shuffled, m)));
}

TEST_CASE("duplicating the corpus k times leaves metrics unchanged") {
  std::vector<std::string> corpus =
      rkref::random_corpus(4, {"x", "y", "z"}, 30, 5, 5);
  TokenizerModel m =
      train_wordpiece(corpus, TrainConfig{.vocab_size = 40,
                                          .specials = {"[UNK]"}});
  TokenizerMetrics base = compute_metrics(corpus, m);
  for (int k : {2, 5}) {
    std::vector<std::string> dup;
    for (int i = 0; i < k; ++i) {
      dup.insert(dup.end(), corpus.begin(), corpus.end());
    }
    TokenizerMetrics r = compute_metrics(dup, m);
    CHECK(r.total_words == base.total_words * static_cast<std::uint64_t>(k));
    CHECK(r.pct_unk == base.pct_unk);
    CHECK(r.fertility == base.fertility);
    CHECK(r.continued_proportion == base.continued_proportion);
  }
}

TEST_CASE("ranges: pct_unk and continued in [0,1], fertility >= 1") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::vector<std::string> corpus =
        rkref::random_corpus(seed, {"a", "b", "c", "е"}, 40, 6, 7);
    TokenizerModel m =
        train_wordpiece(corpus, TrainConfig{.vocab_size = 50,
                                            .specials = {"[UNK]"}});
    TokenizerMetrics r = compute_metrics(corpus, m);
    CHECK(r.pct_unk >= 0.0);
    CHECK(r.pct_unk <= 1.0);
    CHECK(r.continued_proportion >= 0.0);
    CHECK(r.continued_proportion <= 1.0);
    REQUIRE(r.total_words > 0);
    CHECK(r.fertility >= 1.0);
  }
}

TEST_CASE("brute-force tally oracle equivalence on random corpora") {
  // Mirrors the acceptance criterion at module scale: 30 corpora here,
  // 100 in the acceptance suite.
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    std::vector<std::string> alphabet = {"a", "b", "c", "d", "щ", "ö"};
    std::vector<std::string> corpus =
        rkref::random_corpus(seed * 17, alphabet, 30, 8, 9);
    TokenizerModel m =
        train_wordpiece(corpus, TrainConfig{.vocab_size = 70,
                                            .specials = {"[UNK]"}});
    TokenizerMetrics mine = compute_metrics(corpus, m);
    std::set<std::string> vocab(m.id_to_token.begin(), m.id_to_token.end());
    rkref::Tally oracle = rkref::tally_metrics(
        corpus, vocab, m.unk_token, m.continuation_prefix, m.max_word_chars);
    INFO("seed=", seed);
    CHECK(mine.total_words == oracle.words);
    CHECK(mine.total_subwords == oracle.subwords);
    CHECK(mine.unk_count == oracle.unks);
    CHECK(mine.words_split == oracle.split);
    CHECK(std::abs(mine.pct_unk - oracle.pct_unk) < 1e-12);
    CHECK(std::abs(mine.fertility - oracle.fertility) < 1e-12);
    CHECK(std::abs(mine.continued_proportion - oracle.continued) < 1e-12);
  }
}

TEST_CASE("compare: identical inputs give zero deltas") {
  TokenizerModel m = make_model({"aa"});
  TokenizerMetrics r = compute_metrics({"aa zz"}, m);
  MetricsDelta d = compare(r, r);
  CHECK(d.delta_pct_unk == 0.0);
  CHECK(d.delta_fertility == 0.0);
  CHECK(d.delta_continued_proportion == 0.0);
}

TEST_CASE("compare: exact subtraction") {
  TokenizerMetrics before = metrics_from_counts(100, 200, 80, 50);
  TokenizerMetrics after = metrics_from_counts(100, 110, 2, 10);
  CHECK(before.pct_unk == 0.40);
  MetricsDelta d = compare(before, after);
  CHECK(d.delta_pct_unk == after.pct_unk - before.pct_unk);
  CHECK(d.delta_pct_unk < 0.0);
  CHECK(d.delta_fertility == doctest::Approx(-0.9).epsilon(1e-12));
}

TEST_CASE("report serialization") {
  TokenizerMetrics m = metrics_from_counts(4, 6, 1, 2);
  nlohmann::json j = metrics_report_json(m, "cdigest", "mdigest");
  CHECK(j["corpus_digest"] == "cdigest");
  CHECK(j["model_digest"] == "mdigest");
  CHECK(j["counts"]["total_words"] == 4);
  CHECK(j["counts"]["unk_count"] == 1);
  CHECK(j["pct_unk"].get<double>() == doctest::Approx(1.0 / 6));
  CHECK_FALSE(j["empty_corpus_warning"].get<bool>());

  std::string csv = metrics_report_csv(m, "cd", "md");
  CHECK(csv.find("pct_unk,fertility") == 0);
  CHECK(csv.find(",cd,md\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);

  MetricsDelta d = compare(m, metrics_from_counts(4, 4, 0, 0));
  nlohmann::json dj = delta_report_json(d);
  CHECK(dj["delta"]["pct_unk"].get<double>() ==
        doctest::Approx(-1.0 / 6).epsilon(1e-12));
  std::string plot = delta_plot_csv(d, "hindi");
  CHECK(plot.find("language,metric,before,after\n") == 0);
  CHECK(plot.find("hindi,pct_unk,") != std::string::npos);
  CHECK(plot.find("hindi,fertility,1.5,1\n") != std::string::npos);
  CHECK(std::count(plot.begin(), plot.end(), '\n') == 4);
}

TEST_CASE("format_double is shortest-roundtrip and stable") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.5) == "1.5");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  double v = 0.1 + 0.2;
  CHECK(std::stod(format_double(v)) == v);
}
