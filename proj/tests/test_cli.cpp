// Drives the installed `romankit` binary as a subprocess and checks output
// bytes, exit codes, and error records.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int exit_code;
  std::string out;
  std::string err;
};

fs::path work_dir() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / "rk_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_bytes(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
}

CmdResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = work_dir() / ("stdout." + std::to_string(counter));
  fs::path err = work_dir() / ("stderr." + std::to_string(counter));
  ++counter;
  std::string command = std::string(RK_CLI_PATH) + " " + args + " > " +
                        out.string() + " 2> " + err.string();
  int rc = std::system(command.c_str());
  REQUIRE(rc != -1);
  return {WEXITSTATUS(rc), read_bytes(out), read_bytes(err)};
}

const std::vector<std::string>& hindi_lines() {
  static const std::vector<std::string> lines = {
      "जनक जल", "जल नगर", "भासा नगर जल", "जनक भासा",
      "नगर करन", "करन जल जनक", "बहार नगर", "जल बहार भासा",
  };
  return lines;
}

fs::path hindi_corpus() {
  static fs::path path = [] {
    auto p = work_dir() / "hindi.txt";
    std::string bytes;
    for (const auto& line : hindi_lines()) bytes += line + "\n";
    write_bytes(p, bytes);
    return p;
  }();
  return path;
}

fs::path latin_base_vocab() {
  static fs::path path = [] {
    auto p = work_dir() / "base.vocab";
    std::string bytes;
    for (const char* t : {"[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"}) {
      bytes += std::string(t) + "\n";
    }
    for (char c = 'a'; c <= 'z'; ++c) {
      bytes += std::string(1, c) + "\n";
      bytes += "##" + std::string(1, c) + "\n";
    }
    write_bytes(p, bytes);
    return p;
  }();
  return path;
}

}  // namespace

TEST_CASE("romanize --text reproduces the showcase strings") {
  CHECK(run_cli("romanize --text 'जॉर्जियन भासा'").out == "jorjiyan bhaasaa\n");
  CHECK(run_cli("romanize --text 'ග්‍රහලෝක'").out == "grahalooka\n");
  CHECK(run_cli("romanize --text 'ايران'").out == "ayran\n");
  CHECK(run_cli("romanize --text 'សេដ្ឋកិច្ច'").out == "sedtthakicca\n");
}

TEST_CASE("romanize corpus file: ASCII passthrough and idempotent rerun") {
  fs::path ascii = work_dir() / "ascii.txt";
  write_bytes(ascii, "hello world\nplain ascii lines\n");
  fs::path out = work_dir() / "ascii_out.txt";
  CmdResult r = run_cli("--quiet romanize --input " + ascii.string() +
                        " --output " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(read_bytes(out) == read_bytes(ascii));

  fs::path out1 = work_dir() / "hi_out1.txt";
  fs::path out2 = work_dir() / "hi_out2.txt";
  CHECK(run_cli("--quiet romanize -i " + hindi_corpus().string() + " -o " +
                out1.string())
            .exit_code == 0);
  CHECK(run_cli("--quiet romanize -i " + hindi_corpus().string() + " -o " +
                out2.string())
            .exit_code == 0);
  std::string bytes = read_bytes(out1);
  CHECK(bytes == read_bytes(out2));
  CHECK(bytes.find("janak") != std::string::npos);
  // Romanized output is ASCII only.
  for (unsigned char c : bytes) CHECK(c < 128);
}

TEST_CASE("romanize usage errors produce JSON records and exit 1") {
  CmdResult r = run_cli("romanize --strategy borrow --text x");
  CHECK(r.exit_code == 1);
  json record = json::parse(r.err);
  CHECK(record.at("error").at("type") == "usage");
  CHECK(record.at("error")
            .at("message")
            .get<std::string>()
            .find("table") != std::string::npos);

  CHECK(run_cli("romanize").exit_code == 1);  // neither --input nor --text
  CHECK(run_cli("").exit_code == 1);          // no subcommand
  CHECK(run_cli("romanize --text x --no-such-flag").exit_code == 1);
  CHECK(run_cli("--format yaml romanize --text x").exit_code == 1);
}

TEST_CASE("missing input file is a data error with exit 2") {
  CmdResult r = run_cli("romanize --input " +
                        (work_dir() / "no_such.txt").string());
  CHECK(r.exit_code == 2);
  CHECK(json::parse(r.err).at("error").at("type") == "data");
}

TEST_CASE("ROMANKIT_TABLE_DIR override is honored") {
  // A bogus table directory breaks the universal strategy…
  fs::path out = work_dir() / "env_probe";
  std::string command = "ROMANKIT_TABLE_DIR=/nonexistent " +
                        std::string(RK_CLI_PATH) +
                        " romanize --text 'जल' > " + out.string() + " 2>&1";
  int rc = std::system(command.c_str());
  CHECK(WEXITSTATUS(rc) == 2);
  // …and pointing it at the shipped tables restores the default behavior.
  command = "ROMANKIT_TABLE_DIR='" + std::string(RK_SOURCE_DIR) +
            "/data/tables' " + std::string(RK_CLI_PATH) +
            " romanize --text 'जल' > " + out.string() + " 2>/dev/null";
  rc = std::system(command.c_str());
  CHECK(WEXITSTATUS(rc) == 0);
  CHECK(read_bytes(out) == "jal\n");
}

TEST_CASE("rand-map is seed-deterministic and format-aware") {
  CmdResult a = run_cli("--seed 7 rand-map --range 0x905:0x90A");
  CmdResult b = run_cli("--seed 7 rand-map --range 0x905:0x90A");
  CmdResult c = run_cli("--seed 8 rand-map --range 0x905:0x90A");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  json report = json::parse(a.out);
  CHECK(report.at("artifact") == "romankit-rand-map");
  CHECK(report.at("seed") == 7);
  CHECK(report.at("entries").size() == 6);
  for (const auto& entry : report.at("entries")) {
    std::string target = entry.at("target").get<std::string>();
    REQUIRE(target.size() == 1);
    CHECK(target[0] >= 'a');
    CHECK(target[0] <= 'z');
  }

  CmdResult csv = run_cli("--seed 7 --format csv rand-map --text 'अ'");
  CHECK(csv.out.rfind("codepoint,source,target\nU+0905,अ,", 0) == 0);

  // ASCII codepoints map to themselves, so they are not part of the dump.
  CmdResult ascii = run_cli("rand-map --text 'abc'");
  CHECK(json::parse(ascii.out).at("entries").empty());

  CHECK(run_cli("rand-map").exit_code == 1);
  CHECK(run_cli("rand-map --range 12").exit_code == 1);
  CHECK(run_cli("rand-map --range 0x40:0x20").exit_code == 1);
}

TEST_CASE("train / tokenize / metrics round trip") {
  fs::path vocab = work_dir() / "own.vocab";
  CmdResult train = run_cli("train-tokenizer --input " +
                            hindi_corpus().string() + " --output " +
                            vocab.string() + " --vocab-size 40");
  CHECK(train.exit_code == 0);
  json summary = json::parse(train.out);
  CHECK(summary.at("artifact") == "romankit-train-summary");
  CHECK(summary.at("vocab_size").get<int>() <= 40);
  CHECK(summary.at("vocab_size").get<int>() > 13);  // specials + alphabet
  CHECK(fs::exists(vocab));
  CHECK(fs::exists(vocab.string() + ".json"));

  CmdResult tok = run_cli("--quiet tokenize --vocab " + vocab.string() +
                          " --text 'जनक जल'");
  CHECK(tok.exit_code == 0);
  CHECK(tok.out.find("[UNK]") == std::string::npos);

  CmdResult metrics = run_cli("metrics --vocab " + vocab.string() +
                              " --input " + hindi_corpus().string());
  CHECK(metrics.exit_code == 0);
  json m = json::parse(metrics.out);
  CHECK(m.at("counts").at("total_words") == 19);
  CHECK(m.at("pct_unk") == 0.0);
  CHECK(m.at("model_digest") == summary.at("model_digest"));

  CmdResult metrics_csv = run_cli("--format csv metrics --vocab " +
                                  vocab.string() + " --input " +
                                  hindi_corpus().string());
  CHECK(metrics_csv.out.rfind("pct_unk,fertility,", 0) == 0);
}

TEST_CASE("overlap identity and disjoint cases through the CLI") {
  fs::path vocab = work_dir() / "ov.vocab";
  write_bytes(vocab, "[UNK]\na\nb\n##c\n");
  CmdResult identity = run_cli("overlap --new " + vocab.string() +
                               " --base " + vocab.string());
  CHECK(identity.exit_code == 0);
  CHECK(json::parse(identity.out).at("overlap_ratio") == 1.0);

  fs::path disjoint = work_dir() / "ov_disjoint.vocab";
  write_bytes(disjoint, "x\ny\nz\n");
  CmdResult none = run_cli("overlap --new " + vocab.string() + " --base " +
                           disjoint.string());
  CHECK(json::parse(none.out).at("overlap_ratio") == 0.0);

  CmdResult csv = run_cli("--format csv overlap --new " + vocab.string() +
                          " --base " + disjoint.string());
  CHECK(csv.out.rfind("token,new_id,directive,", 0) == 0);
}

TEST_CASE("sample subcommand honors seed, n, and full") {
  fs::path nums = work_dir() / "nums.txt";
  std::string bytes;
  for (int i = 0; i < 10; ++i) bytes += "s" + std::to_string(i) + "\n";
  write_bytes(nums, bytes);

  CmdResult r = run_cli("--quiet --seed 42 sample --input " + nums.string() +
                        " --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "s3\ns2\ns4\n");

  CmdResult full = run_cli("--quiet sample --input " + nums.string() +
                           " --full");
  CHECK(full.out == bytes);

  CHECK(run_cli("sample --input " + nums.string()).exit_code == 1);
  CHECK(run_cli("sample --input " + nums.string() + " --n 2 --full")
            .exit_code == 1);
}

TEST_CASE("pipeline writes artifacts, prints the report, and is "
          "deterministic") {
  fs::path out1 = work_dir() / "pipe1";
  fs::path out2 = work_dir() / "pipe2";
  std::string common = " --input " + hindi_corpus().string() +
                       " --label hindi --vocab-size 40 --base-vocab " +
                       latin_base_vocab().string() +
                       " --no-timestamp --output-dir ";
  CmdResult r1 = run_cli("--quiet pipeline" + common + out1.string() +
                         " --workers 1");
  CmdResult r2 = run_cli("--quiet pipeline" + common + out2.string() +
                         " --workers 4");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);

  json report = json::parse(r1.out);
  CHECK(report.at("artifact") == "romankit-pipeline-report");
  CHECK(json::parse(read_bytes(out1 / "report.json")) == report);

  // Byte-identical reports across worker counts.
  CHECK(r1.out == r2.out);
  for (const char* name :
       {"sampled.txt", "transformed.txt", "model.vocab", "model.vocab.json",
        "overlap_plan.json"}) {
    INFO(name);
    CHECK(read_bytes(out1 / name) == read_bytes(out2 / name));
  }

  // Base metrics capture the UNK collapse that motivates romanization.
  CHECK(report.at("base_metrics").at("pct_unk") == 0.0);

  CmdResult csv = run_cli("--quiet --format csv pipeline" + common +
                          (work_dir() / "pipe3").string());
  CHECK(csv.out.rfind("key,value\n", 0) == 0);
  CHECK(csv.out.find("/label,hindi\n") != std::string::npos);

  CmdResult missing = run_cli("pipeline --input " +
                              (work_dir() / "nope.txt").string() +
                              " --output-dir " +
                              (work_dir() / "pipe4").string());
  CHECK(missing.exit_code == 2);
  json err = json::parse(missing.err);
  CHECK(err.at("error").at("type") == "data");
  CHECK(err.at("error").at("stage") == "ingest");
}

TEST_CASE("compare refuses mismatched corpora and diffs matching ones") {
  fs::path before_dir = work_dir() / "cmp_before";
  fs::path after_dir = work_dir() / "cmp_after";
  std::string base = latin_base_vocab().string();
  CHECK(run_cli("--quiet pipeline --input " + hindi_corpus().string() +
                " --label hindi --no-transform --vocab-size 40 "
                "--base-vocab " + base + " --no-timestamp --output-dir " +
                before_dir.string())
            .exit_code == 0);
  CHECK(run_cli("--quiet pipeline --input " + hindi_corpus().string() +
                " --label hindi --vocab-size 40 --base-vocab " + base +
                " --no-timestamp --output-dir " + after_dir.string())
            .exit_code == 0);

  CmdResult delta = run_cli("compare --before " +
                            (before_dir / "report.json").string() +
                            " --after " +
                            (after_dir / "report.json").string());
  CHECK(delta.exit_code == 0);
  json d = json::parse(delta.out);
  CHECK(d.at("base_metrics").at("delta").at("pct_unk").get<double>() < 0.0);

  CmdResult plot = run_cli("--format csv compare --before " +
                           (before_dir / "report.json").string() +
                           " --after " +
                           (after_dir / "report.json").string());
  CHECK(plot.out.rfind("language,metric,before,after\n", 0) == 0);
  CHECK(plot.out.find("hindi,base_pct_unk,1,0\n") != std::string::npos);

  // A report over a different corpus is refused with both digests named.
  fs::path other = work_dir() / "other.txt";
  write_bytes(other, "जल\n");
  fs::path other_dir = work_dir() / "cmp_other";
  CHECK(run_cli("--quiet pipeline --input " + other.string() +
                " --vocab-size 20 --no-timestamp --output-dir " +
                other_dir.string())
            .exit_code == 0);
  CmdResult refuse = run_cli("compare --before " +
                             (before_dir / "report.json").string() +
                             " --after " +
                             (other_dir / "report.json").string());
  CHECK(refuse.exit_code == 2);
  json err = json::parse(refuse.err);
  CHECK(err.at("error").at("stage") == "compare");
  std::string message = err.at("error").at("message").get<std::string>();
  std::string before_digest = json::parse(read_bytes(
      before_dir / "report.json"))["corpus"]["input_digest"];
  std::string other_digest = json::parse(read_bytes(
      other_dir / "report.json"))["corpus"]["input_digest"];
  CHECK(message.find(before_digest) != std::string::npos);
  CHECK(message.find(other_digest) != std::string::npos);

  // Unparseable report files are data errors.
  fs::path junk = work_dir() / "junk.json";
  write_bytes(junk, "{not json");
  CHECK(run_cli("compare --before " + junk.string() + " --after " +
                junk.string())
            .exit_code == 2);
}

TEST_CASE("--quiet silences notes; without it notes go to stderr") {
  CmdResult loud = run_cli("romanize --input " + hindi_corpus().string() +
                           " --output " + (work_dir() / "loud.txt").string());
  CHECK(loud.exit_code == 0);
  CHECK(loud.err.find("romanized 8 sentences") != std::string::npos);
  CmdResult quiet = run_cli("--quiet romanize --input " +
                            hindi_corpus().string() + " --output " +
                            (work_dir() / "quiet.txt").string());
  CHECK(quiet.err.empty());
}

TEST_CASE("--help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("pipeline --help").exit_code == 0);
}
