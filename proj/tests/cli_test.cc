#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ged/cli.h"
#include "ged/corpus.h"
#include "ged/digest.h"
#include "ged/synthetic.h"

namespace fs = std::filesystem;
using namespace ged;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = RunCli(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path Workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "gedkit_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    SyntheticCorpusOptions options;
    options.sentences = 20000;
    std::ofstream(d / "corpus.conllu") << WriteConllu(GenerateSyntheticCorpus(options));
    return d;
  }();
  return dir;
}

std::string P(const fs::path& p) { return p.string(); }

}  // namespace

TEST_CASE("unknown subcommand and missing input fail cleanly") {
  CHECK(Cli({}).status != 0);
  CHECK(Cli({"frobnicate"}).status != 0);
  Run r = Cli({"inject", "--in", "/nonexistent.conllu", "--out", "/tmp/x"});
  CHECK(r.status != 0);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("inject, split, train, predict, score, curve, feedback") {
  const fs::path d = Workdir();
  Run inject = Cli({"inject", "--in", P(d / "corpus.conllu"), "--out",
                    P(d / "inj"), "--seed", "42"});
  REQUIRE(inject.status == 0);
  CHECK(fs::exists(d / "inj" / "outcomes.jsonl"));
  CHECK(fs::exists(d / "inj" / "summary.json"));
  CHECK(fs::exists(d / "inj" / "manifest.json"));

  Run split = Cli({"split", "--plan", "pseudo_pow2", "--in",
                   P(d / "inj" / "outcomes.jsonl"), "--error-free",
                   P(d / "corpus.conllu"), "--out", P(d / "split")});
  REQUIRE(split.status == 0);
  CHECK(fs::exists(d / "split" / "train_2.jsonl"));
  CHECK(fs::exists(d / "split" / "split.json"));

  Run train = Cli({"train-baseline", "--train", P(d / "split" / "train_64.jsonl"),
                   "--dev", P(d / "split" / "dev.jsonl"), "--out",
                   P(d / "model.json"), "--epochs", "3"});
  REQUIRE(train.status == 0);
  CHECK(fs::exists(d / "model.json.manifest.json"));
  CHECK(Cli({"train-baseline", "--train", P(d / "split" / "train_2.jsonl"),
             "--out", P(d / "m.json"), "--epochs", "11"})
            .status != 0);

  Run predict = Cli({"predict-baseline", "--model", P(d / "model.json"), "--in",
                     P(d / "split" / "test.jsonl"), "--out", P(d / "pred.jsonl")});
  REQUIRE(predict.status == 0);

  Run score = Cli({"score", "--pred", P(d / "pred.jsonl"), "--gold",
                   P(d / "split" / "test.jsonl"), "--out", P(d / "report.json"),
                   "--train-size", "64", "--seed", "42"});
  REQUIRE(score.status == 0);
  CHECK(score.out.find("\"micro\"") != std::string::npos);

  Run binary = Cli({"score", "--pred", P(d / "pred.jsonl"), "--gold",
                    P(d / "split" / "test.jsonl"), "--scheme", "binary"});
  REQUIRE(binary.status == 0);
  CHECK(binary.out.find("\"E\"") != std::string::npos);

  Run curve = Cli({"curve", "--report", P(d / "report.json"), "--out",
                   P(d / "curve.csv")});
  REQUIRE(curve.status == 0);
  std::ifstream csv(d / "curve.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "train_size,label,precision_mean,precision_std,recall_mean,recall_std,"
        "f1_mean,f1_std");
  CHECK(fs::exists(d / "curve.json"));

  Run feedback = Cli({"feedback", "--in", P(d / "pred.jsonl"), "--out",
                      P(d / "feedback.jsonl")});
  REQUIRE(feedback.status == 0);
  CHECK(fs::file_size(d / "feedback.jsonl") > 0);
}

TEST_CASE("re-running inject reproduces the manifest") {
  const fs::path d = Workdir();
  for (const char* name : {"a", "b"}) {
    REQUIRE(Cli({"inject", "--in", P(d / "corpus.conllu"), "--out",
                 P(d / "rep" / name), "--seed", "5", "--threads", "3"})
                .status == 0);
  }
  CHECK(Sha256File(P(d / "rep" / "a" / "manifest.json")) ==
        Sha256File(P(d / "rep" / "b" / "manifest.json")));
}

TEST_CASE("real ladder split from labeled input") {
  const fs::path d = Workdir();
  REQUIRE(Cli({"inject", "--in", P(d / "corpus.conllu"), "--out",
               P(d / "inj2")}).status == 0);
  Run split = Cli({"split", "--plan", "custom", "--sizes", "100,1000,all", "--in",
                   P(d / "inj2" / "outcomes.jsonl"), "--scheme", "binary",
                   "--out", P(d / "real")});
  REQUIRE(split.status == 0);
  CHECK(fs::exists(d / "real" / "train_100.jsonl"));
  CHECK(fs::exists(d / "real" / "train_1000.jsonl"));
  std::size_t train_files = 0;
  for (const auto& e : fs::directory_iterator(d / "real")) {
    train_files += e.path().filename().string().rfind("train_", 0) == 0;
  }
  CHECK(train_files == 3);
  CHECK(Cli({"split", "--plan", "custom", "--sizes", "10,x", "--in",
             P(d / "inj2" / "outcomes.jsonl"), "--out", P(d / "bad")})
            .status != 0);
}
