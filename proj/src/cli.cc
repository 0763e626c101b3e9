#include "ged/cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "ged/baseline.h"
#include "ged/dataset.h"
#include "ged/digest.h"
#include "ged/evaluation.h"
#include "ged/experiment.h"
#include "ged/feedback.h"
#include "ged/injection.h"
#include "ged/json_io.h"

namespace ged {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kDefaultSeed = 42;

void WriteFile(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot write " + path.string());
  out << content;
  if (!out) throw ContractError("write failed for " + path.string());
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Records config, input digests and output digests of one invocation.
// Output paths are stored relative to the manifest's directory.
class Manifest {
 public:
  explicit Manifest(std::string command) { j_["command"] = std::move(command); }

  // Members live in a vector, so do not hold on to this across insertions.
  Json& config() { return j_["config"]; }

  void Input(const std::string& path) {
    Json in;
    in["path"] = path;
    in["sha256"] = Sha256File(path);
    j_["inputs"].push_back(std::move(in));
  }

  void Output(const fs::path& path) { outputs_.push_back(path); }

  void Write(const fs::path& manifest_path) {
    const fs::path base = manifest_path.parent_path();
    Json outputs = Json::array();
    for (const fs::path& p : outputs_) {
      Json o;
      o["path"] = fs::relative(p, base.empty() ? fs::path(".") : base)
                      .generic_string();
      o["sha256"] = Sha256File(p.string());
      outputs.push_back(std::move(o));
    }
    if (!j_.contains("inputs")) j_["inputs"] = Json::array();
    j_["outputs"] = std::move(outputs);
    WriteFile(manifest_path, j_.dump(2) + "\n");
  }

 private:
  Json j_;
  std::vector<fs::path> outputs_;
};

fs::path SidecarManifest(const fs::path& out_file) {
  return fs::path(out_file.string() + ".manifest.json");
}

std::vector<ParsedSentence> ReadCorpora(const std::vector<std::string>& paths,
                                        std::ostream& err,
                                        std::size_t* rejected) {
  std::vector<ParsedSentence> corpus;
  for (const std::string& path : paths) {
    ConlluParseResult parsed = ParseConlluFile(path);
    for (const ConlluDiagnostic& d : parsed.diagnostics) {
      err << "warning: " << path << ":" << d.line << ": sentence "
          << d.sentence_id << " rejected: " << d.message << "\n";
    }
    if (rejected) *rejected += parsed.diagnostics.size();
    for (ParsedSentence& s : parsed.sentences) corpus.push_back(std::move(s));
  }
  return corpus;
}

std::vector<LabeledSentence> ReadInScheme(const std::string& path,
                                          const std::string& scheme) {
  std::vector<LabeledSentence> data = ReadLabeledFile(path);
  if (scheme.empty()) return data;
  auto kind = ParseSchemeKind(scheme);
  if (!kind) throw ContractError("unknown scheme '" + scheme + "'");
  for (LabeledSentence& s : data) {
    if (s.scheme.kind() == *kind) continue;
    if (*kind == SchemeKind::kTyped) {
      throw ContractError(path + ": binary labels cannot be read as typed");
    }
    s = ToBinary(std::move(s));
  }
  return data;
}

std::vector<LabeledSentence> Predictions(const LinearModel& model,
                                         const std::vector<LabeledSentence>& in) {
  std::vector<LabeledSentence> out;
  out.reserve(in.size());
  for (const LabeledSentence& s : in) out.push_back(Predict(model, s.sentence));
  return out;
}

Json ReportWithTags(const MetricsReport& report,
                    std::optional<std::size_t> train_size,
                    std::optional<std::uint64_t> seed) {
  Json j = Json::parse(ReportJson(report));
  if (train_size) j["train_size"] = *train_size;
  if (seed) j["seed"] = *seed;
  return j;
}

std::string DatasetFileName(const std::string& name) { return name + ".jsonl"; }

struct WrittenSplit {
  DatasetSplit split;
  std::map<std::string, std::vector<LabeledSentence>> datasets;
};

void WriteSplit(const fs::path& dir, const WrittenSplit& ws, Manifest& m) {
  for (const auto& [name, sentences] : ws.datasets) {
    const fs::path p = dir / DatasetFileName(name);
    WriteFile(p, SerializeLabeled(sentences));
    m.Output(p);
  }
  const fs::path manifest = dir / "split.json";
  WriteFile(manifest, ManifestJson(ws.split));
  m.Output(manifest);
}

WrittenSplit PseudoSplit(const std::vector<InjectionOutcome>& outcomes,
                         const std::vector<ParsedSentence>& error_free,
                         std::uint64_t seed) {
  WrittenSplit ws;
  ws.split = BuildPseudoSplit(outcomes, error_free,
                              SamplingPlan::PseudoPow2(seed));
  ws.datasets = MaterializePseudo(ws.split, outcomes, error_free);
  return ws;
}

WrittenSplit RealLadderSplit(const std::vector<LabeledSentence>& corpus,
                             const SamplingPlan& plan) {
  WrittenSplit ws;
  RealSplit real = SplitReal(corpus, plan.seed);
  ws.split = BuildRealSplit(real, plan);
  ws.datasets = MaterializeReal(ws.split, real);
  return ws;
}

std::vector<std::size_t> ParseSizes(const std::vector<std::string>& texts) {
  std::vector<std::size_t> sizes;
  for (const std::string& t : texts) {
    if (t == "all") {
      sizes.push_back(kAllSentences);
      continue;
    }
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || end != t.data() + t.size() || value == 0) {
      throw ContractError("bad ladder size '" + t + "'");
    }
    sizes.push_back(value);
  }
  return sizes;
}

SamplingPlan PlanFromFlags(const std::string& plan, std::uint64_t seed,
                           const std::vector<std::string>& size_texts) {
  const std::vector<std::size_t> sizes = ParseSizes(size_texts);
  auto kind = ParseLadderKind(plan);
  if (!kind) throw ContractError("unknown plan '" + plan + "'");
  switch (*kind) {
    case LadderKind::kPseudoPow2:
      return SamplingPlan::PseudoPow2(seed);
    case LadderKind::kRealLadder:
      return SamplingPlan::RealLadder(seed);
    case LadderKind::kCustom:
      return SamplingPlan::Custom(sizes, seed);
  }
  return SamplingPlan::PseudoPow2(seed);
}

// --- subcommands ---------------------------------------------------------

struct InjectFlags {
  std::vector<std::string> inputs;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

GenerationResult Inject(const InjectFlags& f, const fs::path& dir, Manifest& m,
                        std::ostream& err) {
  std::size_t rejected = 0;
  const std::vector<ParsedSentence> corpus = ReadCorpora(f.inputs, err, &rejected);
  GenerationResult result =
      Generate(corpus, VerbLists{}, PrepositionInventory{}, f.seed, f.threads);
  std::string lines;
  for (const InjectionOutcome& o : result.outcomes) {
    lines += SerializeOutcomeLine(o);
    lines += '\n';
  }
  WriteFile(dir / "outcomes.jsonl", lines);
  WriteFile(dir / "summary.json", SummaryJson(result.summary));
  m.Output(dir / "outcomes.jsonl");
  m.Output(dir / "summary.json");
  m.config()["rejected_sentences"] = rejected;
  return result;
}

int RunInject(const InjectFlags& f, std::ostream& out, std::ostream& err) {
  Manifest m("inject");
  m.config()["seed"] = f.seed;
  for (const std::string& p : f.inputs) m.Input(p);
  GenerationResult result = Inject(f, f.out, m, err);
  m.Write(fs::path(f.out) / "manifest.json");
  out << "injected " << result.outcomes.size() << " errors into "
      << result.summary.eligible << " eligible sentences\n";
  return 0;
}

struct SplitFlags {
  std::string plan;
  std::string input;
  std::vector<std::string> error_free;
  std::vector<std::string> sizes;
  std::string scheme;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
};

int RunSplit(const SplitFlags& f, std::ostream& out, std::ostream& err) {
  Manifest m("split");
  m.config()["plan"] = f.plan;
  m.config()["seed"] = f.seed;
  m.Input(f.input);
  const SamplingPlan plan = PlanFromFlags(f.plan, f.seed, f.sizes);
  WrittenSplit ws;
  if (plan.kind == LadderKind::kPseudoPow2) {
    if (f.error_free.empty()) {
      throw ContractError("pseudo_pow2 split needs --error-free CoNLL-U input");
    }
    for (const std::string& p : f.error_free) m.Input(p);
    std::vector<InjectionOutcome> outcomes = ReadOutcomesFile(f.input);
    std::vector<ParsedSentence> clean = ReadCorpora(f.error_free, err, nullptr);
    ws = PseudoSplit(outcomes, clean, f.seed);
  } else {
    ws = RealLadderSplit(ReadInScheme(f.input, f.scheme), plan);
  }
  WriteSplit(f.out, ws, m);
  m.Write(fs::path(f.out) / "manifest.json");
  out << "manifest_hash " << ws.split.manifest_hash << "\n";
  return 0;
}

struct TrainFlags {
  std::string train;
  std::string dev;
  std::string out;
  std::string scheme;
  int epochs = kMaxEpochs;
  std::uint64_t seed = kDefaultSeed;
};

int RunTrain(const TrainFlags& f, std::ostream& out, std::ostream&) {
  if (f.epochs < 1 || f.epochs > kMaxEpochs) {
    throw ContractError("--epochs must be between 1 and " +
                        std::to_string(kMaxEpochs));
  }
  Manifest m("train-baseline");
  m.config()["epochs"] = f.epochs;
  m.config()["seed"] = f.seed;
  m.Input(f.train);
  const std::vector<LabeledSentence> train = ReadInScheme(f.train, f.scheme);
  if (train.empty()) throw ContractError(f.train + ": no training sentences");
  std::string model_json;
  if (!f.dev.empty()) {
    m.Input(f.dev);
    const std::string scheme(train.front().scheme.name());
    TrainedDetector detector = TrainWithDevSelection(
        train, ReadInScheme(f.dev, scheme), f.epochs, f.seed);
    model_json = detector.model.ToJson();
    out << "best dev epoch " << detector.best_epoch << "\n";
  } else {
    model_json = Train(train, f.epochs, f.seed).ToJson();
  }
  WriteFile(f.out, model_json);
  m.Output(f.out);
  m.Write(SidecarManifest(f.out));
  return 0;
}

struct PredictFlags {
  std::string model;
  std::string input;
  std::string out;
};

int RunPredict(const PredictFlags& f, std::ostream&, std::ostream&) {
  Manifest m("predict-baseline");
  m.Input(f.model);
  m.Input(f.input);
  const LinearModel model = LinearModel::FromFile(f.model);
  // Gold labels in the input are ignored; only the sentences are read.
  std::vector<LabeledSentence> input = ReadLabeledFile(f.input);
  WriteFile(f.out, SerializeLabeled(Predictions(model, input)));
  m.Output(f.out);
  m.Write(SidecarManifest(f.out));
  return 0;
}

struct ScoreFlags {
  std::string pred;
  std::string gold;
  std::string scheme;
  std::string out;
  std::optional<std::size_t> train_size;
  std::optional<std::uint64_t> seed;
};

int RunScore(const ScoreFlags& f, std::ostream& out, std::ostream&) {
  std::vector<LabeledSentence> gold = ReadInScheme(f.gold, f.scheme);
  const std::string scheme = f.scheme.empty() && !gold.empty()
                                 ? std::string(gold.front().scheme.name())
                                 : f.scheme;
  std::vector<LabeledSentence> pred = ReadInScheme(f.pred, scheme);
  const MetricsReport report = ComputePrf(Score(pred, gold));
  const std::string json = ReportWithTags(report, f.train_size, f.seed).dump(2) + "\n";
  out << json;
  if (!f.out.empty()) {
    Manifest m("score");
    m.Input(f.pred);
    m.Input(f.gold);
    WriteFile(f.out, json);
    m.Output(f.out);
    m.Write(SidecarManifest(f.out));
  }
  return 0;
}

struct CurveFlags {
  std::vector<std::string> reports;
  std::string out;
};

int RunCurve(const CurveFlags& f, std::ostream& out, std::ostream&) {
  Manifest m("curve");
  std::map<std::size_t, std::vector<MetricsReport>> by_size;
  for (const std::string& path : f.reports) {
    m.Input(path);
    const std::string text = ReadFile(path);
    const Json j = Json::parse(text);
    if (!j.contains("train_size")) {
      throw ContractError(path + ": report has no train_size tag");
    }
    by_size[j.at("train_size").get<std::size_t>()].push_back(
        ReportFromJson(text));
  }
  std::vector<CurvePoint> points;
  for (auto& [size, runs] : by_size) points.push_back({size, Aggregate(runs)});
  const std::string csv = EmitCurve(points);
  if (f.out.empty()) {
    out << csv;
    return 0;
  }
  WriteFile(f.out, csv);
  const fs::path json_path = fs::path(f.out).replace_extension(".json");
  WriteFile(json_path, AggregateJson(points));
  m.Output(f.out);
  m.Output(json_path);
  m.Write(SidecarManifest(f.out));
  return 0;
}

struct FeedbackFlags {
  std::string input;
  std::string templates;
  std::string out;
};

int RunFeedback(const FeedbackFlags& f, std::ostream& out, std::ostream&) {
  Manifest m("feedback");
  m.Input(f.input);
  FeedbackTemplates templates = FeedbackTemplates::Defaults();
  if (!f.templates.empty()) {
    m.Input(f.templates);
    templates = FeedbackTemplates::FromFile(f.templates);
  }
  const std::string doc = SerializeAnnotations(
      Annotate(ReadLabeledFile(f.input, SchemeKind::kTyped), templates));
  if (f.out.empty()) {
    out << doc;
    return 0;
  }
  WriteFile(f.out, doc);
  m.Output(f.out);
  m.Write(SidecarManifest(f.out));
  return 0;
}

struct PipelineFlags {
  std::vector<std::string> inputs;
  std::string out;
  std::string plan = "pseudo_pow2";
  std::string scheme = "typed";
  int epochs = kMaxEpochs;
  int seeds = 5;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
};

int RunPipeline(const PipelineFlags& f, std::ostream& out, std::ostream& err) {
  auto scheme = ParseSchemeKind(f.scheme);
  if (!scheme) throw ContractError("unknown scheme '" + f.scheme + "'");
  if (f.epochs < 1 || f.epochs > kMaxEpochs) {
    throw ContractError("--epochs must be between 1 and " +
                        std::to_string(kMaxEpochs));
  }
  if (f.seeds < 1) throw ContractError("--seeds must be positive");
  const fs::path dir = f.out;
  Manifest m("pipeline");
  m.config()["plan"] = f.plan;
  m.config()["scheme"] = f.scheme;
  m.config()["epochs"] = f.epochs;
  m.config()["seeds"] = f.seeds;
  m.config()["seed"] = f.seed;
  for (const std::string& p : f.inputs) m.Input(p);

  const SamplingPlan plan = PlanFromFlags(f.plan, f.seed, {});
  WrittenSplit ws;
  if (plan.kind == LadderKind::kPseudoPow2) {
    std::size_t rejected = 0;
    std::vector<ParsedSentence> corpus = ReadCorpora(f.inputs, err, &rejected);
    GenerationResult generated =
        Generate(corpus, VerbLists{}, PrepositionInventory{}, f.seed);
    std::string lines;
    for (const InjectionOutcome& o : generated.outcomes) {
      lines += SerializeOutcomeLine(o) + "\n";
    }
    WriteFile(dir / "outcomes.jsonl", lines);
    WriteFile(dir / "summary.json", SummaryJson(generated.summary));
    m.Output(dir / "outcomes.jsonl");
    m.Output(dir / "summary.json");
    m.config()["rejected_sentences"] = rejected;
    ws = PseudoSplit(generated.outcomes, corpus, f.seed);
  } else {
    if (f.inputs.size() != 1) {
      throw ContractError("real_ladder pipeline takes one labeled JSON-lines input");
    }
    ws = RealLadderSplit(ReadInScheme(f.inputs.front(), ""), plan);
  }
  WriteSplit(dir / "split", ws, m);

  std::vector<std::size_t> sizes;
  for (const auto& [size, ids] : ws.split.train_sets) sizes.push_back(size);
  ExperimentConfig ec;
  ec.scheme = *scheme;
  ec.epochs = f.epochs;
  ec.seeds = f.seeds;
  ec.seed = f.seed;
  ec.threads = f.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                              : f.threads;
  ExperimentResult result = RunLadderExperiment(ws.datasets, sizes, ec);

  for (const JobResult& job : result.jobs) {
    const fs::path run_dir = dir / "runs" /
                             ("size_" + std::to_string(job.train_size) +
                              "_seed_" + std::to_string(job.seed));
    WriteFile(run_dir / "predictions.jsonl",
              SerializeLabeled(job.test_predictions));
    Json report = ReportWithTags(job.test_report, job.train_size, job.seed);
    report["best_epoch"] = job.best_epoch;
    WriteFile(run_dir / "report.json", report.dump(2) + "\n");
    m.Output(run_dir / "predictions.jsonl");
    m.Output(run_dir / "report.json");
  }
  WriteFile(dir / "curve.csv", EmitCurve(result.curve));
  WriteFile(dir / "curve.json", AggregateJson(result.curve));
  m.Output(dir / "curve.csv");
  m.Output(dir / "curve.json");
  m.Write(dir / "manifest.json");
  out << "pipeline finished: " << result.jobs.size() << " runs, curve at "
      << (dir / "curve.csv").string() << "\n";
  return 0;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Grammatical error detection toolkit: pseudo-error generation, "
               "dataset ladders, baseline detector, scoring and feedback"};
  app.name("gedkit");
  app.require_subcommand(1);

  InjectFlags inject;
  auto* inject_cmd = app.add_subcommand("inject", "Inject one error per eligible sentence");
  inject_cmd->add_option("--in", inject.inputs, "CoNLL-U input files")->required()->check(CLI::ExistingFile);
  inject_cmd->add_option("--out", inject.out, "Output directory")->required();
  inject_cmd->add_option("--seed", inject.seed, "Random seed")->capture_default_str();
  inject_cmd->add_option("--threads", inject.threads, "Worker threads")->capture_default_str();

  SplitFlags split;
  auto* split_cmd = app.add_subcommand("split", "Build training ladders and fixed dev/test sets");
  split_cmd->add_option("--plan", split.plan, "pseudo_pow2 | real_ladder | custom")->required();
  split_cmd->add_option("--in", split.input, "Outcomes (pseudo) or labeled sentences (real)")->required()->check(CLI::ExistingFile);
  split_cmd->add_option("--error-free", split.error_free, "CoNLL-U source of error-free test sentences")->check(CLI::ExistingFile);
  split_cmd->add_option("--sizes", split.sizes, "Ladder sizes for --plan custom (\"all\" = whole train set)")->delimiter(',');
  split_cmd->add_option("--scheme", split.scheme, "binary | typed");
  split_cmd->add_option("--out", split.out, "Output directory")->required();
  split_cmd->add_option("--seed", split.seed, "Random seed")->capture_default_str();

  TrainFlags train;
  auto* train_cmd = app.add_subcommand("train-baseline", "Train the averaged-perceptron detector");
  train_cmd->add_option("--train", train.train, "Training JSON-lines")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--dev", train.dev, "Development JSON-lines for epoch selection")->check(CLI::ExistingFile);
  train_cmd->add_option("--out", train.out, "Model file")->required();
  train_cmd->add_option("--scheme", train.scheme, "binary | typed");
  train_cmd->add_option("--epochs", train.epochs, "Maximum epochs")->capture_default_str();
  train_cmd->add_option("--seed", train.seed, "Random seed")->capture_default_str();

  PredictFlags predict;
  auto* predict_cmd = app.add_subcommand("predict-baseline", "Label sentences with a trained model");
  predict_cmd->add_option("--model", predict.model, "Model file")->required()->check(CLI::ExistingFile);
  predict_cmd->add_option("--in", predict.input, "Input JSON-lines")->required()->check(CLI::ExistingFile);
  predict_cmd->add_option("--out", predict.out, "Prediction JSON-lines")->required();

  ScoreFlags score;
  std::size_t score_train_size = 0;
  std::uint64_t score_seed = 0;
  auto* score_cmd = app.add_subcommand("score", "Token-level precision, recall and F1");
  score_cmd->add_option("--pred", score.pred, "Predictions")->required()->check(CLI::ExistingFile);
  score_cmd->add_option("--gold", score.gold, "Gold labels")->required()->check(CLI::ExistingFile);
  score_cmd->add_option("--scheme", score.scheme, "binary | typed");
  score_cmd->add_option("--out", score.out, "Report JSON file");
  auto* ts_opt = score_cmd->add_option("--train-size", score_train_size, "Tag the report with a ladder size");
  auto* seed_opt = score_cmd->add_option("--seed", score_seed, "Tag the report with a training seed");

  CurveFlags curve;
  auto* curve_cmd = app.add_subcommand("curve", "Aggregate tagged reports into a scaling curve");
  curve_cmd->add_option("--report", curve.reports, "Report JSON files (tagged with train_size)")->required()->check(CLI::ExistingFile);
  curve_cmd->add_option("--out", curve.out, "Curve CSV (JSON mirror written alongside)");

  FeedbackFlags feedback;
  auto* feedback_cmd = app.add_subcommand("feedback", "Attach feedback comments to typed detections");
  feedback_cmd->add_option("--in", feedback.input, "Typed prediction JSON-lines")->required()->check(CLI::ExistingFile);
  feedback_cmd->add_option("--templates", feedback.templates, "Template file: error type -> text")->check(CLI::ExistingFile);
  feedback_cmd->add_option("--out", feedback.out, "Annotated JSON-lines");

  PipelineFlags pipeline;
  auto* pipeline_cmd = app.add_subcommand("pipeline", "inject -> split -> train/predict -> score -> curve");
  pipeline_cmd->add_option("--in", pipeline.inputs, "CoNLL-U (pseudo) or labeled JSON-lines (real)")->required()->check(CLI::ExistingFile);
  pipeline_cmd->add_option("--out", pipeline.out, "Output directory")->required();
  pipeline_cmd->add_option("--plan", pipeline.plan, "pseudo_pow2 | real_ladder")->capture_default_str();
  pipeline_cmd->add_option("--scheme", pipeline.scheme, "binary | typed")->capture_default_str();
  pipeline_cmd->add_option("--epochs", pipeline.epochs, "Maximum epochs")->capture_default_str();
  pipeline_cmd->add_option("--seeds", pipeline.seeds, "Training seeds per size")->capture_default_str();
  pipeline_cmd->add_option("--seed", pipeline.seed, "Base random seed")->capture_default_str();
  pipeline_cmd->add_option("--threads", pipeline.threads, "Parallel jobs (0 = all cores)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*inject_cmd) return RunInject(inject, out, err);
    if (*split_cmd) return RunSplit(split, out, err);
    if (*train_cmd) return RunTrain(train, out, err);
    if (*predict_cmd) return RunPredict(predict, out, err);
    if (*score_cmd) {
      if (*ts_opt) score.train_size = score_train_size;
      if (*seed_opt) score.seed = score_seed;
      return RunScore(score, out, err);
    }
    if (*curve_cmd) return RunCurve(curve, out, err);
    if (*feedback_cmd) return RunFeedback(feedback, out, err);
    if (*pipeline_cmd) return RunPipeline(pipeline, out, err);
  } catch (const std::exception& e) {
    err << "gedkit: error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("gedkit");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ged
