// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "ged/cli.h"
#include "ged/dataset.h"
#include "ged/digest.h"
#include "ged/evaluation.h"
#include "ged/injection.h"
#include "ged/synthetic.h"

namespace fs = std::filesystem;
using namespace ged;

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> Forms(const ParsedSentence& s) {
  std::vector<std::string> out;
  for (const Token& t : s.tokens) out.push_back(t.form);
  return out;
}

const std::vector<ParsedSentence>& Corpus() {
  static const std::vector<ParsedSentence> corpus = [] {
    SyntheticCorpusOptions options;
    options.sentences = 20000;
    return GenerateSyntheticCorpus(options);
  }();
  return corpus;
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

Verdict InjectionSoundness() {
  const auto start = Clock::now();
  std::unordered_map<std::string, const ParsedSentence*> by_id;
  for (const ParsedSentence& s : Corpus()) by_id[s.id] = &s;
  GenerationResult r = Generate(Corpus(), {}, {}, 42);
  const std::set<std::string> inventory = {"at", "about", "to", "in", "with"};
  std::size_t violations = 0;
  for (const InjectionOutcome& o : r.outcomes) {
    const ParsedSentence& source = *by_id.at(o.source_id);
    const auto errors = std::count_if(o.labeled.labels.begin(),
                                      o.labeled.labels.end(),
                                      [](const std::string& l) { return l != "C"; });
    bool ok = errors == 1;
    ok = ok && RestoreSourceForms(o) == Forms(source);
    ok = ok && source.size() >= 4 && source.size() <= 25;
    if (o.edit.op == EditRecord::Op::kInsert) {
      ok = ok && inventory.count(Lower(o.edit.replacement.value_or(""))) == 1;
    }
    if (o.error_type == ErrorType::kPrepInfinitive) {
      ok = ok && Lower(o.edit.replacement.value_or("")) == "for";
    }
    violations += !ok;
  }
  const double seconds = Seconds(start);
  std::ostringstream d;
  d << r.outcomes.size() << " outcomes, " << violations << " violations, "
    << seconds << " s";
  return {r.outcomes.size() >= 10000 && violations == 0 && seconds < 60.0,
          d.str()};
}

Verdict VerbListDiscipline() {
  const auto start = Clock::now();
  GenerationResult r = Generate(Corpus(), {}, {}, 42);
  std::unordered_map<std::string, const InjectionOutcome*> by_id;
  for (const auto& o : r.outcomes) by_id[o.labeled.sentence.id] = &o;
  const VerbLists lists;
  std::size_t violations = 0;
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    DatasetSplit split =
        BuildPseudoSplit(r.outcomes, Corpus(), SamplingPlan::PseudoPow2(seed));
    std::set<std::string> train_verbs, eval_verbs;
    auto verb_rule = [](const InjectionOutcome& o) {
      return o.error_type == ErrorType::kTransVerbPrep ||
             o.error_type == ErrorType::kIntransVerbObj;
    };
    for (const auto& [size, ids] : split.train_sets) {
      for (const std::string& id : ids) {
        const InjectionOutcome& o = *by_id.at(id);
        if (!verb_rule(o)) continue;
        ++checked;
        const bool listed = lists.transitive_train.count(o.anchor_lemma) ||
                            lists.intransitive_train.count(o.anchor_lemma);
        violations += !listed;
        train_verbs.insert(o.anchor_lemma);
      }
    }
    for (const auto* ids : {&split.dev, &split.test}) {
      for (const std::string& id : *ids) {
        auto it = by_id.find(id);
        if (it == by_id.end() || !verb_rule(*it->second)) continue;
        ++checked;
        const InjectionOutcome& o = *it->second;
        const bool listed = lists.transitive_test.count(o.anchor_lemma) ||
                            lists.intransitive_test.count(o.anchor_lemma);
        violations += !listed;
        eval_verbs.insert(o.anchor_lemma);
      }
    }
    for (const std::string& v : train_verbs) violations += eval_verbs.count(v);
  }
  std::ostringstream d;
  d << checked << " verb-list assignments over 5 splits, " << violations
    << " violations, " << Seconds(start) << " s";
  return {violations == 0 && checked > 0, d.str()};
}

Verdict SplitShape() {
  GenerationResult r = Generate(Corpus(), {}, {}, 42);
  DatasetSplit split =
      BuildPseudoSplit(r.outcomes, Corpus(), SamplingPlan::PseudoPow2(42));
  auto data = MaterializePseudo(split, r.outcomes, Corpus());
  std::size_t error_free = 0;
  for (const auto& s : data.at("test")) {
    error_free += std::all_of(s.labels.begin(), s.labels.end(),
                              [](const std::string& l) { return l == "C"; });
  }
  std::map<std::string, std::size_t> dev_types;
  for (const auto& s : data.at("dev")) {
    if (s.error_type) ++dev_types[std::string(ErrorTypeName(*s.error_type))];
  }
  bool balanced = dev_types.size() == 5;
  for (const auto& [type, n] : dev_types) balanced = balanced && n == 200;
  const std::size_t k1 = split.train_sets.at(2).size();
  std::ostringstream d;
  d << "dev " << split.dev.size() << ", test " << split.test.size() << " ("
    << error_free << " error-free), smallest train " << k1;
  return {split.dev.size() == 1000 && split.test.size() == 1200 &&
              error_free == 200 && k1 == 10 && balanced,
          d.str()};
}

LabeledSentence Flat(const std::string& id, std::vector<std::string> labels) {
  ParsedSentence s;
  s.id = id;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    s.tokens.push_back(Token{static_cast<int>(i) + 1, "w", "w", "X",
                             i == 0 ? 0 : 1, i == 0 ? "root" : "dep"});
  }
  LabeledSentence l = LabelAllCorrect(std::move(s), LabelScheme::Typed());
  l.labels = std::move(labels);
  return l;
}

Verdict MetricOracle() {
  const LabelScheme typed = LabelScheme::Typed();
  const std::vector<std::string>& labels = typed.labels();
  std::mt19937 gen(99);
  std::vector<LabeledSentence> pred, gold;
  std::map<std::string, Counts> tally;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(gen() % 15);
    std::vector<std::string> p, g;
    for (int k = 0; k < n; ++k) {
      g.push_back(gen() % 3 ? "C" : labels[gen() % labels.size()]);
      p.push_back(gen() % 3 ? g.back() : labels[gen() % labels.size()]);
      if (p.back() == g.back()) {
        if (g.back() != "C") ++tally[g.back()].tp;
      } else {
        if (p.back() != "C") ++tally[p.back()].fp;
        if (g.back() != "C") ++tally[g.back()].fn;
      }
    }
    pred.push_back(Flat("p" + std::to_string(i), p));
    gold.push_back(Flat("p" + std::to_string(i), g));
  }
  MetricsReport report = ComputePrf(Score(pred, gold));
  bool exact = true;
  Counts micro;
  for (std::size_t k = 1; k < labels.size(); ++k) {
    const Counts& want = tally[labels[k]];
    micro.tp += want.tp;
    micro.fp += want.fp;
    micro.fn += want.fn;
    exact = exact && report.counts.at(labels[k]) == want;
    const double p = want.tp + want.fp ? double(want.tp) / (want.tp + want.fp) : 0.0;
    const double r = want.tp + want.fn ? double(want.tp) / (want.tp + want.fn) : 0.0;
    const double f = p + r > 0 ? 2 * p * r / (p + r) : 0.0;
    const Prf& got = report.per_label.at(labels[k]);
    exact = exact && got.precision == p && got.recall == r && got.f1 == f;
  }
  exact = exact && report.micro_counts == micro;
  const Prf point = PrfFromCounts({100, 25, 100});
  const bool anchor = point.precision == 0.8 && point.recall == 0.5;
  std::ostringstream d;
  d << "1000 random pairs " << (exact ? "match" : "MISMATCH")
    << " the tally; tp=100 fp=25 fn=100 -> P=" << FormatDouble(point.precision)
    << " R=" << FormatDouble(point.recall);
  return {exact && anchor, d.str()};
}

int Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = RunCli(args, out, err);
  if (status != 0) {
    std::cerr << "command failed:";
    for (const std::string& a : args) std::cerr << ' ' << a;
    std::cerr << "\n" << err.str();
  }
  return status;
}

// Digest of every regular file below `dir`, keyed by relative path.
std::map<std::string, std::string> TreeDigests(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) {
      out[fs::relative(e.path(), dir).generic_string()] =
          Sha256File(e.path().string());
    }
  }
  return out;
}

struct DeterminismResult {
  Verdict verdict;
  fs::path pipeline_dir;
};

DeterminismResult Determinism(const fs::path& work) {
  const auto start = Clock::now();
  const std::string corpus = (work / "corpus.conllu").string();
  std::ofstream(corpus) << WriteConllu(Corpus());

  // Both runs use identical arguments, including output locations; the first
  // run's tree is moved aside before the second run starts.
  const fs::path d = work / "run";
  const std::string s = d.string();
  auto run_all = [&] {
    return Cli({"inject", "--in", corpus, "--out", s + "/inject", "--seed",
                "42"}) == 0 &&
           Cli({"split", "--plan", "pseudo_pow2", "--in",
                s + "/inject/outcomes.jsonl", "--error-free", corpus, "--out",
                s + "/split", "--seed", "42"}) == 0 &&
           Cli({"train-baseline", "--train", s + "/split/train_1024.jsonl",
                "--dev", s + "/split/dev.jsonl", "--out",
                s + "/model/model.json", "--seed", "42"}) == 0 &&
           Cli({"pipeline", "--in", corpus, "--out", s + "/pipeline", "--seed",
                "42", "--seeds", "5", "--epochs", "10", "--threads", "4"}) == 0;
  };
  if (!run_all()) return {{false, "first run failed"}, {}};
  fs::rename(d, work / "first");
  if (!run_all()) return {{false, "second run failed"}, {}};

  bool all_equal = true;
  std::ostringstream detail;
  for (const char* stage : {"inject", "split", "model", "pipeline"}) {
    const auto a = TreeDigests(work / "first" / stage);
    const auto b = TreeDigests(work / "run" / stage);
    const bool equal = a == b && !a.empty();
    all_equal = all_equal && equal;
    detail << stage << (equal ? " identical" : " DIFFERS") << " ("
           << a.size() << " files); ";
  }
  detail << Seconds(start) << " s";
  return {{all_equal, detail.str()}, work / "run" / "pipeline"};
}

Verdict BaselineScaling(const fs::path& pipeline_dir) {
  if (pipeline_dir.empty()) return {false, "pipeline output unavailable"};
  std::ifstream in(pipeline_dir / "curve.csv");
  std::stringstream text;
  text << in.rdbuf();
  std::map<std::string, std::map<std::size_t, double>> f1;
  for (const CurveRow& row : ParseCurve(text.str())) {
    f1[row.label][row.train_size] = row.values.f1.mean;
  }
  int improved = 0;
  std::ostringstream d;
  for (ErrorType type : kAllErrorTypes) {
    const auto& by_size = f1[TypedLabel(type)];
    const double small = by_size.count(2) ? by_size.at(2) : 0.0;
    const double large = by_size.count(1024) ? by_size.at(1024) : 0.0;
    improved += large > small;
    d << ErrorTypeName(type) << " " << FormatDouble(std::round(small * 1000) / 1000)
      << "->" << FormatDouble(std::round(large * 1000) / 1000) << "; ";
  }
  d << improved << "/5 improve";
  return {improved >= 4, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  fs::path work = argc > 1 ? fs::path(argv[1])
                           : fs::temp_directory_path() / "gedkit_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);

  bool all = true;
  auto report = [&](const std::string& name, const Verdict& v) {
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << name << ": " << v.detail
              << std::endl;
  };
  report("injection soundness", InjectionSoundness());
  report("verb-list discipline", VerbListDiscipline());
  report("split shape", SplitShape());
  report("metric oracle", MetricOracle());
  const auto scaling_start = Clock::now();
  DeterminismResult det = Determinism(work);
  report("determinism", det.verdict);
  Verdict scaling = BaselineScaling(det.pipeline_dir);
  scaling.detail += "; " + std::to_string(Seconds(scaling_start)) +
                    " s including the full pipeline runs";
  report("baseline scaling", scaling);
  return all ? 0 : 1;
}
