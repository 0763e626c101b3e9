#include <doctest.h>

#include <map>
#include <sstream>
#include <unordered_map>

#include "ged/injection.h"
#include "ged/synthetic.h"
#include "test_support.h"

using namespace ged;
using ged::testing::Forms;
using ged::testing::Join;
using ged::testing::Sentence;

namespace {

const ParsedSentence kRestaurant = Sentence(
    "restaurant",
    {"The the DET 2 det", "restaurant restaurant NOUN 3 nsubj",
     "serves serve VERB 0 root", "good good ADJ 5 amod",
     "food food NOUN 3 obj", ". . PUNCT 3 punct"});

const ParsedSentence kAgree = Sentence(
    "agree", {"We we PRON 2 nsubj", "agree agree VERB 0 root",
              "with with ADP 4 case", "it it PRON 2 obl", ". . PUNCT 2 punct"});

const ParsedSentence kDiscuss = Sentence(
    "discuss", {"We we PRON 2 nsubj", "discussed discuss VERB 0 root",
                "the the DET 4 det", "matter matter NOUN 2 obj",
                ". . PUNCT 2 punct"});

const ParsedSentence kBook = Sentence(
    "book", {"She she PRON 2 nsubj", "bought buy VERB 0 root",
             "a a DET 4 det", "book book NOUN 2 obj", "to to PART 6 mark",
             "read read VERB 4 acl", ". . PUNCT 2 punct"});

const ParsedSentence kLearning = Sentence(
    "learning", {"Learning learn VERB 4 csubj", "English English PROPN 1 obj",
                 "is be AUX 4 cop", "difficult difficult ADJ 0 root",
                 ". . PUNCT 4 punct"});

const ParsedSentence kDog = Sentence(
    "dog", {"The the DET 2 det", "dog dog NOUN 3 nsubj",
            "barks bark VERB 0 root", ". . PUNCT 3 punct"});

ParsedSentence Chain(int n) {
  std::vector<std::string> rows;
  for (int i = 1; i <= n; ++i) {
    rows.push_back("w w X " + std::to_string(i == n ? 0 : i + 1) +
                   (i == n ? " root" : " dep"));
  }
  return Sentence("chain" + std::to_string(n), rows);
}

std::vector<std::string> Labels(const InjectionOutcome& o) {
  return o.labeled.labels;
}

int NonCorrect(const LabeledSentence& s) {
  int n = 0;
  for (const std::string& l : s.labels) n += l != "C";
  return n;
}

const std::vector<ParsedSentence>& Corpus10k() {
  static const std::vector<ParsedSentence> corpus = [] {
    SyntheticCorpusOptions options;
    options.sentences = 10000;
    options.seed = 11;
    return GenerateSyntheticCorpus(options);
  }();
  return corpus;
}

}  // namespace

TEST_CASE("length filter boundaries") {
  CHECK_FALSE(Eligible(Chain(3)));
  CHECK(Eligible(Chain(4)));
  CHECK(Eligible(Chain(25)));
  CHECK_FALSE(Eligible(Chain(26)));
}

TEST_CASE("site finding on worked examples") {
  const VerbLists lists;
  auto trans = FindSites(kDiscuss, ErrorType::kTransVerbPrep, lists);
  REQUIRE(trans.size() == 1);
  CHECK(trans[0].anchor_index == 2);

  auto intrans = FindSites(kAgree, ErrorType::kIntransVerbObj, lists);
  REQUIRE(intrans.size() == 1);
  CHECK(intrans[0].anchor_index == 2);
  CHECK(intrans[0].aux_index == 3);

  CHECK(FindSites(kDog, ErrorType::kTransVerbPrep, lists).empty());
  CHECK(FindSites(kDog, ErrorType::kPrepSubject, lists).size() == 1);
}

TEST_CASE("subject insertion with sentence-start case repair") {
  auto sites = FindSites(kRestaurant, ErrorType::kPrepSubject, VerbLists{});
  REQUIRE(sites.size() == 1);
  bool saw_in = false;
  for (std::uint64_t seed = 0; seed < 64 && !saw_in; ++seed) {
    Rng rng(seed);
    InjectionOutcome o = Apply(kRestaurant, sites[0], rng);
    if (o.edit.replacement != "In") continue;
    saw_in = true;
    CHECK(Join(Forms(o.labeled.sentence)) ==
          "In the restaurant serves good food .");
    CHECK(Labels(o) == std::vector<std::string>{"E-PrepSubject", "C", "C",
                                                "C", "C", "C", "C"});
    CHECK(RestoreSourceForms(o) == Forms(kRestaurant));
  }
  CHECK(saw_in);
}

TEST_CASE("infinitival to becomes for") {
  auto sites = FindSites(kBook, ErrorType::kPrepInfinitive, VerbLists{});
  REQUIRE(sites.size() == 1);
  Rng rng(1);
  InjectionOutcome o = Apply(kBook, sites[0], rng);
  CHECK(Join(Forms(o.labeled.sentence)) == "She bought a book for read .");
  CHECK(o.labeled.labels[4] == "E-PrepInfinitive");
  CHECK(NonCorrect(o.labeled) == 1);
}

TEST_CASE("intransitive verb loses its preposition") {
  auto sites = FindSites(kAgree, ErrorType::kIntransVerbObj, VerbLists{});
  REQUIRE(sites.size() == 1);
  Rng rng(1);
  InjectionOutcome o = Apply(kAgree, sites[0], rng);
  CHECK(Join(Forms(o.labeled.sentence)) == "We agree it .");
  CHECK(Labels(o) ==
        std::vector<std::string>{"C", "E-IntransVerbObj", "C", "C"});
  CHECK(o.split_role == SplitRole::kTrainPool);
  CHECK(o.anchor_lemma == "agree");
  CHECK(Validate(o.labeled.sentence).empty());
}

TEST_CASE("gerund subject becomes a bare verb") {
  auto sites = FindSites(kLearning, ErrorType::kSubjectVerb, VerbLists{});
  REQUIRE(sites.size() == 1);
  Rng rng(1);
  InjectionOutcome o = Apply(kLearning, sites[0], rng);
  CHECK(Join(Forms(o.labeled.sentence)) == "Learn English is difficult .");
  CHECK(o.labeled.labels[0] == "E-SubjectVerb");
}

TEST_CASE("held-out verbs land in the evaluation pool") {
  ParsedSentence visit = kDiscuss;
  visit.tokens[1].form = "visited";
  visit.tokens[1].lemma = "visit";
  auto sites = FindSites(visit, ErrorType::kTransVerbPrep, VerbLists{});
  REQUIRE(sites.size() == 1);
  Rng rng(3);
  InjectionOutcome o = Apply(visit, sites[0], rng, {}, VerbLists{});
  CHECK(o.split_role == SplitRole::kEvalPool);
  CHECK(o.labeled.labels[2].rfind("E-TransVerbPrep", 0) == 0);
}

TEST_CASE("stale sites are rejected") {
  auto sites = FindSites(kAgree, ErrorType::kIntransVerbObj, VerbLists{});
  ParsedSentence mutated = kAgree;
  mutated.tokens[2].upos = "NOUN";
  Rng rng(1);
  CHECK_THROWS_AS(Apply(mutated, sites[0], rng), ContractError);
}

TEST_CASE("empty corpus yields nothing") {
  GenerationResult r = Generate({}, VerbLists{}, PrepositionInventory{}, 42);
  CHECK(r.outcomes.empty());
  CHECK(r.summary.eligible == 0);
}

TEST_CASE("generation is deterministic and thread-count independent") {
  const auto& corpus = Corpus10k();
  std::vector<ParsedSentence> head(corpus.begin(), corpus.begin() + 2000);
  auto dump = [](const GenerationResult& r) {
    std::string out;
    for (const auto& o : r.outcomes) out += SerializeOutcomeLine(o) + "\n";
    return out + SummaryJson(r.summary);
  };
  const std::string a = dump(Generate(head, {}, {}, 42, 1));
  CHECK(a == dump(Generate(head, {}, {}, 42, 1)));
  CHECK(a == dump(Generate(head, {}, {}, 42, 4)));
  CHECK(a != dump(Generate(head, {}, {}, 43, 1)));
}

TEST_CASE("per-type yields match an independent recount") {
  const auto& corpus = Corpus10k();
  const VerbLists lists;
  GenerationResult r = Generate(corpus, lists, {}, 42, 2);

  std::map<ErrorType, std::size_t> expected;
  std::size_t eligible = 0, no_site = 0;
  for (const ParsedSentence& s : corpus) {
    const int n = static_cast<int>(s.size());
    if (n < 4 || n > 25) continue;
    ++eligible;
    std::vector<ErrorType> applicable;
    for (ErrorType t : kAllErrorTypes) {
      for (std::size_t k = 0; k < FindSites(s, t, lists).size(); ++k) {
        applicable.push_back(t);
      }
    }
    if (applicable.empty()) {
      ++no_site;
      continue;
    }
    Rng rng(DeriveSeed(42, s.id));
    ++expected[applicable[UniformIndex(rng, applicable.size())]];
  }
  CHECK(r.summary.eligible == eligible);
  CHECK(r.summary.skipped_no_site == no_site);
  for (ErrorType t : kAllErrorTypes) {
    CAPTURE(ErrorTypeName(t));
    CHECK(r.summary.per_type_counts[t] == expected[t]);
    CHECK(expected[t] > 0);
  }
  std::map<ErrorType, std::size_t> tallied;
  for (const auto& o : r.outcomes) ++tallied[o.error_type];
  for (ErrorType t : kAllErrorTypes) CHECK(tallied[t] == expected[t]);
}

TEST_CASE("every outcome is sound and inverts to its source") {
  const auto& corpus = Corpus10k();
  std::unordered_map<std::string, const ParsedSentence*> by_id;
  for (const auto& s : corpus) by_id[s.id] = &s;
  GenerationResult r = Generate(corpus, {}, {}, 7);
  REQUIRE(r.outcomes.size() > 5000);
  const std::set<std::string> inventory = {"at", "about", "to", "in", "with"};
  std::size_t bad = 0;
  for (const InjectionOutcome& o : r.outcomes) {
    const ParsedSentence& source = *by_id.at(o.source_id);
    bool ok = NonCorrect(o.labeled) == 1 && Eligible(source) &&
              RestoreSourceForms(o) == Forms(source) &&
              ValidateLabeled(o.labeled).empty();
    if (o.edit.op == EditRecord::Op::kInsert) {
      std::string w = *o.edit.replacement;
      w[0] = static_cast<char>(std::tolower(w[0]));
      ok = ok && inventory.count(w) == 1;
    }
    if (o.error_type == ErrorType::kPrepInfinitive) {
      std::string w = o.edit.replacement.value_or("");
      w[0] = static_cast<char>(std::tolower(w[0]));
      ok = ok && w == "for";
    }
    if (!ok) {
      ++bad;
      MESSAGE("unsound outcome " << o.labeled.sentence.id);
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("outcome lines round-trip") {
  std::vector<ParsedSentence> head(Corpus10k().begin(),
                                   Corpus10k().begin() + 300);
  GenerationResult r = Generate(head, {}, {}, 5);
  std::string text;
  for (const auto& o : r.outcomes) text += SerializeOutcomeLine(o) + "\n";
  std::istringstream in(text);
  CHECK(ReadOutcomes(in) == r.outcomes);
}
