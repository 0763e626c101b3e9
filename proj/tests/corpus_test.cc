#include <doctest.h>

#include <sstream>

#include "ged/corpus.h"
#include "ged/synthetic.h"
#include "test_support.h"

using namespace ged;
using ged::testing::Sentence;

namespace {

ConlluParseResult Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseConllu(in, "mem.conllu");
}

}  // namespace

TEST_CASE("minimal block parses with root at the noun") {
  auto r = Parse(
      "1\tThe\tthe\tDET\t_\t_\t2\tdet\t_\t_\n"
      "2\tdog\tdog\tNOUN\t_\t_\t0\troot\t_\t_\n\n");
  REQUIRE(r.diagnostics.empty());
  REQUIRE(r.sentences.size() == 1);
  const ParsedSentence& s = r.sentences[0];
  CHECK(s.size() == 2);
  CHECK(s.at(2).head == 0);
  CHECK(s.at(1).head == 2);
  CHECK(s.id == "mem.conllu:1");
}

TEST_CASE("bad head column rejects one sentence and parsing continues") {
  auto r = Parse(
      "# sent_id = bad\n"
      "1\tThe\tthe\tDET\t_\t_\tx\tdet\t_\t_\n"
      "2\tdog\tdog\tNOUN\t_\t_\t0\troot\t_\t_\n\n"
      "# sent_id = good\n"
      "1\tDogs\tdog\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
      "2\tbark\tbark\tVERB\t_\t_\t0\troot\t_\t_\n");
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].sentence_id == "bad");
  REQUIRE(r.sentences.size() == 1);
  CHECK(r.sentences[0].id == "good");
}

TEST_CASE("wrong column count and cycles are rejected") {
  auto r = Parse(
      "1\tThe\tthe\tDET\t_\t_\t2\tdet\t_\n\n"
      "1\ta\ta\tX\t_\t_\t2\tdep\t_\t_\n"
      "2\tb\tb\tX\t_\t_\t1\tdep\t_\t_\n\n");
  CHECK(r.sentences.empty());
  CHECK(r.diagnostics.size() == 2);
}

TEST_CASE("multiword ranges and empty nodes are skipped") {
  auto r = Parse(
      "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdo\tdo\tAUX\t_\t_\t3\taux\t_\t_\n"
      "2\tn't\tnot\tPART\t_\t_\t3\tadvmod\t_\t_\n"
      "3\tgo\tgo\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3.1\tgone\tgo\tVERB\t_\t_\t_\t_\t_\t_\n");
  REQUIRE(r.sentences.size() == 1);
  CHECK(r.sentences[0].size() == 3);
}

TEST_CASE("thousand-sentence corpus round-trips through CoNLL-U") {
  SyntheticCorpusOptions options;
  options.sentences = 1000;
  const std::vector<ParsedSentence> corpus = GenerateSyntheticCorpus(options);
  auto r = Parse(WriteConllu(corpus));
  CHECK(r.diagnostics.empty());
  REQUIRE(r.sentences.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ParsedSentence expected = corpus[i];
    expected.source = r.sentences[i].source;
    CHECK(r.sentences[i] == expected);
  }
}

TEST_CASE("validate reports tree violations") {
  const ParsedSentence good = Sentence(
      "g", {"The the DET 2 det", "cat cat NOUN 3 nsubj", "sat sit VERB 0 root",
            "down down ADV 3 advmod", ". . PUNCT 3 punct"});
  CHECK(Validate(good).empty());

  const ParsedSentence two_roots =
      Sentence("r", {"a a X 0 root", "b b X 0 root"});
  CHECK(Validate(two_roots) == std::vector<std::string>{"multiple roots"});

  const ParsedSentence cycle =
      Sentence("c", {"a a X 2 dep", "b b X 1 dep", "c c X 0 root"});
  CHECK(Validate(cycle) == std::vector<std::string>{"cyclic heads"});
}

TEST_CASE("labeled JSON lines") {
  CHECK(SerializeLabeled({}).empty());

  const ParsedSentence s =
      Sentence("s1", {"Dogs dog NOUN 2 nsubj", "bark bark VERB 0 root"});
  const LabeledSentence all_c = LabelAllCorrect(s, LabelScheme::Typed());
  const std::string line = SerializeLabeledLine(all_c);
  CHECK(line.find("\"labels\":[\"C\",\"C\"]") != std::string::npos);
  CHECK(line.find("\"id\":\"s1\"") == 1);

  LabeledSentence typed = all_c;
  typed.labels[0] = TypedLabel(ErrorType::kPrepSubject);
  typed.error_type = ErrorType::kPrepSubject;
  typed.edit = EditRecord{EditRecord::Op::kInsert, 1, std::nullopt, "In",
                          std::nullopt};
  std::istringstream in(SerializeLabeled({typed, all_c}));
  const std::vector<LabeledSentence> back = ReadLabeled(in);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == typed);
  CHECK(back[1] == all_c);

  LabeledSentence binary = ToBinary(typed);
  CHECK(binary.labels[0] == "E");
  CHECK_THROWS_AS(SerializeLabeled({typed, binary}), ContractError);
}

TEST_CASE("label schemes") {
  CHECK(LabelScheme::Binary().labels() == std::vector<std::string>{"C", "E"});
  CHECK(LabelScheme::Typed().labels().size() == 6);
  CHECK(LabelScheme::Typed().labels().front() == "C");
  for (ErrorType t : kAllErrorTypes) {
    CHECK(ErrorTypeOfLabel(TypedLabel(t)) == t);
    CHECK(ParseErrorType(ErrorTypeName(t)) == t);
  }
  CHECK_FALSE(ErrorTypeOfLabel("E").has_value());
}
