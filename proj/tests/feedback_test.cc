#include <doctest.h>

#include <random>

#include "ged/feedback.h"
#include "test_support.h"

using namespace ged;
using ged::testing::Sentence;

namespace {

LabeledSentence Discussed() {
  LabeledSentence s = LabelAllCorrect(
      Sentence("d", {"We we PRON 2 nsubj", "discussed discuss VERB 0 root",
                     "about about ADP 5 case", "the the DET 5 det",
                     "matter matter NOUN 2 obj", ". . PUNCT 2 punct"}),
      LabelScheme::Typed());
  s.labels[2] = "E-TransVerbPrep";
  return s;
}

}  // namespace

TEST_CASE("transitive verb comment") {
  auto doc = Annotate({Discussed()}, FeedbackTemplates::Defaults());
  REQUIRE(doc.size() == 1);
  REQUIRE(doc[0].comments.size() == 1);
  const FeedbackComment& c = doc[0].comments[0];
  CHECK(c.token_index == 3);
  CHECK(c.error_type == ErrorType::kTransVerbPrep);
  CHECK(c.comment.rfind("Transitive verbs do not take a preposition.", 0) == 0);
  CHECK(c.comment.find("\"about\"") != std::string::npos);
  CHECK(c.comment.find("\"discussed\"") != std::string::npos);
  CHECK(c.comment.find('{') == std::string::npos);
}

TEST_CASE("all-correct sentence gets no comments") {
  LabeledSentence s = Discussed();
  s.labels[2] = "C";
  auto doc = Annotate({s}, FeedbackTemplates::Defaults());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0].comments.empty());
  CHECK(SerializeAnnotations(doc) == "{\"id\":\"d\",\"comments\":[]}\n");
}

TEST_CASE("every type has a default template") {
  FeedbackTemplates t = FeedbackTemplates::Defaults();
  for (ErrorType type : kAllErrorTypes) {
    REQUIRE(t.Find(type) != nullptr);
    CHECK_FALSE(t.Find(type)->empty());
  }
}

TEST_CASE("random detections map to their own templates") {
  FeedbackTemplates t;
  for (ErrorType type : kAllErrorTypes) {
    t.Set(type, "marker:" + std::string(ErrorTypeName(type)));
  }
  std::mt19937 gen(5);
  std::vector<LabeledSentence> detections;
  std::size_t flagged = 0;
  for (int i = 0; i < 500; ++i) {
    LabeledSentence s = Discussed();
    s.sentence.id = "d" + std::to_string(i);
    for (std::string& l : s.labels) {
      l = gen() % 2 ? "C" : LabelScheme::Typed().labels()[1 + gen() % 5];
      flagged += l != "C";
    }
    detections.push_back(s);
  }
  auto doc = Annotate(detections, t);
  REQUIRE(doc.size() == detections.size());
  std::size_t comments = 0;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    CHECK(doc[i].id == detections[i].sentence.id);
    for (const FeedbackComment& c : doc[i].comments) {
      ++comments;
      CHECK(detections[i].labels[c.token_index - 1] == TypedLabel(c.error_type));
      CHECK(c.comment == "marker:" + std::string(ErrorTypeName(c.error_type)));
    }
  }
  CHECK(comments == flagged);
}

TEST_CASE("missing template and binary input fail") {
  FeedbackTemplates empty;
  CHECK_THROWS_AS(Annotate({Discussed()}, empty), ContractError);
  CHECK_THROWS_AS(Annotate({ToBinary(Discussed())}, FeedbackTemplates::Defaults()),
                  ContractError);
  CHECK_THROWS_AS(FeedbackTemplates::FromJson(R"({"Nope": "x"})"),
                  ContractError);
  CHECK_THROWS_AS(FeedbackTemplates::FromJson(R"({"PrepSubject": ""})"),
                  ContractError);
  FeedbackTemplates custom =
      FeedbackTemplates::FromJson(R"({"TransVerbPrep": "Drop {prep}."})");
  auto doc = Annotate({Discussed()}, custom);
  CHECK(doc[0].comments[0].comment == "Drop about.");
}
