#include "ged/feedback.h"

#include <fstream>
#include <sstream>

#include "ged/json_io.h"

namespace ged {
namespace {

void ReplaceAll(std::string& text, std::string_view key,
                const std::string& value) {
  for (std::size_t pos = text.find(key); pos != std::string::npos;
       pos = text.find(key, pos + value.size())) {
    text.replace(pos, key.size(), value);
  }
}

// Nearest token with `upos` scanning outward from `index`, left side first.
const Token* Nearest(const ParsedSentence& s, int index, std::string_view upos) {
  const int n = static_cast<int>(s.size());
  for (int d = 1; d < n; ++d) {
    if (index - d >= 1 && s.at(index - d).upos == upos) return &s.at(index - d);
    if (index + d <= n && s.at(index + d).upos == upos) return &s.at(index + d);
  }
  return nullptr;
}

struct Slots {
  std::string verb;
  std::string prep;
};

Slots ResolveSlots(const ParsedSentence& s, int index, ErrorType type) {
  const Token& flagged = s.at(index);
  Slots slots;
  switch (type) {
    case ErrorType::kTransVerbPrep:
    case ErrorType::kPrepSubject:
    case ErrorType::kPrepInfinitive: {
      slots.prep = flagged.form;
      const Token* verb = nullptr;
      if (type == ErrorType::kPrepInfinitive && flagged.head > 0 &&
          s.at(flagged.head).upos == "VERB") {
        verb = &s.at(flagged.head);
      } else if (type == ErrorType::kTransVerbPrep) {
        for (int i = index - 1; i >= 1 && !verb; --i) {
          if (s.at(i).upos == "VERB") verb = &s.at(i);
        }
      }
      if (!verb) verb = Nearest(s, index, "VERB");
      if (verb) slots.verb = verb->form;
      break;
    }
    case ErrorType::kSubjectVerb:
    case ErrorType::kIntransVerbObj: {
      slots.verb = flagged.form;
      if (const Token* prep = Nearest(s, index, "ADP")) slots.prep = prep->form;
      break;
    }
  }
  return slots;
}

}  // namespace

FeedbackTemplates FeedbackTemplates::Defaults() {
  FeedbackTemplates t;
  t.Set(ErrorType::kPrepInfinitive,
        "A to-infinitive is formed with \"to\" and the base form of a verb; "
        "other prepositions cannot introduce it. Use \"to\" instead of "
        "\"{prep}\" before \"{verb}\".");
  t.Set(ErrorType::kSubjectVerb,
        "A bare verb phrase cannot be the subject of a sentence. Turn "
        "\"{verb}\" into a to-infinitive or a gerund (-ing form).");
  t.Set(ErrorType::kPrepSubject,
        "The subject of a sentence does not take a preposition. Remove "
        "\"{prep}\" so that the noun phrase can act as the subject.");
  t.Set(ErrorType::kTransVerbPrep,
        "Transitive verbs do not take a preposition. Instead, they take a "
        "direct object. Remove \"{prep}\" after \"{verb}\".");
  t.Set(ErrorType::kIntransVerbObj,
        "Intransitive verbs do not take a direct object. Instead, they need a "
        "preposition before the object. Add the preposition \"{verb}\" "
        "requires.");
  return t;
}

FeedbackTemplates FeedbackTemplates::FromJson(std::string_view json) {
  Json j;
  try {
    j = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw ContractError(std::string("template file is not valid JSON: ") +
                        e.what());
  }
  if (!j.is_object()) throw ContractError("template file must be an object");
  FeedbackTemplates t;
  for (const auto& [key, value] : j.items()) {
    auto type = ParseErrorType(key);
    if (!type) throw ContractError("unknown error type '" + key + "'");
    if (!value.is_string() || value.get<std::string>().empty()) {
      throw ContractError("template for " + key + " must be non-empty text");
    }
    t.Set(*type, value.get<std::string>());
  }
  return t;
}

FeedbackTemplates FeedbackTemplates::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

void FeedbackTemplates::Set(ErrorType type, std::string text) {
  if (text.empty()) throw ContractError("feedback template text is empty");
  texts_[type] = std::move(text);
}

const std::string* FeedbackTemplates::Find(ErrorType type) const {
  auto it = texts_.find(type);
  return it == texts_.end() ? nullptr : &it->second;
}

std::vector<AnnotatedSentence> Annotate(
    const std::vector<LabeledSentence>& detections,
    const FeedbackTemplates& templates) {
  std::vector<AnnotatedSentence> doc;
  doc.reserve(detections.size());
  for (const LabeledSentence& d : detections) {
    if (d.scheme.kind() != SchemeKind::kTyped) {
      throw ContractError("feedback needs typed detections (sentence " +
                          d.sentence.id + ")");
    }
    AnnotatedSentence annotated;
    annotated.id = d.sentence.id;
    for (std::size_t i = 0; i < d.labels.size(); ++i) {
      if (d.labels[i] == kCorrectLabel) continue;
      auto type = ErrorTypeOfLabel(d.labels[i]);
      if (!type) {
        throw ContractError("sentence " + d.sentence.id + ": label '" +
                            d.labels[i] + "' is not an error type");
      }
      const std::string* text = templates.Find(*type);
      if (!text) {
        throw ContractError("no feedback template for " +
                            std::string(ErrorTypeName(*type)));
      }
      const int index = static_cast<int>(i + 1);
      Slots slots = ResolveSlots(d.sentence, index, *type);
      std::string comment = *text;
      ReplaceAll(comment, "{verb}", slots.verb);
      ReplaceAll(comment, "{prep}", slots.prep);
      annotated.comments.push_back({index, *type, std::move(comment)});
    }
    doc.push_back(std::move(annotated));
  }
  return doc;
}

std::string SerializeAnnotations(const std::vector<AnnotatedSentence>& doc) {
  std::string out;
  for (const AnnotatedSentence& s : doc) {
    Json j;
    j["id"] = s.id;
    Json comments = Json::array();
    for (const FeedbackComment& c : s.comments) {
      Json cj;
      cj["token_index"] = c.token_index;
      cj["error_type"] = ErrorTypeName(c.error_type);
      cj["comment"] = c.comment;
      comments.push_back(std::move(cj));
    }
    j["comments"] = std::move(comments);
    out += DumpLine(j) + "\n";
  }
  return out;
}

}  // namespace ged
