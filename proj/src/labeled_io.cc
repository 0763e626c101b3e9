#include <fstream>
#include <sstream>

#include "ged/json_io.h"

namespace ged {
namespace {

Json OptionalString(const std::optional<std::string>& s) {
  return s ? Json(*s) : Json(nullptr);
}

std::optional<std::string> StringOrNull(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

template <typename T>
std::vector<T> ArrayField(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_array()) {
    throw ContractError(std::string("missing array field '") + key + "'");
  }
  return it->get<std::vector<T>>();
}

}  // namespace

Json EditToJson(const EditRecord& edit) {
  Json j;
  j["op"] = EditOpName(edit.op);
  j["position"] = edit.position;
  j["original"] = OptionalString(edit.original);
  j["replacement"] = OptionalString(edit.replacement);
  j["displaced"] = OptionalString(edit.displaced);
  return j;
}

EditRecord EditFromJson(const Json& j) {
  EditRecord edit;
  const std::string op = j.at("op").get<std::string>();
  if (op == "insert") {
    edit.op = EditRecord::Op::kInsert;
  } else if (op == "delete") {
    edit.op = EditRecord::Op::kDelete;
  } else if (op == "replace") {
    edit.op = EditRecord::Op::kReplace;
  } else {
    throw ContractError("unknown edit op '" + op + "'");
  }
  edit.position = j.at("position").get<int>();
  edit.original = StringOrNull(j, "original");
  edit.replacement = StringOrNull(j, "replacement");
  edit.displaced = StringOrNull(j, "displaced");
  return edit;
}

Json LabeledToJson(const LabeledSentence& labeled) {
  const ParsedSentence& s = labeled.sentence;
  Json j;
  j["id"] = s.id;
  Json tokens = Json::array(), lemmas = Json::array(), upos = Json::array(),
       heads = Json::array(), deprels = Json::array();
  for (const Token& t : s.tokens) {
    tokens.push_back(t.form);
    lemmas.push_back(t.lemma);
    upos.push_back(t.upos);
    heads.push_back(t.head);
    deprels.push_back(t.deprel);
  }
  j["tokens"] = std::move(tokens);
  j["lemmas"] = std::move(lemmas);
  j["upos"] = std::move(upos);
  j["heads"] = std::move(heads);
  j["deprels"] = std::move(deprels);
  j["labels"] = labeled.labels;
  j["error_type"] = labeled.error_type
                        ? Json(std::string(ErrorTypeName(*labeled.error_type)))
                        : Json(nullptr);
  j["edit"] = labeled.edit ? EditToJson(*labeled.edit) : Json(nullptr);
  j["source"] = s.source;
  return j;
}

LabeledSentence LabeledFromJson(const Json& j, const LabelScheme& scheme) {
  if (!j.is_object()) throw ContractError("labeled record is not an object");
  LabeledSentence labeled;
  labeled.scheme = scheme;
  ParsedSentence& s = labeled.sentence;
  s.id = j.at("id").get<std::string>();
  auto forms = ArrayField<std::string>(j, "tokens");
  auto lemmas = ArrayField<std::string>(j, "lemmas");
  auto upos = ArrayField<std::string>(j, "upos");
  auto heads = ArrayField<int>(j, "heads");
  auto deprels = ArrayField<std::string>(j, "deprels");
  labeled.labels = ArrayField<std::string>(j, "labels");
  const std::size_t n = forms.size();
  if (lemmas.size() != n || upos.size() != n || heads.size() != n ||
      deprels.size() != n) {
    throw ContractError("sentence " + s.id + ": column arrays differ in length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    s.tokens.push_back(Token{static_cast<int>(i + 1), forms[i], lemmas[i],
                             upos[i], heads[i], deprels[i]});
  }
  if (auto type = StringOrNull(j, "error_type")) {
    labeled.error_type = ParseErrorType(*type);
    if (!labeled.error_type) {
      throw ContractError("sentence " + s.id + ": unknown error_type '" +
                          *type + "'");
    }
  }
  if (auto it = j.find("edit"); it != j.end() && !it->is_null()) {
    labeled.edit = EditFromJson(*it);
  }
  if (auto it = j.find("source"); it != j.end() && it->is_string()) {
    s.source = it->get<std::string>();
  }
  std::vector<std::string> violations = ValidateLabeled(labeled);
  if (!violations.empty()) {
    throw ContractError("sentence " + s.id + ": " + violations.front());
  }
  return labeled;
}

std::vector<Json> ReadJsonLines(std::istream& in) {
  std::vector<Json> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(Json::parse(line));
    } catch (const Json::parse_error& e) {
      throw ContractError("line " + std::to_string(line_no) +
                          ": invalid JSON: " + e.what());
    }
  }
  return records;
}

std::string DumpLine(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::strict);
}

std::string SerializeLabeledLine(const LabeledSentence& sentence) {
  return DumpLine(LabeledToJson(sentence));
}

std::string SerializeLabeled(const std::vector<LabeledSentence>& sentences) {
  std::string out;
  for (const LabeledSentence& s : sentences) {
    if (!(s.scheme == sentences.front().scheme)) {
      throw ContractError("cannot serialize mixed label schemes (sentence " +
                          s.sentence.id + ")");
    }
    out += SerializeLabeledLine(s);
    out += '\n';
  }
  return out;
}

std::vector<LabeledSentence> ReadLabeled(std::istream& in,
                                         std::optional<SchemeKind> scheme) {
  std::vector<Json> records = ReadJsonLines(in);
  if (!scheme) {
    bool binary = false, typed = false;
    for (const Json& r : records) {
      auto it = r.find("labels");
      if (it == r.end() || !it->is_array()) continue;
      for (const Json& l : *it) {
        if (!l.is_string()) continue;
        const auto& s = l.get_ref<const std::string&>();
        if (s == kErrorLabel) binary = true;
        if (ErrorTypeOfLabel(s)) typed = true;
      }
    }
    if (binary && typed) {
      throw ContractError("stream mixes binary and typed labels");
    }
    scheme = binary ? SchemeKind::kBinary : SchemeKind::kTyped;
  }
  const LabelScheme label_scheme = LabelScheme::Of(*scheme);
  std::vector<LabeledSentence> sentences;
  sentences.reserve(records.size());
  for (const Json& r : records) {
    sentences.push_back(LabeledFromJson(r, label_scheme));
  }
  return sentences;
}

std::vector<LabeledSentence> ReadLabeledFile(const std::string& path,
                                             std::optional<SchemeKind> scheme) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot read " + path);
  return ReadLabeled(in, scheme);
}

}  // namespace ged
