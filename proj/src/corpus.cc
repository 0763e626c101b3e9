#include "ged/corpus.h"

#include <algorithm>

namespace ged {
namespace {

constexpr std::array<std::string_view, 5> kErrorTypeNames = {
    "PrepInfinitive", "SubjectVerb", "PrepSubject", "TransVerbPrep",
    "IntransVerbObj"};

}  // namespace

std::string_view ErrorTypeName(ErrorType type) {
  return kErrorTypeNames[static_cast<std::size_t>(type)];
}

std::optional<ErrorType> ParseErrorType(std::string_view name) {
  for (ErrorType type : kAllErrorTypes) {
    if (ErrorTypeName(type) == name) return type;
  }
  return std::nullopt;
}

std::string TypedLabel(ErrorType type) {
  return std::string(kErrorLabel) + "-" + std::string(ErrorTypeName(type));
}

std::optional<ErrorType> ErrorTypeOfLabel(std::string_view label) {
  if (label.size() < 3 || label.substr(0, 2) != "E-") return std::nullopt;
  return ParseErrorType(label.substr(2));
}

LabelScheme::LabelScheme(SchemeKind kind) : kind_(kind) {
  labels_.emplace_back(kCorrectLabel);
  if (kind == SchemeKind::kBinary) {
    labels_.emplace_back(kErrorLabel);
  } else {
    for (ErrorType type : kAllErrorTypes) labels_.push_back(TypedLabel(type));
  }
}

LabelScheme LabelScheme::Binary() { return LabelScheme(SchemeKind::kBinary); }
LabelScheme LabelScheme::Typed() { return LabelScheme(SchemeKind::kTyped); }
LabelScheme LabelScheme::Of(SchemeKind kind) { return LabelScheme(kind); }

std::string_view LabelScheme::name() const {
  return kind_ == SchemeKind::kBinary ? "binary" : "typed";
}

bool LabelScheme::Contains(std::string_view label) const {
  return IndexOf(label) >= 0;
}

int LabelScheme::IndexOf(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

std::optional<SchemeKind> ParseSchemeKind(std::string_view name) {
  if (name == "binary") return SchemeKind::kBinary;
  if (name == "typed") return SchemeKind::kTyped;
  return std::nullopt;
}

std::string_view EditOpName(EditRecord::Op op) {
  switch (op) {
    case EditRecord::Op::kInsert:
      return "insert";
    case EditRecord::Op::kDelete:
      return "delete";
    case EditRecord::Op::kReplace:
      return "replace";
  }
  return "replace";
}

LabeledSentence LabelAllCorrect(ParsedSentence sentence, LabelScheme scheme) {
  LabeledSentence labeled;
  labeled.labels.assign(sentence.size(), std::string(kCorrectLabel));
  labeled.sentence = std::move(sentence);
  labeled.scheme = std::move(scheme);
  return labeled;
}

LabeledSentence ToBinary(LabeledSentence labeled) {
  if (labeled.scheme.kind() == SchemeKind::kBinary) return labeled;
  for (std::string& label : labeled.labels) {
    if (label != kCorrectLabel) label = std::string(kErrorLabel);
  }
  labeled.scheme = LabelScheme::Binary();
  return labeled;
}

std::vector<std::vector<int>> ChildrenOf(const ParsedSentence& sentence) {
  const int n = static_cast<int>(sentence.size());
  std::vector<std::vector<int>> children(n + 1);
  for (const Token& token : sentence.tokens) {
    if (token.head >= 0 && token.head <= n && token.index >= 1 &&
        token.index <= n) {
      children[token.head].push_back(token.index);
    }
  }
  return children;
}

std::vector<std::string> Validate(const ParsedSentence& sentence) {
  std::vector<std::string> violations;
  const int n = static_cast<int>(sentence.size());
  if (n == 0) {
    violations.emplace_back("empty sentence");
    return violations;
  }

  bool heads_in_range = true;
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& token = sentence.tokens[i];
    const std::string where = "token " + std::to_string(i + 1);
    if (token.index != i + 1) {
      violations.push_back(where + ": index " + std::to_string(token.index) +
                           " out of sequence");
    }
    if (token.form.empty()) violations.push_back(where + ": empty form");
    if (token.lemma.empty()) violations.push_back(where + ": empty lemma");
    if (token.head < 0 || token.head > n) {
      violations.push_back(where + ": head out of range");
      heads_in_range = false;
    } else if (token.head == i + 1) {
      violations.push_back(where + ": head points to itself");
      heads_in_range = false;
    }
    if (token.head == 0) ++roots;
  }
  if (roots == 0) violations.emplace_back("no root");
  if (roots > 1) violations.emplace_back("multiple roots");

  // Follow every head chain; a chain longer than n never reaches the root.
  if (heads_in_range) {
    for (int start = 1; start <= n; ++start) {
      int node = start;
      int steps = 0;
      while (node != 0 && steps <= n) {
        node = sentence.tokens[node - 1].head;
        ++steps;
      }
      if (node != 0) {
        violations.emplace_back("cyclic heads");
        break;
      }
    }
  }
  return violations;
}

std::vector<std::string> ValidateLabeled(const LabeledSentence& labeled) {
  std::vector<std::string> violations;
  if (labeled.labels.size() != labeled.sentence.size()) {
    violations.push_back("label count " +
                         std::to_string(labeled.labels.size()) +
                         " != token count " +
                         std::to_string(labeled.sentence.size()));
  }
  for (const std::string& label : labeled.labels) {
    if (!labeled.scheme.Contains(label)) {
      violations.push_back("label '" + label + "' not in " +
                           std::string(labeled.scheme.name()) + " scheme");
    }
  }
  for (std::string& v : Validate(labeled.sentence)) {
    violations.push_back(std::move(v));
  }
  return violations;
}

}  // namespace ged
