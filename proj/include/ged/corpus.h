// Annotated sentence model shared by every stage of the toolkit: CoNLL-U
// ingestion, tree validation, label schemes and the JSON-lines labeled
// sentence format.

#ifndef GED_CORPUS_H_
#define GED_CORPUS_H_

#include <array>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ged {

// Raised when an input violates a data contract. Carries a one-line message
// suitable for a CLI diagnostic.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Token {
  int index = 0;  // 1-based
  std::string form;
  std::string lemma;
  std::string upos;
  int head = 0;  // 0 = root
  std::string deprel;

  bool operator==(const Token&) const = default;
};

struct ParsedSentence {
  std::string id;
  std::vector<Token> tokens;
  std::string source;

  std::size_t size() const { return tokens.size(); }
  // 1-based access.
  const Token& at(int index) const { return tokens.at(index - 1); }

  bool operator==(const ParsedSentence&) const = default;
};

enum class ErrorType {
  kPrepInfinitive,
  kSubjectVerb,
  kPrepSubject,
  kTransVerbPrep,
  kIntransVerbObj,
};

inline constexpr std::array<ErrorType, 5> kAllErrorTypes = {
    ErrorType::kPrepInfinitive, ErrorType::kSubjectVerb,
    ErrorType::kPrepSubject, ErrorType::kTransVerbPrep,
    ErrorType::kIntransVerbObj};

// "PrepInfinitive", "SubjectVerb", ...
std::string_view ErrorTypeName(ErrorType type);
std::optional<ErrorType> ParseErrorType(std::string_view name);

inline constexpr std::string_view kCorrectLabel = "C";
inline constexpr std::string_view kErrorLabel = "E";

// Typed label of an error type, e.g. "E-PrepSubject".
std::string TypedLabel(ErrorType type);
// Inverse of TypedLabel; nullopt for "C", "E" and unknown strings.
std::optional<ErrorType> ErrorTypeOfLabel(std::string_view label);

enum class SchemeKind { kBinary, kTyped };

class LabelScheme {
 public:
  static LabelScheme Binary();
  static LabelScheme Typed();
  static LabelScheme Of(SchemeKind kind);

  SchemeKind kind() const { return kind_; }
  std::string_view name() const;
  // C first, then E (binary) or the five typed labels in ErrorType order.
  const std::vector<std::string>& labels() const { return labels_; }
  bool Contains(std::string_view label) const;
  // Position of the label in labels(), or -1.
  int IndexOf(std::string_view label) const;

  bool operator==(const LabelScheme& other) const {
    return kind_ == other.kind_;
  }

 private:
  explicit LabelScheme(SchemeKind kind);

  SchemeKind kind_;
  std::vector<std::string> labels_;
};

std::optional<SchemeKind> ParseSchemeKind(std::string_view name);

// A single token-level edit. Positions are 1-based: for insert and replace
// the position in the output sentence, for delete the position in the input.
// `displaced` holds the original form of the token whose case was adjusted
// when an edit touched the sentence start.
struct EditRecord {
  enum class Op { kInsert, kDelete, kReplace };

  Op op = Op::kReplace;
  int position = 0;
  std::optional<std::string> original;
  std::optional<std::string> replacement;
  std::optional<std::string> displaced;

  bool operator==(const EditRecord&) const = default;
};

std::string_view EditOpName(EditRecord::Op op);

struct LabeledSentence {
  ParsedSentence sentence;
  std::vector<std::string> labels;
  LabelScheme scheme = LabelScheme::Typed();
  std::optional<ErrorType> error_type;
  std::optional<EditRecord> edit;

  bool operator==(const LabeledSentence&) const = default;
};

// All-C labeling of a sentence.
LabeledSentence LabelAllCorrect(ParsedSentence sentence, LabelScheme scheme);

// Maps every typed error label to "E". Binary input is returned unchanged.
LabeledSentence ToBinary(LabeledSentence labeled);

// Returns one descriptor per violated Token/ParsedSentence invariant, or an
// empty list when the sentence is a well-formed single-rooted tree.
std::vector<std::string> Validate(const ParsedSentence& sentence);

// Violations specific to a labeled sentence (label count, label legality),
// followed by the Validate() violations of the underlying sentence.
std::vector<std::string> ValidateLabeled(const LabeledSentence& labeled);

// Children of every token; element 0 lists the root(s).
std::vector<std::vector<int>> ChildrenOf(const ParsedSentence& sentence);

// --- CoNLL-U --------------------------------------------------------------

struct ConlluDiagnostic {
  std::string sentence_id;
  int line = 0;  // 1-based line of the offending row, or of the block start
  std::string message;
};

struct ConlluParseResult {
  std::vector<ParsedSentence> sentences;
  std::vector<ConlluDiagnostic> diagnostics;
};

// Reads CoNLL-U. Multiword ranges and empty nodes are skipped; a malformed
// sentence is dropped with a diagnostic and parsing continues with the next
// block. Sentences without `# sent_id` get "<source_name>:<ordinal>".
ConlluParseResult ParseConllu(std::istream& in, std::string_view source_name);
ConlluParseResult ParseConlluFile(const std::string& path);

// Writes the columns this toolkit tracks; unused columns are "_".
std::string WriteConllu(const std::vector<ParsedSentence>& sentences);

// --- JSON lines -----------------------------------------------------------

// One JSON object per sentence, fields in the fixed interchange order.
// All sentences must share one scheme.
std::string SerializeLabeled(const std::vector<LabeledSentence>& sentences);
std::string SerializeLabeledLine(const LabeledSentence& sentence);

// Reads the labeled JSON-lines format. When `scheme` is unset it is inferred
// from the labels in the stream (typed when nothing but C appears).
std::vector<LabeledSentence> ReadLabeled(
    std::istream& in, std::optional<SchemeKind> scheme = std::nullopt);
std::vector<LabeledSentence> ReadLabeledFile(
    const std::string& path, std::optional<SchemeKind> scheme = std::nullopt);

}  // namespace ged

#endif  // GED_CORPUS_H_
