#ifndef GED_FEEDBACK_H_
#define GED_FEEDBACK_H_

#include <map>
#include <string>
#include <vector>

#include "ged/corpus.h"

namespace ged {

// Explanation text per error type. `{verb}` and `{prep}` are replaced with
// the verb and preposition involved in the flagged error.
class FeedbackTemplates {
 public:
  static FeedbackTemplates Defaults();
  // JSON object: error type name -> text. Unknown types and empty texts are
  // rejected; types not present simply have no template.
  static FeedbackTemplates FromJson(std::string_view json);
  static FeedbackTemplates FromFile(const std::string& path);

  void Set(ErrorType type, std::string text);
  const std::string* Find(ErrorType type) const;

 private:
  std::map<ErrorType, std::string> texts_;
};

struct FeedbackComment {
  int token_index = 0;  // 1-based
  ErrorType error_type = ErrorType::kPrepSubject;
  std::string comment;
};

struct AnnotatedSentence {
  std::string id;
  std::vector<FeedbackComment> comments;
};

// One comment per non-C token. Throws ContractError for binary input or a
// detected type without a template.
std::vector<AnnotatedSentence> Annotate(
    const std::vector<LabeledSentence>& detections,
    const FeedbackTemplates& templates);

// {"id": ..., "comments": [{"token_index", "error_type", "comment"}]} lines.
std::string SerializeAnnotations(const std::vector<AnnotatedSentence>& doc);

}  // namespace ged

#endif  // GED_FEEDBACK_H_
