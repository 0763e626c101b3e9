#ifndef GED_TESTS_TEST_SUPPORT_H_
#define GED_TESTS_TEST_SUPPORT_H_

#include <sstream>
#include <string>
#include <vector>

#include "ged/corpus.h"

namespace ged::testing {

// Builds a sentence from rows of "form lemma upos head deprel".
inline ParsedSentence Sentence(std::string id,
                               const std::vector<std::string>& rows) {
  ParsedSentence s;
  s.id = std::move(id);
  s.source = "test";
  int index = 0;
  for (const std::string& row : rows) {
    std::istringstream in(row);
    Token t;
    t.index = ++index;
    in >> t.form >> t.lemma >> t.upos >> t.head >> t.deprel;
    s.tokens.push_back(t);
  }
  return s;
}

inline std::vector<std::string> Forms(const ParsedSentence& s) {
  std::vector<std::string> out;
  for (const Token& t : s.tokens) out.push_back(t.form);
  return out;
}

inline std::string Join(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace ged::testing

#endif  // GED_TESTS_TEST_SUPPORT_H_
