// JSON conversions for the interchange records. Kept out of the public
// headers so that only translation units that emit JSON pull in nlohmann.

#ifndef GED_JSON_IO_H_
#define GED_JSON_IO_H_

#include <istream>
#include <string>

#include <json.hpp>

#include "ged/corpus.h"

namespace ged {

using Json = nlohmann::ordered_json;

Json EditToJson(const EditRecord& edit);
EditRecord EditFromJson(const Json& j);

// Fields in interchange order:
// id, tokens, lemmas, upos, heads, deprels, labels, error_type, edit, source.
Json LabeledToJson(const LabeledSentence& labeled);
// Parses one labeled object. Labels are checked against `scheme`.
LabeledSentence LabeledFromJson(const Json& j, const LabelScheme& scheme);

// Reads non-empty lines of a JSON-lines stream. Parse errors name the line.
std::vector<Json> ReadJsonLines(std::istream& in);

// Compact single-line dump used for every JSON-lines writer.
std::string DumpLine(const Json& j);

}  // namespace ged

#endif  // GED_JSON_IO_H_
