// Template grammar that emits news-style English sentences together with
// their Universal Dependencies parses. Stands in for a parsed native corpus
// in tests and the acceptance suite.

#ifndef GED_SYNTHETIC_H_
#define GED_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ged/corpus.h"

namespace ged {

struct SyntheticCorpusOptions {
  std::size_t sentences = 20000;
  std::uint64_t seed = 7;
  std::string id_prefix = "synth";
};

std::vector<ParsedSentence> GenerateSyntheticCorpus(
    const SyntheticCorpusOptions& options);

}  // namespace ged

#endif  // GED_SYNTHETIC_H_
