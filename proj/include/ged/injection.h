// Parse-driven pseudo-error generation. Five rules turn a well-formed native
// sentence into one carrying exactly one labeled error:
//
//   PrepInfinitive   time to leave         -> time for leave
//   SubjectVerb      Reading books helps   -> Read books helps
//   PrepSubject      The board approved    -> At the board approved
//   TransVerbPrep    attended the meeting  -> attended at the meeting
//   IntransVerbObj   They belong to a club -> They belong a club
//
// The verb-list rules only fire on the listed lemmas, and whether the verb
// comes from the training or the held-out list decides which pool the
// outcome may be sampled into.

#ifndef GED_INJECTION_H_
#define GED_INJECTION_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ged/corpus.h"
#include "ged/random.h"

namespace ged {

struct PrepositionInventory {
  std::vector<std::string> addition_replacement = {"at", "about", "to", "in",
                                                   "with"};
  std::string infinitive_replacement = "for";
};

struct VerbLists {
  std::set<std::string> transitive_train = {
      "answer", "attend", "discuss", "inhabit", "mention", "oppose",
      "resemble"};
  std::set<std::string> transitive_test = {
      "approach", "consider", "enter", "marry", "obey", "reach", "visit"};
  std::set<std::string> intransitive_train = {"agree", "belong", "disagree",
                                              "relate"};
  std::set<std::string> intransitive_test = {"apply", "graduate", "listen",
                                             "specialize", "worry"};

  bool IsTransitive(const std::string& lemma) const;
  bool IsIntransitive(const std::string& lemma) const;
  bool IsHeldOut(const std::string& lemma) const;
};

// Where a rule applies. `aux_index` is the "to" token for an infinitival
// SubjectVerb site and the case token for IntransVerbObj; `span_first` and
// `span_last` bound the subject/object subtree for the insertion rules.
struct InjectionSite {
  ErrorType error_type = ErrorType::kPrepSubject;
  int anchor_index = 0;
  int aux_index = 0;
  int span_first = 0;
  int span_last = 0;

  bool operator==(const InjectionSite&) const = default;
};

enum class SplitRole { kTrainPool, kEvalPool };

std::string_view SplitRoleName(SplitRole role);
std::optional<SplitRole> ParseSplitRole(std::string_view name);

struct InjectionOutcome {
  LabeledSentence labeled;  // typed scheme; error_type and edit populated
  EditRecord edit;
  ErrorType error_type = ErrorType::kPrepSubject;
  std::string source_id;
  std::string anchor_lemma;
  SplitRole split_role = SplitRole::kTrainPool;

  bool operator==(const InjectionOutcome&) const = default;
};

inline constexpr int kMinEligibleTokens = 4;
inline constexpr int kMaxEligibleTokens = 25;

bool Eligible(const ParsedSentence& sentence);

std::vector<InjectionSite> FindSites(const ParsedSentence& sentence,
                                     ErrorType error_type,
                                     const VerbLists& lists);

// Sites of all five rules, in ErrorType order then left to right.
std::vector<InjectionSite> FindAllSites(const ParsedSentence& sentence,
                                        const VerbLists& lists);

// Applies a site found on `sentence`. Throws ContractError when the site no
// longer matches the sentence. `rng` is consumed only by the insertion rules.
InjectionOutcome Apply(const ParsedSentence& sentence, const InjectionSite& site,
                       Rng& rng,
                       const PrepositionInventory& inventory = {},
                       const VerbLists& lists = {});

// Source token forms recovered by undoing the outcome's edit.
std::vector<std::string> RestoreSourceForms(const InjectionOutcome& outcome);

struct GenerationSummary {
  std::uint64_t seed = 0;
  std::size_t total = 0;
  std::size_t eligible = 0;
  std::size_t skipped_no_site = 0;
  std::map<ErrorType, std::size_t> per_type_counts;
};

struct GenerationResult {
  std::vector<InjectionOutcome> outcomes;
  GenerationSummary summary;
};

// Picks one site uniformly per eligible sentence and applies it. The random
// stream of a sentence depends only on (seed, sentence id); `threads` > 1
// fans the work out without changing the output.
GenerationResult Generate(const std::vector<ParsedSentence>& corpus,
                          const VerbLists& lists,
                          const PrepositionInventory& inventory,
                          std::uint64_t seed, unsigned threads = 1);

// Outcome JSON line: the labeled format followed by source_id, anchor_lemma
// and split_role.
std::string SerializeOutcomeLine(const InjectionOutcome& outcome);
std::vector<InjectionOutcome> ReadOutcomes(std::istream& in);
std::vector<InjectionOutcome> ReadOutcomesFile(const std::string& path);
std::string SummaryJson(const GenerationSummary& summary);

}  // namespace ged

#endif  // GED_INJECTION_H_
