#include "ged/injection.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <thread>

#include "ged/json_io.h"

namespace ged {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

bool StartsUpper(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s.front()));
}

std::string WithInitial(std::string s, bool upper) {
  if (!s.empty()) {
    unsigned char c = static_cast<unsigned char>(s.front());
    s.front() = static_cast<char>(upper ? std::toupper(c) : std::tolower(c));
  }
  return s;
}

bool IsObliqueRelation(std::string_view deprel) {
  return deprel == "obl" || deprel.substr(0, 4) == "obl:";
}

bool IsGerundOf(std::string_view form, std::string_view lemma) {
  const std::string f = Lower(form);
  const std::string l = Lower(lemma);
  if (l.empty()) return false;
  if (f == l + "ing") return true;
  return l.size() > 1 && l.back() == 'e' &&
         f == l.substr(0, l.size() - 1) + "ing";
}

struct Span {
  int first = 0;
  int last = 0;
};

// Bounds of the subtree rooted at `root`, or nullopt when the subtree is not
// a contiguous run of tokens.
std::optional<Span> ContiguousSubtree(
    const std::vector<std::vector<int>>& children, int root) {
  std::vector<int> stack = {root};
  int first = root, last = root, count = 0;
  while (!stack.empty()) {
    int node = stack.back();
    stack.pop_back();
    ++count;
    first = std::min(first, node);
    last = std::max(last, node);
    for (int child : children[node]) stack.push_back(child);
  }
  if (last - first + 1 != count) return std::nullopt;
  return Span{first, last};
}

// Rule matcher. `lists` == nullptr skips the verb-list membership test, which
// is how Apply() re-checks a site without knowing the caller's lists.
class SiteFinder {
 public:
  SiteFinder(const ParsedSentence& sentence, const VerbLists* lists)
      : s_(sentence), lists_(lists), children_(ChildrenOf(sentence)) {}

  std::vector<InjectionSite> Find(ErrorType type) const {
    std::vector<InjectionSite> sites;
    for (const Token& t : s_.tokens) {
      std::optional<InjectionSite> site;
      switch (type) {
        case ErrorType::kPrepInfinitive:
          site = PrepInfinitive(t);
          break;
        case ErrorType::kSubjectVerb:
          site = SubjectVerb(t);
          break;
        case ErrorType::kPrepSubject:
          site = PrepSubject(t);
          break;
        case ErrorType::kTransVerbPrep:
          site = TransVerbPrep(t);
          break;
        case ErrorType::kIntransVerbObj:
          site = IntransVerbObj(t);
          break;
      }
      if (site) sites.push_back(*site);
    }
    return sites;
  }

 private:
  const Token& At(int index) const { return s_.tokens[index - 1]; }
  bool IsLeaf(int index) const { return children_[index].empty(); }

  std::optional<InjectionSite> PrepInfinitive(const Token& t) const {
    if (Lower(t.form) != "to" || t.upos != "PART" || t.deprel != "mark" ||
        t.head == 0 || At(t.head).upos != "VERB") {
      return std::nullopt;
    }
    return InjectionSite{ErrorType::kPrepInfinitive, t.index};
  }

  std::optional<InjectionSite> SubjectVerb(const Token& t) const {
    if (t.upos != "VERB" || t.deprel != "csubj") return std::nullopt;
    for (int child : children_[t.index]) {
      const Token& c = At(child);
      if (child < t.index && Lower(c.form) == "to" && c.deprel == "mark" &&
          IsLeaf(child)) {
        return InjectionSite{ErrorType::kSubjectVerb, t.index, child};
      }
    }
    if (IsGerundOf(t.form, t.lemma)) {
      return InjectionSite{ErrorType::kSubjectVerb, t.index, 0};
    }
    return std::nullopt;
  }

  std::optional<InjectionSite> PrepSubject(const Token& t) const {
    if (t.deprel != "nsubj" || (t.upos != "NOUN" && t.upos != "PROPN")) {
      return std::nullopt;
    }
    std::optional<Span> span = ContiguousSubtree(children_, t.index);
    if (!span || At(span->first).upos == "ADP") return std::nullopt;
    return InjectionSite{ErrorType::kPrepSubject, t.index, 0, span->first,
                         span->last};
  }

  std::optional<InjectionSite> TransVerbPrep(const Token& t) const {
    if (t.upos != "VERB") return std::nullopt;
    if (lists_ && !lists_->IsTransitive(Lower(t.lemma))) return std::nullopt;
    for (int child : children_[t.index]) {
      if (child < t.index || At(child).deprel != "obj") continue;
      std::optional<Span> span = ContiguousSubtree(children_, child);
      if (!span || span->first <= t.index) continue;
      bool has_preposition = false;
      for (int i = t.index + 1; i <= span->first; ++i) {
        if (At(i).upos == "ADP" || At(i).deprel == "case") {
          has_preposition = true;
          break;
        }
      }
      if (has_preposition) continue;
      return InjectionSite{ErrorType::kTransVerbPrep, t.index, child,
                           span->first, span->last};
    }
    return std::nullopt;
  }

  std::optional<InjectionSite> IntransVerbObj(const Token& t) const {
    if (t.upos != "VERB") return std::nullopt;
    if (lists_ && !lists_->IsIntransitive(Lower(t.lemma))) return std::nullopt;
    const int next = t.index + 1;
    if (next > static_cast<int>(s_.size())) return std::nullopt;
    const Token& c = At(next);
    if (c.upos != "ADP" || c.deprel != "case" || !IsLeaf(next) ||
        c.head == 0) {
      return std::nullopt;
    }
    const Token& phrase = At(c.head);
    if (phrase.head != t.index || !IsObliqueRelation(phrase.deprel)) {
      return std::nullopt;
    }
    return InjectionSite{ErrorType::kIntransVerbObj, t.index, next};
  }

  const ParsedSentence& s_;
  const VerbLists* lists_;
  std::vector<std::vector<int>> children_;
};

// Output sentence builders. Both renumber indices and heads.
std::vector<Token> InsertToken(const std::vector<Token>& tokens, int position,
                               Token inserted) {
  auto shift = [position](int i) { return i >= position ? i + 1 : i; };
  std::vector<Token> out;
  out.reserve(tokens.size() + 1);
  for (const Token& t : tokens) {
    if (t.index == position) out.push_back(inserted);
    Token moved = t;
    moved.index = shift(t.index);
    moved.head = t.head == 0 ? 0 : shift(t.head);
    out.push_back(std::move(moved));
  }
  if (position == static_cast<int>(tokens.size()) + 1) out.push_back(inserted);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].index = static_cast<int>(i + 1);
  }
  // The inserted token's head was given in input numbering.
  Token& added = out[position - 1];
  added.head = added.head == 0 ? 0 : shift(added.head);
  return out;
}

std::vector<Token> DeleteToken(const std::vector<Token>& tokens,
                               int position) {
  auto shift = [position](int i) { return i > position ? i - 1 : i; };
  std::vector<Token> out;
  out.reserve(tokens.size() - 1);
  for (const Token& t : tokens) {
    if (t.index == position) continue;
    Token moved = t;
    moved.index = shift(t.index);
    moved.head = t.head == 0 ? 0 : shift(t.head);
    out.push_back(std::move(moved));
  }
  return out;
}

}  // namespace

bool VerbLists::IsTransitive(const std::string& lemma) const {
  return transitive_train.count(lemma) || transitive_test.count(lemma);
}

bool VerbLists::IsIntransitive(const std::string& lemma) const {
  return intransitive_train.count(lemma) || intransitive_test.count(lemma);
}

bool VerbLists::IsHeldOut(const std::string& lemma) const {
  return transitive_test.count(lemma) || intransitive_test.count(lemma);
}

std::string_view SplitRoleName(SplitRole role) {
  return role == SplitRole::kTrainPool ? "train_pool" : "eval_pool";
}

std::optional<SplitRole> ParseSplitRole(std::string_view name) {
  if (name == "train_pool") return SplitRole::kTrainPool;
  if (name == "eval_pool") return SplitRole::kEvalPool;
  return std::nullopt;
}

bool Eligible(const ParsedSentence& sentence) {
  const int n = static_cast<int>(sentence.size());
  return n >= kMinEligibleTokens && n <= kMaxEligibleTokens;
}

std::vector<InjectionSite> FindSites(const ParsedSentence& sentence,
                                     ErrorType error_type,
                                     const VerbLists& lists) {
  return SiteFinder(sentence, &lists).Find(error_type);
}

std::vector<InjectionSite> FindAllSites(const ParsedSentence& sentence,
                                        const VerbLists& lists) {
  SiteFinder finder(sentence, &lists);
  std::vector<InjectionSite> all;
  for (ErrorType type : kAllErrorTypes) {
    for (const InjectionSite& site : finder.Find(type)) all.push_back(site);
  }
  return all;
}

InjectionOutcome Apply(const ParsedSentence& sentence, const InjectionSite& site,
                       Rng& rng, const PrepositionInventory& inventory,
                       const VerbLists& lists) {
  const std::vector<InjectionSite> current =
      SiteFinder(sentence, nullptr).Find(site.error_type);
  if (std::find(current.begin(), current.end(), site) == current.end()) {
    throw ContractError("sentence " + sentence.id + ": stale " +
                        std::string(ErrorTypeName(site.error_type)) +
                        " site at token " + std::to_string(site.anchor_index));
  }

  const Token& anchor = sentence.at(site.anchor_index);
  std::vector<Token> tokens;
  EditRecord edit;
  int labeled_index = 0;

  auto insert_preposition = [&](int position, int phrase_head) {
    if (inventory.addition_replacement.empty()) {
      throw ContractError("empty preposition inventory");
    }
    const std::string& prep = inventory.addition_replacement[UniformIndex(
        rng, inventory.addition_replacement.size())];
    Token inserted{position, WithInitial(prep, position == 1), Lower(prep),
                   "ADP", phrase_head, "case"};
    tokens = InsertToken(sentence.tokens, position, inserted);
    edit.op = EditRecord::Op::kInsert;
    edit.position = position;
    edit.replacement = inserted.form;
    if (position == 1) {
      Token& displaced = tokens[1];
      if (displaced.upos != "PROPN" && displaced.form != "I") {
        std::string lowered = WithInitial(displaced.form, false);
        if (lowered != displaced.form) {
          edit.displaced = displaced.form;
          displaced.form = std::move(lowered);
        }
      }
    }
    labeled_index = position;
  };

  auto delete_token = [&](int position) {
    tokens = DeleteToken(sentence.tokens, position);
    edit.op = EditRecord::Op::kDelete;
    edit.position = position;
    edit.original = sentence.at(position).form;
    if (position == 1 && !tokens.empty()) {
      std::string raised = WithInitial(tokens[0].form, true);
      if (raised != tokens[0].form) {
        edit.displaced = tokens[0].form;
        tokens[0].form = std::move(raised);
      }
    }
  };

  auto replace_form = [&](int position, std::string form) {
    tokens = sentence.tokens;
    edit.op = EditRecord::Op::kReplace;
    edit.position = position;
    edit.original = tokens[position - 1].form;
    edit.replacement = form;
    tokens[position - 1].form = std::move(form);
    labeled_index = position;
  };

  switch (site.error_type) {
    case ErrorType::kPrepInfinitive:
      replace_form(site.anchor_index,
                   WithInitial(inventory.infinitive_replacement,
                               StartsUpper(anchor.form)));
      tokens[site.anchor_index - 1].lemma =
          Lower(inventory.infinitive_replacement);
      break;
    case ErrorType::kSubjectVerb:
      if (site.aux_index != 0) {
        delete_token(site.aux_index);
        labeled_index = site.anchor_index > site.aux_index
                            ? site.anchor_index - 1
                            : site.anchor_index;
      } else {
        replace_form(site.anchor_index,
                     WithInitial(Lower(anchor.lemma),
                                 StartsUpper(anchor.form)));
      }
      break;
    case ErrorType::kPrepSubject:
      insert_preposition(site.span_first, site.anchor_index);
      break;
    case ErrorType::kTransVerbPrep:
      insert_preposition(site.span_first, site.aux_index);
      break;
    case ErrorType::kIntransVerbObj:
      delete_token(site.aux_index);
      labeled_index = site.anchor_index;
      break;
  }

  InjectionOutcome outcome;
  outcome.error_type = site.error_type;
  outcome.source_id = sentence.id;
  outcome.anchor_lemma = Lower(anchor.lemma);
  const bool verb_list_rule = site.error_type == ErrorType::kTransVerbPrep ||
                              site.error_type == ErrorType::kIntransVerbObj;
  outcome.split_role = verb_list_rule && lists.IsHeldOut(outcome.anchor_lemma)
                           ? SplitRole::kEvalPool
                           : SplitRole::kTrainPool;
  outcome.edit = edit;

  ParsedSentence perturbed;
  perturbed.id = sentence.id + "/" + std::string(ErrorTypeName(site.error_type));
  perturbed.source = sentence.source;
  perturbed.tokens = std::move(tokens);
  LabeledSentence labeled =
      LabelAllCorrect(std::move(perturbed), LabelScheme::Typed());
  labeled.labels[labeled_index - 1] = TypedLabel(site.error_type);
  labeled.error_type = site.error_type;
  labeled.edit = edit;
  outcome.labeled = std::move(labeled);
  return outcome;
}

std::vector<std::string> RestoreSourceForms(const InjectionOutcome& outcome) {
  std::vector<std::string> forms;
  for (const Token& t : outcome.labeled.sentence.tokens) forms.push_back(t.form);
  const EditRecord& edit = outcome.edit;
  const auto at = static_cast<std::size_t>(edit.position - 1);
  switch (edit.op) {
    case EditRecord::Op::kInsert:
      forms.erase(forms.begin() + at);
      if (edit.displaced) forms[at] = *edit.displaced;
      break;
    case EditRecord::Op::kDelete:
      forms.insert(forms.begin() + at, edit.original.value_or(""));
      if (edit.displaced) forms[at + 1] = *edit.displaced;
      break;
    case EditRecord::Op::kReplace:
      forms[at] = edit.original.value_or("");
      break;
  }
  return forms;
}

GenerationResult Generate(const std::vector<ParsedSentence>& corpus,
                          const VerbLists& lists,
                          const PrepositionInventory& inventory,
                          std::uint64_t seed, unsigned threads) {
  enum class Fate { kIneligible, kNoSite, kInjected };
  struct Slot {
    Fate fate = Fate::kIneligible;
    std::optional<InjectionOutcome> outcome;
  };
  std::vector<Slot> slots(corpus.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const ParsedSentence& sentence = corpus[i];
      if (!Eligible(sentence) || !Validate(sentence).empty()) continue;
      std::vector<InjectionSite> sites = FindAllSites(sentence, lists);
      if (sites.empty()) {
        slots[i].fate = Fate::kNoSite;
        continue;
      }
      Rng rng(DeriveSeed(seed, sentence.id));
      const InjectionSite& site = sites[UniformIndex(rng, sites.size())];
      slots[i].outcome = Apply(sentence, site, rng, inventory, lists);
      slots[i].fate = Fate::kInjected;
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1 || corpus.size() < 2) {
    work(0, corpus.size());
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (corpus.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < corpus.size(); begin += chunk) {
      workers.emplace_back(work, begin, std::min(corpus.size(), begin + chunk));
    }
    for (std::thread& w : workers) w.join();
  }

  GenerationResult result;
  result.summary.seed = seed;
  result.summary.total = corpus.size();
  for (ErrorType type : kAllErrorTypes) result.summary.per_type_counts[type] = 0;
  for (Slot& slot : slots) {
    if (slot.fate == Fate::kIneligible) continue;
    ++result.summary.eligible;
    if (slot.fate == Fate::kNoSite) {
      ++result.summary.skipped_no_site;
      continue;
    }
    ++result.summary.per_type_counts[slot.outcome->error_type];
    result.outcomes.push_back(std::move(*slot.outcome));
  }
  return result;
}

std::string SerializeOutcomeLine(const InjectionOutcome& outcome) {
  Json j = LabeledToJson(outcome.labeled);
  j["source_id"] = outcome.source_id;
  j["anchor_lemma"] = outcome.anchor_lemma;
  j["split_role"] = SplitRoleName(outcome.split_role);
  return DumpLine(j);
}

std::vector<InjectionOutcome> ReadOutcomes(std::istream& in) {
  std::vector<InjectionOutcome> outcomes;
  const LabelScheme typed = LabelScheme::Typed();
  for (const Json& j : ReadJsonLines(in)) {
    InjectionOutcome outcome;
    outcome.labeled = LabeledFromJson(j, typed);
    const std::string& id = outcome.labeled.sentence.id;
    if (!outcome.labeled.error_type || !outcome.labeled.edit) {
      throw ContractError("outcome " + id + ": missing error_type or edit");
    }
    outcome.error_type = *outcome.labeled.error_type;
    outcome.edit = *outcome.labeled.edit;
    outcome.source_id = j.at("source_id").get<std::string>();
    outcome.anchor_lemma = j.value("anchor_lemma", std::string());
    auto role = ParseSplitRole(j.at("split_role").get<std::string>());
    if (!role) throw ContractError("outcome " + id + ": bad split_role");
    outcome.split_role = *role;
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

std::vector<InjectionOutcome> ReadOutcomesFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot read " + path);
  return ReadOutcomes(in);
}

std::string SummaryJson(const GenerationSummary& summary) {
  Json j;
  j["eligible"] = summary.eligible;
  j["skipped_no_site"] = summary.skipped_no_site;
  Json counts = Json::object();
  for (const auto& [type, n] : summary.per_type_counts) {
    counts[std::string(ErrorTypeName(type))] = n;
  }
  j["per_type_counts"] = std::move(counts);
  j["seed"] = summary.seed;
  j["sentences"] = summary.total;
  return j.dump(2) + "\n";
}

}  // namespace ged
