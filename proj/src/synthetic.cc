#include "ged/synthetic.h"

#include <cctype>
#include <cstdio>

#include "ged/random.h"

namespace ged {
namespace {

struct Verb {
  const char* lemma;
  const char* past;
  const char* preposition = nullptr;  // governed preposition, if any
};

const std::vector<Verb> kListedTransitive = {
    {"answer", "answered"},   {"attend", "attended"},
    {"discuss", "discussed"}, {"inhabit", "inhabited"},
    {"mention", "mentioned"}, {"oppose", "opposed"},
    {"resemble", "resembled"}, {"approach", "approached"},
    {"consider", "considered"}, {"enter", "entered"},
    {"marry", "married"},     {"obey", "obeyed"},
    {"reach", "reached"},     {"visit", "visited"}};

const std::vector<Verb> kOtherTransitive = {
    {"buy", "bought"},       {"build", "built"},       {"sell", "sold"},
    {"announce", "announced"}, {"win", "won"},         {"approve", "approved"},
    {"support", "supported"}, {"need", "needed"},       {"find", "found"},
    {"open", "opened"},      {"hire", "hired"},         {"launch", "launched"},
    {"review", "reviewed"},  {"serve", "served"},       {"close", "closed"},
    {"sign", "signed"}};

const std::vector<Verb> kListedIntransitive = {
    {"agree", "agreed", "with"},       {"belong", "belonged", "to"},
    {"disagree", "disagreed", "with"}, {"relate", "related", "to"},
    {"apply", "applied", "for"},       {"graduate", "graduated", "from"},
    {"listen", "listened", "to"},      {"specialize", "specialized", "in"},
    {"worry", "worried", "about"}};

const std::vector<Verb> kOtherIntransitive = {
    {"go", "went", "to"},         {"arrive", "arrived", "in"},
    {"look", "looked", "at"},     {"talk", "talked", "about"},
    {"wait", "waited", "for"},    {"live", "lived", "in"},
    {"work", "worked", "for"},    {"return", "returned", "to"},
    {"speak", "spoke", "with"},   {"respond", "responded", "to"}};

const std::vector<Verb> kBareIntransitive = {
    {"leave", "left"},   {"smile", "smiled"}, {"resign", "resigned"},
    {"win", "won"},      {"fail", "failed"},  {"disappear", "disappeared"},
    {"retire", "retired"}, {"laugh", "laughed"}};

// Verbs heading an infinitival or gerund subject / a to-infinitive.
const std::vector<Verb> kActivityVerbs = {
    {"learn", "learned"}, {"read", "read"},   {"make", "made"},
    {"write", "wrote"},   {"play", "played"}, {"keep", "kept"},
    {"find", "found"},    {"build", "built"}, {"drive", "drove"},
    {"teach", "taught"},  {"visit", "visited"}, {"watch", "watched"}};

const std::vector<Verb> kControlVerbs = {
    {"want", "wanted"}, {"plan", "planned"},     {"decide", "decided"},
    {"try", "tried"},   {"hope", "hoped"},       {"refuse", "refused"},
    {"agree", "agreed"}, {"promise", "promised"}};

const std::vector<Verb> kHaveVerbs = {
    {"have", "had"}, {"find", "found"}, {"need", "needed"}, {"get", "got"}};

const std::vector<const char*> kPronounSubjects = {"we", "they", "he", "she",
                                                   "I"};
const std::vector<const char*> kDeterminers = {"the", "the", "a", "this",
                                               "that", "their", "our", "his"};
const std::vector<const char*> kAdjectives = {
    "local", "new",     "small",  "old",    "young",   "former", "public",
    "large", "federal", "private", "recent", "popular", "major",  "national"};
const std::vector<const char*> kAgentNouns = {
    "company", "mayor",   "council",  "team",    "court",    "government",
    "family",  "student", "teacher",  "official", "committee", "restaurant",
    "newspaper", "doctor", "director", "bank",   "school",   "agency",
    "president", "union", "hospital", "museum",  "coach",    "manager",
    "lawyer",  "senator", "board",    "firm",    "group",    "player"};
const std::vector<const char*> kProperNouns = {
    "Smith", "Johnson", "Microsoft", "Boston", "Congress", "Garcia",
    "Chen",  "Atlanta", "Reuters",   "Lopez",  "Miller"};
const std::vector<const char*> kObjectNouns = {
    "matter",   "plan",     "question", "proposal", "meeting",  "church",
    "building", "house",    "island",   "agreement", "deal",    "letter",
    "issue",    "idea",     "law",      "decision", "bill",     "city",
    "office",   "village",  "country",  "program",  "contract", "report",
    "station",  "market",   "project",  "policy",   "museum",   "park"};
const std::vector<const char*> kPlaceNouns = {
    "city", "country", "office", "region", "state", "capital", "town",
    "area", "district", "court"};
const std::vector<const char*> kActivityObjects = {
    "English", "books",  "music", "cars",   "friends", "history",
    "money",   "houses", "games", "letters", "children", "movies"};
const std::vector<const char*> kPredicateAdjectives = {
    "difficult", "important", "easy", "useful", "expensive", "fun",
    "dangerous", "necessary"};
const std::vector<const char*> kThingNouns = {
    "book", "house", "job", "plan", "reason", "place", "story", "chance"};
const std::vector<const char*> kModals = {"will", "would", "could", "should",
                                          "must"};
const std::vector<const char*> kTimeAdverbs = {"yesterday", "today", "again",
                                               "recently", "later", "quickly"};
const std::vector<const char*> kDays = {"Monday", "Tuesday", "Friday",
                                       "Sunday"};

template <typename T>
const T& Pick(Rng& rng, const std::vector<T>& items) {
  return items[UniformIndex(rng, items.size())];
}

bool Chance(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::string Capitalized(std::string s) {
  if (!s.empty()) {
    s.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string Gerund(const std::string& lemma) {
  if (lemma.size() > 2 && lemma.back() == 'e' && lemma != "see") {
    return lemma.substr(0, lemma.size() - 1) + "ing";
  }
  return lemma + "ing";
}

class Builder {
 public:
  int Add(std::string form, std::string lemma, std::string upos,
          std::string deprel) {
    Token t;
    t.index = static_cast<int>(tokens_.size()) + 1;
    t.form = std::move(form);
    t.lemma = std::move(lemma);
    t.upos = std::move(upos);
    t.deprel = std::move(deprel);
    tokens_.push_back(std::move(t));
    return tokens_.back().index;
  }
  void Head(int index, int head) { tokens_[index - 1].head = head; }
  int size() const { return static_cast<int>(tokens_.size()); }

  ParsedSentence Finish(std::string id) {
    if (!tokens_.empty()) tokens_[0].form = Capitalized(tokens_[0].form);
    ParsedSentence s;
    s.id = std::move(id);
    s.source = "synthetic";
    s.tokens = std::move(tokens_);
    tokens_.clear();
    return s;
  }

 private:
  std::vector<Token> tokens_;
};

class SentenceMaker {
 public:
  explicit SentenceMaker(Rng& rng) : rng_(rng) {}

  // Common-noun phrase: (det) (adj) noun [of the noun]. Returns the head.
  int NounPhrase(Builder& b, const std::vector<const char*>& nouns,
                 const std::string& deprel, double det_p = 0.85,
                 double adj_p = 0.4, double nmod_p = 0.0) {
    int det = 0, adj = 0;
    if (Chance(rng_, det_p)) {
      const std::string d = Pick(rng_, kDeterminers);
      const bool possessive = d == "their" || d == "our" || d == "his";
      det = b.Add(d, d, possessive ? "PRON" : "DET",
                  possessive ? "nmod:poss" : "det");
    }
    if (Chance(rng_, adj_p)) {
      const char* a = Pick(rng_, kAdjectives);
      adj = b.Add(a, a, "ADJ", "amod");
    }
    const char* n = Pick(rng_, nouns);
    const int head = b.Add(n, n, "NOUN", deprel);
    if (det) b.Head(det, head);
    if (adj) b.Head(adj, head);
    if (Chance(rng_, nmod_p)) {
      const int of = b.Add("of", "of", "ADP", "case");
      const int the = b.Add("the", "the", "DET", "det");
      const char* p = Pick(rng_, kPlaceNouns);
      const int place = b.Add(p, p, "NOUN", "nmod");
      b.Head(of, place);
      b.Head(the, place);
      b.Head(place, head);
    }
    return head;
  }

  // Subject: pronoun with probability `pron_p`, else a proper or common noun.
  int Subject(Builder& b, double pron_p) {
    if (Chance(rng_, pron_p)) {
      const char* p = Pick(rng_, kPronounSubjects);
      return b.Add(p, Lower(p), "PRON", "nsubj");
    }
    if (Chance(rng_, 0.25)) {
      const char* p = Pick(rng_, kProperNouns);
      return b.Add(p, p, "PROPN", "nsubj");
    }
    return NounPhrase(b, kAgentNouns, "nsubj", 1.0, 0.4, 0.2);
  }

  // Finite verb, optionally preceded by a modal. Returns the verb.
  int FiniteVerb(Builder& b, const Verb& v, const std::string& deprel) {
    int aux = 0;
    std::string form = v.past;
    if (Chance(rng_, 0.3)) {
      const char* m = Pick(rng_, kModals);
      aux = b.Add(m, m, "AUX", "aux");
      form = v.lemma;
    }
    const int verb = b.Add(form, v.lemma, "VERB", deprel);
    if (aux) b.Head(aux, verb);
    return verb;
  }

  void Modifiers(Builder& b, int verb, int max_pp = 1) {
    for (int k = 0; k < max_pp; ++k) {
      if (!Chance(rng_, 0.35)) continue;
      const char* preps[] = {"in", "at", "near", "after", "during"};
      const char* prep = preps[UniformIndex(rng_, 5)];
      const int c = b.Add(prep, prep, "ADP", "case");
      const int d = b.Add("the", "the", "DET", "det");
      const char* p = Pick(rng_, kPlaceNouns);
      const int n = b.Add(p, p, "NOUN", "obl");
      b.Head(c, n);
      b.Head(d, n);
      b.Head(n, verb);
    }
    if (Chance(rng_, 0.25)) {
      if (Chance(rng_, 0.5)) {
        const int a = b.Add(Pick(rng_, kTimeAdverbs), "", "ADV", "advmod");
        b.Head(a, verb);
      } else {
        const int on = b.Add("on", "on", "ADP", "case");
        const char* day = Pick(rng_, kDays);
        const int n = b.Add(day, day, "PROPN", "obl");
        b.Head(on, n);
        b.Head(n, verb);
      }
    }
  }

  int Period(Builder& b, int root) {
    const int p = b.Add(".", ".", "PUNCT", "punct");
    b.Head(p, root);
    return p;
  }

  // SUBJ (modal) VERB OBJ (PP) .
  void Transitive(Builder& b, const Verb& v, double pron_p) {
    const int subj = Subject(b, pron_p);
    const int verb = FiniteVerb(b, v, "root");
    b.Head(subj, verb);
    const int obj = NounPhrase(b, kObjectNouns, "obj", 0.9, 0.35);
    b.Head(obj, verb);
    Modifiers(b, verb);
    Period(b, verb);
  }

  // SUBJ (modal) VERB PREP NP (PP) .
  void Prepositional(Builder& b, const Verb& v, double pron_p) {
    const int subj = Subject(b, pron_p);
    const int verb = FiniteVerb(b, v, "root");
    b.Head(subj, verb);
    const int c = b.Add(v.preposition, v.preposition, "ADP", "case");
    int obl;
    if (Chance(rng_, 0.2)) {
      const char* pron[] = {"it", "them", "him", "her"};
      const char* p = pron[UniformIndex(rng_, 4)];
      obl = b.Add(p, p, "PRON", "obl");
    } else {
      obl = NounPhrase(b, kObjectNouns, "obl", 0.9, 0.3);
    }
    b.Head(c, obl);
    b.Head(obl, verb);
    Modifiers(b, verb);
    Period(b, verb);
  }

  // SUBJ VERB (ADV) .
  void Bare(Builder& b) {
    const int subj = Subject(b, 0.8);
    const int verb = FiniteVerb(b, Pick(rng_, kBareIntransitive), "root");
    b.Head(subj, verb);
    Modifiers(b, verb);
    Period(b, verb);
  }

  // SUBJ had a book to read .  /  SUBJ decided to visit the museum .
  void Infinitive(Builder& b) {
    const int subj = Subject(b, 0.85);
    if (Chance(rng_, 0.5)) {
      const int verb = FiniteVerb(b, Pick(rng_, kHaveVerbs), "root");
      b.Head(subj, verb);
      const int noun = NounPhrase(b, kThingNouns, "obj", 1.0, 0.3);
      b.Head(noun, verb);
      const int to = b.Add("to", "to", "PART", "mark");
      const Verb& act = Pick(rng_, kActivityVerbs);
      const int inf = b.Add(act.lemma, act.lemma, "VERB", "acl");
      b.Head(to, inf);
      b.Head(inf, noun);
      Period(b, verb);
    } else {
      const int verb = FiniteVerb(b, Pick(rng_, kControlVerbs), "root");
      b.Head(subj, verb);
      const int to = b.Add("to", "to", "PART", "mark");
      const Verb& act = Chance(rng_, 0.3) ? Pick(rng_, kOtherTransitive)
                                          : Pick(rng_, kActivityVerbs);
      const int inf = b.Add(act.lemma, act.lemma, "VERB", "xcomp");
      b.Head(to, inf);
      b.Head(inf, verb);
      const int obj = NounPhrase(b, kObjectNouns, "obj", 0.9, 0.3);
      b.Head(obj, inf);
      Modifiers(b, verb);
      Period(b, verb);
    }
  }

  // Learning English is difficult .  /  To learn English is difficult .
  void ClausalSubject(Builder& b) {
    const Verb& act = Pick(rng_, kActivityVerbs);
    int to = 0, verb;
    if (Chance(rng_, 0.35)) {
      to = b.Add("to", "to", "PART", "mark");
      verb = b.Add(act.lemma, act.lemma, "VERB", "csubj");
      b.Head(to, verb);
    } else {
      verb = b.Add(Gerund(act.lemma), act.lemma, "VERB", "csubj");
    }
    const char* o = Pick(rng_, kActivityObjects);
    const int obj = b.Add(o, o, std::string(o) == "English" ? "PROPN" : "NOUN",
                          "obj");
    b.Head(obj, verb);
    const int cop = b.Add(Chance(rng_, 0.8) ? "is" : "was", "be", "AUX", "cop");
    const char* a = Pick(rng_, kPredicateAdjectives);
    const int adj = b.Add(a, a, "ADJ", "root");
    b.Head(cop, adj);
    b.Head(verb, adj);
    if (Chance(rng_, 0.3)) {
      const int f = b.Add("for", "for", "ADP", "case");
      const char* n = Pick(rng_, kAgentNouns);
      const int noun = b.Add(std::string(n) + "s", n, "NOUN", "obl");
      b.Head(f, noun);
      b.Head(noun, adj);
    }
    Period(b, adj);
  }

  // A sentence outside the eligible length band. Empty lemmas are filled in
  // from the form once the sentence is finished.
  void Extreme(Builder& b) {
    if (Chance(rng_, 0.5)) {
      const int subj = b.Add(Pick(rng_, kPronounSubjects), "", "PRON", "nsubj");
      const Verb& v = Pick(rng_, kBareIntransitive);
      const int verb = b.Add(v.past, v.lemma, "VERB", "root");
      b.Head(subj, verb);
      Period(b, verb);
      return;
    }
    const int subj = Subject(b, 0.0);
    const int verb = FiniteVerb(b, Pick(rng_, kListedTransitive), "root");
    b.Head(subj, verb);
    const int obj = NounPhrase(b, kObjectNouns, "obj", 1.0, 1.0);
    b.Head(obj, verb);
    while (b.size() < 27) {
      const int c = b.Add("in", "in", "ADP", "case");
      const int d = b.Add("the", "the", "DET", "det");
      const int a = b.Add(Pick(rng_, kAdjectives), "", "ADJ", "amod");
      const char* p = Pick(rng_, kPlaceNouns);
      const int n = b.Add(p, p, "NOUN", "obl");
      b.Head(c, n);
      b.Head(d, n);
      b.Head(a, n);
      b.Head(n, verb);
    }
    Period(b, verb);
  }

 private:
  Rng& rng_;
};

}  // namespace

std::vector<ParsedSentence> GenerateSyntheticCorpus(
    const SyntheticCorpusOptions& options) {
  std::vector<ParsedSentence> corpus;
  corpus.reserve(options.sentences);
  Rng rng(DeriveSeed(options.seed, "synthetic-corpus"));
  SentenceMaker maker(rng);
  for (std::size_t i = 0; i < options.sentences; ++i) {
    Builder b;
    const double r = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (r < 0.22) {
      maker.Transitive(b, Pick(rng, kListedTransitive), 0.75);
    } else if (r < 0.30) {
      maker.Transitive(b, Pick(rng, kOtherTransitive), 0.5);
    } else if (r < 0.52) {
      maker.Prepositional(b, Pick(rng, kListedIntransitive), 0.75);
    } else if (r < 0.58) {
      maker.Prepositional(b, Pick(rng, kOtherIntransitive), 0.5);
    } else if (r < 0.70) {
      maker.Transitive(b, Pick(rng, kOtherTransitive), 0.0);
    } else if (r < 0.82) {
      maker.Infinitive(b);
    } else if (r < 0.94) {
      maker.ClausalSubject(b);
    } else if (r < 0.985) {
      maker.Bare(b);
    } else {
      maker.Extreme(b);
    }
    char id[64];
    std::snprintf(id, sizeof id, "%s-%06zu", options.id_prefix.c_str(), i + 1);
    ParsedSentence s = b.Finish(id);
    for (Token& t : s.tokens) {
      if (t.lemma.empty()) t.lemma = Lower(t.form);
    }
    corpus.push_back(std::move(s));
  }
  return corpus;
}

}  // namespace ged
