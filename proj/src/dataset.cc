#include "ged/dataset.h"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "ged/digest.h"
#include "ged/json_io.h"
#include "ged/random.h"

namespace ged {
namespace {

Json SizeToJson(std::size_t size) {
  return size == kAllSentences ? Json("all") : Json(size);
}

Json PlanToJson(const SamplingPlan& plan) {
  Json j;
  j["ladder_kind"] = LadderKindName(plan.kind);
  Json sizes = Json::array();
  for (std::size_t s : plan.sizes) sizes.push_back(SizeToJson(s));
  j["sizes"] = std::move(sizes);
  j["per_type"] = plan.per_type;
  j["seed"] = plan.seed;
  return j;
}

Json AssignmentsToJson(const DatasetSplit& split) {
  Json train = Json::object();
  for (const auto& [size, ids] : split.train_sets) {
    train[std::to_string(size)] = ids;
  }
  Json j;
  j["train"] = std::move(train);
  j["dev"] = split.dev;
  j["test"] = split.test;
  return j;
}

std::vector<std::string> Shuffled(std::vector<std::string> ids,
                                  std::uint64_t seed, std::string_view stream) {
  std::sort(ids.begin(), ids.end());
  Rng rng(DeriveSeed(seed, stream));
  Shuffle(ids, rng);
  return ids;
}

std::size_t LargestSize(const SamplingPlan& plan) {
  return plan.sizes.empty() ? 0 : plan.sizes.back();
}

}  // namespace

std::string_view LadderKindName(LadderKind kind) {
  switch (kind) {
    case LadderKind::kPseudoPow2:
      return "pseudo_pow2";
    case LadderKind::kRealLadder:
      return "real_ladder";
    case LadderKind::kCustom:
      return "custom";
  }
  return "custom";
}

std::optional<LadderKind> ParseLadderKind(std::string_view name) {
  if (name == "pseudo_pow2") return LadderKind::kPseudoPow2;
  if (name == "real_ladder") return LadderKind::kRealLadder;
  if (name == "custom") return LadderKind::kCustom;
  return std::nullopt;
}

SamplingPlan SamplingPlan::PseudoPow2(std::uint64_t seed) {
  SamplingPlan plan;
  plan.kind = LadderKind::kPseudoPow2;
  for (int k = 1; k <= 10; ++k) plan.sizes.push_back(std::size_t{1} << k);
  plan.per_type = true;
  plan.seed = seed;
  return plan;
}

SamplingPlan SamplingPlan::RealLadder(std::uint64_t seed) {
  SamplingPlan plan;
  plan.kind = LadderKind::kRealLadder;
  plan.sizes = {100, 300, 500, 1000, 3000, 5000, 10000, kAllSentences};
  plan.per_type = false;
  plan.seed = seed;
  return plan;
}

SamplingPlan SamplingPlan::Custom(std::vector<std::size_t> sizes,
                                  std::uint64_t seed) {
  SamplingPlan plan;
  plan.kind = LadderKind::kCustom;
  plan.sizes = std::move(sizes);
  plan.seed = seed;
  plan.Check();
  return plan;
}

void SamplingPlan::Check() const {
  if (sizes.empty()) throw ContractError("sampling plan has no sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw ContractError("ladder sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      throw ContractError("ladder sizes must be strictly increasing");
    }
  }
  if (kind == LadderKind::kPseudoPow2 &&
      (sizes != PseudoPow2(seed).sizes || !per_type)) {
    throw ContractError("pseudo_pow2 plan must be 2^1..2^10 per type");
  }
  if (kind == LadderKind::kRealLadder &&
      (sizes != RealLadder(seed).sizes || per_type)) {
    throw ContractError("real_ladder plan must be 100..10000,all");
  }
}

DatasetSplit BuildPseudoSplit(const std::vector<InjectionOutcome>& outcomes,
                              const std::vector<ParsedSentence>& error_free,
                              const SamplingPlan& plan) {
  if (plan.kind != LadderKind::kPseudoPow2) {
    throw ContractError("pseudo split requires a pseudo_pow2 plan");
  }
  plan.Check();
  const std::size_t largest = LargestSize(plan);
  const std::size_t eval_need = kPseudoDevPerType + kPseudoTestPerType;

  struct TypePools {
    std::vector<std::string> train;
    std::vector<std::string> dev;
    std::vector<std::string> test;
  };
  std::map<ErrorType, TypePools> pools;
  std::vector<std::string> shortfalls;
  std::unordered_map<std::string, const InjectionOutcome*> by_id;

  for (ErrorType type : kAllErrorTypes) {
    const std::string name(ErrorTypeName(type));
    const bool verb_list = type == ErrorType::kTransVerbPrep ||
                           type == ErrorType::kIntransVerbObj;
    std::vector<std::string> train_candidates, eval_candidates;
    for (const InjectionOutcome& o : outcomes) {
      if (o.error_type != type) continue;
      const std::string& id = o.labeled.sentence.id;
      by_id[id] = &o;
      if (verb_list && o.split_role == SplitRole::kEvalPool) {
        eval_candidates.push_back(id);
      } else {
        train_candidates.push_back(id);
      }
    }

    std::vector<std::string> train, eval;
    if (verb_list) {
      train = Shuffled(std::move(train_candidates), plan.seed, "train/" + name);
      eval = Shuffled(std::move(eval_candidates), plan.seed, "eval/" + name);
      if (train.size() < largest) {
        shortfalls.push_back(name + " train_pool short by " +
                             std::to_string(largest - train.size()));
      }
      if (eval.size() < eval_need) {
        shortfalls.push_back(name + " eval_pool short by " +
                             std::to_string(eval_need - eval.size()));
      }
    } else {
      std::vector<std::string> pool =
          Shuffled(std::move(train_candidates), plan.seed, "pool/" + name);
      if (pool.size() < eval_need + largest) {
        shortfalls.push_back(name + " short by " +
                             std::to_string(eval_need + largest - pool.size()));
        continue;
      }
      eval.assign(pool.begin(), pool.begin() + eval_need);
      train.assign(pool.begin() + eval_need, pool.end());
    }
    if (train.size() < largest || eval.size() < eval_need) continue;
    TypePools& p = pools[type];
    p.dev.assign(eval.begin(), eval.begin() + kPseudoDevPerType);
    p.test.assign(eval.begin() + kPseudoDevPerType, eval.begin() + eval_need);
    p.train.assign(train.begin(), train.begin() + largest);
  }

  // Error-free test sentences never share a source with a sampled outcome.
  std::set<std::string> used_sources;
  for (const auto& [type, p] : pools) {
    for (const auto* list : {&p.train, &p.dev, &p.test}) {
      for (const std::string& id : *list) {
        used_sources.insert(by_id.at(id)->source_id);
      }
    }
  }
  std::vector<std::string> clean_ids;
  for (const ParsedSentence& s : error_free) {
    if (Eligible(s) && Validate(s).empty() && !used_sources.count(s.id)) {
      clean_ids.push_back(s.id);
    }
  }
  std::sort(clean_ids.begin(), clean_ids.end());
  clean_ids.erase(std::unique(clean_ids.begin(), clean_ids.end()),
                  clean_ids.end());
  clean_ids = Shuffled(std::move(clean_ids), plan.seed, "error_free");
  if (clean_ids.size() < kPseudoTestErrorFree) {
    shortfalls.push_back("error-free short by " +
                         std::to_string(kPseudoTestErrorFree - clean_ids.size()));
  }

  if (!shortfalls.empty()) {
    std::string message = "insufficient material for pseudo split:";
    for (const std::string& s : shortfalls) message += " " + s + ";";
    message.pop_back();
    throw ContractError(message);
  }

  DatasetSplit split;
  split.plan = plan;
  for (std::size_t size : plan.sizes) {
    std::vector<std::string>& ids = split.train_sets[size];
    for (const auto& [type, p] : pools) {
      ids.insert(ids.end(), p.train.begin(), p.train.begin() + size);
    }
  }
  for (const auto& [type, p] : pools) {
    split.dev.insert(split.dev.end(), p.dev.begin(), p.dev.end());
    split.test.insert(split.test.end(), p.test.begin(), p.test.end());
  }
  split.test.insert(split.test.end(), clean_ids.begin(),
                    clean_ids.begin() + kPseudoTestErrorFree);
  split.manifest_hash = ComputeManifestHash(split);
  return split;
}

RealSplit SplitReal(const std::vector<LabeledSentence>& corpus,
                    std::uint64_t seed) {
  const std::size_t n = corpus.size();
  if (n < 3) {
    throw ContractError("real split needs at least 3 sentences, got " +
                        std::to_string(n));
  }
  // Integer half-up rounding of 0.85n and 0.075n.
  const std::size_t n_train = (85 * n + 50) / 100;
  const std::size_t n_dev = (75 * n + 500) / 1000;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(DeriveSeed(seed, "real_split"));
  Shuffle(order, rng);

  RealSplit split;
  for (std::size_t k = 0; k < n; ++k) {
    const LabeledSentence& s = corpus[order[k]];
    if (k < n_train) {
      split.train.push_back(s);
    } else if (k < n_train + n_dev) {
      split.dev.push_back(s);
    } else {
      split.test.push_back(s);
    }
  }
  return split;
}

std::map<std::size_t, std::vector<std::string>> SubsampleLadder(
    const std::vector<std::string>& train, const SamplingPlan& plan) {
  if (plan.kind == LadderKind::kPseudoPow2) {
    throw ContractError("ladder subsampling needs a real_ladder or custom plan");
  }
  plan.Check();
  for (std::size_t size : plan.sizes) {
    if (size != kAllSentences && size > train.size()) {
      throw ContractError("ladder size " + std::to_string(size) +
                          " exceeds training set of " +
                          std::to_string(train.size()));
    }
  }
  std::vector<std::string> order = train;
  Rng rng(DeriveSeed(plan.seed, "ladder"));
  Shuffle(order, rng);
  std::map<std::size_t, std::vector<std::string>> ladder;
  for (std::size_t size : plan.sizes) {
    const std::size_t n = size == kAllSentences ? order.size() : size;
    ladder[n] = std::vector<std::string>(order.begin(), order.begin() + n);
  }
  return ladder;
}

DatasetSplit BuildRealSplit(const RealSplit& real, const SamplingPlan& plan) {
  std::vector<std::string> train_ids;
  for (const LabeledSentence& s : real.train) train_ids.push_back(s.sentence.id);
  DatasetSplit split;
  split.plan = plan;
  split.train_sets = SubsampleLadder(train_ids, plan);
  for (const LabeledSentence& s : real.dev) split.dev.push_back(s.sentence.id);
  for (const LabeledSentence& s : real.test) split.test.push_back(s.sentence.id);
  split.manifest_hash = ComputeManifestHash(split);
  return split;
}

std::string ComputeManifestHash(const DatasetSplit& split) {
  Json j;
  j["plan"] = PlanToJson(split.plan);
  j["assignments"] = AssignmentsToJson(split);
  return Sha256Hex(j.dump());
}

std::string ManifestJson(const DatasetSplit& split) {
  Json j;
  j["plan"] = PlanToJson(split.plan);
  j["seed"] = split.plan.seed;
  j["assignments"] = AssignmentsToJson(split);
  j["manifest_hash"] = split.manifest_hash;
  return j.dump(1) + "\n";
}

std::map<std::string, std::vector<LabeledSentence>> MaterializePseudo(
    const DatasetSplit& split, const std::vector<InjectionOutcome>& outcomes,
    const std::vector<ParsedSentence>& error_free) {
  std::unordered_map<std::string, const LabeledSentence*> labeled;
  for (const InjectionOutcome& o : outcomes) {
    labeled[o.labeled.sentence.id] = &o.labeled;
  }
  std::unordered_map<std::string, const ParsedSentence*> clean;
  for (const ParsedSentence& s : error_free) clean.emplace(s.id, &s);

  auto lookup = [&](const std::string& id) {
    if (auto it = labeled.find(id); it != labeled.end()) return *it->second;
    if (auto it = clean.find(id); it != clean.end()) {
      return LabelAllCorrect(*it->second, LabelScheme::Typed());
    }
    throw ContractError("split references unknown sentence " + id);
  };
  auto collect = [&](const std::vector<std::string>& ids) {
    std::vector<LabeledSentence> out;
    out.reserve(ids.size());
    for (const std::string& id : ids) out.push_back(lookup(id));
    return out;
  };

  std::map<std::string, std::vector<LabeledSentence>> sets;
  for (const auto& [size, ids] : split.train_sets) {
    sets["train_" + std::to_string(size)] = collect(ids);
  }
  sets["dev"] = collect(split.dev);
  sets["test"] = collect(split.test);
  return sets;
}

std::map<std::string, std::vector<LabeledSentence>> MaterializeReal(
    const DatasetSplit& split, const RealSplit& real) {
  std::unordered_map<std::string, const LabeledSentence*> by_id;
  for (const auto* part : {&real.train, &real.dev, &real.test}) {
    for (const LabeledSentence& s : *part) by_id[s.sentence.id] = &s;
  }
  auto collect = [&](const std::vector<std::string>& ids) {
    std::vector<LabeledSentence> out;
    for (const std::string& id : ids) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        throw ContractError("split references unknown sentence " + id);
      }
      out.push_back(*it->second);
    }
    return out;
  };
  std::map<std::string, std::vector<LabeledSentence>> sets;
  for (const auto& [size, ids] : split.train_sets) {
    sets["train_" + std::to_string(size)] = collect(ids);
  }
  sets["dev"] = collect(split.dev);
  sets["test"] = collect(split.test);
  return sets;
}

}  // namespace ged
