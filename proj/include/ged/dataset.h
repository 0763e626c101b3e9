// Training-size ladders, fixed evaluation pools and generic corpus splits.

#ifndef GED_DATASET_H_
#define GED_DATASET_H_

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ged/corpus.h"
#include "ged/injection.h"

namespace ged {

enum class LadderKind { kPseudoPow2, kRealLadder, kCustom };

std::string_view LadderKindName(LadderKind kind);
std::optional<LadderKind> ParseLadderKind(std::string_view name);

// Ladder entry meaning "the whole training set".
inline constexpr std::size_t kAllSentences =
    std::numeric_limits<std::size_t>::max();

struct SamplingPlan {
  LadderKind kind = LadderKind::kCustom;
  std::vector<std::size_t> sizes;
  bool per_type = false;  // sizes count sentences per error type
  std::uint64_t seed = 0;

  // 2, 4, ..., 1024 sentences per error type.
  static SamplingPlan PseudoPow2(std::uint64_t seed);
  // 100, 300, 500, 1000, 3000, 5000, 10000, all.
  static SamplingPlan RealLadder(std::uint64_t seed);
  static SamplingPlan Custom(std::vector<std::size_t> sizes, std::uint64_t seed);

  // Throws ContractError on a plan that breaks its kind's invariants.
  void Check() const;
};

inline constexpr std::size_t kPseudoDevPerType = 200;
inline constexpr std::size_t kPseudoTestPerType = 200;
inline constexpr std::size_t kPseudoTestErrorFree = 200;

struct DatasetSplit {
  SamplingPlan plan;
  // Ladder size (per type for pseudo plans) -> sentence ids. Nested.
  std::map<std::size_t, std::vector<std::string>> train_sets;
  std::vector<std::string> dev;
  std::vector<std::string> test;
  std::string manifest_hash;
};

// Builds the pseudo-data split: per error type, dev and test pools of 200
// and nested training sets drawn from a disjoint pool, plus 200 error-free
// test sentences. Verb-list rules train on train_pool outcomes and evaluate
// on eval_pool outcomes only.
DatasetSplit BuildPseudoSplit(const std::vector<InjectionOutcome>& outcomes,
                              const std::vector<ParsedSentence>& error_free,
                              const SamplingPlan& plan);

struct RealSplit {
  std::vector<LabeledSentence> train;
  std::vector<LabeledSentence> dev;
  std::vector<LabeledSentence> test;
};

// Seeded 85 / 7.5 / 7.5 partition: round(0.85n), round(0.075n), remainder.
RealSplit SplitReal(const std::vector<LabeledSentence>& corpus,
                    std::uint64_t seed);

// Nested prefixes of one seeded permutation of `train`. kAllSentences
// resolves to |train|.
std::map<std::size_t, std::vector<std::string>> SubsampleLadder(
    const std::vector<std::string>& train, const SamplingPlan& plan);

// Builds a DatasetSplit from an already partitioned real corpus.
DatasetSplit BuildRealSplit(const RealSplit& split, const SamplingPlan& plan);

// Digest over plan, seed and every assignment in canonical order.
std::string ComputeManifestHash(const DatasetSplit& split);

// Manifest JSON: {plan, seed, assignments, manifest_hash}.
std::string ManifestJson(const DatasetSplit& split);

// Datasets named "train_<size>", "dev", "test" materialized from the split.
// Error-free ids become all-C typed sentences.
std::map<std::string, std::vector<LabeledSentence>> MaterializePseudo(
    const DatasetSplit& split, const std::vector<InjectionOutcome>& outcomes,
    const std::vector<ParsedSentence>& error_free);

std::map<std::string, std::vector<LabeledSentence>> MaterializeReal(
    const DatasetSplit& split, const RealSplit& real);

}  // namespace ged

#endif  // GED_DATASET_H_
