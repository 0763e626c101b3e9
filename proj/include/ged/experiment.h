// Scaling-curve experiment with the baseline detector: for every ladder size
// and seed, train with best-dev-epoch selection, predict the test set, score
// it, then aggregate over seeds.

#ifndef GED_EXPERIMENT_H_
#define GED_EXPERIMENT_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ged/baseline.h"
#include "ged/evaluation.h"

namespace ged {

struct ExperimentConfig {
  SchemeKind scheme = SchemeKind::kTyped;
  int epochs = kMaxEpochs;
  int seeds = 5;
  std::uint64_t seed = 42;
  unsigned threads = 1;
};

// Training seeds are seed, seed + 1, ..., seed + n - 1.
std::vector<std::uint64_t> TrainingSeeds(std::uint64_t seed, int n);

struct TrainedDetector {
  LinearModel model;  // averaged weights of the selected epoch
  int best_epoch = 0;
  std::vector<std::pair<int, MetricsReport>> dev_reports;
};

// Trains up to `epochs` epochs, scoring the averaged weights on `dev` after
// each one, and keeps the epoch with the best dev micro F1.
TrainedDetector TrainWithDevSelection(const std::vector<LabeledSentence>& train,
                                      const std::vector<LabeledSentence>& dev,
                                      int epochs, std::uint64_t seed);

struct JobResult {
  std::size_t train_size = 0;
  std::uint64_t seed = 0;
  int best_epoch = 0;
  MetricsReport test_report;
  std::vector<LabeledSentence> test_predictions;
};

struct ExperimentResult {
  std::vector<JobResult> jobs;  // size-major, then seed order
  std::vector<CurvePoint> curve;
};

// `datasets` holds "train_<size>", "dev" and "test" as materialized by the
// dataset builder.
ExperimentResult RunLadderExperiment(
    const std::map<std::string, std::vector<LabeledSentence>>& datasets,
    const std::vector<std::size_t>& train_sizes, const ExperimentConfig& config);

}  // namespace ged

#endif  // GED_EXPERIMENT_H_
