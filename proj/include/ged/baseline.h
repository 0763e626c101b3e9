// Averaged-perceptron token classifier over window features. Serves as a
// non-neural reference detector that needs no external model.

#ifndef GED_BASELINE_H_
#define GED_BASELINE_H_

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ged/corpus.h"
#include "ged/random.h"

namespace ged {

// Active feature names of one token (each with value 1.0). Forms, lemmas and
// UPOS at offsets -2..+2, (form, UPOS) bigrams over (-1,0) and (0,+1), a
// sentence-initial flag and a bias.
using FeatureVector = std::vector<std::string>;

// `position` is 1-based.
FeatureVector ExtractFeatures(const ParsedSentence& sentence, int position);
std::vector<FeatureVector> ExtractSentenceFeatures(
    const ParsedSentence& sentence);

struct ModelMetadata {
  int epochs = 0;
  std::uint64_t seed = 0;
  int best_epoch = 0;  // 0 when no development set was used
};

class LinearModel {
 public:
  explicit LinearModel(LabelScheme scheme) : scheme_(std::move(scheme)) {}

  const LabelScheme& scheme() const { return scheme_; }
  // Feature -> one weight per scheme label.
  const std::map<std::string, std::vector<double>>& weights() const {
    return weights_;
  }
  void SetWeights(const std::string& feature, std::vector<double> weights);

  ModelMetadata metadata;

  // Index of the best-scoring label; ties go to the earlier label.
  int Classify(const FeatureVector& features) const;

  std::string ToJson() const;
  static LinearModel FromJson(std::string_view json);
  static LinearModel FromFile(const std::string& path);

  bool operator==(const LinearModel& other) const {
    return scheme_ == other.scheme_ && weights_ == other.weights_;
  }

 private:
  LabelScheme scheme_;
  std::map<std::string, std::vector<double>> weights_;
};

// Incremental trainer, so a caller can evaluate the averaged weights after
// every epoch.
class PerceptronTrainer {
 public:
  // Feature ids of every token of one sentence; unknown features dropped.
  using Encoded = std::vector<std::vector<int>>;

  PerceptronTrainer(const std::vector<LabeledSentence>& data,
                    std::uint64_t seed);

  void RunEpoch();
  int epochs_run() const { return epochs_; }

  Encoded Encode(const std::vector<FeatureVector>& token_features) const;
  // Labels predicted with the weights averaged over all steps so far.
  std::vector<std::string> PredictAveraged(const Encoded& sentence) const;
  LinearModel AveragedModel() const;

 private:
  int ArgmaxCurrent(const std::vector<int>& features) const;

  LabelScheme scheme_;
  std::uint64_t seed_;
  Rng rng_;
  std::size_t n_labels_;
  std::unordered_map<std::string, int> feature_ids_;
  std::vector<std::string> feature_names_;
  std::vector<Encoded> sentences_;
  std::vector<std::vector<int>> gold_;
  std::vector<double> weights_;      // feature-major, n_labels_ per feature
  std::vector<double> accumulated_;  // step-weighted updates for averaging
  double step_ = 1.0;
  int epochs_ = 0;
};

// Runs `epochs` epochs and returns the averaged model. Throws on empty data
// or mixed schemes.
LinearModel Train(const std::vector<LabeledSentence>& data, int epochs,
                  std::uint64_t seed);

LabeledSentence Predict(const LinearModel& model,
                        const ParsedSentence& sentence);

}  // namespace ged

#endif  // GED_BASELINE_H_
