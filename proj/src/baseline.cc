#include "ged/baseline.h"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

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

struct Window {
  std::string form, lemma, upos;
};

Window WindowAt(const ParsedSentence& s, int position) {
  if (position < 1) return {"<s>", "<s>", "<s>"};
  if (position > static_cast<int>(s.size())) return {"</s>", "</s>", "</s>"};
  const Token& t = s.at(position);
  return {Lower(t.form), Lower(t.lemma), t.upos};
}

}  // namespace

FeatureVector ExtractFeatures(const ParsedSentence& sentence, int position) {
  FeatureVector f;
  f.reserve(20);
  f.emplace_back("bias");
  Window window[5];
  for (int off = -2; off <= 2; ++off) {
    window[off + 2] = WindowAt(sentence, position + off);
    const std::string tag = "[" + std::to_string(off) + "]=";
    const Window& w = window[off + 2];
    f.push_back("w" + tag + w.form);
    f.push_back("l" + tag + w.lemma);
    f.push_back("p" + tag + w.upos);
  }
  const Window& prev = window[1];
  const Window& cur = window[2];
  const Window& next = window[3];
  f.push_back("wp[-1,0]=" + prev.form + "/" + prev.upos + "|" + cur.form + "/" +
              cur.upos);
  f.push_back("wp[0,+1]=" + cur.form + "/" + cur.upos + "|" + next.form + "/" +
              next.upos);
  if (position == 1) f.emplace_back("first");
  return f;
}

std::vector<FeatureVector> ExtractSentenceFeatures(
    const ParsedSentence& sentence) {
  std::vector<FeatureVector> out;
  out.reserve(sentence.size());
  for (int i = 1; i <= static_cast<int>(sentence.size()); ++i) {
    out.push_back(ExtractFeatures(sentence, i));
  }
  return out;
}

void LinearModel::SetWeights(const std::string& feature,
                             std::vector<double> weights) {
  if (weights.size() != scheme_.labels().size()) {
    throw ContractError("weight vector for '" + feature +
                        "' does not match the label count");
  }
  weights_[feature] = std::move(weights);
}

int LinearModel::Classify(const FeatureVector& features) const {
  const std::size_t n = scheme_.labels().size();
  std::vector<double> scores(n, 0.0);
  for (const std::string& name : features) {
    auto it = weights_.find(name);
    if (it == weights_.end()) continue;
    for (std::size_t l = 0; l < n; ++l) scores[l] += it->second[l];
  }
  int best = 0;
  for (std::size_t l = 1; l < n; ++l) {
    if (scores[l] > scores[best]) best = static_cast<int>(l);
  }
  return best;
}

std::string LinearModel::ToJson() const {
  Json j;
  j["scheme"] = scheme_.name();
  j["labels"] = scheme_.labels();
  Json weights = Json::object();
  for (const auto& [name, w] : weights_) weights[name] = w;
  j["weights"] = std::move(weights);
  Json meta;
  meta["epochs"] = metadata.epochs;
  meta["seed"] = metadata.seed;
  meta["best_epoch"] = metadata.best_epoch;
  j["metadata"] = std::move(meta);
  return j.dump() + "\n";
}

LinearModel LinearModel::FromJson(std::string_view json) {
  Json j;
  try {
    j = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw ContractError(std::string("model is not valid JSON: ") + e.what());
  }
  auto kind = ParseSchemeKind(j.at("scheme").get<std::string>());
  if (!kind) throw ContractError("model has an unknown scheme");
  LinearModel model(LabelScheme::Of(*kind));
  if (j.at("labels").get<std::vector<std::string>>() !=
      model.scheme().labels()) {
    throw ContractError("model label order does not match its scheme");
  }
  for (const auto& [name, w] : j.at("weights").items()) {
    model.SetWeights(name, w.get<std::vector<double>>());
  }
  const Json& meta = j.at("metadata");
  model.metadata.epochs = meta.value("epochs", 0);
  model.metadata.seed = meta.value("seed", std::uint64_t{0});
  model.metadata.best_epoch = meta.value("best_epoch", 0);
  return model;
}

LinearModel LinearModel::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

PerceptronTrainer::PerceptronTrainer(const std::vector<LabeledSentence>& data,
                                     std::uint64_t seed)
    : scheme_(data.empty() ? LabelScheme::Typed() : data.front().scheme),
      seed_(seed),
      rng_(DeriveSeed(seed, "perceptron")),
      n_labels_(scheme_.labels().size()) {
  if (data.empty()) throw ContractError("cannot train on empty data");
  for (const LabeledSentence& s : data) {
    if (!(s.scheme == scheme_)) {
      throw ContractError("training data mixes label schemes (sentence " +
                          s.sentence.id + ")");
    }
    if (s.labels.size() != s.sentence.size()) {
      throw ContractError("sentence " + s.sentence.id +
                          ": label count differs from token count");
    }
    Encoded encoded;
    std::vector<int> gold;
    for (const FeatureVector& token : ExtractSentenceFeatures(s.sentence)) {
      std::vector<int> ids;
      ids.reserve(token.size());
      for (const std::string& name : token) {
        auto [it, added] = feature_ids_.emplace(
            name, static_cast<int>(feature_names_.size()));
        if (added) feature_names_.push_back(name);
        ids.push_back(it->second);
      }
      encoded.push_back(std::move(ids));
    }
    for (const std::string& label : s.labels) {
      const int index = scheme_.IndexOf(label);
      if (index < 0) {
        throw ContractError("sentence " + s.sentence.id + ": label '" + label +
                            "' not in scheme");
      }
      gold.push_back(index);
    }
    sentences_.push_back(std::move(encoded));
    gold_.push_back(std::move(gold));
  }
  weights_.assign(feature_names_.size() * n_labels_, 0.0);
  accumulated_.assign(weights_.size(), 0.0);
}

int PerceptronTrainer::ArgmaxCurrent(const std::vector<int>& features) const {
  std::vector<double> scores(n_labels_, 0.0);
  for (int f : features) {
    const double* w = &weights_[static_cast<std::size_t>(f) * n_labels_];
    for (std::size_t l = 0; l < n_labels_; ++l) scores[l] += w[l];
  }
  int best = 0;
  for (std::size_t l = 1; l < n_labels_; ++l) {
    if (scores[l] > scores[best]) best = static_cast<int>(l);
  }
  return best;
}

void PerceptronTrainer::RunEpoch() {
  std::vector<std::size_t> order(sentences_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Shuffle(order, rng_);
  for (std::size_t s : order) {
    const Encoded& sentence = sentences_[s];
    for (std::size_t t = 0; t < sentence.size(); ++t) {
      const int gold = gold_[s][t];
      const int guess = ArgmaxCurrent(sentence[t]);
      if (guess != gold) {
        for (int f : sentence[t]) {
          const std::size_t base = static_cast<std::size_t>(f) * n_labels_;
          weights_[base + gold] += 1.0;
          weights_[base + guess] -= 1.0;
          accumulated_[base + gold] += step_;
          accumulated_[base + guess] -= step_;
        }
      }
      step_ += 1.0;
    }
  }
  ++epochs_;
}

PerceptronTrainer::Encoded PerceptronTrainer::Encode(
    const std::vector<FeatureVector>& token_features) const {
  Encoded encoded;
  encoded.reserve(token_features.size());
  for (const FeatureVector& token : token_features) {
    std::vector<int> ids;
    for (const std::string& name : token) {
      auto it = feature_ids_.find(name);
      if (it != feature_ids_.end()) ids.push_back(it->second);
    }
    encoded.push_back(std::move(ids));
  }
  return encoded;
}

std::vector<std::string> PerceptronTrainer::PredictAveraged(
    const Encoded& sentence) const {
  std::vector<std::string> labels;
  labels.reserve(sentence.size());
  std::vector<double> scores(n_labels_);
  for (const std::vector<int>& features : sentence) {
    std::fill(scores.begin(), scores.end(), 0.0);
    for (int f : features) {
      const std::size_t base = static_cast<std::size_t>(f) * n_labels_;
      for (std::size_t l = 0; l < n_labels_; ++l) {
        scores[l] += weights_[base + l] - accumulated_[base + l] / step_;
      }
    }
    std::size_t best = 0;
    for (std::size_t l = 1; l < n_labels_; ++l) {
      if (scores[l] > scores[best]) best = l;
    }
    labels.push_back(scheme_.labels()[best]);
  }
  return labels;
}

LinearModel PerceptronTrainer::AveragedModel() const {
  LinearModel model(scheme_);
  for (std::size_t f = 0; f < feature_names_.size(); ++f) {
    std::vector<double> averaged(n_labels_);
    bool nonzero = false;
    for (std::size_t l = 0; l < n_labels_; ++l) {
      const std::size_t i = f * n_labels_ + l;
      averaged[l] = weights_[i] - accumulated_[i] / step_;
      nonzero = nonzero || averaged[l] != 0.0;
    }
    if (nonzero) model.SetWeights(feature_names_[f], std::move(averaged));
  }
  model.metadata.epochs = epochs_;
  model.metadata.seed = seed_;
  return model;
}

LinearModel Train(const std::vector<LabeledSentence>& data, int epochs,
                  std::uint64_t seed) {
  if (epochs < 1) throw ContractError("epochs must be at least 1");
  PerceptronTrainer trainer(data, seed);
  for (int e = 0; e < epochs; ++e) trainer.RunEpoch();
  return trainer.AveragedModel();
}

LabeledSentence Predict(const LinearModel& model,
                        const ParsedSentence& sentence) {
  LabeledSentence out = LabelAllCorrect(sentence, model.scheme());
  for (int i = 1; i <= static_cast<int>(sentence.size()); ++i) {
    out.labels[i - 1] =
        model.scheme().labels()[model.Classify(ExtractFeatures(sentence, i))];
  }
  return out;
}

}  // namespace ged
