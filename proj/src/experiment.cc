#include "ged/experiment.h"

#include <atomic>
#include <thread>

namespace ged {
namespace {

using SentenceFeatures = std::vector<FeatureVector>;

std::vector<SentenceFeatures> ExtractAll(
    const std::vector<LabeledSentence>& sentences) {
  std::vector<SentenceFeatures> out;
  out.reserve(sentences.size());
  for (const LabeledSentence& s : sentences) {
    out.push_back(ExtractSentenceFeatures(s.sentence));
  }
  return out;
}

std::vector<LabeledSentence> InScheme(std::vector<LabeledSentence> data,
                                      SchemeKind scheme) {
  if (scheme == SchemeKind::kBinary) {
    for (LabeledSentence& s : data) s = ToBinary(std::move(s));
  }
  return data;
}

TrainedDetector TrainSelecting(const std::vector<LabeledSentence>& train,
                               const std::vector<LabeledSentence>& dev,
                               const std::vector<SentenceFeatures>& dev_features,
                               int epochs, std::uint64_t seed) {
  if (epochs < 1 || epochs > kMaxEpochs) {
    throw ContractError("epochs must be between 1 and " +
                        std::to_string(kMaxEpochs));
  }
  PerceptronTrainer trainer(train, seed);
  std::vector<PerceptronTrainer::Encoded> encoded_dev;
  encoded_dev.reserve(dev.size());
  for (const SentenceFeatures& f : dev_features) {
    encoded_dev.push_back(trainer.Encode(f));
  }

  TrainedDetector result{LinearModel(train.front().scheme), 0, {}};
  double best_f1 = -1.0;
  for (int epoch = 1; epoch <= epochs; ++epoch) {
    trainer.RunEpoch();
    std::vector<LabeledSentence> predicted;
    predicted.reserve(dev.size());
    for (std::size_t i = 0; i < dev.size(); ++i) {
      LabeledSentence p = LabelAllCorrect(dev[i].sentence, dev[i].scheme);
      p.labels = trainer.PredictAveraged(encoded_dev[i]);
      predicted.push_back(std::move(p));
    }
    MetricsReport report = ComputePrf(Score(predicted, dev));
    if (report.micro.f1 > best_f1) {
      best_f1 = report.micro.f1;
      result.model = trainer.AveragedModel();
    }
    result.dev_reports.emplace_back(epoch, std::move(report));
  }
  result.best_epoch = SelectBestEpoch(result.dev_reports);
  result.model.metadata.best_epoch = result.best_epoch;
  result.model.metadata.epochs = epochs;
  return result;
}

}  // namespace

std::vector<std::uint64_t> TrainingSeeds(std::uint64_t seed, int n) {
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < n; ++i) seeds.push_back(seed + static_cast<unsigned>(i));
  return seeds;
}

TrainedDetector TrainWithDevSelection(const std::vector<LabeledSentence>& train,
                                      const std::vector<LabeledSentence>& dev,
                                      int epochs, std::uint64_t seed) {
  if (dev.empty()) throw ContractError("development set is empty");
  return TrainSelecting(train, dev, ExtractAll(dev), epochs, seed);
}

ExperimentResult RunLadderExperiment(
    const std::map<std::string, std::vector<LabeledSentence>>& datasets,
    const std::vector<std::size_t>& train_sizes,
    const ExperimentConfig& config) {
  auto get = [&](const std::string& name) {
    auto it = datasets.find(name);
    if (it == datasets.end()) throw ContractError("missing dataset " + name);
    return InScheme(it->second, config.scheme);
  };
  const std::vector<LabeledSentence> dev = get("dev");
  const std::vector<LabeledSentence> test = get("test");
  if (dev.empty() || test.empty()) {
    throw ContractError("development and test sets must be non-empty");
  }
  const std::vector<SentenceFeatures> dev_features = ExtractAll(dev);
  std::map<std::size_t, std::vector<LabeledSentence>> train_sets;
  for (std::size_t size : train_sizes) {
    train_sets[size] = get("train_" + std::to_string(size));
  }
  const std::vector<std::uint64_t> seeds =
      TrainingSeeds(config.seed, config.seeds);

  ExperimentResult result;
  for (std::size_t size : train_sizes) {
    for (std::uint64_t seed : seeds) {
      JobResult job;
      job.train_size = size;
      job.seed = seed;
      result.jobs.push_back(std::move(job));
    }
  }

  auto run_job = [&](JobResult& job) {
    TrainedDetector detector =
        TrainSelecting(train_sets.at(job.train_size), dev, dev_features,
                       config.epochs, job.seed);
    job.best_epoch = detector.best_epoch;
    job.test_predictions.reserve(test.size());
    for (const LabeledSentence& gold : test) {
      job.test_predictions.push_back(Predict(detector.model, gold.sentence));
    }
    job.test_report = ComputePrf(Score(job.test_predictions, test));
  };

  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    for (JobResult& job : result.jobs) run_job(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < result.jobs.size(); i = next++) {
            run_job(result.jobs[i]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : workers) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (std::size_t size : train_sizes) {
    std::vector<MetricsReport> runs;
    for (const JobResult& job : result.jobs) {
      if (job.train_size == size) runs.push_back(job.test_report);
    }
    result.curve.push_back(CurvePoint{size, Aggregate(runs)});
  }
  return result;
}

}  // namespace ged
