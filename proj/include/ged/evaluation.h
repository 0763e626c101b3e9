// Token-level detection scoring and the multi-seed reporting protocol.

#ifndef GED_EVALUATION_H_
#define GED_EVALUATION_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ged/corpus.h"

namespace ged {

struct Counts {
  long tp = 0;
  long fp = 0;
  long fn = 0;

  bool operator==(const Counts&) const = default;
};

// Per error label (every non-C label of the scheme, zero rows included).
struct ConfusionCounts {
  LabelScheme scheme = LabelScheme::Typed();
  std::map<std::string, Counts> per_label;
  Counts micro;
  std::size_t n_sentences = 0;
};

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

inline constexpr std::string_view kMicroLabel = "micro";

struct MetricsReport {
  LabelScheme scheme = LabelScheme::Typed();
  std::size_t n_sentences = 0;
  std::map<std::string, Counts> counts;  // per label, as scored
  Counts micro_counts;
  std::map<std::string, Prf> per_label;
  Prf micro;

  // Row labels in reporting order: the scheme's error labels, then "micro".
  std::vector<std::string> RowLabels() const;
  const Prf& Row(const std::string& label) const;
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

struct PrfAggregate {
  MeanStd precision;
  MeanStd recall;
  MeanStd f1;
};

struct RunAggregate {
  std::vector<MetricsReport> runs;
  std::map<std::string, PrfAggregate> rows;  // per label plus "micro"
};

struct CurvePoint {
  std::size_t train_size = 0;
  RunAggregate aggregate;
};

// pred and gold are matched by sentence id. Throws ContractError naming the
// first id that is missing, duplicated or differs in length.
ConfusionCounts Score(const std::vector<LabeledSentence>& pred,
                      const std::vector<LabeledSentence>& gold);

Prf PrfFromCounts(const Counts& counts);
MetricsReport ComputePrf(const ConfusionCounts& counts);

// Mean and sample standard deviation of every metric. Throws on empty input
// or mixed schemes.
RunAggregate Aggregate(const std::vector<MetricsReport>& runs);

// CSV header:
// train_size,label,precision_mean,precision_std,recall_mean,recall_std,f1_mean,f1_std
std::string EmitCurve(const std::vector<CurvePoint>& points);

struct CurveRow {
  std::size_t train_size = 0;
  std::string label;
  PrfAggregate values;
};
std::vector<CurveRow> ParseCurve(std::string_view csv);

// Epoch with the best micro F1 on the development set; earliest wins ties.
int SelectBestEpoch(const std::vector<std::pair<int, MetricsReport>>& dev);

inline constexpr int kMaxEpochs = 10;

// JSON mirrors at full double precision.
std::string ReportJson(const MetricsReport& report);
MetricsReport ReportFromJson(std::string_view json);
std::string AggregateJson(const std::vector<CurvePoint>& points);

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double value);

}  // namespace ged

#endif  // GED_EVALUATION_H_
