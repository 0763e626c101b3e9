#include "ged/evaluation.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "ged/json_io.h"

namespace ged {
namespace {

Json CountsToJson(const Counts& c, const Prf& prf) {
  Json j;
  j["tp"] = c.tp;
  j["fp"] = c.fp;
  j["fn"] = c.fn;
  j["precision"] = prf.precision;
  j["recall"] = prf.recall;
  j["f1"] = prf.f1;
  return j;
}

Counts CountsFromJson(const Json& j) {
  return Counts{j.at("tp").get<long>(), j.at("fp").get<long>(),
                j.at("fn").get<long>()};
}

MeanStd MeanAndStd(const std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  MeanStd out;
  // Clamp so rounding in the sum never puts the mean outside the runs.
  out.mean = std::clamp(sum / n, *lo, *hi);
  if (values.size() > 1) {
    double squares = 0.0;
    for (double v : values) squares += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(squares / (n - 1.0));
  }
  return out;
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos
                                            ? std::string_view::npos
                                            : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T ParseNumber(std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ContractError("bad number '" + std::string(text) + "' in curve CSV");
  }
  return value;
}

constexpr std::string_view kCurveHeader =
    "train_size,label,precision_mean,precision_std,recall_mean,recall_std,"
    "f1_mean,f1_std";

}  // namespace

std::vector<std::string> MetricsReport::RowLabels() const {
  std::vector<std::string> rows;
  for (const std::string& label : scheme.labels()) {
    if (label != kCorrectLabel) rows.push_back(label);
  }
  rows.emplace_back(kMicroLabel);
  return rows;
}

const Prf& MetricsReport::Row(const std::string& label) const {
  if (label == kMicroLabel) return micro;
  auto it = per_label.find(label);
  if (it == per_label.end()) {
    throw ContractError("report has no row for label '" + label + "'");
  }
  return it->second;
}

ConfusionCounts Score(const std::vector<LabeledSentence>& pred,
                      const std::vector<LabeledSentence>& gold) {
  ConfusionCounts counts;
  if (!gold.empty()) counts.scheme = gold.front().scheme;
  else if (!pred.empty()) counts.scheme = pred.front().scheme;
  for (const std::string& label : counts.scheme.labels()) {
    if (label != kCorrectLabel) counts.per_label[label] = Counts{};
  }

  std::unordered_map<std::string, const LabeledSentence*> pred_by_id;
  for (const LabeledSentence& p : pred) {
    if (!pred_by_id.emplace(p.sentence.id, &p).second) {
      throw ContractError("duplicate prediction for sentence " + p.sentence.id);
    }
  }
  std::unordered_map<std::string, bool> seen;
  for (const LabeledSentence& g : gold) {
    const std::string& id = g.sentence.id;
    if (!seen.emplace(id, true).second) {
      throw ContractError("duplicate gold sentence " + id);
    }
    auto it = pred_by_id.find(id);
    if (it == pred_by_id.end()) {
      throw ContractError("no prediction for sentence " + id);
    }
    const LabeledSentence& p = *it->second;
    if (!(p.scheme == counts.scheme) || !(g.scheme == counts.scheme)) {
      throw ContractError("label scheme mismatch at sentence " + id);
    }
    if (p.labels.size() != g.labels.size()) {
      throw ContractError("token count mismatch at sentence " + id);
    }
    for (std::size_t i = 0; i < g.labels.size(); ++i) {
      const std::string& pl = p.labels[i];
      const std::string& gl = g.labels[i];
      if (pl == gl) {
        if (gl != kCorrectLabel) ++counts.per_label[gl].tp;
        continue;
      }
      if (pl != kCorrectLabel) ++counts.per_label[pl].fp;
      if (gl != kCorrectLabel) ++counts.per_label[gl].fn;
    }
  }
  if (pred_by_id.size() != seen.size()) {
    for (const LabeledSentence& p : pred) {
      if (!seen.count(p.sentence.id)) {
        throw ContractError("prediction for unknown sentence " + p.sentence.id);
      }
    }
  }
  for (const auto& [label, c] : counts.per_label) {
    counts.micro.tp += c.tp;
    counts.micro.fp += c.fp;
    counts.micro.fn += c.fn;
  }
  counts.n_sentences = gold.size();
  return counts;
}

Prf PrfFromCounts(const Counts& c) {
  Prf prf;
  if (c.tp + c.fp > 0) {
    prf.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  }
  if (c.tp + c.fn > 0) {
    prf.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  }
  if (prf.precision + prf.recall > 0.0) {
    prf.f1 = 2.0 * prf.precision * prf.recall / (prf.precision + prf.recall);
  }
  return prf;
}

MetricsReport ComputePrf(const ConfusionCounts& counts) {
  MetricsReport report;
  report.scheme = counts.scheme;
  report.n_sentences = counts.n_sentences;
  report.counts = counts.per_label;
  report.micro_counts = counts.micro;
  for (const auto& [label, c] : counts.per_label) {
    report.per_label[label] = PrfFromCounts(c);
  }
  report.micro = PrfFromCounts(counts.micro);
  return report;
}

RunAggregate Aggregate(const std::vector<MetricsReport>& runs) {
  if (runs.empty()) throw ContractError("cannot aggregate zero runs");
  RunAggregate agg;
  agg.runs = runs;
  for (const MetricsReport& r : runs) {
    if (!(r.scheme == runs.front().scheme)) {
      throw ContractError("cannot aggregate runs with different schemes");
    }
  }
  for (const std::string& label : runs.front().RowLabels()) {
    std::vector<double> p, r, f;
    for (const MetricsReport& run : runs) {
      const Prf& row = run.Row(label);
      p.push_back(row.precision);
      r.push_back(row.recall);
      f.push_back(row.f1);
    }
    agg.rows[label] = PrfAggregate{MeanAndStd(p), MeanAndStd(r), MeanAndStd(f)};
  }
  return agg;
}

std::string FormatDouble(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

std::string EmitCurve(const std::vector<CurvePoint>& points) {
  std::string out(kCurveHeader);
  out += '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0 && points[i].train_size <= points[i - 1].train_size) {
      throw ContractError("curve points must be sorted by train_size");
    }
    const CurvePoint& point = points[i];
    if (point.aggregate.runs.empty()) {
      throw ContractError("curve point without runs");
    }
    for (const std::string& label : point.aggregate.runs.front().RowLabels()) {
      const PrfAggregate& row = point.aggregate.rows.at(label);
      out += std::to_string(point.train_size) + "," + label;
      for (const MeanStd* m : {&row.precision, &row.recall, &row.f1}) {
        out += "," + FormatDouble(m->mean) + "," + FormatDouble(m->std);
      }
      out += '\n';
    }
  }
  return out;
}

std::vector<CurveRow> ParseCurve(std::string_view csv) {
  std::vector<CurveRow> rows;
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) || line != kCurveHeader) {
    throw ContractError("curve CSV has an unexpected header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> f = SplitCommas(line);
    if (f.size() != 8) throw ContractError("curve row has wrong column count");
    CurveRow row;
    row.train_size = ParseNumber<std::size_t>(f[0]);
    row.label = std::string(f[1]);
    row.values.precision = {ParseNumber<double>(f[2]), ParseNumber<double>(f[3])};
    row.values.recall = {ParseNumber<double>(f[4]), ParseNumber<double>(f[5])};
    row.values.f1 = {ParseNumber<double>(f[6]), ParseNumber<double>(f[7])};
    rows.push_back(std::move(row));
  }
  return rows;
}

int SelectBestEpoch(const std::vector<std::pair<int, MetricsReport>>& dev) {
  if (dev.empty()) throw ContractError("no development reports to select from");
  if (dev.size() > static_cast<std::size_t>(kMaxEpochs)) {
    throw ContractError("more than " + std::to_string(kMaxEpochs) +
                        " epochs reported");
  }
  int best_epoch = dev.front().first;
  double best_f1 = dev.front().second.micro.f1;
  for (const auto& [epoch, report] : dev) {
    if (report.micro.f1 > best_f1 ||
        (report.micro.f1 == best_f1 && epoch < best_epoch)) {
      best_f1 = report.micro.f1;
      best_epoch = epoch;
    }
  }
  return best_epoch;
}

std::string ReportJson(const MetricsReport& report) {
  Json j;
  j["scheme"] = report.scheme.name();
  j["n_sentences"] = report.n_sentences;
  Json labels = Json::object();
  for (const std::string& label : report.RowLabels()) {
    if (label == kMicroLabel) continue;
    labels[label] = CountsToJson(report.counts.at(label), report.Row(label));
  }
  j["labels"] = std::move(labels);
  j["micro"] = CountsToJson(report.micro_counts, report.micro);
  return j.dump(2) + "\n";
}

MetricsReport ReportFromJson(std::string_view json) {
  const Json j = Json::parse(json);
  auto kind = ParseSchemeKind(j.at("scheme").get<std::string>());
  if (!kind) throw ContractError("report has an unknown scheme");
  ConfusionCounts counts;
  counts.scheme = LabelScheme::Of(*kind);
  counts.n_sentences = j.at("n_sentences").get<std::size_t>();
  for (const auto& [label, row] : j.at("labels").items()) {
    if (!counts.scheme.Contains(label) || label == kCorrectLabel) {
      throw ContractError("report row '" + label + "' not in scheme");
    }
    counts.per_label[label] = CountsFromJson(row);
  }
  for (const std::string& label : counts.scheme.labels()) {
    if (label != kCorrectLabel && !counts.per_label.count(label)) {
      throw ContractError("report lacks row '" + label + "'");
    }
  }
  counts.micro = CountsFromJson(j.at("micro"));
  return ComputePrf(counts);
}

std::string AggregateJson(const std::vector<CurvePoint>& points) {
  Json out = Json::array();
  for (const CurvePoint& point : points) {
    Json p;
    p["train_size"] = point.train_size;
    p["runs"] = point.aggregate.runs.size();
    Json rows = Json::object();
    for (const std::string& label : point.aggregate.runs.front().RowLabels()) {
      const PrfAggregate& agg = point.aggregate.rows.at(label);
      Json row;
      row["precision_mean"] = agg.precision.mean;
      row["precision_std"] = agg.precision.std;
      row["recall_mean"] = agg.recall.mean;
      row["recall_std"] = agg.recall.std;
      row["f1_mean"] = agg.f1.mean;
      row["f1_std"] = agg.f1.std;
      rows[label] = std::move(row);
    }
    p["rows"] = std::move(rows);
    out.push_back(std::move(p));
  }
  return out.dump(2) + "\n";
}

}  // namespace ged
