#include "stuntkit/evaluation.hpp"

#include <stdexcept>

namespace stuntkit {

std::size_t report_index(ClassLabel cls) {
  for (std::size_t i = 0; i < kReportOrder.size(); ++i)
    if (kReportOrder[i] == cls) return i;
  throw std::logic_error("report_index: invalid label");
}

long long ConfusionMatrix::at(ClassLabel truth, ClassLabel pred) const {
  return counts[report_index(truth)][report_index(pred)];
}

long long& ConfusionMatrix::at(ClassLabel truth, ClassLabel pred) {
  return counts[report_index(truth)][report_index(pred)];
}

long long ConfusionMatrix::total() const {
  long long t = 0;
  for (const auto& row : counts)
    for (long long v : row) t += v;
  return t;
}

long long ConfusionMatrix::trace() const {
  long long t = 0;
  for (std::size_t i = 0; i < kNumClasses; ++i) t += counts[i][i];
  return t;
}

long long ConfusionMatrix::row_sum(ClassLabel truth) const {
  long long t = 0;
  for (long long v : counts[report_index(truth)]) t += v;
  return t;
}

long long ConfusionMatrix::col_sum(ClassLabel pred) const {
  long long t = 0;
  for (const auto& row : counts) t += row[report_index(pred)];
  return t;
}

ConfusionMatrix confusion_matrix(const std::vector<ClassLabel>& y_true,
                                 const std::vector<ClassLabel>& y_pred) {
  if (y_true.size() != y_pred.size())
    throw std::invalid_argument("confusion_matrix: length mismatch");
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < y_true.size(); ++i) ++cm.at(y_true[i], y_pred[i]);
  return cm;
}

ClassMetrics class_metrics(const ConfusionMatrix& cm, ClassLabel cls) {
  const long long tp = cm.at(cls, cls);
  const long long fp = cm.col_sum(cls) - tp;
  const long long fn = cm.row_sum(cls) - tp;
  ClassMetrics m;
  m.support = cm.row_sum(cls);
  m.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  m.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  m.f1 = m.precision + m.recall > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

double accuracy(const ConfusionMatrix& cm) {
  const long long total = cm.total();
  if (total == 0) throw std::invalid_argument("accuracy: empty matrix");
  return static_cast<double>(cm.trace()) / static_cast<double>(total);
}

double macro_f1(const ConfusionMatrix& cm) {
  double acc = 0.0;
  for (ClassLabel c : kReportOrder) acc += class_metrics(cm, c).f1;
  return acc / static_cast<double>(kNumClasses);
}

double macro_precision(const ConfusionMatrix& cm) {
  double acc = 0.0;
  for (ClassLabel c : kReportOrder) acc += class_metrics(cm, c).precision;
  return acc / static_cast<double>(kNumClasses);
}

double macro_recall(const ConfusionMatrix& cm) {
  double acc = 0.0;
  for (ClassLabel c : kReportOrder) acc += class_metrics(cm, c).recall;
  return acc / static_cast<double>(kNumClasses);
}

double micro_precision(const ConfusionMatrix& cm) {
  long long tp = 0;
  long long tp_fp = 0;
  for (ClassLabel c : kReportOrder) {
    tp += cm.at(c, c);
    tp_fp += cm.col_sum(c);
  }
  return tp_fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp_fp) : 0.0;
}

double micro_recall(const ConfusionMatrix& cm) {
  long long tp = 0;
  long long tp_fn = 0;
  for (ClassLabel c : kReportOrder) {
    tp += cm.at(c, c);
    tp_fn += cm.row_sum(c);
  }
  return tp_fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp_fn) : 0.0;
}

}  // namespace stuntkit
