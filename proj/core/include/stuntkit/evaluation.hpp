#pragma once

#include <array>
#include <vector>

#include "stuntkit/labels.hpp"

namespace stuntkit {

// 3x3 count grid, rows = true class, columns = predicted class, both in the
// reporting order (Normal, Stunted, Stunting).
struct ConfusionMatrix {
  std::array<std::array<long long, kNumClasses>, kNumClasses> counts{};

  long long at(ClassLabel truth, ClassLabel pred) const;
  long long& at(ClassLabel truth, ClassLabel pred);
  long long total() const;
  long long trace() const;
  long long row_sum(ClassLabel truth) const;   // support of the class
  long long col_sum(ClassLabel pred) const;
};

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long long support = 0;
};

ConfusionMatrix confusion_matrix(const std::vector<ClassLabel>& y_true,
                                 const std::vector<ClassLabel>& y_pred);

// One-vs-rest metrics from the matrix; zero denominators yield 0.
ClassMetrics class_metrics(const ConfusionMatrix& cm, ClassLabel cls);

double accuracy(const ConfusionMatrix& cm);

double macro_f1(const ConfusionMatrix& cm);
double macro_precision(const ConfusionMatrix& cm);
double macro_recall(const ConfusionMatrix& cm);
double micro_precision(const ConfusionMatrix& cm);
double micro_recall(const ConfusionMatrix& cm);

// Index of a class within the reporting order.
std::size_t report_index(ClassLabel cls);

}  // namespace stuntkit
