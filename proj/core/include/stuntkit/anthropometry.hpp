#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stuntkit/dataset.hpp"

namespace stuntkit {

// (age in months, sex) -> (median height, sd) lookup used for height-for-age
// z-score labeling. The bundled table is a smooth functional stand-in for
// test purposes, not a clinical reference; real tables load from CSV.
class GrowthReference {
 public:
  struct Entry {
    double median_cm = 0.0;
    double sd_cm = 0.0;
  };

  void insert(int age_months, int sex, Entry e);
  const Entry& at(int age_months, int sex) const;  // throws when uncovered
  bool covers(int age_months, int sex) const;
  int min_age() const;
  int max_age() const;
  std::size_t size() const { return entries_.size(); }

  // CSV columns: age_months, sex, median_cm, sd_cm.
  static GrowthReference load_csv(const std::string& path);
  void write_csv(const std::string& path) const;

  // Non-clinical built-in table covering ages 0-60 months, both sexes.
  static GrowthReference builtin();

 private:
  std::map<std::pair<int, int>, Entry> entries_;
};

double haz_zscore(double age_months, int sex, double height_cm,
                  const GrowthReference& ref);

// z < -3 -> Stunted; -3 <= z < -2 -> Stunting; z >= -2 -> Normal.
ClassLabel haz_status(double age_months, int sex, double height_cm,
                      const GrowthReference& ref);

struct UltrasonicReading {
  double sensor_gap_cm = 0.0;  // distance between the two sensors
  double d1_cm = 0.0;
  double d2_cm = 0.0;
};

// Body length = gap - d1 - d2; rejects readings where the echoes overlap.
double length_from_ultrasonic(const UltrasonicReading& r);

struct CalibrationFit {
  double slope = 0.0;      // sensor sensitivity
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares of measured on reference.
CalibrationFit fit_linear(const std::vector<std::pair<double, double>>& pairs);

// Seeded synthetic cohort matching a target class distribution; proportions
// are given in reporting order (Normal, Stunted, Stunting) and apportioned by
// largest remainder. Ages and sex draw uniformly over the reference range;
// height is placed at a class-typical z-score; weight follows the fixed
// height/age regression in anthro_constants.hpp. Labels come from haz_status,
// so relabeling the output is a fixed point.
Dataset synth_cohort(std::size_t n, const std::array<double, kNumClasses>& proportions,
                     const GrowthReference& ref, Rng& rng);

}  // namespace stuntkit
