#include "stuntkit/anthropometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "stuntkit/anthro_constants.hpp"
#include "stuntkit/csv.hpp"
#include "stuntkit/evaluation.hpp"

namespace stuntkit {

void GrowthReference::insert(int age_months, int sex, Entry e) {
  if (e.sd_cm <= 0.0)
    throw std::invalid_argument("GrowthReference: sd must be positive");
  entries_[{age_months, sex}] = e;
}

const GrowthReference::Entry& GrowthReference::at(int age_months, int sex) const {
  auto it = entries_.find({age_months, sex});
  if (it == entries_.end())
    throw std::out_of_range("growth reference has no entry for age " +
                            std::to_string(age_months) + " months, sex " +
                            std::to_string(sex));
  return it->second;
}

bool GrowthReference::covers(int age_months, int sex) const {
  return entries_.count({age_months, sex}) > 0;
}

int GrowthReference::min_age() const {
  if (entries_.empty()) throw std::logic_error("empty growth reference");
  return entries_.begin()->first.first;
}

int GrowthReference::max_age() const {
  if (entries_.empty()) throw std::logic_error("empty growth reference");
  return entries_.rbegin()->first.first;
}

GrowthReference GrowthReference::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument(path + ": missing header row");
  std::vector<std::string> header = split_csv_line(line);
  for (std::string& h : header) h = trim_lower(h);
  const std::vector<std::string> expected = {"age_months", "sex", "median_cm", "sd_cm"};
  std::array<std::size_t, 4> cols{};
  for (std::size_t e = 0; e < expected.size(); ++e) {
    auto it = std::find(header.begin(), header.end(), expected[e]);
    if (it == header.end())
      throw std::invalid_argument(path + ": missing column '" + expected[e] + "'");
    cols[e] = static_cast<std::size_t>(it - header.begin());
  }
  GrowthReference ref;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw std::invalid_argument(path + ": line " + std::to_string(line_no) +
                                  ": malformed record");
    try {
      ref.insert(std::stoi(cells[cols[0]]), std::stoi(cells[cols[1]]),
                 {std::stod(cells[cols[2]]), std::stod(cells[cols[3]])});
    } catch (const std::exception& e) {
      throw std::invalid_argument(path + ": line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
  }
  if (ref.entries_.empty())
    throw std::invalid_argument(path + ": growth reference has no entries");
  return ref;
}

void GrowthReference::write_csv(const std::string& path) const {
  std::ostringstream out;
  out << "age_months,sex,median_cm,sd_cm\n";
  for (const auto& [key, e] : entries_) {
    out << key.first << ',' << key.second << ',' << format_double(e.median_cm) << ','
        << format_double(e.sd_cm) << '\n';
  }
  write_file_atomic(path, out.str());
}

GrowthReference GrowthReference::builtin() {
  using namespace anthro;
  GrowthReference ref;
  for (int age = kMinAgeMonths; age <= kMaxAgeMonths; ++age) {
    const double median = kMedianBase + kMedianSlope * static_cast<double>(age);
    const double sd = kSdBase + kSdSlope * static_cast<double>(age);
    ref.insert(age, 0, {median, sd});
    ref.insert(age, 1, {median + kFemaleOffset, sd});
  }
  return ref;
}

double haz_zscore(double age_months, int sex, double height_cm,
                  const GrowthReference& ref) {
  const int age = static_cast<int>(std::llround(age_months));
  const GrowthReference::Entry& e = ref.at(age, sex);
  return (height_cm - e.median_cm) / e.sd_cm;
}

ClassLabel haz_status(double age_months, int sex, double height_cm,
                      const GrowthReference& ref) {
  const double z = haz_zscore(age_months, sex, height_cm, ref);
  if (z < -3.0) return ClassLabel::Stunted;
  if (z < -2.0) return ClassLabel::Stunting;
  return ClassLabel::Normal;
}

double length_from_ultrasonic(const UltrasonicReading& r) {
  if (r.sensor_gap_cm <= 0.0)
    throw std::invalid_argument("ultrasonic reading: sensor gap must be positive");
  if (r.d1_cm < 0.0 || r.d2_cm < 0.0)
    throw std::invalid_argument("ultrasonic reading: distances must be non-negative");
  if (r.d1_cm + r.d2_cm > r.sensor_gap_cm)
    throw std::invalid_argument(
        "ultrasonic reading: echo distances exceed the sensor gap");
  return r.sensor_gap_cm - r.d1_cm - r.d2_cm;
}

CalibrationFit fit_linear(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 2)
    throw std::invalid_argument("fit_linear: need at least 2 pairs");
  const double n = static_cast<double>(pairs.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : pairs) {
    sx += x;
    sy += y;
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : pairs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0)
    throw std::invalid_argument("fit_linear: all reference values identical");

  CalibrationFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (const auto& [x, y] : pairs) {
    const double r = y - (fit.intercept + fit.slope * x);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  fit.r_squared = std::clamp(fit.r_squared, 0.0, 1.0);
  return fit;
}

Dataset synth_cohort(std::size_t n, const std::array<double, kNumClasses>& proportions,
                     const GrowthReference& ref, Rng& rng) {
  using namespace anthro;
  double sum = 0.0;
  for (double p : proportions) {
    if (p < 0.0) throw std::invalid_argument("synth_cohort: negative proportion");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("synth_cohort: proportions must sum to 1");
  if (n == 0) throw std::invalid_argument("synth_cohort: n must be positive");

  // Largest-remainder apportionment of the class counts.
  std::array<std::size_t, kNumClasses> counts{};
  std::array<double, kNumClasses> remainders{};
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const double exact = static_cast<double>(n) * proportions[c];
    counts[c] = static_cast<std::size_t>(std::floor(exact));
    remainders[c] = exact - std::floor(exact);
    assigned += counts[c];
  }
  while (assigned < n) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < kNumClasses; ++c)
      if (remainders[c] > remainders[best]) best = c;
    ++counts[best];
    remainders[best] = -1.0;
    ++assigned;
  }

  std::vector<ClassLabel> intended;
  intended.reserve(n);
  for (std::size_t i = 0; i < kNumClasses; ++i)
    intended.insert(intended.end(), counts[i], kReportOrder[i]);
  rng.shuffle(intended);

  const int age_lo = ref.min_age();
  const int age_hi = ref.max_age();
  Dataset ds(kDefaultSchema.size(), kDefaultSchema);
  for (ClassLabel target : intended) {
    const int age = age_lo + static_cast<int>(rng.below(
                                 static_cast<std::size_t>(age_hi - age_lo + 1)));
    const int sex = static_cast<int>(rng.below(2));
    double z = 0.0;
    switch (target) {
      case ClassLabel::Normal:
        do {
          z = rng.normal();
        } while (z < kNormalZTrunc);
        break;
      case ClassLabel::Stunting:
        z = rng.uniform_in(kStuntingZLow, kStuntingZHigh);
        break;
      case ClassLabel::Stunted:
        z = rng.uniform_in(kStuntedZLow, kStuntedZHigh);
        break;
    }
    const GrowthReference::Entry& e = ref.at(age, sex);
    const double height = e.median_cm + z * e.sd_cm;
    const double weight =
        std::max(kWeightFloorKg, kWeightIntercept + kWeightPerCm * height +
                                     kWeightPerMonth * static_cast<double>(age) +
                                     kWeightNoiseSd * rng.normal());
    const std::array<double, 4> row = {static_cast<double>(age),
                                       static_cast<double>(sex), height, weight};
    ds.push_row(row, haz_status(age, sex, height, ref));
  }
  ds.validate_domain();
  return ds;
}

}  // namespace stuntkit
