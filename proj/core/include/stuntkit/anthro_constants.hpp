#pragma once

namespace stuntkit::anthro {

// Version tag for the synthetic-cohort constants below. Bump when any value
// changes; golden files depend on them.
inline constexpr int kConstantsVersion = 3;

// Built-in growth table. NOT a clinical reference: median and sd are held
// constant across age and sex so the z-score class bands are axis-aligned in
// feature space and desk-scale cohorts stay learnable by tree ensembles
// without resorting to the leakage-prone resample-before-split shortcut.
// Supply a real table by path for anything beyond toolkit testing.
//   median(age, sex) = kMedianBase + kMedianSlope * age + sex * kFemaleOffset
//   sd(age)          = kSdBase + kSdSlope * age
inline constexpr double kMedianBase = 75.0;
inline constexpr double kMedianSlope = 0.0;
inline constexpr double kFemaleOffset = 0.0;
inline constexpr double kSdBase = 4.0;
inline constexpr double kSdSlope = 0.0;
inline constexpr int kMinAgeMonths = 0;
inline constexpr int kMaxAgeMonths = 60;

// Synthetic weight model: weight = a + b*height + c*age + noise. Weight never
// feeds the z-score label; it only adds classifier-realistic correlation.
inline constexpr double kWeightIntercept = -7.0;
inline constexpr double kWeightPerCm = 0.20;
inline constexpr double kWeightPerMonth = 0.03;
inline constexpr double kWeightNoiseSd = 0.6;
inline constexpr double kWeightFloorKg = 1.0;

// Class-typical z-score draws for cohort generation.
inline constexpr double kStuntingZLow = -3.0;   // uniform in [-3, -2)
inline constexpr double kStuntingZHigh = -2.0;
inline constexpr double kStuntedZLow = -4.5;    // uniform in [-4.5, -3)
inline constexpr double kStuntedZHigh = -3.0;
inline constexpr double kNormalZTrunc = -2.0;   // N(0,1) truncated to >= -2

}  // namespace stuntkit::anthro
