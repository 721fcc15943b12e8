#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace stuntkit {

// Class codes follow the dataset encoding: Normal=0, Stunting=0.5, Stunted=1.
// Enum order matches ascending code so that "lowest code" tie-breaks are a
// plain ordering comparison.
enum class ClassLabel : int { Normal = 0, Stunting = 1, Stunted = 2 };

inline constexpr std::size_t kNumClasses = 3;

// Ascending-code order.
inline constexpr std::array<ClassLabel, kNumClasses> kClassesByCode = {
    ClassLabel::Normal, ClassLabel::Stunting, ClassLabel::Stunted};

// Reporting order used by confusion matrices and rendered tables
// (Normal, Stunted, Stunting).
inline constexpr std::array<ClassLabel, kNumClasses> kReportOrder = {
    ClassLabel::Normal, ClassLabel::Stunted, ClassLabel::Stunting};

double label_code(ClassLabel label);
ClassLabel label_from_code(double code);
std::string_view label_name(ClassLabel label);

// Case-insensitive, whitespace-trimmed category parse; accepts both the
// category strings and the numeric codes 0 / 0.5 / 1.
ClassLabel parse_label(std::string_view raw);

// Gender encoding: male -> 0, female -> 1; numeric 0/1 accepted as-is.
double parse_gender(std::string_view raw);
std::string_view gender_name(double code);

std::string trim_lower(std::string_view s);

}  // namespace stuntkit
