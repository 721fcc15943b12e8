#include "stuntkit/labels.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace stuntkit {

std::string trim_lower(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string out;
  out.reserve(e - b);
  for (std::size_t i = b; i < e; ++i) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(s[i]))));
  }
  return out;
}

double label_code(ClassLabel label) {
  switch (label) {
    case ClassLabel::Normal: return 0.0;
    case ClassLabel::Stunting: return 0.5;
    case ClassLabel::Stunted: return 1.0;
  }
  throw std::logic_error("label_code: invalid label");
}

ClassLabel label_from_code(double code) {
  if (code == 0.0) return ClassLabel::Normal;
  if (code == 0.5) return ClassLabel::Stunting;
  if (code == 1.0) return ClassLabel::Stunted;
  throw std::invalid_argument("label_from_code: code must be 0, 0.5 or 1, got " +
                              std::to_string(code));
}

std::string_view label_name(ClassLabel label) {
  switch (label) {
    case ClassLabel::Normal: return "Normal";
    case ClassLabel::Stunting: return "Stunting";
    case ClassLabel::Stunted: return "Stunted";
  }
  throw std::logic_error("label_name: invalid label");
}

ClassLabel parse_label(std::string_view raw) {
  const std::string s = trim_lower(raw);
  if (s == "normal" || s == "0" || s == "0.0") return ClassLabel::Normal;
  if (s == "stunting" || s == "0.5" || s == ".5") return ClassLabel::Stunting;
  if (s == "stunted" || s == "1" || s == "1.0") return ClassLabel::Stunted;
  throw std::invalid_argument("unrecognized status category: '" + std::string(raw) + "'");
}

double parse_gender(std::string_view raw) {
  const std::string s = trim_lower(raw);
  if (s == "male" || s == "m" || s == "0" || s == "0.0") return 0.0;
  if (s == "female" || s == "f" || s == "1" || s == "1.0") return 1.0;
  throw std::invalid_argument("unrecognized gender category: '" + std::string(raw) + "'");
}

std::string_view gender_name(double code) {
  if (code == 0.0) return "male";
  if (code == 1.0) return "female";
  throw std::invalid_argument("gender code must be 0 or 1");
}

}  // namespace stuntkit
