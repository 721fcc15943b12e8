#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stuntkit/dataset.hpp"

namespace stuntkit {

struct LoadOptions {
  // Maps actual header names to canonical schema names, for files whose
  // columns are named differently.
  std::map<std::string, std::string> column_map;
  // Policy for rows with empty / NA cells: false = reject the file with a
  // row-level report, true = drop the incomplete rows.
  bool drop_incomplete = false;
  // When false the status column is optional; rows load with label Normal
  // as a placeholder (used by the labeling command on unlabeled input).
  bool require_status = true;
};

// Loads the canonical child-growth CSV (header row required; columns matched
// by name in any order). Gender and status accept both raw category strings
// and pre-encoded numerics. Domain invariants are enforced after loading.
Dataset load_dataset(const std::string& path, const LoadOptions& opts = {});

// Writes the canonical CSV. Feature values are printed with round-trip
// precision so that write -> load is bit-exact.
void write_dataset(const Dataset& ds, const std::string& path);

// Category encoding per the dataset schema: gender male/female -> 0/1,
// status normal/stunting/stunted -> 0/0.5/1. Case-insensitive, trimmed.
double encode_value(const std::string& column, const std::string& raw);
std::string decode_value(const std::string& column, double code);

// (reference, measured) pairs for calibration fitting.
std::vector<std::pair<double, double>> load_pairs_csv(const std::string& path);

// Low-level helper shared by loaders: splits one CSV record.
std::vector<std::string> split_csv_line(const std::string& line);

// Prints a double with enough digits to round-trip exactly.
std::string format_double(double v);

// Writes `content` atomically: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace stuntkit
