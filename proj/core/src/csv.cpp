#include "stuntkit/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stuntkit {

namespace {

bool is_missing(const std::string& cell) {
  const std::string s = trim_lower(cell);
  return s.empty() || s == "na" || s == "nan" || s == "null";
}

double parse_number(const std::string& cell, std::size_t line_no,
                    const std::string& column) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  while (end != nullptr && *end != '\0' &&
         std::isspace(static_cast<unsigned char>(*end)))
    ++end;
  if (end == begin || (end != nullptr && *end != '\0') || errno == ERANGE) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ", column " +
                                column + ": unparseable numeric cell '" + cell + "'");
  }
  return v;
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string format_double(double v) {
  char buf[40];
  // Shortest representation that parses back to the same double.
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write to " + tmp);
    out << content;
    if (!out.good()) {
      std::remove(tmp.c_str());
      throw std::runtime_error("write failed for " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw std::runtime_error("rename failed for " + path + ": " + ec.message());
  }
}

double encode_value(const std::string& column, const std::string& raw) {
  const std::string col = trim_lower(column);
  if (col == "gender") return parse_gender(raw);
  if (col == "status") return label_code(parse_label(raw));
  throw std::invalid_argument("encode_value: no encoding for column '" + column + "'");
}

std::string decode_value(const std::string& column, double code) {
  const std::string col = trim_lower(column);
  if (col == "gender") return std::string(gender_name(code));
  if (col == "status") return std::string(label_name(label_from_code(code)));
  throw std::invalid_argument("decode_value: no encoding for column '" + column + "'");
}

Dataset load_dataset(const std::string& path, const LoadOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);

  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument(path + ": missing header row");

  // Header: match by (possibly remapped) canonical names, any order.
  std::vector<std::string> header = split_csv_line(line);
  for (std::string& h : header) {
    std::string key = trim_lower(h);
    auto it = opts.column_map.find(key);
    if (it == opts.column_map.end()) it = opts.column_map.find(h);
    h = it != opts.column_map.end() ? trim_lower(it->second) : key;
  }

  auto find_column = [&](const std::string& name) -> std::optional<std::size_t> {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) {
        if (found)
          throw std::invalid_argument(path + ": duplicate header column '" + name + "'");
        found = i;
      }
    }
    return found;
  };

  std::vector<std::size_t> feature_cols;
  for (const std::string& name : kDefaultSchema) {
    auto idx = find_column(name);
    if (!idx)
      throw std::invalid_argument(path + ": missing required column '" + name + "'");
    feature_cols.push_back(*idx);
  }
  auto status_col = find_column("status");
  if (opts.require_status && !status_col)
    throw std::invalid_argument(path + ": missing required column 'status'");

  Dataset ds(kDefaultSchema.size(), kDefaultSchema);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw std::invalid_argument(path + ": line " + std::to_string(line_no) +
                                  ": expected " + std::to_string(header.size()) +
                                  " cells, got " + std::to_string(cells.size()));

    bool incomplete = false;
    for (std::size_t i = 0; i < kDefaultSchema.size() && !incomplete; ++i)
      incomplete = is_missing(cells[feature_cols[i]]);
    if (status_col && !incomplete) incomplete = is_missing(cells[*status_col]);
    if (incomplete) {
      if (opts.drop_incomplete) continue;
      throw std::invalid_argument(path + ": line " + std::to_string(line_no) +
                                  ": missing value (pass drop-incomplete to skip such rows)");
    }

    std::array<double, 4> feat{};
    feat[0] = parse_number(cells[feature_cols[0]], line_no, "age_months");
    feat[1] = parse_gender(cells[feature_cols[1]]);
    feat[2] = parse_number(cells[feature_cols[2]], line_no, "height_cm");
    feat[3] = parse_number(cells[feature_cols[3]], line_no, "weight_kg");
    ClassLabel label =
        status_col ? parse_label(cells[*status_col]) : ClassLabel::Normal;
    try {
      ds.push_row(feat, label);
    } catch (const std::exception& e) {
      throw std::invalid_argument(path + ": line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
  }
  try {
    ds.validate_domain();
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return ds;
}

void write_dataset(const Dataset& ds, const std::string& path) {
  std::ostringstream out;
  for (std::size_t c = 0; c < ds.schema.size(); ++c) {
    if (c) out << ',';
    out << ds.schema[c];
  }
  out << ",status\n";
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    auto r = ds.row(i);
    for (std::size_t c = 0; c < ds.n_cols; ++c) {
      if (c) out << ',';
      out << format_double(r[c]);
    }
    out << ',' << format_double(label_code(ds.labels[i])) << '\n';
  }
  write_file_atomic(path, out.str());
}

std::vector<std::pair<double, double>> load_pairs_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument(path + ": missing header row");
  std::vector<std::string> header = split_csv_line(line);
  for (std::string& h : header) h = trim_lower(h);
  auto ref_it = std::find(header.begin(), header.end(), "reference");
  auto mea_it = std::find(header.begin(), header.end(), "measured");
  if (ref_it == header.end() || mea_it == header.end())
    throw std::invalid_argument(path + ": expected columns 'reference' and 'measured'");
  const std::size_t ref_col = static_cast<std::size_t>(ref_it - header.begin());
  const std::size_t mea_col = static_cast<std::size_t>(mea_it - header.begin());

  std::vector<std::pair<double, double>> pairs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw std::invalid_argument(path + ": line " + std::to_string(line_no) +
                                  ": malformed record");
    pairs.emplace_back(parse_number(cells[ref_col], line_no, "reference"),
                       parse_number(cells[mea_col], line_no, "measured"));
  }
  return pairs;
}

}  // namespace stuntkit
