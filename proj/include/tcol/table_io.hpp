#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcol/multi_index.hpp"
#include "tcol/stencil.hpp"

namespace tcol::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json, Markdown };

inline Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "md") return Format::Markdown;
  throw ParseError("unknown format: " + name);
}

/// A rectangular output table; cells are either numbers or text.
struct Table {
  struct Cell {
    bool numeric = false;
    double number = 0.0;
    std::string text;

    static Cell num(double v) { return Cell{true, v, {}}; }
    static Cell str(std::string s) { return Cell{false, 0.0, std::move(s)}; }
  };

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

inline std::string format_number(double v, int significant_digits) {
  std::ostringstream os;
  os << std::setprecision(significant_digits) << v;
  return os.str();
}

inline void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "");
      out << (row[i].numeric ? format_number(row[i].number, 17) : row[i].text);
    }
    out << "\n";
  }
}

inline void write_json(const Table& table, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj;
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      if (row[i].numeric)
        obj[table.columns[i]] = row[i].number;
      else
        obj[table.columns[i]] = row[i].text;
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << "\n";
}

inline void write_markdown(const Table& table, std::ostream& out) {
  out << "|";
  for (const auto& c : table.columns) out << " " << c << " |";
  out << "\n|";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& row : table.rows) {
    out << "|";
    for (const auto& cell : row)
      out << " " << (cell.numeric ? format_number(cell.number, 6) : cell.text)
          << " |";
    out << "\n";
  }
}

inline void write_table(const Table& table, std::ostream& out, Format format) {
  switch (format) {
    case Format::Csv: write_csv(table, out); break;
    case Format::Json: write_json(table, out); break;
    case Format::Markdown: write_markdown(table, out); break;
  }
}

namespace detail {

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError("bad number in " + what + ": '" + s + "'");
  }
}

}  // namespace detail

/// Order spec "n1:n2:...:nD"; empty string means the zero order.
inline MultiIndex parse_order(const std::string& spec, int dimension) {
  if (detail::trim(spec).empty()) return MultiIndex::zero(dimension);
  std::vector<int> exps;
  for (const std::string& part : detail::split(detail::trim(spec), ':')) {
    const double v = detail::parse_double(part, "order spec");
    if (v < 0 || v != std::floor(v)) throw ParseError("bad order spec: " + spec);
    exps.push_back(static_cast<int>(v));
  }
  if (static_cast<int>(exps.size()) != dimension)
    throw ParseError("order spec dimension mismatch: " + spec);
  return MultiIndex(std::move(exps));
}

inline std::string order_to_string(const MultiIndex& order) {
  std::string s;
  for (int i = 0; i < order.dimension(); ++i)
    s += (i ? ":" : "") + std::to_string(order[i]);
  return s;
}

/// Samples CSV: header x1,...,xD,kind,order,value.
inline std::vector<Sample> read_samples_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("samples file: empty");
  const auto cols = detail::split(detail::trim(header), ',');
  if (cols.size() < 4 || cols[cols.size() - 3] != "kind" ||
      cols[cols.size() - 2] != "order" || cols.back() != "value")
    throw ParseError("samples file: expected header x1,...,xD,kind,order,value");
  const int d = static_cast<int>(cols.size()) - 3;

  std::vector<Sample> samples;
  std::string line;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split(line, ',');
    if (static_cast<int>(fields.size()) != d + 3)
      throw ParseError("samples file line " + std::to_string(line_no) +
                       ": wrong column count");
    Point p(d);
    for (int i = 0; i < d; ++i)
      p(i) = detail::parse_double(detail::trim(fields[static_cast<std::size_t>(i)]),
                                  "coordinate");
    const std::string kind = detail::trim(fields[static_cast<std::size_t>(d)]);
    const std::string order = detail::trim(fields[static_cast<std::size_t>(d) + 1]);
    const double value =
        detail::parse_double(detail::trim(fields[static_cast<std::size_t>(d) + 2]),
                             "value");
    if (kind == "value") {
      samples.push_back(Sample::value_at(p, value));
    } else if (kind == "deriv") {
      samples.push_back(Sample::derivative_at(p, parse_order(order, d), value));
    } else {
      throw ParseError("samples file line " + std::to_string(line_no) +
                       ": kind must be value or deriv");
    }
  }
  return samples;
}

struct DerivativeRequestRaw {
  Point target;
  MultiIndex order;
};

/// Queries CSV: header x1,...,xD,order.
inline std::vector<DerivativeRequestRaw> read_queries_csv(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("queries file: empty");
  const auto cols = detail::split(detail::trim(header), ',');
  if (cols.size() < 2 || cols.back() != "order")
    throw ParseError("queries file: expected header x1,...,xD,order");
  const int d = static_cast<int>(cols.size()) - 1;

  std::vector<DerivativeRequestRaw> out;
  std::string line;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split(line, ',');
    if (static_cast<int>(fields.size()) != d + 1)
      throw ParseError("queries file line " + std::to_string(line_no) +
                       ": wrong column count");
    Point p(d);
    for (int i = 0; i < d; ++i)
      p(i) = detail::parse_double(detail::trim(fields[static_cast<std::size_t>(i)]),
                                  "coordinate");
    out.push_back(DerivativeRequestRaw{
        p, parse_order(detail::trim(fields[static_cast<std::size_t>(d)]), d)});
  }
  return out;
}

/// Problem spec: INI-like sections [problem], [domain], [potential], [output].
struct ProblemSpec {
  std::map<std::string, std::map<std::string, std::string>> sections;

  bool has(const std::string& section, const std::string& key) const {
    const auto s = sections.find(section);
    return s != sections.end() && s->second.count(key) > 0;
  }
  std::string get(const std::string& section, const std::string& key) const {
    const auto s = sections.find(section);
    if (s == sections.end() || !s->second.count(key))
      throw ParseError("problem spec: missing [" + section + "] " + key);
    return s->second.at(key);
  }
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
  }
  double get_number(const std::string& section, const std::string& key) const {
    return detail::parse_double(get(section, key), "[" + section + "] " + key);
  }
  double get_number_or(const std::string& section, const std::string& key,
                       double fallback) const {
    return has(section, key) ? get_number(section, key) : fallback;
  }
};

inline ProblemSpec read_problem_spec(std::istream& in) {
  ProblemSpec spec;
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = detail::trim(t.substr(1, t.size() - 2));
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos || section.empty())
      throw ParseError("problem spec line " + std::to_string(line_no) +
                       ": expected key = value inside a section");
    spec.sections[section][detail::trim(t.substr(0, eq))] =
        detail::trim(t.substr(eq + 1));
  }
  return spec;
}

}  // namespace tcol::io
