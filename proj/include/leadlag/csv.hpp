// leadlag/csv.hpp
// Tick CSV ingestion and the columnar writers used by the CLI.
//
// Tick CSV: UTF-8, comma separated, optional single header row, exactly two
// columns `timestamp,price`. Timestamps are either integer epoch
// milliseconds or decimal seconds, chosen by the caller; milliseconds are
// divided by 1000 at ingestion so everything downstream works in seconds.
#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "leadlag/errors.hpp"
#include "leadlag/ticks.hpp"

namespace leadlag {

enum class TimestampUnit { seconds, millis };

namespace detail {

inline bool parse_double(const std::string& field, double& out) {
  const char* begin = field.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end != '\0') {
    if (!std::isspace(static_cast<unsigned char>(*end))) return false;
    ++end;
  }
  return true;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

inline std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

// full 17-digit round trip
inline std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

inline TickSeries read_ticks_csv(const std::string& path, TimestampUnit unit,
                                 std::string label = {}) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  if (label.empty()) label = path;

  std::vector<double> times, prices;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != 2) throw ParseError(line_no, "expected 2 columns, got " +
                                                          std::to_string(fields.size()));
    double ts, px;
    const bool ok = detail::parse_double(fields[0], ts) && detail::parse_double(fields[1], px);
    if (!ok) {
      if (first_data_line) {  // single header row allowed
        first_data_line = false;
        continue;
      }
      throw ParseError(line_no, "non-numeric field");
    }
    first_data_line = false;
    times.push_back(unit == TimestampUnit::millis ? ts / 1000.0 : ts);
    prices.push_back(px);
  }
  return TickSeries(std::move(times), std::move(prices), std::move(label));
}

inline void write_ticks_csv(const std::string& path, const TickSeries& s,
                            TimestampUnit unit = TimestampUnit::seconds) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << "timestamp,price\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double t = unit == TimestampUnit::millis ? s.times()[i] * 1000.0 : s.times()[i];
    out << detail::fmt_double(t) << ',' << detail::fmt_double(s.prices()[i]) << '\n';
  }
}

}  // namespace leadlag
