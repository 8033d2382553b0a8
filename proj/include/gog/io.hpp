#pragma once

// Text formats. A triangle is n lines, line i holding i space-separated
// integers; a matrix is n lines of n integers. Several objects in one stream
// are separated by a single blank line.

#include <sstream>
#include <string>
#include <vector>

#include "gog/triangle.hpp"

namespace gog {

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(v[k]);
  }
  return out;
}

inline std::vector<int> parse_int_line(const std::string& line, int lineno) {
  std::istringstream in(line);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Splits a stream into blank-line separated blocks of integer rows.
inline std::vector<std::vector<std::vector<int>>> parse_blocks(const std::string& text) {
  std::vector<std::vector<std::vector<int>>> blocks;
  std::vector<std::vector<int>> current;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      if (!current.empty()) blocks.push_back(std::move(current));
      current.clear();
      continue;
    }
    current.push_back(detail::parse_int_line(line, lineno));
  }
  if (!current.empty()) blocks.push_back(std::move(current));
  return blocks;
}

inline std::string format_rows(const std::vector<std::vector<int>>& rows) {
  std::string out;
  for (const auto& r : rows) out += detail::join_ints(r) + '\n';
  return out;
}

inline std::string format_triangle(const MonotoneTriangle& t) { return format_rows(t.rows()); }

template <class Tag>
std::string format_matrix(const SquareMatrix<Tag>& m) {
  return format_rows(m.rows());
}

/// Objects joined by a single blank line.
template <class T, class Fmt>
std::string format_all(const std::vector<T>& items, Fmt fmt) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += '\n';
    out += fmt(items[k]);
  }
  return out;
}

inline std::string format_triangles(const std::vector<MonotoneTriangle>& ts) {
  return format_all(ts, [](const MonotoneTriangle& t) { return format_triangle(t); });
}

inline std::vector<MonotoneTriangle> parse_triangles(const std::string& text) {
  std::vector<MonotoneTriangle> out;
  for (const auto& block : parse_blocks(text)) out.push_back(validate_triangle(static_cast<int>(block.size()), block));
  return out;
}

}  // namespace gog
