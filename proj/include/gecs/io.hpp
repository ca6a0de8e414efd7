#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gecs/bitmatrix.hpp"
#include "gecs/bitvec.hpp"
#include "gecs/generic_set.hpp"

namespace gecs {

// Shared line-oriented text formats. Vector sets and matrices are written as
// one '0'/'1' string per line, coordinate 0 leftmost, newline-terminated.
// Set files are sorted by integer encoding and carry no header; matrix files
// keep row order.

inline std::vector<std::string> read_bit_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    for (char c : line)
      if (c != '0' && c != '1')
        throw std::invalid_argument("expected a line of '0'/'1' characters");
    if (!lines.empty() && line.size() != lines.front().size())
      throw std::invalid_argument("lines have inconsistent lengths");
    lines.push_back(line);
  }
  return lines;
}

inline GenericSet parse_set(std::istream& in) {
  auto lines = read_bit_lines(in);
  if (lines.empty()) throw std::invalid_argument("set file is empty");
  std::vector<BitVec> members;
  members.reserve(lines.size());
  for (const auto& s : lines) members.push_back(BitVec::from_string(s));
  return GenericSet(lines.front().size(), std::move(members));
}

inline void write_set(std::ostream& out, const GenericSet& set) {
  for (const auto& v : set.members()) out << v.to_string() << '\n';
}

inline BitMatrix parse_matrix(std::istream& in) {
  auto lines = read_bit_lines(in);
  if (lines.empty()) throw std::invalid_argument("matrix file is empty");
  return BitMatrix::from_strings(lines);
}

inline void write_matrix(std::ostream& out, const BitMatrix& m) {
  for (std::size_t i = 0; i < m.row_count(); ++i)
    out << m.row(i).to_string() << '\n';
}

inline GenericSet load_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_set(in);
}

inline BitMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_matrix(in);
}

inline void save_set(const std::string& path, const GenericSet& set) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_set(out, set);
}

inline void save_matrix(const std::string& path, const BitMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_matrix(out, m);
}

}  // namespace gecs
