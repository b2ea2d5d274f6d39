#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cansyz {

/// Graded Betti numbers beta_{i,j}, stored sparsely (zeros are absent).
class BettiTable {
 public:
  long long at(int i, int j) const;
  void set(int i, int j, long long v);
  void add(int i, int j, long long v) { set(i, j, at(i, j) + v); }
  const std::map<std::pair<int, int>, long long>& entries() const noexcept { return b_; }
  bool empty() const noexcept { return b_.empty(); }

  /// Largest i with a nonzero entry, -1 for the empty table.
  int length() const;
  /// Range of j - i over nonzero entries.
  int min_row() const;
  int max_row() const;
  long long total(int i) const;

  /// grid()[r][i] = beta_{i, i + min_row() + r}.
  std::vector<std::vector<long long>> grid() const;
  /// Rows of the grid with '.' for zeros, entries separated by spaces.
  std::vector<std::string> dotted_rows() const;
  /// Aligned layout with a column header, a total line and row labels j - i.
  std::string to_text() const;
  /// Compact class key: rows separated by '/', entries by ','.
  std::string key() const;

  /// Coefficients of sum (-1)^i beta_{i,j} t^j, index j.
  std::vector<long long> k_polynomial() const;

  nlohmann::json to_json(int genus, int characteristic) const;
  /// Accepts {betti: [[i, j, v], ...]} with optional genus and char.
  static BettiTable from_json(const nlohmann::json& j);
  /// Reads rows "1 . . / . 10 16 1" style data: rows[r][i] = beta_{i,i+r+row0}.
  static BettiTable from_rows(const std::vector<std::vector<long long>>& rows, int row0 = 0);

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.b_ == b.b_; }

 private:
  std::map<std::pair<int, int>, long long> b_;
};

}  // namespace cansyz
