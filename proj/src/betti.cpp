#include "cansyz/betti.hpp"

#include <algorithm>
#include <sstream>

#include "cansyz/error.hpp"

namespace cansyz {

long long BettiTable::at(int i, int j) const {
  auto it = b_.find({i, j});
  return it == b_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long long v) {
  if (i < 0) throw DomainError("Betti index i must be nonnegative");
  if (v < 0) throw DomainError("Betti numbers are nonnegative");
  if (v == 0)
    b_.erase({i, j});
  else
    b_[{i, j}] = v;
}

int BettiTable::length() const {
  int n = -1;
  for (const auto& [ij, v] : b_) n = std::max(n, ij.first);
  return n;
}

int BettiTable::min_row() const {
  if (b_.empty()) return 0;
  int r = b_.begin()->first.second - b_.begin()->first.first;
  for (const auto& [ij, v] : b_) r = std::min(r, ij.second - ij.first);
  return r;
}

int BettiTable::max_row() const {
  if (b_.empty()) return -1;
  int r = b_.begin()->first.second - b_.begin()->first.first;
  for (const auto& [ij, v] : b_) r = std::max(r, ij.second - ij.first);
  return r;
}

long long BettiTable::total(int i) const {
  long long s = 0;
  for (const auto& [ij, v] : b_)
    if (ij.first == i) s += v;
  return s;
}

std::vector<std::vector<long long>> BettiTable::grid() const {
  if (b_.empty()) return {};
  const int r0 = min_row(), r1 = max_row(), n = length();
  std::vector<std::vector<long long>> g(r1 - r0 + 1, std::vector<long long>(n + 1, 0));
  for (const auto& [ij, v] : b_) g[ij.second - ij.first - r0][ij.first] = v;
  return g;
}

std::vector<std::string> BettiTable::dotted_rows() const {
  std::vector<std::string> out;
  for (const auto& row : grid()) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ' ';
      s += row[i] ? std::to_string(row[i]) : ".";
    }
    out.push_back(s);
  }
  return out;
}

std::string BettiTable::to_text() const {
  const auto g = grid();
  if (g.empty()) return "(zero)\n";
  const int n = length(), r0 = min_row();
  std::vector<std::size_t> w(n + 1, 1);
  for (int i = 0; i <= n; ++i) {
    w[i] = std::max(std::to_string(i).size(), std::to_string(total(i)).size());
    for (const auto& row : g) w[i] = std::max(w[i], row[i] ? std::to_string(row[i]).size() : 1);
  }
  std::size_t lw = 6;
  for (std::size_t r = 0; r < g.size(); ++r) lw = std::max(lw, std::to_string(r0 + static_cast<int>(r)).size() + 1);
  auto cell = [](const std::string& s, std::size_t width) { return std::string(width - s.size(), ' ') + s; };
  std::ostringstream os;
  os << std::string(lw, ' ');
  for (int i = 0; i <= n; ++i) os << ' ' << cell(std::to_string(i), w[i]);
  os << '\n' << cell("total:", lw);
  for (int i = 0; i <= n; ++i) os << ' ' << cell(std::to_string(total(i)), w[i]);
  os << '\n';
  for (std::size_t r = 0; r < g.size(); ++r) {
    os << cell(std::to_string(r0 + static_cast<int>(r)) + ":", lw);
    for (int i = 0; i <= n; ++i) os << ' ' << cell(g[r][i] ? std::to_string(g[r][i]) : ".", w[i]);
    os << '\n';
  }
  return os.str();
}

std::string BettiTable::key() const {
  std::string s;
  const auto g = grid();
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (r) s += '/';
    for (std::size_t i = 0; i < g[r].size(); ++i) {
      if (i) s += ',';
      s += g[r][i] ? std::to_string(g[r][i]) : ".";
    }
  }
  return s;
}

std::vector<long long> BettiTable::k_polynomial() const {
  std::vector<long long> k;
  for (const auto& [ij, v] : b_) {
    if (ij.second < 0) throw DomainError("K-polynomial needs nonnegative degrees");
    if (k.size() <= static_cast<std::size_t>(ij.second)) k.resize(ij.second + 1, 0);
    k[ij.second] += (ij.first % 2 ? -v : v);
  }
  while (!k.empty() && k.back() == 0) k.pop_back();
  return k;
}

nlohmann::json BettiTable::to_json(int genus, int characteristic) const {
  nlohmann::json b = nlohmann::json::array();
  for (const auto& [ij, v] : b_) b.push_back({ij.first, ij.second, v});
  return {{"genus", genus}, {"char", characteristic}, {"betti", b}};
}

BettiTable BettiTable::from_json(const nlohmann::json& j) {
  BettiTable t;
  const auto& arr = j.is_array() ? j : j.at("betti");
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 3) throw ParseError("Betti entry must be [i, j, value]", 0);
    t.set(e[0].get<int>(), e[1].get<int>(), e[2].get<long long>());
  }
  return t;
}

BettiTable BettiTable::from_rows(const std::vector<std::vector<long long>>& rows, int row0) {
  BettiTable t;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t i = 0; i < rows[r].size(); ++i)
      t.set(static_cast<int>(i), static_cast<int>(i) + static_cast<int>(r) + row0, rows[r][i]);
  return t;
}

}  // namespace cansyz
