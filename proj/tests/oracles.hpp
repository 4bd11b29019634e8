#pragma once

// Independent reference computations for tests.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

inline bool binom_odd(std::int64_t i, std::int64_t j) {
  // Pascal's triangle mod 2, row by row.
  std::vector<int> row{1};
  for (std::int64_t n = 1; n <= i + j; ++n) {
    std::vector<int> next(static_cast<std::size_t>(n) + 1, 1);
    for (std::int64_t k = 1; k < n; ++k)
      next[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] ^ row[static_cast<std::size_t>(k)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)] == 1;
}

/// Elementary CA on a background of zeros. cell(x, t) for any integer x.
class Automaton {
 public:
  Automaton(int rule, const std::string& word, int steps) : offset_(steps + 2) {
    const auto n = static_cast<std::int64_t>(word.size());
    std::vector<int> row(static_cast<std::size_t>(n + 2 * offset_), 0);
    for (std::int64_t x = 0; x < n; ++x) row[static_cast<std::size_t>(x + offset_)] = word[static_cast<std::size_t>(x)] == '1';
    rows_.push_back(row);
    for (int t = 1; t <= steps; ++t) {
      std::vector<int> next(row.size(), 0);
      for (std::size_t c = 1; c + 1 < row.size(); ++c) next[c] = (rule >> (row[c - 1] * 4 + row[c] * 2 + row[c + 1])) & 1;
      rows_.push_back(next);
      row = std::move(next);
    }
  }

  int cell(std::int64_t x, int t) const {
    const std::int64_t c = x + offset_;
    const auto& row = rows_[static_cast<std::size_t>(t)];
    if (c < 0 || c >= static_cast<std::int64_t>(row.size())) return 0;
    return row[static_cast<std::size_t>(c)];
  }

 private:
  std::int64_t offset_;
  std::vector<std::vector<int>> rows_;
};

}  // namespace oracle
