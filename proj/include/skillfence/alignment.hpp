#pragma once

#include <cstddef>
#include <vector>

#include "skillfence/phonetics.hpp"

namespace skillfence {

struct AlignmentParams {
  int match = 1;
  int mismatch = -1;
  int gap = -1;
};

// One column of a global alignment; -1 marks a gap on that side.
struct AlignedColumn {
  int a_index;
  int b_index;
};

struct Alignment {
  int score = 0;
  std::vector<AlignedColumn> columns;
};

// Global Needleman-Wunsch alignment of two phoneme sequences.
// Traceback ties are broken deterministically: diagonal, then up
// (consume from a), then left.
inline Alignment needleman_wunsch(const std::vector<Phoneme>& a,
                                  const std::vector<Phoneme>& b,
                                  const AlignmentParams& params = {}) {
  const size_t n = a.size();
  const size_t m = b.size();
  std::vector<std::vector<int>> score(n + 1, std::vector<int>(m + 1, 0));

  for (size_t i = 1; i <= n; ++i) score[i][0] = static_cast<int>(i) * params.gap;
  for (size_t j = 1; j <= m; ++j) score[0][j] = static_cast<int>(j) * params.gap;

  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      int sub = score[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? params.match : params.mismatch);
      int del = score[i - 1][j] + params.gap;
      int ins = score[i][j - 1] + params.gap;
      score[i][j] = std::max(sub, std::max(del, ins));
    }
  }

  Alignment result;
  result.score = score[n][m];

  size_t i = n, j = m;
  std::vector<AlignedColumn> rev;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        score[i][j] == score[i - 1][j - 1] +
                           (a[i - 1] == b[j - 1] ? params.match : params.mismatch)) {
      rev.push_back({static_cast<int>(i) - 1, static_cast<int>(j) - 1});
      --i, --j;
    } else if (i > 0 && score[i][j] == score[i - 1][j] + params.gap) {
      rev.push_back({static_cast<int>(i) - 1, -1});
      --i;
    } else {
      rev.push_back({-1, static_cast<int>(j) - 1});
      --j;
    }
  }
  result.columns.assign(rev.rbegin(), rev.rend());
  return result;
}

}  // namespace skillfence
