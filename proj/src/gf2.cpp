#include "vknot/gf2.hpp"

#include <algorithm>

namespace vknot {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(static_cast<size_t>(rows) * words_, 0) {}

int BitMatrix::rank() const {
  std::vector<std::uint64_t> m = data_;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    const int w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (m[r * words_ + w] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      std::swap_ranges(m.begin() + pivot * words_, m.begin() + (pivot + 1) * words_, m.begin() + rank * words_);
    const std::uint64_t* prow = &m[rank * words_];
    for (int r = rank + 1; r < rows_; ++r) {
      std::uint64_t* row = &m[r * words_];
      if (!(row[w] & bit)) continue;
      for (int k = w; k < words_; ++k) row[k] ^= prow[k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace vknot
