// Dense bit-packed matrices over GF(2).

#pragma once

#include <cstdint>
#include <vector>

namespace vknot {

class BitMatrix {
 public:
  BitMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return data_[r * words_ + c / 64] >> (c % 64) & 1u; }
  void flip(int r, int c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  // Rank by Gaussian elimination on a copy.
  int rank() const;

 private:
  int rows_;
  int cols_;
  int words_;
  std::vector<std::uint64_t> data_;
};

}  // namespace vknot
