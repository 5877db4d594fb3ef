#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homzero::f2 {

// Dense matrix over F_2 with bit-packed rows. Vectors are rows and act on
// the right: v -> v * M.
class MatF2 {
 public:
  MatF2(int rows, int cols);  // zero matrix
  static MatF2 identity(int n);
  static MatF2 from_rows(int cols, const std::vector<std::vector<int>>& bit_rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool v);
  void xor_row_into(int src, int dst);  // row[dst] ^= row[src]

  MatF2 operator*(const MatF2& rhs) const;
  MatF2 operator+(const MatF2& rhs) const;
  bool operator==(const MatF2& rhs) const = default;

  MatF2 transposed() const;
  bool is_zero() const;
  bool is_identity() const;

  int rank() const;
  bool is_invertible() const;
  std::optional<MatF2> inverse() const;

  // Basis of {x : M * x^T = 0}, one kernel vector per row of the result.
  MatF2 right_kernel() const;
  // Basis of {v : v * M = 0}, one kernel vector per row of the result.
  MatF2 row_kernel() const;

  std::vector<int> row_bits(int r) const;
  std::string to_string() const;

 private:
  int rows_, cols_, words_;
  std::vector<std::uint64_t> data_;  // row-major, words_ per row

  std::uint64_t* row(int r) { return data_.data() + static_cast<std::size_t>(r) * words_; }
  const std::uint64_t* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * words_; }
};

// Row space of `vectors` closed under right multiplication by every action;
// returns a row-echelon basis of the smallest invariant subspace containing
// the input rows.
MatF2 spin(const MatF2& vectors, const std::vector<MatF2>& actions);

}  // namespace homzero::f2
