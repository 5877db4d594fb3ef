#include "homzero/mat_f2.hpp"

#include <algorithm>
#include <stdexcept>

#include "homzero/errors.hpp"

namespace homzero::f2 {

namespace {

constexpr int kWordBits = 64;

int words_for(int cols) { return (cols + kWordBits - 1) / kWordBits; }

}  // namespace

MatF2::MatF2(int rows, int cols)
    : rows_(rows), cols_(cols), words_(words_for(cols)),
      data_(static_cast<std::size_t>(rows) * words_for(cols), 0) {
  if (rows < 0 || cols < 0) throw degenerate_input("matrix dimensions must be nonnegative");
}

MatF2 MatF2::identity(int n) {
  MatF2 m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

MatF2 MatF2::from_rows(int cols, const std::vector<std::vector<int>>& bit_rows) {
  MatF2 m(static_cast<int>(bit_rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r)
    for (int c : bit_rows[static_cast<std::size_t>(r)]) m.set(r, c, true);
  return m;
}

bool MatF2::get(int r, int c) const {
  return (row(r)[c / kWordBits] >> (c % kWordBits)) & 1u;
}

void MatF2::set(int r, int c, bool v) {
  std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  if (v)
    row(r)[c / kWordBits] |= mask;
  else
    row(r)[c / kWordBits] &= ~mask;
}

void MatF2::xor_row_into(int src, int dst) {
  const std::uint64_t* s = row(src);
  std::uint64_t* d = row(dst);
  for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

MatF2 MatF2::operator*(const MatF2& rhs) const {
  if (cols_ != rhs.rows_) throw degenerate_input("matrix product shape mismatch");
  MatF2 out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    const std::uint64_t* a = row(r);
    std::uint64_t* o = out.row(r);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = a[w];
      while (bits) {
        int c = w * kWordBits + __builtin_ctzll(bits);
        bits &= bits - 1;
        const std::uint64_t* b = rhs.row(c);
        for (int k = 0; k < rhs.words_; ++k) o[k] ^= b[k];
      }
    }
  }
  return out;
}

MatF2 MatF2::operator+(const MatF2& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw degenerate_input("matrix sum shape mismatch");
  MatF2 out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= rhs.data_[i];
  return out;
}

MatF2 MatF2::transposed() const {
  MatF2 out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = row(r)[w];
      while (bits) {
        int c = w * kWordBits + __builtin_ctzll(bits);
        bits &= bits - 1;
        out.set(c, r, true);
      }
    }
  return out;
}

bool MatF2::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

bool MatF2::is_identity() const {
  return rows_ == cols_ && *this == identity(rows_);
}

int MatF2::rank() const {
  MatF2 work = *this;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (work.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap_ranges(work.row(pivot), work.row(pivot) + words_, work.row(rank));
    for (int r = 0; r < rows_; ++r)
      if (r != rank && work.get(r, c)) work.xor_row_into(rank, r);
    ++rank;
  }
  return rank;
}

bool MatF2::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

std::optional<MatF2> MatF2::inverse() const {
  if (rows_ != cols_) throw degenerate_input("inverse requires a square matrix");
  MatF2 work = *this;
  MatF2 inv = identity(rows_);
  int rank = 0;
  for (int c = 0; c < cols_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (work.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap_ranges(work.row(pivot), work.row(pivot) + words_, work.row(rank));
    std::swap_ranges(inv.row(pivot), inv.row(pivot) + words_, inv.row(rank));
    for (int r = 0; r < rows_; ++r)
      if (r != rank && work.get(r, c)) {
        work.xor_row_into(rank, r);
        inv.xor_row_into(rank, r);
      }
    ++rank;
  }
  return inv;
}

MatF2 MatF2::right_kernel() const {
  // Reduce to rref; free columns parameterize the kernel.
  MatF2 work = *this;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (work.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap_ranges(work.row(pivot), work.row(pivot) + words_, work.row(rank));
    for (int r = 0; r < rows_; ++r)
      if (r != rank && work.get(r, c)) work.xor_row_into(rank, r);
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  MatF2 kernel(cols_ - rank, cols_);
  int k = 0;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    kernel.set(k, free, true);
    for (int r = 0; r < rank; ++r)
      if (work.get(r, free)) kernel.set(k, pivot_col[static_cast<std::size_t>(r)], true);
    ++k;
  }
  return kernel;
}

MatF2 MatF2::row_kernel() const { return transposed().right_kernel(); }

std::vector<int> MatF2::row_bits(int r) const {
  std::vector<int> bits;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = row(r)[w];
    while (word) {
      bits.push_back(w * kWordBits + __builtin_ctzll(word));
      word &= word - 1;
    }
  }
  return bits;
}

std::string MatF2::to_string() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    out.push_back('[');
    for (int c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
    out.push_back(']');
    if (r + 1 < rows_) out.push_back('\n');
  }
  return out;
}

MatF2 spin(const MatF2& vectors, const std::vector<MatF2>& actions) {
  const int d = vectors.cols();
  std::vector<MatF2> basis;  // 1-row matrices, pivot of basis[i] is pivots[i]
  std::vector<int> pivots;
  // Returns the reduced vector if it enlarged the span, nullopt otherwise.
  auto insert = [&](const MatF2& raw) -> std::optional<MatF2> {
    MatF2 v = raw;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (v.get(0, pivots[i])) v = v + basis[i];
    std::vector<int> bits = v.row_bits(0);
    if (bits.empty()) return std::nullopt;
    basis.push_back(v);
    pivots.push_back(bits.front());
    return v;
  };

  std::vector<MatF2> frontier;
  for (int r = 0; r < vectors.rows(); ++r) {
    MatF2 v(1, d);
    for (int c : vectors.row_bits(r)) v.set(0, c, true);
    if (auto added = insert(v)) frontier.push_back(std::move(*added));
  }
  while (!frontier.empty() && static_cast<int>(basis.size()) < d) {
    std::vector<MatF2> next;
    for (const MatF2& v : frontier)
      for (const MatF2& a : actions)
        if (auto added = insert(v * a)) next.push_back(std::move(*added));
    frontier = std::move(next);
  }
  MatF2 out(static_cast<int>(basis.size()), d);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int c : basis[i].row_bits(0)) out.set(static_cast<int>(i), c, true);
  return out;
}

}  // namespace homzero::f2
