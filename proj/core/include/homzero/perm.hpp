#pragma once

#include <compare>
#include <string>
#include <vector>

namespace homzero::grp {

// Points are 0-based. Composition is left-to-right: (a * b)(x) = b(a(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Cycles use point labels < n; points absent from every cycle are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int n, int a, int b);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  bool is_even() const;
  // All cycle lengths including fixed points, ascending.
  std::vector<int> cycle_type() const;
  // Nontrivial cycles, each rotated to start at its minimum, sorted by that minimum.
  std::vector<std::vector<int>> cycles() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

}  // namespace homzero::grp
