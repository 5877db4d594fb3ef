#include "homzero/perm.hpp"

#include <algorithm>
#include <numeric>

#include "homzero/errors.hpp"

namespace homzero::grp {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v]) {
      throw degenerate_input("permutation image array is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw degenerate_input("negative permutation degree");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 0) throw degenerate_input("negative permutation degree");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (int p : cyc) {
      if (p < 0 || p >= n) throw degenerate_input("cycle point out of range");
      if (used[p]) throw degenerate_input("point repeated across cycles");
      used[p] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a == b) throw degenerate_input("transposition needs two distinct points");
  return from_cycles(n, {{a, b}});
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw degenerate_input("composing permutations of different degrees");
  std::vector<int> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) img[i] = rhs.img_[img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<int>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  int swaps = 0;
  for (int len : cycle_type()) swaps += len - 1;
  return swaps % 2 == 0;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    std::vector<int> cyc;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<int>(j));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& cyc : cs) {
    s += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) s += ' ';
      s += std::to_string(cyc[i]);
    }
    s += ')';
  }
  return s;
}

}  // namespace homzero::grp
