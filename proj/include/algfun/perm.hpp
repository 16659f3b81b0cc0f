#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "algfun/errors.hpp"

namespace algfun {

/// Permutation of {0..m-1} (rendered 1-based in cycle notation). Composition
/// is in application order: (a.then(b))(i) = b(a(i)); that convention makes
/// the permutation of a concatenated path the `then`-product of the pieces.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)])
        throw error("permutation images are not a bijection");
      seen[static_cast<size_t>(v)] = true;
    }
  }

  static Perm identity(int m) {
    std::vector<int> v(static_cast<size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
  }

  /// Apply this first, then other.
  Perm then(const Perm& other) const {
    if (degree() != other.degree()) throw error("permutation degree mismatch");
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
      v[i] = other.img_[static_cast<size_t>(img_[i])];
    return Perm(std::move(v));
  }

  Perm inverse() const {
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
      v[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return Perm(std::move(v));
  }

  int order() const {
    Perm p = *this;
    int k = 1;
    while (!p.is_identity()) {
      p = p.then(*this);
      ++k;
      if (k > 1 << 20) throw error("runaway permutation order");
    }
    return k;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      std::vector<int> cyc;
      int j = i;
      while (!seen[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = true;
        cyc.push_back(j);
        j = img_[static_cast<size_t>(j)];
      }
      if (cyc.size() > 1) out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Multiset of cycle lengths including fixed points.
  std::vector<int> cycle_type() const {
    std::vector<int> type;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      int len = 0, j = i;
      while (!seen[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = true;
        ++len;
        j = img_[static_cast<size_t>(j)];
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

/// Disjoint-cycle rendering with 1-based points; identity prints "id".
inline std::string to_string(const Perm& p) {
  auto cyc = p.cycles();
  if (cyc.empty()) return "id";
  std::string out;
  for (const auto& c : cyc) {
    out += "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(c[i] + 1);
    }
    out += ")";
  }
  return out;
}

}  // namespace algfun
