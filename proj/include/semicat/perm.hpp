#pragma once

// Permutations of {0, ..., n-1} stored as image vectors.  Composition is
// left-to-right: (p * q)[i] = q[p[i]], matching the convention that maps
// act on the right of points.

#include <vector>

#include "semicat/errors.hpp"

namespace semicat {

struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> v) : img(std::move(v)) {}

  static Perm identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = i;
    }
    return Perm(std::move(v));
  }

  int degree() const { return static_cast<int>(img.size()); }
  int operator[](int i) const { return img[i]; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i) {
      if (img[i] != i) {
        return false;
      }
    }
    return true;
  }

  Perm after(Perm const& q) const {  // apply *this, then q
    std::vector<int> v(img.size());
    for (size_t i = 0; i < img.size(); ++i) {
      v[i] = q.img[img[i]];
    }
    return Perm(std::move(v));
  }

  Perm inverse() const {
    std::vector<int> v(img.size());
    for (size_t i = 0; i < img.size(); ++i) {
      v[img[i]] = static_cast<int>(i);
    }
    return Perm(std::move(v));
  }

  bool operator==(Perm const& o) const { return img == o.img; }
  bool operator!=(Perm const& o) const { return img != o.img; }
  bool operator<(Perm const& o) const { return img < o.img; }
};

inline bool is_permutation(std::vector<int> const& img, int n) {
  if (static_cast<int>(img.size()) != n) {
    return false;
  }
  std::vector<bool> hit(n, false);
  for (int v : img) {
    if (v < 0 || v >= n || hit[v]) {
      return false;
    }
    hit[v] = true;
  }
  return true;
}

}  // namespace semicat
