#pragma once

// Partitions of {0, ..., n-1} in normalized form: block ids are dense and
// numbered in order of first appearance, so equal partitions compare equal
// as vectors.  A small union-find sits underneath; several modules use it
// directly for closure computations.

#include <vector>

#include "semicat/errors.hpp"

namespace semicat {

class UnionFind {
 public:
  explicit UnionFind(int n) : _parent(n), _blocks(n) {
    for (int i = 0; i < n; ++i) {
      _parent[i] = i;
    }
  }

  int find(int x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }

  // Returns true if x and y were in different blocks.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    // point the larger index at the smaller so that roots are minima
    if (x > y) {
      std::swap(x, y);
    }
    _parent[y] = x;
    --_blocks;
    return true;
  }

  int size() const { return static_cast<int>(_parent.size()); }
  int n_blocks() const { return _blocks; }

 private:
  std::vector<int> _parent;
  int _blocks;
};

class Partition {
 public:
  Partition() = default;

  // all singleton blocks
  static Partition singletons(int n);
  // one block containing everything
  static Partition universal(int n);
  // arbitrary block-id vector, renumbered to normal form
  static Partition from_assignment(std::vector<int> ids);
  static Partition from_blocks(int n, std::vector<std::vector<int>> const& blocks);
  static Partition from_union_find(UnionFind& uf);

  int size() const { return static_cast<int>(_ids.size()); }
  int n_blocks() const { return _n_blocks; }
  int block_of(int x) const { return _ids[x]; }
  bool same(int x, int y) const { return _ids[x] == _ids[y]; }
  std::vector<int> const& assignment() const { return _ids; }
  std::vector<std::vector<int>> blocks() const;

  // every block of this partition is contained in a block of coarser
  bool refines(Partition const& coarser) const;
  // common refinement
  Partition meet(Partition const& other) const;
  // finest common coarsening
  Partition join(Partition const& other) const;

  bool operator==(Partition const& other) const { return _ids == other._ids; }
  bool operator!=(Partition const& other) const { return !(*this == other); }

 private:
  std::vector<int> _ids;
  int _n_blocks = 0;
};

}  // namespace semicat
