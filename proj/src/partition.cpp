#include "semicat/partition.hpp"

#include <algorithm>

namespace semicat {

namespace {

// renumber arbitrary ids to 0,1,... in order of first appearance
std::vector<int> normalize(std::vector<int> const& raw, int* n_blocks_out) {
  std::vector<int> out(raw.size());
  std::vector<int> seen;  // raw id -> dense id, lazily grown
  int next = 0;
  int max_raw = -1;
  for (int v : raw) {
    max_raw = std::max(max_raw, v);
  }
  seen.assign(max_raw + 1, -1);
  for (size_t i = 0; i < raw.size(); ++i) {
    int v = raw[i];
    if (v < 0) {
      throw InputError("partition: negative block id");
    }
    if (seen[v] == -1) {
      seen[v] = next++;
    }
    out[i] = seen[v];
  }
  *n_blocks_out = next;
  return out;
}

}  // namespace

Partition Partition::singletons(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) {
    ids[i] = i;
  }
  Partition p;
  p._ids = std::move(ids);
  p._n_blocks = n;
  return p;
}

Partition Partition::universal(int n) {
  Partition p;
  p._ids.assign(n, 0);
  p._n_blocks = n > 0 ? 1 : 0;
  return p;
}

Partition Partition::from_assignment(std::vector<int> ids) {
  Partition p;
  p._ids = normalize(ids, &p._n_blocks);
  return p;
}

Partition Partition::from_blocks(int n, std::vector<std::vector<int>> const& blocks) {
  std::vector<int> ids(n, -1);
  int bid = 0;
  for (auto const& b : blocks) {
    for (int x : b) {
      if (x < 0 || x >= n) {
        throw InputError("partition: element " + std::to_string(x) + " out of range");
      }
      if (ids[x] != -1) {
        throw InputError("partition: element " + std::to_string(x) + " in two blocks");
      }
      ids[x] = bid;
    }
    ++bid;
  }
  for (int x = 0; x < n; ++x) {
    if (ids[x] == -1) {
      throw InputError("partition: element " + std::to_string(x) + " not covered");
    }
  }
  return from_assignment(std::move(ids));
}

Partition Partition::from_union_find(UnionFind& uf) {
  std::vector<int> ids(uf.size());
  for (int i = 0; i < uf.size(); ++i) {
    ids[i] = uf.find(i);
  }
  return from_assignment(std::move(ids));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(_n_blocks);
  for (int i = 0; i < size(); ++i) {
    out[_ids[i]].push_back(i);
  }
  return out;
}

bool Partition::refines(Partition const& coarser) const {
  if (size() != coarser.size()) {
    return false;
  }
  // two elements in the same fine block must share a coarse block
  std::vector<int> image(_n_blocks, -1);
  for (int i = 0; i < size(); ++i) {
    int b = _ids[i];
    if (image[b] == -1) {
      image[b] = coarser._ids[i];
    } else if (image[b] != coarser._ids[i]) {
      return false;
    }
  }
  return true;
}

Partition Partition::meet(Partition const& other) const {
  std::vector<int> ids(size());
  int nb = other._n_blocks;
  for (int i = 0; i < size(); ++i) {
    ids[i] = _ids[i] * nb + other._ids[i];
  }
  return from_assignment(std::move(ids));
}

Partition Partition::join(Partition const& other) const {
  UnionFind uf(size());
  // merge along both block structures; first-in-block representatives
  std::vector<int> first_a(_n_blocks, -1), first_b(other._n_blocks, -1);
  for (int i = 0; i < size(); ++i) {
    if (first_a[_ids[i]] == -1) {
      first_a[_ids[i]] = i;
    } else {
      uf.unite(first_a[_ids[i]], i);
    }
    if (first_b[other._ids[i]] == -1) {
      first_b[other._ids[i]] = i;
    } else {
      uf.unite(first_b[other._ids[i]], i);
    }
  }
  return from_union_find(uf);
}

}  // namespace semicat
