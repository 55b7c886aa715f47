#ifndef ISKIT_RELATION_HPP
#define ISKIT_RELATION_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "iskit/errors.hpp"

namespace iskit {

// Binary relation on {0, ..., n-1}, stored as a dense bit matrix.
class Relation {
 public:
  Relation() : n_(0) {}
  explicit Relation(int n) : n_(n), bits_(static_cast<size_t>(n) * n, 0) {}

  int size() const { return n_; }

  bool at(int i, int j) const {
    return bits_[static_cast<size_t>(i) * n_ + j] != 0;
  }

  void set(int i, int j, bool v = true) {
    bits_[static_cast<size_t>(i) * n_ + j] = v ? 1 : 0;
  }

  bool operator==(const Relation& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }
  bool operator!=(const Relation& other) const { return !(*this == other); }

  bool is_reflexive() const {
    for (int i = 0; i < n_; ++i)
      if (!at(i, i)) return false;
    return true;
  }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool is_transitive() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (!at(i, j)) continue;
        for (int k = 0; k < n_; ++k)
          if (at(j, k) && !at(i, k)) return false;
      }
    return true;
  }

  // true iff this ⊆ other as sets of pairs
  bool subrelation_of(const Relation& other) const {
    if (n_ != other.n_) return false;
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.bits_[i]) return false;
    return true;
  }

 private:
  int n_;
  std::vector<uint8_t> bits_;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // returns false if already joined
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

// Partition of {0, ..., n-1} into numbered blocks.  Block ids are
// normalized to first-occurrence order, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;

  static Partition from_block_ids(std::vector<int> block) {
    Partition p;
    p.block_ = std::move(block);
    p.normalize();
    return p;
  }

  static Partition from_union_find(UnionFind& uf) {
    std::vector<int> block(uf.size());
    for (int i = 0; i < uf.size(); ++i) block[i] = uf.find(i);
    return from_block_ids(std::move(block));
  }

  static Partition singletons(int n) {
    std::vector<int> block(n);
    std::iota(block.begin(), block.end(), 0);
    return from_block_ids(std::move(block));
  }

  static Partition universal(int n) {
    return from_block_ids(std::vector<int>(n, 0));
  }

  int size() const { return static_cast<int>(block_.size()); }
  int num_blocks() const { return num_blocks_; }
  int block_of(int x) const { return block_[x]; }
  bool same_block(int x, int y) const { return block_[x] == block_[y]; }
  const std::vector<int>& block_ids() const { return block_; }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(num_blocks_);
    for (int i = 0; i < size(); ++i) out[block_[i]].push_back(i);
    return out;
  }

  // common refinement: x,y together iff together in both
  Partition meet(const Partition& other) const {
    std::vector<int> key(size());
    for (int i = 0; i < size(); ++i)
      key[i] = block_[i] * other.num_blocks() + other.block_of(i);
    return from_block_ids(std::move(key));
  }

  Partition join(const Partition& other) const {
    UnionFind uf(size());
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (same_block(i, j) || other.same_block(i, j)) uf.unite(i, j);
    return from_union_find(uf);
  }

  // true iff every block of this is contained in a block of other
  bool refines(const Partition& other) const {
    if (size() != other.size()) return false;
    std::vector<int> image(num_blocks_, -1);
    for (int i = 0; i < size(); ++i) {
      int b = block_[i];
      if (image[b] == -1) image[b] = other.block_of(i);
      else if (image[b] != other.block_of(i)) return false;
    }
    return true;
  }

  Relation to_relation() const {
    Relation r(size());
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (same_block(i, j)) r.set(i, j);
    return r;
  }

  static Partition from_relation(const Relation& r) {
    if (!r.is_reflexive() || !r.is_symmetric() || !r.is_transitive())
      throw InvalidInputError("relation is not an equivalence");
    UnionFind uf(r.size());
    for (int i = 0; i < r.size(); ++i)
      for (int j = i + 1; j < r.size(); ++j)
        if (r.at(i, j)) uf.unite(i, j);
    return from_union_find(uf);
  }

  bool operator==(const Partition& other) const {
    return block_ == other.block_;
  }
  bool operator!=(const Partition& other) const { return !(*this == other); }
  bool operator<(const Partition& other) const { return block_ < other.block_; }

 private:
  // ids may be arbitrary ints (e.g. keys built by meet()), so remap by search
  void normalize() {
    int next = 0;
    std::vector<std::pair<int, int>> first;  // (old id, new id)
    for (int& b : block_) {
      int found = -1;
      for (auto& [oldid, newid] : first)
        if (oldid == b) { found = newid; break; }
      if (found == -1) {
        first.emplace_back(b, next);
        found = next++;
      }
      b = found;
    }
    num_blocks_ = next;
  }

  std::vector<int> block_;
  int num_blocks_ = 0;
};

}  // namespace iskit

#endif
