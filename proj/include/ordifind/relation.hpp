#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ordifind/bitset.hpp"

namespace ordifind {

using ObjectPair = std::pair<std::size_t, std::size_t>;  // (object, attribute)

/// A binary relation R ⊆ G × M stored as one attribute bitset per object.
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t num_objects, std::size_t num_attributes)
      : num_attributes_(num_attributes), rows_(num_objects, Bitset(num_attributes)) {}

  /// Throws std::invalid_argument for pairs outside the grid.
  static Relation from_pairs(std::size_t num_objects, std::size_t num_attributes,
                             const std::vector<ObjectPair>& pairs);

  std::size_t num_objects() const { return rows_.size(); }
  std::size_t num_attributes() const { return num_attributes_; }

  bool contains(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
  void insert(std::size_t g, std::size_t m) { rows_[g].set(m); }

  /// Adds extent × intent.
  void insert_block(const Bitset& extent, const Bitset& intent) {
    extent.for_each([&](std::size_t g) { rows_[g] |= intent; });
  }

  const Bitset& row(std::size_t g) const { return rows_[g]; }
  const std::vector<Bitset>& rows() const { return rows_; }

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  Relation& operator|=(const Relation& o);
  Relation& operator-=(const Relation& o);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator-(Relation a, const Relation& b) { return a -= b; }

  /// (G × M) \ R
  Relation complement() const;
  bool is_subset_of(const Relation& o) const;
  std::vector<ObjectPair> pairs() const;

  bool operator==(const Relation&) const = default;

 private:
  std::size_t num_attributes_ = 0;
  std::vector<Bitset> rows_;
};

}  // namespace ordifind
