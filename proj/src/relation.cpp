#include "ordifind/relation.hpp"

#include <stdexcept>
#include <string>

namespace ordifind {

Relation Relation::from_pairs(std::size_t num_objects, std::size_t num_attributes,
                              const std::vector<ObjectPair>& pairs) {
  Relation r(num_objects, num_attributes);
  for (auto [g, m] : pairs) {
    if (g >= num_objects || m >= num_attributes)
      throw std::invalid_argument("pair (" + std::to_string(g) + ", " + std::to_string(m) +
                                  ") outside the relation grid");
    r.insert(g, m);
  }
  return r;
}

std::size_t Relation::size() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.count();
  return n;
}

Relation& Relation::operator|=(const Relation& o) {
  for (std::size_t g = 0; g < rows_.size(); ++g) rows_[g] |= o.rows_[g];
  return *this;
}

Relation& Relation::operator-=(const Relation& o) {
  for (std::size_t g = 0; g < rows_.size(); ++g) rows_[g] -= o.rows_[g];
  return *this;
}

Relation Relation::complement() const {
  Relation r = *this;
  for (auto& row : r.rows_) row = row.complement();
  return r;
}

bool Relation::is_subset_of(const Relation& o) const {
  for (std::size_t g = 0; g < rows_.size(); ++g)
    if (!rows_[g].is_subset_of(o.rows_[g])) return false;
  return true;
}

std::vector<ObjectPair> Relation::pairs() const {
  std::vector<ObjectPair> out;
  for (std::size_t g = 0; g < rows_.size(); ++g)
    rows_[g].for_each([&](std::size_t m) { out.emplace_back(g, m); });
  return out;
}

}  // namespace ordifind
