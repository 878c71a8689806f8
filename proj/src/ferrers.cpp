#include "ordifind/ferrers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ordifind {

bool is_ferrers(const Relation& rel) {
  std::vector<const Bitset*> rows;
  rows.reserve(rel.num_objects());
  for (const auto& r : rel.rows()) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(),
            [](const Bitset* a, const Bitset* b) { return a->count() < b->count(); });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!rows[i - 1]->is_subset_of(*rows[i])) return false;
  return true;
}

Relation chain_to_ferrers(const ConceptLattice& lat, const ConceptChain& chain) {
  if (lat.size() == 0) return {};
  const auto& first = lat.concept_at(0);
  Relation rel(first.extent.size(), first.intent.size());
  for (std::size_t i = 0; i < chain.concept_ids.size(); ++i) {
    ConceptId id = chain.concept_ids[i];
    if (id >= lat.size()) throw std::invalid_argument("concept id out of range");
    if (i > 0) {
      ConceptId prev = chain.concept_ids[i - 1];
      if (prev == id || !lat.leq(prev, id))
        throw std::invalid_argument("concept ids do not form an ascending chain");
    }
    const auto& c = lat.concept_at(id);
    rel.insert_block(c.extent, c.intent);
  }
  return rel;
}

std::size_t cover_gain(const ConceptLattice& lat, const Relation& covered, ConceptId lower,
                       ConceptId upper) {
  const auto& u = lat.concept_at(upper);
  std::size_t n = 0;
  u.extent.for_each_and_not(lat.concept_at(lower).extent,
                            [&](std::size_t g) { n += u.intent.count_and_not(covered.row(g)); });
  return n;
}

std::size_t bottom_gain(const ConceptLattice& lat, const Relation& covered) {
  const auto& b = lat.concept_at(lat.bottom());
  std::size_t n = 0;
  b.extent.for_each([&](std::size_t g) { n += b.intent.count_and_not(covered.row(g)); });
  return n;
}

FerrersResult max_ferrers(const ConceptLattice& lat, const Relation& covered) {
  constexpr ConceptId kNone = std::numeric_limits<ConceptId>::max();
  std::vector<std::size_t> value(lat.size(), 0);
  std::vector<ConceptId> back(lat.size(), kNone);

  for (ConceptId c : linear_extension(lat)) {
    if (c == lat.bottom()) {
      value[c] = bottom_gain(lat, covered);
      continue;
    }
    // lower_covers are sorted by id, so strict > keeps the smallest id on ties.
    std::size_t best = 0;
    ConceptId best_id = kNone;
    for (ConceptId d : lat.lower_covers(c)) {
      std::size_t v = value[d] + cover_gain(lat, covered, d, c);
      if (best_id == kNone || v > best) {
        best = v;
        best_id = d;
      }
    }
    value[c] = best;
    back[c] = best_id;
  }

  FerrersResult result{{}, lat.size() ? value[lat.top()] : 0};
  for (ConceptId c = lat.size() ? lat.top() : kNone; c != kNone; c = back[c])
    result.chain.concept_ids.push_back(c);
  std::reverse(result.chain.concept_ids.begin(), result.chain.concept_ids.end());
  return result;
}

}  // namespace ordifind
