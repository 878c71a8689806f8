#include "ordifind/lattice.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

namespace ordifind {

namespace {

/// Upper neighbours of (extent, intent), following Lindig: a candidate
/// generated from g is a neighbour iff its closure adds no object that was
/// already ruled out as a minimal generator.
std::vector<Concept> upper_neighbours(const FormalContext& ctx, const Concept& c) {
  std::vector<Concept> out;
  Bitset candidates = c.extent.complement();
  Bitset min_set = candidates;
  candidates.for_each([&](std::size_t g) {
    Bitset intent = c.intent & ctx.object_row(g);
    Bitset extent = ctx.derive_intent(intent);
    Bitset added = extent - c.extent;
    added.reset(g);
    if (added.intersects(min_set)) {
      min_set.reset(g);
    } else {
      out.push_back(Concept{std::move(extent), std::move(intent)});
    }
  });
  return out;
}

}  // namespace

ConceptLattice build_lattice(const FormalContext& ctx, const LatticeOptions& options) {
  ConceptLattice lat;
  std::unordered_map<Bitset, ConceptId, BitsetHash> by_extent;

  auto add = [&](Concept c) -> ConceptId {
    if (lat.concepts_.size() >= options.max_concepts)
      throw ResourceExhausted("concept lattice exceeds the cap of " +
                              std::to_string(options.max_concepts) + " concepts");
    auto id = static_cast<ConceptId>(lat.concepts_.size());
    by_extent.emplace(c.extent, id);
    lat.concepts_.push_back(std::move(c));
    lat.upper_.emplace_back();
    lat.lower_.emplace_back();
    return id;
  };

  Bitset all_attributes = Bitset::full(ctx.num_attributes());
  add(Concept{ctx.derive_intent(all_attributes), all_attributes});
  lat.bottom_ = 0;

  std::deque<ConceptId> queue{0};
  while (!queue.empty()) {
    ConceptId cur = queue.front();
    queue.pop_front();
    // Copy: add() may reallocate concepts_.
    Concept c = lat.concepts_[cur];
    for (auto& n : upper_neighbours(ctx, c)) {
      auto it = by_extent.find(n.extent);
      ConceptId nid;
      if (it == by_extent.end()) {
        nid = add(std::move(n));
        queue.push_back(nid);
      } else {
        nid = it->second;
      }
      lat.upper_[cur].push_back(nid);
      lat.lower_[nid].push_back(cur);
      ++lat.num_edges_;
    }
  }

  for (auto& v : lat.upper_) std::sort(v.begin(), v.end());
  for (auto& v : lat.lower_) std::sort(v.begin(), v.end());
  for (ConceptId id = 0; id < lat.concepts_.size(); ++id)
    if (lat.upper_[id].empty()) lat.top_ = id;
  return lat;
}

ConceptId ConceptLattice::find_by_extent(const Bitset& extent) const {
  for (ConceptId id = 0; id < concepts_.size(); ++id)
    if (concepts_[id].extent == extent) return id;
  return static_cast<ConceptId>(concepts_.size());
}

ConceptId attribute_concept(const FormalContext& ctx, const ConceptLattice& lat, std::size_t m) {
  if (m >= ctx.num_attributes())
    throw std::invalid_argument("attribute index " + std::to_string(m) + " out of range");
  // Walk down from the top: the attribute concept is the greatest one whose
  // intent contains m, and every concept below it also contains m.
  ConceptId cur = lat.top();
  while (!lat.concept_at(cur).intent.test(m)) {
    const Bitset& column = ctx.attribute_column(m);
    ConceptId next = cur;
    for (ConceptId d : lat.lower_covers(cur))
      if (column.is_subset_of(lat.concept_at(d).extent)) {
        next = d;
        break;
      }
    cur = next;
  }
  return cur;
}

ConceptId object_concept(const FormalContext& ctx, const ConceptLattice& lat, std::size_t g) {
  if (g >= ctx.num_objects())
    throw std::invalid_argument("object index " + std::to_string(g) + " out of range");
  ConceptId cur = lat.bottom();
  while (!lat.concept_at(cur).extent.test(g)) {
    const Bitset& row = ctx.object_row(g);
    ConceptId next = cur;
    for (ConceptId u : lat.upper_covers(cur))
      if (row.is_subset_of(lat.concept_at(u).intent)) {
        next = u;
        break;
      }
    cur = next;
  }
  return cur;
}

std::vector<ConceptId> linear_extension(const ConceptLattice& lat) {
  std::vector<std::size_t> card(lat.size());
  for (ConceptId id = 0; id < lat.size(); ++id) card[id] = lat.concept_at(id).intent.count();
  std::vector<ConceptId> order(lat.size());
  for (ConceptId id = 0; id < lat.size(); ++id) order[id] = id;
  std::sort(order.begin(), order.end(), [&](ConceptId a, ConceptId b) {
    return card[a] != card[b] ? card[a] > card[b] : a < b;
  });
  return order;
}

}  // namespace ordifind
