#pragma once

#include <cstddef>
#include <vector>

#include "ordifind/lattice.hpp"
#include "ordifind/relation.hpp"

namespace ordifind {

/// Concept ids in strictly ascending lattice order (index 0 is the smallest).
struct ConceptChain {
  std::vector<ConceptId> concept_ids;

  bool operator==(const ConceptChain&) const = default;
};

/// True iff for all (g,m), (h,n) in rel: (g,n) ∈ rel or (h,m) ∈ rel.
/// Checked as: the object rows, ordered by size, form a ⊆-chain.
bool is_ferrers(const Relation& rel);

/// ⋃ A×B over the chain. Throws std::invalid_argument when the ids are not
/// strictly ascending in the lattice order.
Relation chain_to_ferrers(const ConceptLattice& lat, const ConceptChain& chain);

struct FerrersResult {
  ConceptChain chain;         // a maximal chain, bottom to top
  std::size_t new_coverage;   // |ferrers(chain) \ covered|
};

/// Number of pairs of (extent(upper) \ extent(lower)) × intent(upper) not in
/// covered: what concept `upper` adds to any chain arriving from `lower`.
std::size_t cover_gain(const ConceptLattice& lat, const Relation& covered, ConceptId lower,
                       ConceptId upper);

/// |extent × intent \ covered| for the bottom concept, whose chain has no predecessor.
std::size_t bottom_gain(const ConceptLattice& lat, const Relation& covered);

/// Maximal chain covering the most pairs outside `covered`.
///
/// Longest-path DP over the covering relation in linear-extension order.
/// Among lower covers, a strictly better value wins and ties go to the
/// smaller concept id, so the result does not depend on traversal order.
FerrersResult max_ferrers(const ConceptLattice& lat, const Relation& covered);

}  // namespace ordifind
