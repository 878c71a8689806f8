#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ordifind/bitset.hpp"
#include "ordifind/context.hpp"

namespace ordifind {

using ConceptId = std::uint32_t;

struct Concept {
  Bitset extent;  // objects
  Bitset intent;  // attributes
};

/// Thrown when a lattice would exceed the configured concept cap.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LatticeOptions {
  std::size_t max_concepts = 10'000'000;
};

/// All formal concepts of a context together with the covering relation.
///
/// Ids follow first generation order during the upward neighbour search
/// starting at the bottom concept, so bottom() is always id 0.
class ConceptLattice {
 public:
  std::size_t size() const { return concepts_.size(); }
  const Concept& concept_at(ConceptId id) const { return concepts_[id]; }
  const std::vector<Concept>& concepts() const { return concepts_; }

  /// Concepts d with c ≺ d.
  const std::vector<ConceptId>& upper_covers(ConceptId c) const { return upper_[c]; }
  /// Concepts d with d ≺ c.
  const std::vector<ConceptId>& lower_covers(ConceptId c) const { return lower_[c]; }

  ConceptId top() const { return top_; }
  ConceptId bottom() const { return bottom_; }
  std::size_t num_cover_edges() const { return num_edges_; }

  /// c ≤ d in the concept order (extent inclusion).
  bool leq(ConceptId c, ConceptId d) const {
    return concepts_[c].extent.is_subset_of(concepts_[d].extent);
  }

  /// Id of the concept with the given extent, or size() when absent.
  ConceptId find_by_extent(const Bitset& extent) const;

 private:
  friend ConceptLattice build_lattice(const FormalContext&, const LatticeOptions&);

  std::vector<Concept> concepts_;
  std::vector<std::vector<ConceptId>> upper_;
  std::vector<std::vector<ConceptId>> lower_;
  ConceptId top_ = 0;
  ConceptId bottom_ = 0;
  std::size_t num_edges_ = 0;
};

/// Enumerates every concept of ctx with its covers (Lindig's upper neighbour
/// search). Throws ResourceExhausted past options.max_concepts.
ConceptLattice build_lattice(const FormalContext& ctx, const LatticeOptions& options = {});

/// (m′, m″)
ConceptId attribute_concept(const FormalContext& ctx, const ConceptLattice& lat, std::size_t m);
/// (g″, g′)
ConceptId object_concept(const FormalContext& ctx, const ConceptLattice& lat, std::size_t g);

/// Concept ids ordered by descending intent size, ties by id. Every concept
/// comes after all of its lower covers.
std::vector<ConceptId> linear_extension(const ConceptLattice& lat);

}  // namespace ordifind
