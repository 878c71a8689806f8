#pragma once

#include <cstddef>
#include <vector>

#include "ordifind/bitset.hpp"
#include "ordifind/context.hpp"
#include "ordifind/ferrers.hpp"
#include "ordifind/lattice.hpp"

namespace ordifind {

/// One position on a factor axis: the concept it stands for and the
/// attributes gained over the previous tick.
struct Tick {
  ConceptId concept_id;
  Bitset gained;

  bool operator==(const Tick&) const = default;
};

struct OrdinalFactor {
  ConceptChain chain;
  std::vector<Tick> ticks;     // position 1 first
  std::size_t new_coverage = 0;
  std::size_t size = 0;        // |ferrers(chain)|

  bool operator==(const OrdinalFactor&) const = default;
};

struct Factorization {
  std::vector<OrdinalFactor> factors;
  Relation covered;  // union of all factor relations; equals I when complete

  std::size_t width() const { return factors.size(); }
  bool operator==(const Factorization&) const = default;
};

enum class Algorithm { kNaive, kOrdiFind };

/// Axis ticks of a chain, walked from its largest extent downward. Concepts
/// with an empty extent or no newly gained attribute get no tick.
std::vector<Tick> factor_ticks(const FormalContext& ctx, const ConceptLattice& lat,
                               const ConceptChain& chain);

/// Greedy complete factorization recomputing the whole DP for every factor.
Factorization factorize_naive(const FormalContext& ctx, const ConceptLattice& lat);

/// Same output as factorize_naive, but DP values persist between factors and
/// only concepts touched by the newly covered pairs are recomputed.
Factorization ordifind(const FormalContext& ctx, const ConceptLattice& lat);

Factorization factorize(const FormalContext& ctx, const ConceptLattice& lat, Algorithm algorithm);

}  // namespace ordifind
