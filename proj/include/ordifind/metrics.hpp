#pragma once

#include <cstddef>
#include <vector>

#include "ordifind/bitset.hpp"
#include "ordifind/context.hpp"
#include "ordifind/factorize.hpp"

namespace ordifind {

/// One slider position per factor; 0 selects nothing on that axis.
struct Selection {
  std::vector<std::size_t> positions;

  bool operator==(const Selection&) const = default;
};

struct RankedObject {
  std::size_t object;
  std::size_t distance;

  bool operator==(const RankedObject&) const = default;
};

/// Largest r such that the attributes of ticks 1..r all belong to g′.
std::size_t position(const FormalContext& ctx, const OrdinalFactor& factor, std::size_t g);

/// Attributes of ticks 1..p of a factor.
Bitset cumulative_attributes(const OrdinalFactor& factor, std::size_t p, std::size_t num_attributes);

/// |g1′ \ g2′|, asymmetric.
std::size_t distance(const FormalContext& ctx, std::size_t g1, std::size_t g2);

/// d(g1,g2) + d(g2,g1).
std::size_t hamming(const FormalContext& ctx, std::size_t g1, std::size_t g2);

/// Number of attributes required by the selection that g lacks. Throws
/// std::invalid_argument for a selection of the wrong length or a position
/// beyond a factor's tick count.
std::size_t selection_distance(const FormalContext& ctx, const Factorization& factorization,
                               std::size_t g, const Selection& sel);

/// Every factor's position for g: the selection an object click produces.
Selection supported_positions(const FormalContext& ctx, const Factorization& factorization,
                              std::size_t g);

/// All objects ascending by selection distance; ties keep input order.
std::vector<RankedObject> rank_objects(const FormalContext& ctx, const Factorization& factorization,
                                       const Selection& sel);

}  // namespace ordifind
