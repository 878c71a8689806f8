#include "ordifind/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ordifind {

namespace {

void check_object(const FormalContext& ctx, std::size_t g) {
  if (g >= ctx.num_objects())
    throw std::invalid_argument("object index " + std::to_string(g) + " out of range");
}

Bitset required_attributes(const FormalContext& ctx, const Factorization& factorization,
                           const Selection& sel) {
  if (sel.positions.size() != factorization.factors.size())
    throw std::invalid_argument("selection has " + std::to_string(sel.positions.size()) +
                                " positions for " + std::to_string(factorization.factors.size()) +
                                " factors");
  Bitset required(ctx.num_attributes());
  for (std::size_t i = 0; i < sel.positions.size(); ++i) {
    const auto& f = factorization.factors[i];
    if (sel.positions[i] > f.ticks.size())
      throw std::invalid_argument("position " + std::to_string(sel.positions[i]) + " of factor " +
                                  std::to_string(i + 1) + " exceeds its " +
                                  std::to_string(f.ticks.size()) + " ticks");
    required |= cumulative_attributes(f, sel.positions[i], ctx.num_attributes());
  }
  return required;
}

}  // namespace

std::size_t position(const FormalContext& ctx, const OrdinalFactor& factor, std::size_t g) {
  check_object(ctx, g);
  const Bitset& row = ctx.object_row(g);
  std::size_t r = 0;
  for (const auto& tick : factor.ticks) {
    if (!tick.gained.is_subset_of(row)) break;
    ++r;
  }
  return r;
}

Bitset cumulative_attributes(const OrdinalFactor& factor, std::size_t p, std::size_t num_attributes) {
  Bitset out(num_attributes);
  for (std::size_t i = 0; i < p && i < factor.ticks.size(); ++i) out |= factor.ticks[i].gained;
  return out;
}

std::size_t distance(const FormalContext& ctx, std::size_t g1, std::size_t g2) {
  check_object(ctx, g1);
  check_object(ctx, g2);
  return ctx.object_row(g1).count_and_not(ctx.object_row(g2));
}

std::size_t hamming(const FormalContext& ctx, std::size_t g1, std::size_t g2) {
  return distance(ctx, g1, g2) + distance(ctx, g2, g1);
}

std::size_t selection_distance(const FormalContext& ctx, const Factorization& factorization,
                               std::size_t g, const Selection& sel) {
  check_object(ctx, g);
  return required_attributes(ctx, factorization, sel).count_and_not(ctx.object_row(g));
}

Selection supported_positions(const FormalContext& ctx, const Factorization& factorization,
                              std::size_t g) {
  Selection sel;
  for (const auto& f : factorization.factors) sel.positions.push_back(position(ctx, f, g));
  return sel;
}

std::vector<RankedObject> rank_objects(const FormalContext& ctx, const Factorization& factorization,
                                       const Selection& sel) {
  Bitset required = required_attributes(ctx, factorization, sel);
  std::vector<RankedObject> out;
  out.reserve(ctx.num_objects());
  for (std::size_t g = 0; g < ctx.num_objects(); ++g)
    out.push_back({g, required.count_and_not(ctx.object_row(g))});
  std::stable_sort(out.begin(), out.end(), [](const RankedObject& a, const RankedObject& b) {
    return a.distance < b.distance;
  });
  return out;
}

}  // namespace ordifind
