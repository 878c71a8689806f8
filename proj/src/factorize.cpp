#include "ordifind/factorize.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace ordifind {

namespace {

constexpr ConceptId kNone = std::numeric_limits<ConceptId>::max();

OrdinalFactor make_factor(const FormalContext& ctx, const ConceptLattice& lat, ConceptChain chain,
                          std::size_t new_coverage, Relation& covered) {
  Relation rel = chain_to_ferrers(lat, chain);
  OrdinalFactor f;
  f.size = rel.size();
  f.new_coverage = new_coverage;
  f.ticks = factor_ticks(ctx, lat, chain);
  f.chain = std::move(chain);
  covered |= rel;
  return f;
}

/// Persistent longest-path state for the incremental factorization.
class IncrementalDp {
 public:
  IncrementalDp(const ConceptLattice& lat, const Relation& covered)
      : lat_(lat),
        covered_(covered),
        value_(lat.size(), 0),
        back_(lat.size(), kNone),
        intent_size_(lat.size()),
        queued_(lat.size(), 0),
        stale_(lat.size(), 0),
        stamp_(lat.size(), 0),
        gain_offset_(lat.size() + 1, 0),
        queue_(Order{&intent_size_}) {
    for (ConceptId c = 0; c < lat.size(); ++c) {
      intent_size_[c] = lat.concept_at(c).intent.count();
      gain_offset_[c + 1] = gain_offset_[c] + lat.lower_covers(c).size();
    }
    gain_.resize(gain_offset_.back());
    for (ConceptId c : linear_extension(lat)) recompute(c, true);
  }

  std::size_t best_value() const { return value_[lat_.top()]; }

  ConceptChain best_chain() const {
    ConceptChain chain;
    for (ConceptId c = lat_.top(); c != kNone; c = back_[c]) chain.concept_ids.push_back(c);
    std::reverse(chain.concept_ids.begin(), chain.concept_ids.end());
    return chain;
  }

  /// `added` holds the pairs that just became covered (already merged into the
  /// covered relation). Recomputes exactly the concepts whose incoming gains
  /// changed, then propagates value changes upward.
  void update(const Relation& added, const std::vector<ConceptId>& attribute_concepts) {
    // Newly covered objects per attribute.
    std::vector<Bitset> columns(added.num_attributes(), Bitset(added.num_objects()));
    for (std::size_t g = 0; g < added.num_objects(); ++g)
      added.row(g).for_each([&](std::size_t m) { columns[m].set(g); });

    // A block meets a new pair (g, m) iff the concept lies below m's attribute
    // concept and still has g in its extent. Extents shrink downward, so the
    // walk from each attribute concept stops where its column drops out.
    std::vector<ConceptId> stack;
    for (std::size_t m = 0; m < columns.size(); ++m) {
      if (columns[m].none()) continue;
      ++epoch_;
      stack.push_back(attribute_concepts[m]);
      stamp_[attribute_concepts[m]] = epoch_;
      while (!stack.empty()) {
        ConceptId c = stack.back();
        stack.pop_back();
        stale_[c] = 1;
        push(c);
        for (ConceptId d : lat_.lower_covers(c))
          if (stamp_[d] != epoch_ && lat_.concept_at(d).extent.intersects(columns[m])) {
            stamp_[d] = epoch_;
            stack.push_back(d);
          }
      }
    }

    while (!queue_.empty()) {
      ConceptId c = queue_.top();
      queue_.pop();
      queued_[c] = 0;
      std::size_t before = value_[c];
      recompute(c, stale_[c]);
      stale_[c] = 0;
      if (value_[c] != before)
        for (ConceptId u : lat_.upper_covers(c)) push(u);
    }
  }

 private:
  struct Order {
    const std::vector<std::size_t>* intent_size;
    // priority_queue pops the "largest": largest intent first, then smallest id.
    bool operator()(ConceptId a, ConceptId b) const {
      const auto& s = *intent_size;
      return s[a] != s[b] ? s[a] < s[b] : a > b;
    }
  };

  void push(ConceptId c) {
    if (!queued_[c]) {
      queued_[c] = 1;
      queue_.push(c);
    }
  }

  /// Edge gains into c are cached; they only change when c's own block meets
  /// newly covered pairs (`stale`), not when a lower cover's value moves.
  void recompute(ConceptId c, bool stale) {
    if (c == lat_.bottom()) {
      value_[c] = bottom_gain(lat_, covered_);
      back_[c] = kNone;
      return;
    }
    const auto& lower = lat_.lower_covers(c);
    std::size_t* gains = gain_.data() + gain_offset_[c];
    if (stale)
      for (std::size_t i = 0; i < lower.size(); ++i) gains[i] = cover_gain(lat_, covered_, lower[i], c);
    std::size_t best = 0;
    ConceptId best_id = kNone;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      ConceptId d = lower[i];
      std::size_t v = value_[d] + gains[i];
      if (best_id == kNone || v > best) {
        best = v;
        best_id = d;
      }
    }
    value_[c] = best;
    back_[c] = best_id;
  }

  const ConceptLattice& lat_;
  const Relation& covered_;
  std::vector<std::size_t> value_;
  std::vector<ConceptId> back_;
  std::vector<std::size_t> intent_size_;
  std::vector<char> queued_;
  std::vector<char> stale_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::size_t> gain_offset_;
  std::vector<std::size_t> gain_;
  std::uint32_t epoch_ = 0;
  std::priority_queue<ConceptId, std::vector<ConceptId>, Order> queue_;
};

}  // namespace

std::vector<Tick> factor_ticks(const FormalContext& ctx, const ConceptLattice& lat,
                               const ConceptChain& chain) {
  std::vector<Tick> ticks;
  Bitset previous(ctx.num_attributes());
  for (auto it = chain.concept_ids.rbegin(); it != chain.concept_ids.rend(); ++it) {
    const auto& c = lat.concept_at(*it);
    if (c.extent.none()) continue;
    Bitset gained = c.intent - previous;
    if (gained.none()) continue;
    ticks.push_back(Tick{*it, std::move(gained)});
    previous = c.intent;
  }
  return ticks;
}

Factorization factorize_naive(const FormalContext& ctx, const ConceptLattice& lat) {
  Factorization result;
  result.covered = Relation(ctx.num_objects(), ctx.num_attributes());
  std::size_t remaining = ctx.num_incidences();
  while (remaining > 0) {
    FerrersResult best = max_ferrers(lat, result.covered);
    remaining -= best.new_coverage;
    result.factors.push_back(
        make_factor(ctx, lat, std::move(best.chain), best.new_coverage, result.covered));
  }
  return result;
}

Factorization ordifind(const FormalContext& ctx, const ConceptLattice& lat) {
  Factorization result;
  result.covered = Relation(ctx.num_objects(), ctx.num_attributes());
  std::size_t remaining = ctx.num_incidences();
  if (remaining == 0) return result;

  std::vector<ConceptId> attribute_concepts(ctx.num_attributes());
  for (std::size_t m = 0; m < ctx.num_attributes(); ++m)
    attribute_concepts[m] = attribute_concept(ctx, lat, m);

  IncrementalDp dp(lat, result.covered);
  while (true) {
    std::size_t gain = dp.best_value();
    ConceptChain chain = dp.best_chain();
    Relation added = chain_to_ferrers(lat, chain) - result.covered;
    remaining -= gain;
    result.factors.push_back(make_factor(ctx, lat, std::move(chain), gain, result.covered));
    if (remaining == 0) break;
    dp.update(added, attribute_concepts);
  }
  return result;
}

Factorization factorize(const FormalContext& ctx, const ConceptLattice& lat, Algorithm algorithm) {
  return algorithm == Algorithm::kNaive ? factorize_naive(ctx, lat) : ordifind(ctx, lat);
}

}  // namespace ordifind
