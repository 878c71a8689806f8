// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ordifind/factorize.hpp"
#include "ordifind/metrics.hpp"

using namespace ordifind;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

/// Runs a check that fills `detail` and returns pass/fail; also enforces a wall-clock budget.
void criterion(const std::string& name, double budget_s, const std::function<bool(std::ostream&)>& check) {
  std::ostringstream detail;
  auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = check(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  double t = seconds_since(t0);
  if (budget_s > 0 && t > budget_s) {
    ok = false;
    detail << " [over budget " << budget_s << " s]";
  }
  if (!ok) ++failures;
  std::printf("%s  %-32s %8.3f s  %s\n", ok ? "PASS" : "FAIL", name.c_str(), t, detail.str().c_str());
  std::fflush(stdout);
}

FormalContext random_dense(std::mt19937& rng, std::size_t n, std::size_t k, double p) {
  std::bernoulli_distribution cell(p);
  std::vector<std::string> objs, atts;
  for (std::size_t g = 0; g < n; ++g) objs.push_back("g" + std::to_string(g));
  for (std::size_t m = 0; m < k; ++m) atts.push_back("m" + std::to_string(m));
  Relation rel(n, k);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t m = 0; m < k; ++m)
      if (cell(rng)) rel.insert(g, m);
  return FormalContext(objs, atts, rel);
}

bool compatible(const FormalContext& ctx, std::size_t g, std::size_t m, std::size_t h, std::size_t n) {
  return ctx.has(g, n) || ctx.has(h, m);
}

}  // namespace

int main() {
  criterion("running-example-lattice", 1.0, [](std::ostream& out) {
    auto lat = build_lattice(fixtures::socmed());
    out << "concepts=" << lat.size() << " expected=41";
    return lat.size() == 41;
  });

  criterion("completeness", 1.0, [](std::ostream& out) {
    auto ctx = fixtures::socmed();
    auto lat = build_lattice(ctx);
    auto fact = ordifind::ordifind(ctx, lat);
    Relation acc(ctx.num_objects(), ctx.num_attributes());
    for (const auto& f : fact.factors) acc |= chain_to_ferrers(lat, f.chain);
    Relation extra = acc - ctx.incidence();
    Relation missing = ctx.incidence() - acc;
    out << "incidences=" << ctx.num_incidences() << " covered=" << acc.size()
        << " symmetric_difference=" << extra.size() + missing.size() << " factors=" << fact.width();
    return ctx.num_incidences() == 53 && acc.size() == 53 && extra.empty() && missing.empty();
  });

  criterion("width-lower-bound", 60.0, [](std::ostream& out) {
    auto ctx = fixtures::socmed();
    std::vector<std::pair<std::size_t, std::size_t>> cells{
        {ctx.object_index("YouTube"), ctx.attribute_index("premium")},
        {ctx.object_index("WhatsApp"), ctx.attribute_index("mobile first")},
        {ctx.object_index("Facebook"), ctx.attribute_index("timeline")}};
    bool all_in = true, pairwise = true;
    for (auto [g, m] : cells) all_in &= ctx.has(g, m);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        pairwise &= !compatible(ctx, cells[i].first, cells[i].second, cells[j].first, cells[j].second);
    auto lat = build_lattice(ctx);
    std::size_t width = ordifind::ordifind(ctx, lat).width();
    std::size_t optimum = oracle::min_width(oracle::from_context(ctx));
    out << "pairwise_incompatible=" << pairwise << " greedy_width=" << width
        << " minimum_width=" << optimum;
    return all_in && pairwise && width >= 3 && optimum == 3;
  });

  criterion("max-ferrers-optimality", 300.0, [](std::ostream& out) {
    std::mt19937 rng(101);
    std::size_t checked = 0, mismatches = 0;
    for (int iter = 0; iter < 200; ++iter) {
      auto small = oracle::random_small(rng, 6, 6);
      auto ctx = oracle::to_context(small);
      auto lat = build_lattice(ctx);
      auto res = max_ferrers(lat, Relation(ctx.num_objects(), ctx.num_attributes()));
      if (res.new_coverage != oracle::best_new_coverage(small, oracle::PairSet{})) ++mismatches;
      ++checked;
    }
    out << "contexts=" << checked << " mismatches=" << mismatches;
    return mismatches == 0;
  });

  criterion("ordifind-equals-naive", 300.0, [](std::ostream& out) {
    std::size_t checked = 0, mismatches = 0;
    auto run = [&](const FormalContext& ctx) {
      auto lat = build_lattice(ctx);
      if (!(ordifind::ordifind(ctx, lat) == factorize_naive(ctx, lat))) ++mismatches;
      ++checked;
    };
    run(fixtures::socmed());
    std::mt19937 rng(202);
    for (int iter = 0; iter < 100; ++iter) run(oracle::to_context(oracle::random_small(rng, 8, 8)));
    out << "contexts=" << checked << " mismatches=" << mismatches;
    return mismatches == 0;
  });

  criterion("approximation-bound", 600.0, [](std::ostream& out) {
    std::mt19937 rng(303);
    std::size_t checked = 0, bound_violations = 0, step_violations = 0, worst_ratio_num = 0,
                worst_ratio_den = 1;
    while (checked < 100) {
      auto small = oracle::random_small(rng, 5, 5);
      auto ctx = oracle::to_context(small);
      const std::size_t total = ctx.num_incidences();
      if (total < 2) continue;  // ln 1 = 0 makes the bound vacuous
      auto lat = build_lattice(ctx);
      auto fact = ordifind::ordifind(ctx, lat);
      std::size_t k = oracle::min_width(small);
      std::size_t r = fact.width();
      auto bound = static_cast<std::size_t>(std::ceil(static_cast<double>(k) * std::log(double(total))));
      if (r > bound) ++bound_violations;
      std::size_t covered = 0;
      for (const auto& f : fact.factors) {
        if (k * f.new_coverage < total - covered) ++step_violations;
        covered += f.new_coverage;
      }
      if (r * worst_ratio_den > worst_ratio_num * k) {
        worst_ratio_num = r;
        worst_ratio_den = k;
      }
      ++checked;
    }
    out << "contexts=" << checked << " bound_violations=" << bound_violations
        << " step_violations=" << step_violations << " worst_r/k=" << worst_ratio_num << "/"
        << worst_ratio_den;
    return bound_violations == 0 && step_violations == 0;
  });

  criterion("ferrers-complement-closure", 0, [](std::ostream& out) {
    std::mt19937 rng(404);
    std::uniform_int_distribution<std::size_t> dim(1, 10);
    std::size_t failures_here = 0;
    for (int iter = 0; iter < 500; ++iter) {
      std::size_t n = dim(rng), k = dim(rng);
      auto rel = oracle::to_relation(oracle::random_ferrers(rng, n, k), n, k);
      if (!is_ferrers(rel) || !is_ferrers(rel.complement())) ++failures_here;
    }
    out << "relations=500 failures=" << failures_here;
    return failures_here == 0;
  });

  criterion("distance-semantics", 0, [](std::ostream& out) {
    auto ctx = fixtures::socmed();
    auto fb = ctx.object_index("Facebook"), ig = ctx.object_index("Instagram");
    auto lat = build_lattice(ctx);
    auto fact = ordifind::ordifind(ctx, lat);
    Selection zero{std::vector<std::size_t>(fact.width(), 0)};
    std::size_t nonzero = 0;
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) nonzero += selection_distance(ctx, fact, g, zero) != 0;
    std::size_t d1 = distance(ctx, fb, ig), d2 = distance(ctx, ig, fb), dh = hamming(ctx, fb, ig);
    out << "d(Facebook,Instagram)=" << d1 << " d(Instagram,Facebook)=" << d2 << " d_h=" << dh
        << " zero_selection_nonzero=" << nonzero;
    return d1 == 0 && d2 == 1 && dh == 1 && nonzero == 0;
  });

  criterion("performance-sanity", 0, [](std::ostream& out) {
    std::mt19937 rng(505);
    auto ctx = random_dense(rng, 200, 30, 0.3);
    auto t0 = Clock::now();
    auto lat = build_lattice(ctx);
    double lattice_s = seconds_since(t0);
    // best of three to damp scheduler noise
    double naive_s = 1e9, fast_s = 1e9;
    Factorization naive, fast;
    for (int rep = 0; rep < 3; ++rep) {
      t0 = Clock::now();
      naive = factorize_naive(ctx, lat);
      naive_s = std::min(naive_s, seconds_since(t0));
      t0 = Clock::now();
      fast = ordifind::ordifind(ctx, lat);
      fast_s = std::min(fast_s, seconds_since(t0));
    }
    out << "concepts=" << lat.size() << " lattice=" << lattice_s << "s naive=" << naive_s
        << "s ordifind=" << fast_s << "s factors=" << fast.width() << " identical=" << (naive == fast);
    return lat.size() >= 5000 && lat.size() <= 20000 && fast_s <= naive_s && naive == fast;
  });

  std::printf("%s\n", failures == 0 ? "ALL PASS" : (std::to_string(failures) + " FAILED").c_str());
  return failures == 0 ? 0 : 1;
}
