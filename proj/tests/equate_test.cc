#include <cmath>

#include "doctest.h"
#include "nodebal/equate.h"
#include "nodebal/errors.h"
#include "nodebal/oracles.h"
#include "nodebal/subsets.h"
#include "test_support.h"

using namespace nodebal;
using namespace nodebal::testing;

namespace {

bool feasible_at(const Graph& g, const WeightAssignment& w, Count beta) {
  return !check_tutte_enumeration(g, demand_for_target(w, beta)).has_value();
}

void check_sound(const Graph& g, const WeightAssignment& w, const EquateResult& r) {
  REQUIRE(r.beta.has_value());
  CHECK(is_uniform(apply_plan(g, w, r.plan)) == *r.beta);
  const Count n = g.num_vertices();
  CHECK(2 * r.plan.total_steps() == n * *r.beta - w.total());
}

template <class F>
void for_each_weights(int n, Count max, F&& f) {
  std::vector<Count> w(static_cast<std::size_t>(n), 0);
  while (true) {
    f(WeightAssignment(w));
    int i = 0;
    while (i < n && w[static_cast<std::size_t>(i)] == max) w[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return;
    ++w[static_cast<std::size_t>(i)];
  }
}

}  // namespace

TEST_CASE("admissible_parities") {
  CHECK(admissible_parities(cycle(6), WeightAssignment{1, 2, 3, 4, 5, 6}).empty());
  CHECK(admissible_parities(complete(3), WeightAssignment{1, 0, 0}) == ParitySet(false, true));
  CHECK(admissible_parities(cycle(4), WeightAssignment{1, 0, 0, 1}) == ParitySet(true, true));
  CHECK(admissible_parities(complete(3), WeightAssignment{1, 1, 0}) == ParitySet(true, false));
  CHECK(ParitySet(true, true).members() == std::vector<Parity>{Parity::kEven, Parity::kOdd});
}

TEST_CASE("constraint_bound cases") {
  ConstraintBound upper = constraint_bound({1, 2, 1, 0, 0}, Parity::kOdd);
  CHECK(upper.kind == BoundKind::kUpperBound);
  CHECK(upper.beta == -1);

  ConstraintStats lower{2, 1, 0, 0, 1};
  CHECK(constraint_bound(lower, Parity::kOdd) == ConstraintBound{BoundKind::kLowerBound, 1});
  CHECK(constraint_bound(lower, Parity::kEven) == ConstraintBound{BoundKind::kLowerBound, 2});

  CHECK(constraint_bound({1, 1, 3, 0, 0}, Parity::kEven).kind == BoundKind::kNever);
  CHECK(constraint_bound({1, 1, 0, 3, 0}, Parity::kEven).kind == BoundKind::kAlways);
  CHECK(constraint_bound({2, 2, 0, 0, 0}, Parity::kOdd).kind == BoundKind::kAlways);
}

TEST_CASE("constraint_bound rounds toward the feasible side") {
  // 3*beta >= 7: beta >= 7/3, so 3 (odd) or 4 (even).
  CHECK(constraint_bound({3, 0, 7, 0, 0}, Parity::kOdd).beta == 3);
  CHECK(constraint_bound({3, 0, 7, 0, 0}, Parity::kEven).beta == 4);
  // -2*beta >= -7: beta <= 3.5, so 3 (odd) or 2 (even).
  CHECK(constraint_bound({0, 2, 0, 7, 0}, Parity::kOdd).beta == 3);
  CHECK(constraint_bound({0, 2, 0, 7, 0}, Parity::kEven).beta == 2);
  // -1*beta >= 2: beta <= -2.
  CHECK(constraint_bound({0, 1, 2, 0, 0}, Parity::kEven).beta == -2);
  CHECK(constraint_bound({0, 1, 2, 0, 0}, Parity::kOdd).beta == -3);
}

TEST_CASE("constraint_bound matches the deficiency sign") {
  Rng rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_graph(rng, n, 0.4);
    WeightAssignment w = random_weights(rng, n, 4);
    const VertexSet u = to_set(rng() & ((VertexMask{1} << n) - 1));
    for (Count beta = w.max(); beta <= w.max() + 6; ++beta) {
      const Parity parity = beta % 2 == 0 ? Parity::kEven : Parity::kOdd;
      const BVector b = demand_for_target(w, beta);
      const ViolatingSet set = evaluate_tutte_set(g, u, b);
      const ConstraintBound bound = constraint_bound(constraint_stats(w, set), parity);
      bool satisfied = false;
      switch (bound.kind) {
        case BoundKind::kAlways: satisfied = true; break;
        case BoundKind::kNever: satisfied = false; break;
        case BoundKind::kLowerBound: satisfied = beta >= *bound.beta; break;
        case BoundKind::kUpperBound: satisfied = beta <= *bound.beta; break;
      }
      // S depends only on the parity of beta, so the classification holds
      // at every beta of that parity.
      REQUIRE(satisfied == (set.deficiency <= 0));
    }
  }
}

TEST_CASE("initial_bounds") {
  WeightAssignment w{3, 0, 1, 0};
  CHECK(initial_bounds(w, Parity::kOdd).alpha == 3);
  CHECK(initial_bounds(w, Parity::kOdd).gamma == 11);
  CHECK(initial_bounds(w, Parity::kEven).alpha == 4);
  CHECK(initial_bounds(w, Parity::kEven).gamma == 12);
}

TEST_CASE("min_beta_for_parity examples") {
  ParitySearchResult k3 = min_beta_for_parity(complete(3), WeightAssignment{1, 0, 0}, Parity::kOdd);
  CHECK(k3.beta == 1);
  CHECK(k3.plan == plan_of(complete(3), {{1, 2, 1}}));
  CHECK_FALSE(k3.certificate.has_value());

  ParitySearchResult p3 = min_beta_for_parity(path(3), WeightAssignment{0, 1, 0}, Parity::kOdd);
  CHECK_FALSE(p3.beta.has_value());
  REQUIRE(p3.certificate.has_value());
  CHECK(p3.certificate->set.u == VertexSet{1});
  CHECK(p3.certificate->parity == Parity::kOdd);

  ParitySearchResult c5 = min_beta_for_parity(cycle(5), WeightAssignment::zeros(5), Parity::kEven);
  CHECK(c5.beta == 0);
  CHECK(c5.plan.empty());
}

TEST_CASE("min_beta_for_parity rejects bad input") {
  CHECK_THROWS_AS(min_beta_for_parity(complete(3), WeightAssignment{1, 0, 0}, Parity::kEven),
                  InvalidInput);
  CHECK_THROWS_AS(min_beta_for_parity(complete(3), WeightAssignment{1, 0}, Parity::kOdd),
                  InvalidInput);
  CHECK_THROWS_AS(equate(complete(3), WeightAssignment{1, 0}), InvalidInput);
}

TEST_CASE("equate examples") {
  EquateResult c6 = equate(cycle(6), WeightAssignment{1, 2, 3, 4, 5, 6});
  CHECK_FALSE(c6.feasible());
  CHECK(c6.reason == InfeasibleReason::kParity);
  CHECK(c6.certificates.empty());

  EquateResult k3 = equate(complete(3), WeightAssignment{1, 0, 0});
  CHECK(k3.beta == 1);
  CHECK(k3.plan == plan_of(complete(3), {{1, 2, 1}}));
  CHECK(k3.plan.total_steps() == 1);

  EquateResult c4 = equate(cycle(4), WeightAssignment{1, 0, 0, 1});
  CHECK(c4.beta == 1);
  CHECK(c4.plan == plan_of(cycle(4), {{1, 2, 1}}));
}

TEST_CASE("equate degenerate inputs") {
  CHECK(equate(Graph(0), WeightAssignment{}).beta == 0);
  CHECK(equate(Graph(1), WeightAssignment{4}).beta == 4);
  EquateResult uniform = equate(cycle(5), WeightAssignment{2, 2, 2, 2, 2});
  CHECK(uniform.beta == 2);
  CHECK(uniform.plan.empty());
  // Edgeless and unequal.
  EquateResult edgeless = equate(Graph(3), WeightAssignment{1, 0, 1});
  CHECK_FALSE(edgeless.feasible());
  CHECK(edgeless.reason == InfeasibleReason::kCertificate);
}

TEST_CASE("equate reports one certificate per failed parity") {
  // P4 with a single extra unit on an end: both parities admissible, none works.
  Graph g = path(4);
  WeightAssignment w{2, 0, 0, 0};
  EquateResult r = equate(g, w);
  REQUIRE_FALSE(r.feasible());
  REQUIRE(r.reason == InfeasibleReason::kCertificate);
  REQUIRE(r.certificates.size() == 2);
  CHECK(r.certificates[0].parity == Parity::kEven);
  CHECK(r.certificates[1].parity == Parity::kOdd);
  for (const ParityCertificate& c : r.certificates) {
    CHECK(tutte_deficiency(g, c.set.u, demand_for_target(w, c.beta)) == c.set.deficiency);
    CHECK(c.set.deficiency >= 1);
  }
}

TEST_CASE("property: equate agrees with the scan oracle, exhaustive small graphs") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n)); ++code) {
      Graph g = graph_from_code(n, code);
      for_each_weights(n, 2, [&](const WeightAssignment& w) {
        EquateResult r = equate(g, w);
        REQUIRE(r.beta == oracles::min_beta_scan(g, w));
        if (r.feasible()) check_sound(g, w, r);
      });
    }
  }
}

TEST_CASE("property: equate agrees with the scan oracle, random graphs") {
  Rng rng(32);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 0.25 + 0.1 * static_cast<double>(rng() % 5));
    WeightAssignment w = random_weights(rng, n, 5);
    EquateResult r = equate(g, w);
    REQUIRE(r.beta == oracles::min_beta_scan(g, w));
    if (r.feasible()) {
      check_sound(g, w, r);
      CHECK(*r.beta <= n * w.max());
      // Nothing below beta of an admissible parity works.
      for (Count lower = w.max(); lower < *r.beta; ++lower) {
        if ((n * lower - w.total()) % 2 != 0) continue;
        REQUIRE_FALSE(feasible_at(g, w, lower));
      }
    } else {
      for (const ParityCertificate& c : r.certificates) {
        REQUIRE(tutte_deficiency(g, c.set.u, demand_for_target(w, c.beta)) >= 1);
      }
    }
  }
}

TEST_CASE("property: feasible targets form a parity interval") {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    Graph g = random_graph(rng, n, 0.45);
    WeightAssignment w = random_weights(rng, n, 4);
    if (w.max() == 0) continue;
    for (Parity parity : admissible_parities(g, w).members()) {
      const BetaBounds range = initial_bounds(w, parity);
      int runs = 0;
      bool previous = false;
      for (Count beta = range.alpha; beta <= range.gamma; beta += 2) {
        const bool now = feasible_at(g, w, beta);
        if (now && !previous) ++runs;
        previous = now;
      }
      REQUIRE(runs <= 1);
    }
  }
}

TEST_CASE("property: the search uses logarithmically many probes") {
  Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    Graph g = random_connected_graph(rng, n, n);
    WeightAssignment w = random_weights(rng, n, 30);
    for (Parity parity : admissible_parities(g, w).members()) {
      ParitySearchResult r = min_beta_for_parity(g, w, parity);
      const double span = static_cast<double>(n * w.max()) + 2.0;
      CHECK(r.probes <= 2 * static_cast<int>(std::ceil(std::log2(span))) + 2);
    }
  }
}

TEST_CASE("equate at a larger scale verifies by replay") {
  Rng rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 30;
    Graph g = random_connected_graph(rng, n, 30);
    WeightAssignment w = random_weights(rng, n, 10);
    EquateResult r = equate(g, w);
    if (r.feasible()) {
      check_sound(g, w, r);
    } else if (r.reason == InfeasibleReason::kCertificate) {
      for (const ParityCertificate& c : r.certificates) {
        CHECK(tutte_deficiency(g, c.set.u, demand_for_target(w, c.beta)) >= 1);
      }
    }
  }
}
