#include <doctest.h>

#include <algorithm>
#include <random>

#include "exchange_oracle.hpp"
#include "random_seeds.hpp"
#include "mutwb/exchange/exchange.hpp"
#include "mutwb/torus/curves.hpp"

using namespace mutwb;
using namespace mutwb::testing;

namespace {

DecoratedSeed run(DecoratedSeed d, const std::vector<std::size_t>& word) {
  for (auto k : word) d = mutate_decorated(d, k);
  return d;
}

LaurentExpr z_inverse(std::size_t i) {
  LatticeVector v{0, 0};
  v[i] = -1;
  return LaurentExpr::monomial(2, v);
}

}  // namespace

TEST_CASE("depth zero gives the root alone") {
  auto g = explore(seed_from_exchange_matrix(a2_matrix()), ExploreOptions{});
  CHECK(g.vertices.size() == 1);
  CHECK(g.edges.empty());
  CHECK(g.level_sizes == std::vector<std::size_t>{1});
  CHECK(g.vertices[0].state.word.empty());
}

TEST_CASE("A2 pentagon and naked four-cycle") {
  Seed s = seed_from_exchange_matrix(a2_matrix());
  DecoratedSeed root = decorated_root(s);

  // naked seed closes after four alternating steps
  CHECK(mutate_seed(s, {0, 1, 0, 1}) == s);
  DecoratedSeed four = run(root, {0, 1, 0, 1});
  CHECK(four.seed == s);
  CHECK(canonical_key(four) != canonical_key(root));
  CHECK_FALSE(same_x_multiset(x_variables(four), x_variables(root)));

  // decorated seed needs ten
  DecoratedSeed ten = run(root, {0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(canonical_key(ten) == canonical_key(root));
  // vectors and chart come back negated, which leaves every X-variable unchanged
  CHECK(ten.seed == Seed(s.lattice(), {{-1, 0}, {0, -1}}, s.signing()));
  CHECK(ten.chart == RationalMap({RationalExpr(z_inverse(0)), RationalExpr(z_inverse(1))}));
  DecoratedSeed twenty = run(ten, {0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(twenty.seed == s);
  CHECK(twenty.chart == root.chart);

  // five steps already return the X-variables, with the indices swapped
  DecoratedSeed five = run(root, {0, 1, 0, 1, 0});
  auto x5 = x_variables(five), x0 = x_variables(root);
  CHECK(x5[0] == x0[1]);
  CHECK(x5[1] == x0[0]);
  CHECK(canonical_key(five) == canonical_key(root));
}

TEST_CASE("chart extension matches generic composition") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Seed s = random_seed(rng, 1 + rng() % 3, 1 + rng() % 3, 1, 1);
    DecoratedSeed d = decorated_root(s);
    RationalMap chart = RationalMap::identity(s.rank());
    Seed cur = s;
    for (int step = 0; step < 3; ++step) {
      std::size_t k = rng() % s.size();
      bool sign = rng() % 2;
      chart = compose_maps(x_mutation_map(cur, k, sign), chart);
      d = mutate_decorated(d, k, sign);
      cur = mutate_seed(cur, k);
      REQUIRE(d.chart == chart);
      REQUIRE(d.seed == cur);
    }
  }
}

TEST_CASE("key ignores simultaneous reindexing") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Seed s = random_seed(rng, 2 + rng() % 2, 3, 1, 1);
    DecoratedSeed d = run(decorated_root(s), {rng() % 3, rng() % 3});
    std::vector<std::size_t> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<LatticeVector> vs;
    std::vector<int> sg;
    for (auto p : perm) {
      vs.push_back(d.seed.vector(p));
      sg.push_back(d.seed.signing()[p]);
    }
    DecoratedSeed e = d;
    e.seed = Seed(d.seed.lattice(), vs, sg, Duplicates::Flag);
    CHECK(canonical_key(e) == canonical_key(d));
    DecoratedSeed f = decorated_root(d.seed, ChartMode::Fingerprint);
    DecoratedSeed g = f;
    g.seed = e.seed;
    CHECK(canonical_key(f) == canonical_key(g));
  }
}

TEST_CASE("finite types match word enumeration") {
  struct Case {
    IntMatrix b;
    std::size_t expected;
    std::size_t extra;  // word lengths beyond the BFS depth
  };
  for (const auto& c : {Case{a2_matrix(), 5, 4}, Case{a3_matrix(), 14, 1}, Case{d4_matrix(), 50, 0}}) {
    Seed s = seed_from_exchange_matrix(c.b);
    ExploreOptions opt;
    opt.depth = 20;
    auto g = explore(s, opt);
    CHECK(g.closed);
    WordEnumeration oracle(s, g.depth_reached + c.extra);
    CHECK(g.vertices.size() == oracle.size());
    CHECK(oracle.size() == c.expected);
    std::vector<std::size_t> level(g.depth_reached + 1, 0);
    for (auto d : oracle.depths()) level[d] += 1;
    CHECK(level == g.level_sizes);

    auto ft = is_finite_type(s, 1000);
    CHECK(ft.finite);
    CHECK(ft.size == c.expected);
    auto fp = is_finite_type(s, 1000, ChartMode::Fingerprint);
    CHECK(fp.finite);
    CHECK(fp.size == c.expected);
  }
}

TEST_CASE("edges are involutive") {
  Seed s = seed_from_exchange_matrix(d4_matrix());
  ExploreOptions opt;
  opt.depth = 20;
  auto g = explore(s, opt);
  REQUIRE(g.closed);
  // every vertex has exactly one edge per index
  std::vector<std::size_t> degree(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    REQUIRE(e.to_index < s.size());
    CHECK(canonical_key(mutate_decorated(g.vertices[e.to].state, e.to_index)) == g.vertices[e.from].key);
    CHECK(canonical_key(mutate_decorated(g.vertices[e.from].state, e.index)) == g.vertices[e.to].key);
    degree[e.from] += 1;
    degree[e.to] += 1;
  }
  for (auto d : degree) CHECK(d == s.size());
}

TEST_CASE("random closed walks agree with generic composition") {
  Seed s = seed_from_exchange_matrix(a3_matrix());
  ExploreOptions opt;
  opt.depth = 20;
  auto g = explore(s, opt);
  REQUIRE(g.closed);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertices.size());
  for (const auto& e : g.edges) {
    adj[e.from].emplace_back(e.index, e.to);
    adj[e.to].emplace_back(e.to_index, e.from);
  }
  std::mt19937_64 rng(5);
  int cycles = 0;
  while (cycles < 25) {
    std::size_t v = 0;
    Seed cur = s;
    RationalMap chart = RationalMap::identity(s.rank());
    std::vector<RationalExpr> xs = x_variables(g.vertices[0].state);
    for (int step = 0; step < 12; ++step) {
      auto [j, w] = adj[v][rng() % adj[v].size()];
      // translate the representative's index into the walk's own indexing
      const RationalExpr target = x_variables(g.vertices[v].state)[j];
      std::size_t k = 0;
      while (!equal_by_cross_multiplication(xs[k], target)) ++k;
      chart = compose_maps(x_mutation_map(cur, k, false), chart);
      cur = mutate_seed(cur, k);
      v = w;
      xs.clear();
      for (const auto& e : cur.vectors()) xs.push_back(pullback_monomial(chart, e));
      REQUIRE(same_x_multiset(xs, x_variables(g.vertices[v].state)));
      if (v == 0) {
        ++cycles;
        break;
      }
    }
  }
}

TEST_CASE("parallel exploration equals serial") {
  for (auto mode : {ChartMode::Exact, ChartMode::Fingerprint}) {
    ExploreOptions opt;
    opt.depth = 20;
    opt.mode = mode;
    Seed d4 = seed_from_exchange_matrix(d4_matrix());
    auto a = explore_serial(d4, opt);
    auto b = explore_parallel(d4, opt);
    REQUIRE(a.vertices.size() == b.vertices.size());
    for (std::size_t i = 0; i < a.vertices.size(); ++i) CHECK(a.vertices[i].key == b.vertices[i].key);
    CHECK(a.edges == b.edges);
    CHECK(a.level_sizes == b.level_sizes);
  }
  ExploreOptions opt;
  opt.depth = 4;
  opt.mode = ChartMode::Fingerprint;
  auto a = explore_serial(vianna_seed(), opt);
  auto b = explore_parallel(vianna_seed(), opt);
  CHECK(a.level_sizes == b.level_sizes);
  CHECK(a.edges == b.edges);
}

TEST_CASE("fingerprint agrees with exact where exact is feasible") {
  ExploreOptions opt;
  opt.depth = 2;
  auto exact = explore(vianna_seed(), opt);
  opt.mode = ChartMode::Fingerprint;
  auto fp = explore(vianna_seed(), opt);
  CHECK(exact.level_sizes == fp.level_sizes);
  CHECK(exact.edges == fp.edges);
}

TEST_CASE("Vianna orbit grows and exceeds the budget") {
  ExploreOptions opt;
  opt.depth = 5;
  opt.mode = ChartMode::Fingerprint;
  auto g = explore(vianna_seed(), opt);
  CHECK(g.depth_reached == 5);
  auto cum = g.cumulative_counts();
  for (std::size_t i = 1; i < cum.size(); ++i) CHECK(cum[i] > cum[i - 1]);
  auto ft = is_finite_type(vianna_seed(), 500, ChartMode::Fingerprint);
  CHECK_FALSE(ft.finite);
  CHECK(ft.size == 500);
}

TEST_CASE("budgets report the partial graph") {
  ExploreOptions opt;
  opt.depth = 20;
  opt.max_vertices = 7;
  try {
    explore(seed_from_exchange_matrix(a3_matrix()), opt);
    FAIL("expected a budget error");
  } catch (const BudgetExceededError& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
    CHECK(e.partial().vertices.size() == 7);
  }
  opt.max_vertices = 1000;
  opt.expression_cap = 3;
  try {
    explore(vianna_seed(), opt);
    FAIL("expected a budget error");
  } catch (const BudgetExceededError& e) {
    CHECK(e.partial().vertices.size() >= 1);
  }
}

TEST_CASE("filter restricts mutated indices") {
  ExploreOptions opt;
  opt.depth = 10;
  opt.filter = [](const Seed&, std::size_t k) { return k == 0; };
  auto g = explore(seed_from_exchange_matrix(a2_matrix()), opt);
  CHECK(g.vertices.size() == 2);
  CHECK(g.closed);
  CHECK(graph_to_dot(g).find("n0 -- n1 [label=\"1\"]") != std::string::npos);
}

TEST_CASE("fingerprint exploration survives huge exponents") {
  Seed s = seed_of_config(GeodesicConfig({{1, -1}, {1, 2}, {-2, -1}}));
  ExploreOptions opt;
  opt.depth = 10;
  opt.mode = ChartMode::Fingerprint;
  ExchangeGraph serial = explore_serial(s, opt);
  auto counts = serial.cumulative_counts();
  REQUIRE(counts.size() == 11);
  for (std::size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] > counts[i - 1]);
  ExchangeGraph parallel = explore_parallel(s, opt);
  CHECK(parallel.vertices.size() == serial.vertices.size());
  CHECK(parallel.edges.size() == serial.edges.size());
}
