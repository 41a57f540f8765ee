#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "mutwb/exchange/exchange.hpp"
#include "mutwb/io/json.hpp"
#include "mutwb/torus/curves.hpp"

using namespace mutwb;

namespace {

struct Case {
  std::string name;
  Seed root;
  ExploreOptions options;
};

double seconds_of(const std::function<void()>& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// best of `repeat` runs
double best_of(int repeat, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) best = std::min(best, seconds_of(f));
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel exchange-graph exploration"};
  int repeat = 3;
  std::size_t vianna_depth = 10;
  app.add_option("--repeat", repeat, "runs per kernel, best is reported");
  app.add_option("--vianna-depth", vianna_depth, "fingerprint depth for the Vianna seed");
  CLI11_PARSE(app, argc, argv);

  std::vector<Case> cases;
  ExploreOptions exact;
  exact.depth = 100;
  cases.push_back({"D4 exact, closed", seed_from_exchange_matrix({{0, 1, 0, 0}, {-1, 0, 1, 1}, {0, -1, 0, 0}, {0, -1, 0, 0}}), exact});
  ExploreOptions a5 = exact;
  cases.push_back({"A5 exact, closed", seed_from_exchange_matrix({{0, 1, 0, 0, 0}, {-1, 0, 1, 0, 0}, {0, -1, 0, 1, 0},
                                                                   {0, 0, -1, 0, 1}, {0, 0, 0, -1, 0}}), a5});
  ExploreOptions fp;
  fp.depth = vianna_depth;
  fp.mode = ChartMode::Fingerprint;
  cases.push_back({"Vianna fingerprint, depth " + std::to_string(vianna_depth),
                   seed_of_config(GeodesicConfig({{1, -1}, {1, 2}, {-2, -1}})), fp});

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d, repeat: %d\n", threads, repeat);
  std::printf("%-28s %9s %12s %12s %8s %s\n", "case", "vertices", "serial [s]", "parallel [s]", "speedup", "same");
  for (const auto& c : cases) {
    ExchangeGraph gs, gp;
    double ts = best_of(repeat, [&] { gs = explore_serial(c.root, c.options); });
    double tp = best_of(repeat, [&] { gp = explore_parallel(c.root, c.options); });
    bool same = io::graph_to_json(gs) == io::graph_to_json(gp);
    std::printf("%-28s %9zu %12.4f %12.4f %8.2f %s\n", c.name.c_str(), gs.vertices.size(), ts, tp, ts / tp,
                same ? "yes" : "NO");
    if (!same) return 1;
  }
  return 0;
}
