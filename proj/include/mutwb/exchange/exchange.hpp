#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "mutwb/cluster/seed.hpp"
#include "mutwb/error.hpp"
#include "mutwb/laurent/map.hpp"

namespace mutwb {

/// How charts are carried along the mutation tree.
/// Exact keeps the composed pullback as rational functions. Fingerprint keeps only its values
/// modulo 2^61 - 1 at fixed random points: different fingerprints prove different charts, and
/// equal fingerprints identify charts up to a negligible collision probability.
enum class ChartMode { Exact, Fingerprint };

/// A seed together with the chart reached from the root torus and the mutation word taken.
struct DecoratedSeed {
  Seed seed;
  ChartMode mode = ChartMode::Exact;
  RationalMap chart;                         // exact mode
  std::vector<std::uint64_t> fingerprint;    // fingerprint mode: images at each point, point-major
  std::vector<std::size_t> word;

  std::size_t rank() const noexcept { return seed.rank(); }

  bool operator==(const DecoratedSeed&) const = default;
};

inline constexpr std::size_t kFingerprintPoints = 2;
/// Intermediate products may grow to this multiple of the expression cap before giving up.
inline constexpr std::size_t kIntermediateFactor = 16;
/// Term-by-term multiplications allowed per step, as a multiple of the expression cap.
inline constexpr std::size_t kWorkFactor = 1000;

DecoratedSeed decorated_root(const Seed& seed, ChartMode mode = ChartMode::Exact);

/// Extends the chart by the X-transformation at k and mutates the seed.
/// Throws BudgetExceeded if an image exceeds expression_cap monomials.
DecoratedSeed mutate_decorated(const DecoratedSeed& d, std::size_t k, bool use_sign = false,
                               std::size_t expression_cap = std::numeric_limits<std::size_t>::max());

/// Cluster X-variables: the chart pullbacks of z^{e_i} (exact mode).
std::vector<RationalExpr> x_variables(const DecoratedSeed& d);

/// One label per index: the X-variable rendering in exact mode, hex residues in fingerprint mode.
/// Throws BudgetExceeded if an X-variable exceeds expression_cap monomials.
std::vector<std::string> x_labels(const DecoratedSeed& d,
                                  std::size_t expression_cap = std::numeric_limits<std::size_t>::max());

/// Vertex identity: the sorted multiset of X-variable labels, so simultaneous reindexing does not
/// change it.
std::string canonical_key(const DecoratedSeed& d);

struct ExchangeVertex {
  std::string key;
  DecoratedSeed state;
  std::size_t depth = 0;
  std::vector<std::string> labels;
};

/// Mutating `from` at `index` reaches `to`; mutating `to` at `to_index` comes back.
/// The two indices differ when the stored representatives are indexed differently.
struct ExchangeEdge {
  std::size_t from = 0;
  std::size_t index = 0;
  std::size_t to = 0;
  std::size_t to_index = 0;

  bool operator==(const ExchangeEdge&) const = default;
};

struct ExchangeGraph {
  std::vector<ExchangeVertex> vertices;   // in discovery order; vertices[0] is the root
  std::vector<ExchangeEdge> edges;        // one entry per exchanged pair of X-variables
  /// vertex count at each depth 0..depth_reached
  std::vector<std::size_t> level_sizes;
  std::size_t depth_reached = 0;
  /// true when the last level expanded produced no new vertex
  bool closed = false;

  std::size_t find(const std::string& key) const;
  std::vector<std::size_t> cumulative_counts() const;
};

/// Thrown when a vertex or expression cap is hit; carries everything explored so far.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, ExchangeGraph partial)
      : Error(ErrorKind::BudgetExceeded, what), partial_(std::move(partial)) {}
  const ExchangeGraph& partial() const noexcept { return partial_; }

 private:
  ExchangeGraph partial_;
};

using MutableFilter = std::function<bool(const Seed&, std::size_t)>;

struct ExploreOptions {
  std::size_t depth = 0;
  std::size_t max_vertices = std::numeric_limits<std::size_t>::max();
  std::size_t expression_cap = 10000;
  ChartMode mode = ChartMode::Exact;
  bool parallel = false;
  /// when set, only indices passing the predicate are mutated
  MutableFilter filter;
};

/// Breadth-first exploration of decorated seeds (unsigned X-transformations).
/// The parallel variant expands each level concurrently and merges in the serial order,
/// so both produce identical graphs.
ExchangeGraph explore(const Seed& root, const ExploreOptions& options);
ExchangeGraph explore_serial(const Seed& root, const ExploreOptions& options);
ExchangeGraph explore_parallel(const Seed& root, const ExploreOptions& options);

struct FiniteTypeResult {
  bool finite = false;
  std::size_t size = 0;   // orbit size when finite, vertices seen otherwise
};

/// Finite(size) iff the exploration closes within budget vertices.
FiniteTypeResult is_finite_type(const Seed& root, std::size_t budget, ChartMode mode = ChartMode::Exact,
                                std::size_t expression_cap = 10000);

std::string graph_to_dot(const ExchangeGraph& g);

}  // namespace mutwb
