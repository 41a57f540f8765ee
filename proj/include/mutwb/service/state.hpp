#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mutwb/exchange/exchange.hpp"
#include "mutwb/io/json.hpp"
#include "mutwb/local/local_system.hpp"
#include "mutwb/torus/curves.hpp"

namespace mutwb::service {

using io::Json;

/// An abstract seed with its cluster chart (unsigned X-transformations).
struct AbstractSeedState {
  DecoratedSeed seed;

  bool operator==(const AbstractSeedState&) const = default;
};

/// Geodesics on the torus: classes, straightened ledger, the seed they define with its signed
/// chart, and optional local systems carried along.
struct ConfigState {
  GeodesicConfig config;
  IntersectionLedger ledger;
  DecoratedSeed seed;
  std::optional<Character> character;
  std::optional<CommutingPair> local_system;

  bool operator==(const ConfigState&) const = default;
};

/// Crossing data on a general surface; mutation never cancels crossings.
struct LedgerState {
  IntersectionLedger ledger;
  std::vector<std::size_t> word;

  bool operator==(const LedgerState&) const = default;
};

using State = std::variant<AbstractSeedState, ConfigState, LedgerState>;

struct ExampleInfo {
  std::string name;
  std::string description;
};

std::vector<ExampleInfo> examples();
/// Known names plus keating-P-Q-R with positive multiplicities. Throws InvalidArgument otherwise.
State make_example(std::string_view name);

State state_of_seed(const Seed& seed);
State state_of_config(const GeodesicConfig& cfg);
State state_of_ledger(const IntersectionLedger& led);

/// Accepts {"example"}, {"rank", ...} seeds, {"classes"} configs or {"P", "s"} ledgers, plus an
/// optional "character" or "local_system" for configs. Throws Parse or InvalidArgument.
State state_from_request(const Json& body);

std::size_t state_rank(const State& s);

/// Mutation at k (0-based). Either the whole step succeeds or an Error is thrown:
/// NotSimple, NotRegular, BudgetExceeded or IndexOutOfRange.
State mutate_state(const State& s, std::size_t k, std::size_t expression_cap);

/// Per-index mutability as shown to the user.
std::vector<bool> mutable_indices(const State& s);

Json state_to_json(const State& s);
State state_from_json(const Json& j);

/// Exchange graph rooted at the state's seed. Throws InvalidArgument for ledger states.
ExchangeGraph explore_state(const State& s, std::size_t depth, std::size_t expression_cap,
                            std::size_t max_vertices);

/// Expression cap from MUTWB_BUDGET, falling back to the default.
std::size_t expression_cap_from_env(std::size_t fallback = 10000);

}  // namespace mutwb::service
