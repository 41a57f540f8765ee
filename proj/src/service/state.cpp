#include "mutwb/service/state.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "mutwb/cluster/quiver.hpp"
#include "mutwb/error.hpp"

namespace mutwb::service {

namespace {

const std::vector<ExampleInfo>& registry() {
  static const std::vector<ExampleInfo> list = {
      {"vianna-p2", "three geodesics (1,-1), (1,2), (-2,-1); tripled 3-cycle"},
      {"keating-p-q-r", "classes (0,-1), (1,0), (-1,1) once each; keating-P-Q-R repeats them"},
      {"torus-one-disk", "a single geodesic (1,-1)"},
      {"a2", "abstract seed of type A2"},
      {"a3", "abstract seed of type A3"},
      {"d4", "abstract seed of type D4"},
      {"twocurves-opposite", "two curves crossing once with each sign"},
  };
  return list;
}

std::optional<std::vector<unsigned>> keating_multiplicities(std::string_view name) {
  constexpr std::string_view prefix = "keating-";
  if (!name.starts_with(prefix)) return std::nullopt;
  name.remove_prefix(prefix.size());
  std::vector<unsigned> out;
  while (!name.empty()) {
    auto dash = name.find('-');
    auto part = name.substr(0, dash);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || v == 0 || v > 16) return std::nullopt;
    out.push_back(v);
    if (dash == std::string_view::npos) break;
    name.remove_prefix(dash + 1);
  }
  if (out.size() != 3) return std::nullopt;
  return out;
}

GeodesicConfig keating_config(const std::vector<unsigned>& mult) {
  const LatticeVector base[3] = {{0, -1}, {1, 0}, {-1, 1}};
  std::vector<LatticeVector> classes;
  for (std::size_t i = 0; i < 3; ++i)
    for (unsigned c = 0; c < mult[i]; ++c) classes.push_back(base[i]);
  return GeodesicConfig(std::move(classes));
}

Json word_to_json(const std::vector<std::size_t>& word) {
  Json out = Json::array();
  for (auto k : word) out.push_back(k + 1);
  return out;
}

std::vector<std::size_t> word_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) fail(ErrorKind::Parse, "word must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() || e.get<std::size_t>() < 1 || e.get<std::size_t>() > rank)
      fail(ErrorKind::Parse, "word entries must be indices 1.." + std::to_string(rank));
    out.push_back(e.get<std::size_t>() - 1);
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(ErrorKind::Parse, std::string("missing field '") + name + "'");
  return j.at(name);
}

Quiver quiver_of_ledger(const IntersectionLedger& led) { return Quiver(led.positive(), led.self()); }

DecoratedSeed decorated_from_json(const Json& j) {
  DecoratedSeed d = decorated_root(io::seed_from_json(field(j, "seed")));
  d.chart = io::map_from_json(field(j, "chart"), d.rank());
  d.word = word_from_json(field(j, "word"), d.seed.size());
  return d;
}

void put_seed_fields(Json& out, const DecoratedSeed& d) {
  out["seed"] = io::seed_to_json(d.seed);
  out["quiver"] = io::quiver_to_json(quiver_of_seed(d.seed));
  out["xvars"] = x_labels(d);
  out["chart"] = io::map_to_json(d.chart);
  out["word"] = word_to_json(d.word);
}

Json bools(const std::vector<bool>& v) {
  Json out = Json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

}  // namespace

std::vector<ExampleInfo> examples() { return registry(); }

State state_of_seed(const Seed& seed) { return AbstractSeedState{decorated_root(seed)}; }

State state_of_config(const GeodesicConfig& cfg) {
  ConfigState s;
  s.config = cfg;
  s.ledger = ledger_from_geodesics(cfg);
  s.seed = decorated_root(seed_of_config(cfg));
  return s;
}

State state_of_ledger(const IntersectionLedger& led) { return LedgerState{led, {}}; }

State make_example(std::string_view name) {
  if (name == "vianna-p2") return state_of_config(GeodesicConfig({{1, -1}, {1, 2}, {-2, -1}}));
  if (name == "keating-p-q-r") return state_of_config(keating_config({1, 1, 1}));
  if (auto mult = keating_multiplicities(name)) return state_of_config(keating_config(*mult));
  if (name == "torus-one-disk") return state_of_config(GeodesicConfig({{1, -1}}));
  if (name == "a2") return state_of_seed(seed_from_exchange_matrix({{0, 1}, {-1, 0}}));
  if (name == "a3") return state_of_seed(seed_from_exchange_matrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  if (name == "d4")
    return state_of_seed(seed_from_exchange_matrix({{0, 1, 0, 0}, {-1, 0, 1, 1}, {0, -1, 0, 0}, {0, -1, 0, 0}}));
  if (name == "twocurves-opposite") return state_of_ledger(IntersectionLedger({{0, 1}, {1, 0}}, {0, 0}));
  fail(ErrorKind::InvalidArgument, "unknown example '" + std::string(name) + "'");
}

State state_from_request(const Json& body) {
  if (!body.is_object()) fail(ErrorKind::Parse, "request body must be a JSON object");
  State s;
  if (body.contains("example")) {
    if (!body["example"].is_string()) fail(ErrorKind::Parse, "example must be a string");
    s = make_example(body["example"].get<std::string>());
  } else if (body.contains("classes")) {
    s = state_of_config(io::config_from_json(body));
  } else if (body.contains("config")) {
    s = state_of_config(io::config_from_json(body["config"]));
  } else if (body.contains("P")) {
    s = state_of_ledger(io::ledger_from_json(body));
  } else if (body.contains("ledger")) {
    s = state_of_ledger(io::ledger_from_json(body["ledger"]));
  } else if (body.contains("rank")) {
    s = state_of_seed(io::seed_from_json(body));
  } else if (body.contains("seed")) {
    s = state_of_seed(io::seed_from_json(body["seed"]));
  } else {
    fail(ErrorKind::Parse, "expected one of example, classes, P, rank");
  }
  bool wants_local = body.contains("character") || body.contains("local_system");
  if (wants_local) {
    auto* cs = std::get_if<ConfigState>(&s);
    if (!cs) fail(ErrorKind::InvalidArgument, "local systems need a geodesic configuration");
    if (body.contains("character")) cs->character = io::character_from_json(body["character"]);
    if (body.contains("local_system")) cs->local_system = io::pair_from_json(body["local_system"]);
  }
  return s;
}

std::size_t state_rank(const State& s) {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LedgerState>) return v.ledger.size();
        else return v.seed.seed.size();
      },
      s);
}

State mutate_state(const State& s, std::size_t k, std::size_t expression_cap) {
  const std::size_t n = state_rank(s);
  if (k >= n)
    fail(ErrorKind::IndexOutOfRange, "index " + std::to_string(k + 1) + " is not in 1.." + std::to_string(n));
  if (const auto* a = std::get_if<AbstractSeedState>(&s)) {
    AbstractSeedState out{mutate_decorated(a->seed, k, false, expression_cap)};
    x_labels(out.seed, expression_cap);   // refuse states whose X-variables cannot be shown
    return out;
  }
  if (const auto* l = std::get_if<LedgerState>(&s)) {
    LedgerState out{mutate_ledger(l->ledger, k), l->word};
    out.word.push_back(k);
    return out;
  }
  const auto& c = std::get<ConfigState>(s);
  if (!is_mutable(c.ledger, k)) fail(ErrorKind::NotSimple, "curve " + std::to_string(k + 1) + " is not simple");
  ConfigState out;
  if (c.character) out.character = mutate_character(*c.character, c.config, k);
  if (c.local_system) out.local_system = mutate_rank_n(*c.local_system, c.config, k);
  out.config = mutate_geodesics(c.config, k);
  out.ledger = straighten(mutate_ledger(c.ledger, k), out.config);
  out.seed = mutate_decorated(c.seed, k, true, expression_cap);
  x_labels(out.seed, expression_cap);
  return out;
}

std::vector<bool> mutable_indices(const State& s) {
  std::vector<bool> out(state_rank(s), true);
  const IntersectionLedger* led = nullptr;
  if (const auto* l = std::get_if<LedgerState>(&s)) led = &l->ledger;
  if (const auto* c = std::get_if<ConfigState>(&s)) led = &c->ledger;
  if (led)
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = is_mutable(*led, k);
  return out;
}

Json state_to_json(const State& s) {
  Json out;
  if (const auto* a = std::get_if<AbstractSeedState>(&s)) {
    out["kind"] = "seed";
    put_seed_fields(out, a->seed);
  } else if (const auto* c = std::get_if<ConfigState>(&s)) {
    out["kind"] = "config";
    out["config"] = io::config_to_json(c->config);
    out["ledger"] = io::ledger_to_json(c->ledger);
    out["intersection_quiver"] = io::quiver_to_json(quiver_of_ledger(c->ledger));
    put_seed_fields(out, c->seed);
    if (c->character) out["character"] = io::character_to_json(*c->character);
    if (c->local_system) out["local_system"] = io::pair_to_json(*c->local_system);
  } else {
    const auto& l = std::get<LedgerState>(s);
    out["kind"] = "ledger";
    out["ledger"] = io::ledger_to_json(l.ledger);
    out["intersection_quiver"] = io::quiver_to_json(quiver_of_ledger(l.ledger));
    out["quiver"] = io::quiver_to_json(reduce_quiver(quiver_of_ledger(l.ledger)));
    out["word"] = word_to_json(l.word);
  }
  out["mutable"] = bools(mutable_indices(s));
  return out;
}

State state_from_json(const Json& j) {
  const auto& kind = field(j, "kind");
  if (kind == "seed") return AbstractSeedState{decorated_from_json(j)};
  if (kind == "config") {
    ConfigState c;
    c.config = io::config_from_json(field(j, "config"));
    c.ledger = io::ledger_from_json(field(j, "ledger"));
    c.seed = decorated_from_json(j);
    if (j.contains("character")) c.character = io::character_from_json(j["character"]);
    if (j.contains("local_system")) c.local_system = io::pair_from_json(j["local_system"]);
    return c;
  }
  if (kind == "ledger") {
    LedgerState l;
    l.ledger = io::ledger_from_json(field(j, "ledger"));
    l.word = word_from_json(field(j, "word"), l.ledger.size());
    return l;
  }
  fail(ErrorKind::Parse, "unknown state kind");
}

ExchangeGraph explore_state(const State& s, std::size_t depth, std::size_t expression_cap,
                            std::size_t max_vertices) {
  const DecoratedSeed* d = nullptr;
  if (const auto* a = std::get_if<AbstractSeedState>(&s)) d = &a->seed;
  if (const auto* c = std::get_if<ConfigState>(&s)) d = &c->seed;
  if (!d) fail(ErrorKind::InvalidArgument, "a bare ledger has no seed to explore");
  ExploreOptions opt;
  opt.depth = depth;
  opt.expression_cap = expression_cap;
  opt.max_vertices = max_vertices;
  opt.parallel = true;
  return explore(d->seed, opt);
}

std::size_t expression_cap_from_env(std::size_t fallback) {
  const char* v = std::getenv("MUTWB_BUDGET");
  if (!v || !*v) return fallback;
  std::size_t cap = 0;
  auto [ptr, ec] = std::from_chars(v, v + std::strlen(v), cap);
  if (ec != std::errc{} || *ptr != '\0' || cap == 0) return fallback;
  return cap;
}

}  // namespace mutwb::service
