#include "mutwb/exchange/exchange.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace mutwb {

namespace {

std::vector<std::uint64_t> fingerprint_points(std::size_t m) {
  std::mt19937_64 rng(0x6d757477);
  std::uniform_int_distribution<std::uint64_t> dist(2, modp::kPrime - 1);
  std::vector<std::uint64_t> pts(kFingerprintPoints * m);
  for (auto& v : pts) v = dist(rng);
  return pts;
}

std::uint64_t residue_of_monomial(const std::uint64_t* images, const LatticeVector& n) {
  std::uint64_t v = 1;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] != 0) v = modp::mul(v, modp::power_integer(images[j], n[j]));
  }
  return v;
}

[[noreturn]] void over_cap(std::size_t size, std::size_t cap) {
  throw BudgetExceededError("chart image has " + std::to_string(size) + " monomials, cap is " + std::to_string(cap),
                            ExchangeGraph{});
}

/// Runs f with intermediate products limited to a multiple of the cap; overruns surface as
/// BudgetExceededError like any other cap violation.
template <typename F>
auto within_budget(std::size_t cap, F f) {
  auto scaled = [cap](std::size_t factor) {
    return cap > std::numeric_limits<std::size_t>::max() / factor ? std::numeric_limits<std::size_t>::max()
                                                                   : cap * factor;
  };
  TermBudget guard(scaled(kIntermediateFactor), scaled(kWorkFactor));
  try {
    return f();
  } catch (const BudgetExceededError&) {
    throw;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    throw BudgetExceededError(e.what(), ExchangeGraph{});
  }
}

}  // namespace

DecoratedSeed decorated_root(const Seed& seed, ChartMode mode) {
  DecoratedSeed d;
  d.seed = seed;
  d.mode = mode;
  if (mode == ChartMode::Exact) {
    d.chart = RationalMap::identity(seed.rank());
  } else {
    d.fingerprint = fingerprint_points(seed.rank());
  }
  return d;
}

DecoratedSeed mutate_decorated(const DecoratedSeed& d, std::size_t k, bool use_sign, std::size_t expression_cap) {
  check_index(k, d.seed.size(), "mutate_decorated");
  const std::size_t m = d.rank();
  const LatticeVector& ek = d.seed.vector(k);
  const LatticeVector w = d.seed.lattice().functional(ek);
  const int eps = use_sign && d.seed.signing()[k] == 1 ? -1 : 1;
  DecoratedSeed out;
  out.mode = d.mode;
  if (d.mode == ChartMode::Exact) {
    // new chart = chart o mu_k, so image_j picks up (1 + eps X_k)^{{e_k, b_j}}
    out.chart = within_budget(expression_cap, [&] {
      RationalExpr xk = pullback_monomial(d.chart, ek);
      RationalExpr factor = RationalExpr::constant(m, 1) + (eps < 0 ? -xk : xk);
      std::vector<RationalExpr> images = d.chart.images();
      for (std::size_t j = 0; j < m; ++j) {
        if (w[j] == 0) continue;
        images[j] = images[j] * pow(factor, w[j]);
        if (images[j].size() > expression_cap) over_cap(images[j].size(), expression_cap);
      }
      return RationalMap(std::move(images));
    });
  } else {
    out.fingerprint = d.fingerprint;
    for (std::size_t p = 0; p < kFingerprintPoints; ++p) {
      std::uint64_t* img = out.fingerprint.data() + p * m;
      std::uint64_t xk = residue_of_monomial(d.fingerprint.data() + p * m, ek);
      std::uint64_t factor = modp::add(1, eps < 0 ? (modp::kPrime - xk) % modp::kPrime : xk);
      if (factor == 0) fail(ErrorKind::PoleAtPoint, "fingerprint point hit the exceptional divisor");
      for (std::size_t j = 0; j < m; ++j) {
        if (w[j] != 0) img[j] = modp::mul(img[j], modp::power_integer(factor, w[j]));
      }
    }
  }
  out.seed = mutate_seed(d.seed, k);
  out.word = d.word;
  out.word.push_back(k);
  return out;
}

std::vector<RationalExpr> x_variables(const DecoratedSeed& d) {
  if (d.mode != ChartMode::Exact) fail(ErrorKind::InvalidArgument, "X-variables need an exact chart");
  std::vector<RationalExpr> xs;
  xs.reserve(d.seed.size());
  for (const auto& e : d.seed.vectors()) xs.push_back(pullback_monomial(d.chart, e));
  return xs;
}

std::vector<std::string> x_labels(const DecoratedSeed& d, std::size_t expression_cap) {
  std::vector<std::string> labels;
  if (d.mode == ChartMode::Exact) {
    auto xs = within_budget(expression_cap, [&] { return x_variables(d); });
    for (const auto& x : xs) {
      if (x.size() > expression_cap) over_cap(x.size(), expression_cap);
      labels.push_back(x.render());
    }
    return labels;
  }
  const std::size_t m = d.rank();
  for (const auto& e : d.seed.vectors()) {
    std::ostringstream os;
    os << std::hex;
    for (std::size_t p = 0; p < kFingerprintPoints; ++p) {
      if (p) os << ':';
      os << residue_of_monomial(d.fingerprint.data() + p * m, e);
    }
    labels.push_back(os.str());
  }
  return labels;
}

namespace {

std::string key_of_labels(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  std::string key;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) key += " ; ";
    key += labels[i];
  }
  return key;
}

}  // namespace

std::string canonical_key(const DecoratedSeed& d) { return key_of_labels(x_labels(d)); }

std::size_t ExchangeGraph::find(const std::string& key) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].key == key) return i;
  }
  return vertices.size();
}

std::vector<std::size_t> ExchangeGraph::cumulative_counts() const {
  std::vector<std::size_t> out;
  std::size_t total = 0;
  for (auto s : level_sizes) out.push_back(total += s);
  return out;
}

namespace {

struct Child {
  std::optional<DecoratedSeed> state;
  std::vector<std::string> labels;
  std::string key;
  std::exception_ptr error;
};

std::size_t index_of(const std::vector<std::string>& labels, const std::string& label) {
  return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), label) - labels.begin());
}

ExchangeGraph explore_impl(const Seed& root, const ExploreOptions& opt, bool parallel) {
  ExchangeGraph g;
  std::unordered_map<std::string, std::size_t> index;
  // an edge is the unordered vertex pair plus the exchanged variable, X_k on one side and 1/X_k on the other
  std::set<std::tuple<std::size_t, std::size_t, std::string>> seen_edges;
  {
    DecoratedSeed r = decorated_root(root, opt.mode);
    auto labels = x_labels(r);
    std::string key = key_of_labels(labels);
    index.emplace(key, 0);
    g.vertices.push_back(ExchangeVertex{key, std::move(r), 0, std::move(labels)});
    g.level_sizes.push_back(1);
  }
  if (opt.max_vertices < 1) throw BudgetExceededError("vertex budget exhausted", g);
  std::vector<std::size_t> level{0};
  const std::size_t n = root.size();
  for (std::size_t depth = 0; depth < opt.depth; ++depth) {
    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (auto v : level) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!opt.filter || opt.filter(g.vertices[v].state.seed, k)) tasks.emplace_back(v, k);
      }
    }
    std::vector<Child> children(tasks.size());
    auto compute = [&](std::size_t t) {
      try {
        const auto& [v, k] = tasks[t];
        children[t].state = mutate_decorated(g.vertices[v].state, k, false, opt.expression_cap);
        children[t].labels = x_labels(*children[t].state, opt.expression_cap);
        children[t].key = key_of_labels(children[t].labels);
      } catch (...) {
        children[t].error = std::current_exception();
      }
    };
    const long count = static_cast<long>(tasks.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long t = 0; t < count; ++t) compute(static_cast<std::size_t>(t));
    } else {
      for (long t = 0; t < count; ++t) compute(static_cast<std::size_t>(t));
    }
    // vertex insertion is sequential and in task order, so the result matches the serial pass
    std::vector<std::size_t> next;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      Child& c = children[t];
      if (c.error) {
        try {
          std::rethrow_exception(c.error);
        } catch (const BudgetExceededError& e) {
          throw BudgetExceededError(e.what(), g);
        }
      }
      auto [it, inserted] = index.emplace(c.key, g.vertices.size());
      if (inserted) {
        if (g.vertices.size() >= opt.max_vertices) {
          index.erase(it);
          throw BudgetExceededError("more than " + std::to_string(opt.max_vertices) + " vertices", g);
        }
        next.push_back(g.vertices.size());
        g.vertices.push_back(ExchangeVertex{c.key, std::move(*c.state), depth + 1, c.labels});
      }
      const std::size_t from = tasks[t].first, k = tasks[t].second, to = it->second;
      const std::string& before = g.vertices[from].labels[k];
      const std::string& after = c.labels[k];
      if (seen_edges.emplace(std::min(from, to), std::max(from, to), std::min(before, after)).second) {
        g.edges.push_back(ExchangeEdge{from, k, to, index_of(g.vertices[to].labels, after)});
      }
    }
    if (next.empty()) {
      g.closed = true;
      break;
    }
    g.level_sizes.push_back(next.size());
    g.depth_reached = depth + 1;
    level = std::move(next);
  }
  return g;
}

}  // namespace

ExchangeGraph explore_serial(const Seed& root, const ExploreOptions& options) { return explore_impl(root, options, false); }

ExchangeGraph explore_parallel(const Seed& root, const ExploreOptions& options) { return explore_impl(root, options, true); }

ExchangeGraph explore(const Seed& root, const ExploreOptions& options) {
  return options.parallel ? explore_parallel(root, options) : explore_serial(root, options);
}

FiniteTypeResult is_finite_type(const Seed& root, std::size_t budget, ChartMode mode, std::size_t expression_cap) {
  if (budget == 0) fail(ErrorKind::InvalidArgument, "budget must be positive");
  ExploreOptions opt;
  opt.depth = std::numeric_limits<std::size_t>::max();
  opt.max_vertices = budget;
  opt.expression_cap = expression_cap;
  opt.mode = mode;
  try {
    ExchangeGraph g = explore_serial(root, opt);
    return {g.closed, g.vertices.size()};
  } catch (const BudgetExceededError& e) {
    return {false, e.partial().vertices.size()};
  }
}

std::string graph_to_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "graph exchange {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  n" << i << " [label=\"";
    const auto& w = g.vertices[i].state.word;
    if (w.empty()) os << "root";
    for (std::size_t t = 0; t < w.size(); ++t) os << (t ? "," : "") << w[t] + 1;
    os << "\"];\n";
  }
  for (const auto& e : g.edges) os << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.index + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace mutwb
