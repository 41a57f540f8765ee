#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mutwb/cluster/quiver.hpp"
#include "mutwb/error.hpp"
#include "mutwb/service/http.hpp"
#include "mutwb/service/state.hpp"

using namespace mutwb;
using namespace mutwb::service;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitBlocked = 2;
constexpr int kExitBudget = 3;

struct Source {
  std::string example;
  std::string input;
  std::string character;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* ex = cmd->add_option("--example", src.example, "registry key, see `examples`");
  auto* in = cmd->add_option("--input,--config,--seed,--ledger", src.input,
                             "JSON file with classes, a seed or a ledger P/s");
  ex->excludes(in);
  cmd->add_option("--character", src.character, "rank-1 local system as a,b (rationals)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

State load(const Source& src) {
  Json body;
  if (!src.example.empty()) body["example"] = src.example;
  else if (!src.input.empty()) body = io::parse(read_file(src.input));
  else fail(ErrorKind::Parse, "one of --example or --input is required");
  if (!src.character.empty()) {
    auto comma = src.character.find(',');
    if (comma == std::string::npos) fail(ErrorKind::Parse, "--character expects a,b");
    body["character"] = {{"a", src.character.substr(0, comma)}, {"b", src.character.substr(comma + 1)}};
  }
  return state_from_request(body);
}

std::vector<std::size_t> parse_sequence(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long k = 0;
    try {
      k = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || k < 1) fail(ErrorKind::Parse, "bad index '" + item + "' in sequence");
    out.push_back(static_cast<std::size_t>(k - 1));
  }
  return out;
}

bool is_blocking(ErrorKind k) {
  return k == ErrorKind::NotSimple || k == ErrorKind::NotRegular || k == ErrorKind::LoopAtVertex ||
         k == ErrorKind::NonMonomialConstant || k == ErrorKind::PoleAtPoint || k == ErrorKind::DivisionByZeroExpr;
}

int exit_code_of(ErrorKind k) {
  if (k == ErrorKind::BudgetExceeded) return kExitBudget;
  if (is_blocking(k)) return kExitBlocked;
  return kExitParse;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(ErrorKind::Parse, "cannot write " + out_path);
  out << text << '\n';
}

std::string render_vector(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string text_report(const State& s) {
  std::ostringstream os;
  const DecoratedSeed* d = nullptr;
  const IntersectionLedger* led = nullptr;
  if (const auto* a = std::get_if<AbstractSeedState>(&s)) d = &a->seed;
  if (const auto* c = std::get_if<ConfigState>(&s)) {
    d = &c->seed;
    led = &c->ledger;
    os << "classes:";
    for (const auto& v : c->config.classes()) os << ' ' << render_vector(v);
    os << '\n';
    if (c->character) os << "character: a=" << to_string(c->character->a()) << " b=" << to_string(c->character->b()) << '\n';
  }
  if (const auto* l = std::get_if<LedgerState>(&s)) led = &l->ledger;
  Quiver q = d ? quiver_of_seed(d->seed) : reduce_quiver(Quiver(led->positive(), led->self()));
  os << "quiver:";
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    for (std::size_t j = 0; j < q.vertex_count(); ++j)
      if (q.arrows(i, j) != 0) os << ' ' << i + 1 << "->" << j + 1 << ':' << to_string(q.arrows(i, j));
  os << '\n';
  if (led) {
    os << "ledger: P=[";
    for (std::size_t i = 0; i < led->size(); ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < led->size(); ++j) os << (j ? "," : "") << to_string(led->positive(i, j));
      os << ']';
    }
    os << "] s=[";
    for (std::size_t i = 0; i < led->size(); ++i) os << (i ? "," : "") << to_string(led->self(i));
    os << "]\n";
  }
  if (d) {
    auto labels = x_labels(*d);
    for (std::size_t i = 0; i < labels.size(); ++i) os << "X" << i + 1 << " = " << labels[i] << '\n';
  }
  return os.str();
}

/// Applies the word step by step so a blocked step can be reported by position.
State run_sequence(State s, const std::vector<std::size_t>& word, std::size_t cap) {
  for (std::size_t step = 0; step < word.size(); ++step) {
    try {
      s = mutate_state(s, word[step], cap);
    } catch (const Error& e) {
      std::cerr << "step " << step + 1 << " (index " << word[step] + 1 << "): " << e.what() << " [" << e.reason()
                << "]\n";
      throw;
    }
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mutation workbench: seeds, torus geodesics, local systems and exchange graphs"};
  app.require_subcommand(1);
  const std::size_t cap = expression_cap_from_env();

  Source src;
  std::string sequence, out_path;
  bool text = false, pretty = false;
  auto* mutate = app.add_subcommand("mutate", "apply a mutation sequence and print the final state");
  add_source(mutate, src);
  mutate->add_option("--sequence", sequence, "comma separated 1-based indices");
  mutate->add_flag("--text", text, "human readable report instead of JSON");
  mutate->add_flag("--pretty", pretty, "indented JSON");
  mutate->add_option("--out", out_path, "write to a file instead of stdout");

  std::size_t depth = 3, max_vertices = 100000;
  bool serial = false, fingerprint = false, as_json = false;
  auto* explore_cmd = app.add_subcommand("explore", "breadth-first exchange graph from the state's seed");
  add_source(explore_cmd, src);
  explore_cmd->add_option("--depth", depth, "number of mutation levels");
  explore_cmd->add_option("--max-vertices", max_vertices, "vertex budget");
  explore_cmd->add_flag("--serial", serial, "single-threaded reference kernel");
  explore_cmd->add_flag("--fingerprint", fingerprint, "identify vertices by modular fingerprints");
  explore_cmd->add_flag("--json", as_json, "print the whole graph as JSON");

  bool dot = false;
  std::string what = "state";
  auto* export_cmd = app.add_subcommand("export", "write a state, quiver or exchange graph as JSON or DOT");
  add_source(export_cmd, src);
  export_cmd->add_option("--sequence", sequence, "mutations applied first");
  export_cmd->add_option("--what", what, "state, quiver or exchange")
      ->check(CLI::IsMember({"state", "quiver", "exchange"}));
  auto* dot_flag = export_cmd->add_flag("--dot", dot, "Graphviz output");
  export_cmd->add_flag("--json", as_json, "JSON output (default)")->excludes(dot_flag);
  export_cmd->add_option("--depth", depth, "exchange depth");
  export_cmd->add_option("--out", out_path, "write to a file instead of stdout");

  int port = 8080;
  std::string host = "127.0.0.1", journal, ui_dir;
  auto* serve_cmd = app.add_subcommand("serve", "JSON HTTP service");
  serve_cmd->add_option("--port", port, "TCP port");
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("--journal", journal, "append-only journal, replayed on start");
  serve_cmd->add_option("--ui", ui_dir, "static UI bundle to serve at /");

  auto* examples_cmd = app.add_subcommand("examples", "list registry keys");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*examples_cmd) {
      for (const auto& e : examples()) std::cout << e.name << "\t" << e.description << '\n';
      return 0;
    }
    if (*serve_cmd) {
      std::optional<std::string> jpath;
      if (!journal.empty()) jpath = journal;
      SessionStore store(cap, jpath);
      ServiceOptions opt;
      if (!ui_dir.empty()) opt.static_dir = ui_dir;
      std::cerr << "listening on " << host << ':' << port << '\n';
      return serve(store, host, port, opt) ? 0 : 1;
    }
    State s = load(src);
    if (*mutate) {
      s = run_sequence(std::move(s), parse_sequence(sequence), cap);
      write_output(text ? text_report(s) : state_to_json(s).dump(pretty ? 2 : -1), out_path);
      return 0;
    }
    if (*explore_cmd) {
      ExploreOptions opt;
      opt.depth = depth;
      opt.max_vertices = max_vertices;
      opt.expression_cap = cap;
      opt.parallel = !serial;
      opt.mode = fingerprint ? ChartMode::Fingerprint : ChartMode::Exact;
      const Seed* root = nullptr;
      if (const auto* a = std::get_if<AbstractSeedState>(&s)) root = &a->seed.seed;
      if (const auto* c = std::get_if<ConfigState>(&s)) root = &c->seed.seed;
      if (!root) fail(ErrorKind::InvalidArgument, "a bare ledger has no seed to explore");
      ExchangeGraph g;
      int code = 0;
      try {
        g = explore(*root, opt);
      } catch (const BudgetExceededError& e) {
        std::cerr << e.what() << " [budget-exceeded]\n";
        g = e.partial();
        code = kExitBudget;
      }
      if (as_json) {
        std::cout << io::graph_to_json(g).dump() << '\n';
      } else {
        for (std::size_t i = 0; i < g.level_sizes.size(); ++i)
          std::cout << "depth " << i << ": " << g.level_sizes[i] << '\n';
        std::cout << "vertices: " << g.vertices.size() << "\nedges: " << g.edges.size()
                  << "\nclosed: " << (g.closed ? "yes" : "no") << '\n';
      }
      return code;
    }
    if (*export_cmd) {
      s = run_sequence(std::move(s), parse_sequence(sequence), cap);
      std::string outtext;
      if (what == "exchange") {
        ExchangeGraph g = explore_state(s, depth, cap, max_vertices);
        outtext = dot ? graph_to_dot(g) : io::graph_to_json(g).dump();
      } else if (what == "quiver" || dot) {
        Json st = state_to_json(s);
        Quiver q = io::quiver_from_json(st.at("quiver"));
        outtext = dot ? to_dot(q) : io::quiver_to_json(q).dump();
      } else {
        outtext = state_to_json(s).dump();
      }
      write_output(outtext, out_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << e.reason() << "]\n";
    return exit_code_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << " [parse-error]\n";
    return kExitParse;
  }
  return 0;
}
