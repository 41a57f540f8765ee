#include "mutwb/service/http.hpp"

#include <charconv>

#include <httplib.h>

#include "mutwb/error.hpp"

namespace mutwb::service {

namespace {

constexpr const char* kJson = "application/json";

void reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void reply_error(httplib::Response& res, int status, std::string_view reason, const std::string& message) {
  reply(res, status, Json{{"error", message}, {"reason", reason}});
}

/// Runs a handler, turning thrown errors into JSON error responses.
template <typename F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const SessionNotFound& e) {
      reply_error(res, 404, "not-found", e.what());
    } catch (const NothingToUndo& e) {
      reply_error(res, 409, "nothing-to-undo", e.what());
    } catch (const Error& e) {
      reply_error(res, status_of(e.kind()), e.reason(), e.what());
    } catch (const nlohmann::json::exception& e) {
      reply_error(res, 422, "parse-error", e.what());
    } catch (const std::exception& e) {
      reply_error(res, 500, "internal", e.what());
    }
  };
}

std::size_t parse_size(const std::string& text, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    fail(ErrorKind::Parse, std::string(what) + " must be a non-negative integer");
  return v;
}

}  // namespace

int status_of(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::IndexOutOfRange:
      return 422;
    case ErrorKind::NotSimple:
    case ErrorKind::NotRegular:
    case ErrorKind::LoopAtVertex:
    case ErrorKind::NonMonomialConstant:
    case ErrorKind::PoleAtPoint:
    case ErrorKind::DivisionByZeroExpr:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::Overflow:
      return 409;
    default:
      return 500;
  }
}

void install_routes(httplib::Server& server, SessionStore& store, const ServiceOptions& options) {
  server.Get("/api/examples", guarded([](const httplib::Request&, httplib::Response& res) {
    Json out = Json::array();
    for (const auto& e : examples()) out.push_back({{"name", e.name}, {"description", e.description}});
    reply(res, 200, out);
  }));

  server.Post("/api/sessions", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    Json body = io::parse(req.body);
    reply(res, 201, store.create(state_from_request(body)));
  }));

  server.Get(R"(/api/sessions/([^/]+))", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    reply(res, 200, store.get(req.matches[1]));
  }));

  server.Post(R"(/api/sessions/([^/]+)/mutations)",
              guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const std::string id = req.matches[1];
                store.get(id);   // 404 before body validation
                Json body = io::parse(req.body);
                if (!body.is_object() || !body.contains("index") || !body["index"].is_number_integer())
                  fail(ErrorKind::Parse, "body must be {\"index\": k} with k 1-based");
                auto k = body["index"].get<long long>();
                if (k < 1) fail(ErrorKind::IndexOutOfRange, "index must be at least 1");
                reply(res, 200, store.mutate(id, static_cast<std::size_t>(k - 1)));
              }));

  server.Post(R"(/api/sessions/([^/]+)/undo)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    reply(res, 200, store.undo(req.matches[1]));
  }));

  server.Get(R"(/api/sessions/([^/]+)/exchange)",
             guarded([&store, options](const httplib::Request& req, httplib::Response& res) {
               State s = store.snapshot(req.matches[1]);
               std::size_t depth = 2;
               if (req.has_param("depth")) depth = parse_size(req.get_param_value("depth"), "depth");
               if (depth > options.max_explore_depth)
                 fail(ErrorKind::InvalidArgument, "depth is limited to " + std::to_string(options.max_explore_depth));
               if (std::holds_alternative<LedgerState>(s))
                 fail(ErrorKind::InvalidArgument, "a bare ledger has no seed to explore");
               Json out;
               try {
                 out = io::graph_to_json(explore_state(s, depth, store.expression_cap(), options.max_explore_vertices));
                 out["complete"] = true;
               } catch (const BudgetExceededError& e) {
                 out = io::graph_to_json(e.partial());
                 out["complete"] = false;
                 out["reason"] = e.reason();
               }
               reply(res, 200, out);
             }));

  if (options.static_dir) server.set_mount_point("/", *options.static_dir);
}

bool serve(SessionStore& store, const std::string& host, int port, const ServiceOptions& options) {
  httplib::Server server;
  install_routes(server, store, options);
  return server.listen(host, port);
}

}  // namespace mutwb::service
