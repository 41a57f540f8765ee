#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "mutwb/service/session.hpp"

namespace httplib {
class Server;
}

namespace mutwb::service {

struct ServiceOptions {
  std::size_t max_explore_depth = 12;
  std::size_t max_explore_vertices = 5000;
  /// static UI bundle served at /, when set
  std::optional<std::string> static_dir;
};

/// HTTP status for a library error: 409 for blocked or budget-limited steps, 422 for bad input.
int status_of(ErrorKind kind) noexcept;

/// Installs the /api routes on a server owned by the caller.
void install_routes(httplib::Server& server, SessionStore& store, const ServiceOptions& options = {});

/// Blocks serving on host:port until the server is stopped.
bool serve(SessionStore& store, const std::string& host, int port, const ServiceOptions& options = {});

}  // namespace mutwb::service
