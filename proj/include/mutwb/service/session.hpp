#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutwb/service/state.hpp"

namespace mutwb::service {

class SessionNotFound : public std::runtime_error {
 public:
  explicit SessionNotFound(const std::string& id) : std::runtime_error("no session '" + id + "'") {}
};

class NothingToUndo : public std::runtime_error {
 public:
  NothingToUndo() : std::runtime_error("nothing to undo") {}
};

struct Session {
  std::string id;
  State state;
  std::vector<std::size_t> history;   // applied indices, 0-based
  std::vector<State> undo;
  mutable std::shared_mutex mutex;
};

/// {id, history (1-based), can_undo, state}.
Json session_to_json(const Session& s);

/// Sessions live in memory. Mutations of one session are serialized by its own writer lock;
/// reads share it, and different sessions never contend beyond the map lookup.
/// With a journal path, every create/mutate/undo is appended as one JSON line and replayed on start.
class SessionStore {
 public:
  explicit SessionStore(std::size_t expression_cap = 10000, std::optional<std::string> journal = std::nullopt);

  Json create(State initial);
  Json get(const std::string& id) const;
  /// k is 0-based. Throws SessionNotFound or the mutation's Error, leaving the session unchanged.
  Json mutate(const std::string& id, std::size_t k);
  Json undo(const std::string& id);
  /// Copy of the current state, for read-only work outside the lock.
  State snapshot(const std::string& id) const;

  std::size_t expression_cap() const noexcept { return cap_; }
  std::size_t size() const;

 private:
  std::shared_ptr<Session> find(const std::string& id) const;
  std::shared_ptr<Session> insert(const std::string& id, State initial);
  void append(const Json& entry);
  void replay(const std::string& path);

  std::size_t cap_;
  mutable std::shared_mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_id_ = 1;
  std::mutex journal_mutex_;
  std::optional<std::ofstream> journal_;
};

}  // namespace mutwb::service
