#include "mutwb/service/session.hpp"

#include <algorithm>

#include "mutwb/error.hpp"

namespace mutwb::service {

Json session_to_json(const Session& s) {
  Json out;
  out["id"] = s.id;
  Json hist = Json::array();
  for (auto k : s.history) hist.push_back(k + 1);
  out["history"] = std::move(hist);
  out["can_undo"] = !s.undo.empty();
  out["state"] = state_to_json(s.state);
  return out;
}

SessionStore::SessionStore(std::size_t expression_cap, std::optional<std::string> journal) : cap_(expression_cap) {
  if (!journal) return;
  replay(*journal);
  journal_.emplace(*journal, std::ios::app);
  if (!*journal_) fail(ErrorKind::InvalidArgument, "cannot open journal " + *journal);
}

void SessionStore::replay(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json e = io::parse(line);
    const std::string op = e.at("op").get<std::string>();
    const std::string id = e.at("id").get<std::string>();
    if (op == "create") {
      insert(id, state_from_json(e.at("state")));
      continue;
    }
    auto s = find(id);
    if (op == "mutate") {
      auto k = e.at("index").get<std::size_t>() - 1;
      s->undo.push_back(s->state);
      s->state = mutate_state(s->state, k, cap_);
      s->history.push_back(k);
    } else if (op == "undo" && !s->undo.empty()) {
      s->state = std::move(s->undo.back());
      s->undo.pop_back();
      s->history.pop_back();
    }
  }
}

std::shared_ptr<Session> SessionStore::insert(const std::string& id, State initial) {
  auto s = std::make_shared<Session>();
  s->id = id;
  s->state = std::move(initial);
  std::unique_lock lock(map_mutex_);
  sessions_[id] = s;
  if (id.starts_with("s")) {
    try {
      next_id_ = std::max(next_id_, std::stoul(id.substr(1)) + 1);
    } catch (const std::exception&) {
    }
  }
  return s;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(map_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw SessionNotFound(id);
  return it->second;
}

void SessionStore::append(const Json& entry) {
  std::lock_guard lock(journal_mutex_);
  if (!journal_) return;
  *journal_ << entry.dump() << '\n';
  journal_->flush();
}

Json SessionStore::create(State initial) {
  std::string id;
  {
    std::unique_lock lock(map_mutex_);
    id = "s" + std::to_string(next_id_++);
  }
  auto s = insert(id, std::move(initial));
  std::shared_lock lock(s->mutex);
  append({{"op", "create"}, {"id", id}, {"state", state_to_json(s->state)}});
  return session_to_json(*s);
}

Json SessionStore::get(const std::string& id) const {
  auto s = find(id);
  std::shared_lock lock(s->mutex);
  return session_to_json(*s);
}

State SessionStore::snapshot(const std::string& id) const {
  auto s = find(id);
  std::shared_lock lock(s->mutex);
  return s->state;
}

Json SessionStore::mutate(const std::string& id, std::size_t k) {
  auto s = find(id);
  std::unique_lock lock(s->mutex);
  State next = mutate_state(s->state, k, cap_);
  s->undo.push_back(std::move(s->state));
  s->state = std::move(next);
  s->history.push_back(k);
  append({{"op", "mutate"}, {"id", id}, {"index", k + 1}});
  return session_to_json(*s);
}

Json SessionStore::undo(const std::string& id) {
  auto s = find(id);
  std::unique_lock lock(s->mutex);
  if (s->undo.empty()) throw NothingToUndo();
  s->state = std::move(s->undo.back());
  s->undo.pop_back();
  s->history.pop_back();
  append({{"op", "undo"}, {"id", id}});
  return session_to_json(*s);
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(map_mutex_);
  return sessions_.size();
}

}  // namespace mutwb::service
