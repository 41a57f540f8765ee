#include "mutwb/cluster/quiver.hpp"

#include <sstream>

#include "mutwb/error.hpp"

namespace mutwb {

Quiver::Quiver(std::size_t n)
    : arrows_(n, std::vector<Integer>(n, Integer(0))), loops_(n, Integer(0)) {}

Quiver::Quiver(IntMatrix arrows, std::vector<Integer> loops)
    : arrows_(std::move(arrows)), loops_(std::move(loops)) {
  const std::size_t n = arrows_.size();
  if (loops_.size() != n) fail(ErrorKind::InvalidArgument, "loop vector length must match vertex count");
  for (std::size_t i = 0; i < n; ++i) {
    if (arrows_[i].size() != n) fail(ErrorKind::InvalidArgument, "arrow matrix must be square");
    if (loops_[i] < 0) fail(ErrorKind::InvalidArgument, "loop counts must be nonnegative");
    for (std::size_t j = 0; j < n; ++j) {
      if (arrows_[i][j] < 0) fail(ErrorKind::InvalidArgument, "arrow counts must be nonnegative");
    }
    if (arrows_[i][i] != 0) fail(ErrorKind::InvalidArgument, "diagonal must be zero; use loops");
  }
}

void Quiver::add_arrows(std::size_t from, std::size_t to, const Integer& count) {
  check_index(from, vertex_count(), "add_arrows");
  check_index(to, vertex_count(), "add_arrows");
  if (from == to) {
    loops_[from] += count;
  } else {
    arrows_[from][to] += count;
  }
}

bool Quiver::has_two_cycle() const {
  for (std::size_t i = 0; i < vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < vertex_count(); ++j) {
      if (arrows_[i][j] > 0 && arrows_[j][i] > 0) return true;
    }
  }
  return false;
}

bool Quiver::has_loops() const {
  for (const auto& l : loops_) {
    if (l > 0) return true;
  }
  return false;
}

Quiver quiver_of_seed(const Seed& seed) {
  const IntMatrix b = exchange_matrix(seed);
  Quiver q(seed.size());
  for (std::size_t i = 0; i < seed.size(); ++i) {
    for (std::size_t j = 0; j < seed.size(); ++j) {
      if (b[i][j] > 0) q.add_arrows(i, j, b[i][j]);
    }
  }
  return q;
}

Quiver mutate_quiver(const Quiver& q, std::size_t k) {
  const std::size_t n = q.vertex_count();
  check_index(k, n, "mutate_quiver");
  if (q.loops(k) > 0) fail(ErrorKind::LoopAtVertex, "cannot mutate at vertex " + std::to_string(k + 1) + " with self-loops");
  Quiver out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.add_arrows(i, i, q.loops(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Integer& a = q.arrows(i, j);
      if (a == 0) continue;
      if (i == k || j == k) {
        out.add_arrows(j, i, a);
      } else {
        out.add_arrows(i, j, a);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k || q.arrows(i, k) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k || q.arrows(k, j) == 0) continue;
      out.add_arrows(i, j, q.arrows(i, k) * q.arrows(k, j));
    }
  }
  return out;
}

Quiver reduce_quiver(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  Quiver out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Integer d = q.arrows(i, j) - q.arrows(j, i);
      if (d > 0) out.add_arrows(i, j, d);
    }
  }
  return out;
}

std::string to_dot(const Quiver& q, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < q.vertex_count(); ++i) os << "  v" << i + 1 << " [label=\"" << i + 1 << "\"];\n";
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    if (q.loops(i) > 0) os << "  v" << i + 1 << " -> v" << i + 1 << " [label=\"" << q.loops(i).get_str() << "\"];\n";
    for (std::size_t j = 0; j < q.vertex_count(); ++j) {
      if (i != j && q.arrows(i, j) > 0) {
        os << "  v" << i + 1 << " -> v" << j + 1 << " [label=\"" << q.arrows(i, j).get_str() << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace mutwb
