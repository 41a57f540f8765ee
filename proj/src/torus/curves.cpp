#include "mutwb/torus/curves.hpp"

#include "mutwb/error.hpp"

namespace mutwb {

GeodesicConfig::GeodesicConfig(std::vector<LatticeVector> classes) : classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto& v = classes_[i];
    if (v.size() != 2) fail(ErrorKind::InvalidArgument, "curve classes live in Z^2");
    if (is_zero(v) || !is_primitive(v)) fail(ErrorKind::InvalidArgument, "class " + std::to_string(i + 1) + " is not primitive");
  }
}

IntersectionLedger::IntersectionLedger(std::size_t n)
    : p_(n, std::vector<Integer>(n, Integer(0))), s_(n, Integer(0)) {}

IntersectionLedger::IntersectionLedger(IntMatrix positive, std::vector<Integer> self)
    : p_(std::move(positive)), s_(std::move(self)) {
  const std::size_t n = p_.size();
  if (s_.size() != n) fail(ErrorKind::InvalidArgument, "self-intersection list must match curve count");
  for (std::size_t i = 0; i < n; ++i) {
    if (p_[i].size() != n) fail(ErrorKind::InvalidArgument, "crossing matrix must be square");
    if (p_[i][i] != 0) fail(ErrorKind::InvalidArgument, "crossing matrix diagonal must be zero");
    if (s_[i] < 0) fail(ErrorKind::InvalidArgument, "self-intersection counts must be nonnegative");
    for (const auto& x : p_[i]) {
      if (x < 0) fail(ErrorKind::InvalidArgument, "crossing counts must be nonnegative");
    }
  }
}

IntersectionLedger ledger_from_geodesics(const GeodesicConfig& cfg) {
  const std::size_t n = cfg.size();
  IntMatrix p(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Integer d = det2(cfg.cls(i), cfg.cls(j));
      if (d > 0) p[i][j] = d;
    }
  }
  return IntersectionLedger(std::move(p), std::vector<Integer>(n, Integer(0)));
}

bool is_mutable(const IntersectionLedger& led, std::size_t k) {
  check_index(k, led.size(), "is_mutable");
  return led.self(k) == 0;
}

IntersectionLedger mutate_ledger(const IntersectionLedger& led, std::size_t k) {
  const std::size_t n = led.size();
  check_index(k, n, "mutate_ledger");
  if (!is_mutable(led, k)) {
    fail(ErrorKind::NotSimple, "curve " + std::to_string(k + 1) + " is not embedded (" + led.self(k).get_str() +
                                   " self-crossings)");
  }
  const IntMatrix& p = led.positive();
  IntMatrix q(n, std::vector<Integer>(n, Integer(0)));
  std::vector<Integer> s = led.self();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i == k) {
        q[i][j] = p[j][k];
      } else if (j == k) {
        q[i][j] = p[k][i];
      } else {
        q[i][j] = p[i][j] + p[i][k] * p[k][j];
      }
    }
    if (i != k) s[i] += p[i][k] * p[k][i];
  }
  return IntersectionLedger(std::move(q), std::move(s));
}

GeodesicConfig mutate_geodesics(const GeodesicConfig& cfg, std::size_t k) {
  check_index(k, cfg.size(), "mutate_geodesics");
  std::vector<LatticeVector> out = cfg.classes();
  const LatticeVector& vk = cfg.cls(k);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i == k) {
      out[i] = {-vk[0], -vk[1]};
      continue;
    }
    Integer d = det2(cfg.cls(i), vk);
    if (d > 0) out[i] = {out[i][0] + d * vk[0], out[i][1] + d * vk[1]};
  }
  return GeodesicConfig(std::move(out));
}

IntersectionLedger straighten(const IntersectionLedger& led, const GeodesicConfig& cfg) {
  if (led.size() != cfg.size()) fail(ErrorKind::InvalidArgument, "ledger and configuration sizes differ");
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.size(); ++j) {
      if (led.algebraic(i, j) != det2(cfg.cls(i), cfg.cls(j))) {
        fail(ErrorKind::InvalidArgument, "algebraic crossings of curves " + std::to_string(i + 1) + " and " +
                                             std::to_string(j + 1) + " disagree with their classes");
      }
    }
  }
  return ledger_from_geodesics(cfg);
}

Seed seed_of_config(const GeodesicConfig& cfg, std::optional<std::vector<int>> signing) {
  std::vector<int> sigma = signing ? *signing : std::vector<int>(cfg.size(), 1);
  return Seed(SkewLattice::standard_plane(), cfg.classes(), std::move(sigma), Duplicates::Flag);
}

}  // namespace mutwb
