#include "mutwb/cluster/seed.hpp"

#include <string>

#include "mutwb/error.hpp"

namespace mutwb {

namespace {

Integer positive_part(const Integer& a) { return a > 0 ? a : Integer(0); }

bool has_duplicates(const std::vector<LatticeVector>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) return true;
    }
  }
  return false;
}

}  // namespace

SkewLattice::SkewLattice(IntMatrix form) : form_(std::move(form)) {
  const std::size_t m = form_.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (form_[i].size() != m) fail(ErrorKind::InvalidArgument, "form must be square");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (form_[i][j] != -form_[j][i]) {
        fail(ErrorKind::InvalidArgument, "form is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                                             std::to_string(j + 1) + ")");
      }
    }
  }
}

SkewLattice SkewLattice::standard_plane() { return SkewLattice(IntMatrix{{0, 1}, {-1, 0}}); }

Integer SkewLattice::pair(const LatticeVector& u, const LatticeVector& v) const {
  Integer total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) total += u[i] * form_[i][j] * v[j];
  }
  return total;
}

LatticeVector SkewLattice::functional(const LatticeVector& u) const {
  LatticeVector row(rank(), Integer(0));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) row[j] += u[i] * form_[i][j];
  }
  return row;
}

Seed::Seed(SkewLattice lattice, std::vector<LatticeVector> vectors, std::vector<int> signing, Duplicates duplicates)
    : lattice_(std::move(lattice)), vectors_(std::move(vectors)), signing_(std::move(signing)) {
  if (signing_.size() != vectors_.size()) fail(ErrorKind::InvalidArgument, "signing length must match vector count");
  for (int s : signing_) {
    if (s != 0 && s != 1) fail(ErrorKind::InvalidArgument, "signing values must be 0 or 1");
  }
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const auto& e = vectors_[i];
    if (e.size() != lattice_.rank()) fail(ErrorKind::InvalidArgument, "vector length must equal lattice rank");
    if (is_zero(e) || !is_primitive(e)) {
      fail(ErrorKind::InvalidArgument, "seed vector " + std::to_string(i + 1) + " is not primitive");
    }
    if (lattice_.pair(e, e) != 0) fail(ErrorKind::InvalidArgument, "pairing(e_i, e_i) must vanish");
  }
  degenerate_ = has_duplicates(vectors_);
  if (degenerate_ && duplicates == Duplicates::Reject) fail(ErrorKind::InvalidArgument, "seed vectors must be distinct");
}

Seed::Seed(SkewLattice lattice, std::vector<LatticeVector> vectors)
    : Seed(std::move(lattice), vectors, std::vector<int>(vectors.size(), 0)) {}

Seed Seed::with_signing(std::vector<int> signing) const {
  if (signing.size() != vectors_.size()) fail(ErrorKind::InvalidArgument, "signing length must match vector count");
  for (int s : signing) {
    if (s != 0 && s != 1) fail(ErrorKind::InvalidArgument, "signing values must be 0 or 1");
  }
  Seed out = *this;
  out.signing_ = std::move(signing);
  return out;
}

Integer pairing(const Seed& seed, std::size_t i, std::size_t j) {
  check_index(i, seed.size(), "pairing");
  check_index(j, seed.size(), "pairing");
  return seed.lattice().pair(seed.vector(i), seed.vector(j));
}

IntMatrix exchange_matrix(const Seed& seed) {
  const std::size_t n = seed.size();
  IntMatrix b(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      b[i][j] = pairing(seed, i, j);
      b[j][i] = -b[i][j];
    }
  }
  return b;
}

Seed mutate_seed(const Seed& seed, std::size_t k) {
  check_index(k, seed.size(), "mutate_seed");
  Seed out = seed;
  const LatticeVector& ek = seed.vectors_[k];
  const LatticeVector ek_functional = seed.lattice().functional(ek);
  for (std::size_t i = 0; i < seed.size(); ++i) {
    LatticeVector& e = out.vectors_[i];
    if (i == k) {
      for (auto& x : e) x = -x;
      continue;
    }
    // {e_i, e_k} = -{e_k, e_i}
    Integer p = 0;
    for (std::size_t t = 0; t < e.size(); ++t) p -= ek_functional[t] * e[t];
    Integer c = positive_part(p);
    if (c == 0) continue;
    for (std::size_t t = 0; t < e.size(); ++t) e[t] += c * ek[t];
  }
  out.degenerate_ = has_duplicates(out.vectors_);
  return out;
}

Seed mutate_seed(const Seed& seed, const std::vector<std::size_t>& word) {
  Seed s = seed;
  for (auto k : word) s = mutate_seed(s, k);
  return s;
}

IntMatrix mutate_exchange_matrix(const IntMatrix& b, std::size_t k) {
  const std::size_t n = b.size();
  check_index(k, n, "mutate_exchange_matrix");
  IntMatrix out = b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
        continue;
      }
      // b_ij + sgn(b_ik) [b_ik b_kj]_+
      Integer prod = b[i][k] * b[k][j];
      if (prod > 0) out[i][j] = b[i][j] + (b[i][k] > 0 ? prod : Integer(-prod));
    }
  }
  return out;
}

Seed seed_from_exchange_matrix(const IntMatrix& b) {
  const std::size_t n = b.size();
  std::vector<LatticeVector> basis(n, LatticeVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
  return Seed(SkewLattice(b), std::move(basis));
}

}  // namespace mutwb
