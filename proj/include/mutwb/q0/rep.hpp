#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "mutwb/error.hpp"
#include "mutwb/matrix.hpp"
#include "mutwb/q0/roots.hpp"

namespace mutwb {

/// Representation A --x--> B, B --y--> A of the cylinder-with-disk quiver with invertible
/// monodromies m_A = Id - yx and m_B = Id - xy.
template <class F>
class Q0RepT {
 public:
  Q0RepT() = default;
  /// Throws InvalidArgument on shape mismatch or a singular monodromy.
  Q0RepT(std::size_t a, std::size_t b, Matrix<F> x, Matrix<F> y) : a_(a), b_(b), x_(std::move(x)), y_(std::move(y)) {
    if (x_.rows() != b_ || x_.cols() != a_ || y_.rows() != a_ || y_.cols() != b_) {
      fail(ErrorKind::InvalidArgument, "x must be b-by-a and y a-by-b");
    }
    if (monodromy_a().det() == F(0) || monodromy_b().det() == F(0)) {
      fail(ErrorKind::InvalidArgument, "monodromies Id - yx and Id - xy must be invertible");
    }
  }

  std::size_t dim_a() const noexcept { return a_; }
  std::size_t dim_b() const noexcept { return b_; }
  const Matrix<F>& x() const noexcept { return x_; }
  const Matrix<F>& y() const noexcept { return y_; }
  Matrix<F> monodromy_a() const { return Matrix<F>::identity(a_) - y_ * x_; }
  Matrix<F> monodromy_b() const { return Matrix<F>::identity(b_) - x_ * y_; }

  bool operator==(const Q0RepT&) const = default;

 private:
  std::size_t a_ = 0;
  std::size_t b_ = 0;
  Matrix<F> x_;
  Matrix<F> y_;
};

using Q0Rep = Q0RepT<Rational>;

enum class SimpleKind { SA, SB, P };

/// S_A, S_B, or P(m) with x = [1], y = [1 - m] (monodromy m on both sides).
template <class F>
struct Simple {
  SimpleKind kind = SimpleKind::SA;
  F m = F(1);

  bool operator==(const Simple&) const = default;
};

template <class F>
Q0RepT<F> make_simple(SimpleKind kind, const F& m = F(1)) {
  switch (kind) {
    case SimpleKind::SA:
      return Q0RepT<F>(1, 0, Matrix<F>(0, 1), Matrix<F>(1, 0));
    case SimpleKind::SB:
      return Q0RepT<F>(0, 1, Matrix<F>(1, 0), Matrix<F>(0, 1));
    case SimpleKind::P:
      break;
  }
  if (m == F(0)) fail(ErrorKind::ZeroMonodromy, "P(m) needs an invertible monodromy");
  return Q0RepT<F>(1, 1, Matrix<F>({{F(1)}}), Matrix<F>({{F(1) - m}}));
}

/// The role-swapped line P_B^m: x = [1 - m], y = [1].
template <class F>
Q0RepT<F> make_p_b(const F& m) {
  if (m == F(0)) fail(ErrorKind::ZeroMonodromy, "P_B(m) needs an invertible monodromy");
  return Q0RepT<F>(1, 1, Matrix<F>({{F(1) - m}}), Matrix<F>({{F(1)}}));
}

/// (B, A, -(Id - yx)^{-1} y, x); the new monodromies are m_B^{-1} and m_A^{-1}.
template <class F>
Q0RepT<F> mutate_rep(const Q0RepT<F>& r) {
  auto inv = r.monodromy_a().try_inverse();
  if (!inv) fail(ErrorKind::InvalidArgument, "singular monodromy");
  Q0RepT<F> out(r.dim_b(), r.dim_a(), -(*inv * r.y()), r.x());
  return out;
}

/// (phi_A, phi_B) with phi_B x = x' phi_A and phi_A y = y' phi_B.
template <class F>
bool is_morphism(const Q0RepT<F>& r, const Q0RepT<F>& s, const Matrix<F>& phi_a, const Matrix<F>& phi_b) {
  if (phi_a.rows() != s.dim_a() || phi_a.cols() != r.dim_a() || phi_b.rows() != s.dim_b() || phi_b.cols() != r.dim_b()) {
    return false;
  }
  return phi_b * r.x() == s.x() * phi_a && phi_a * r.y() == s.y() * phi_b;
}

template <class F>
bool is_isomorphism(const Q0RepT<F>& r, const Q0RepT<F>& s, const Matrix<F>& phi_a, const Matrix<F>& phi_b) {
  return is_morphism(r, s, phi_a, phi_b) && phi_a.det() != F(0) && phi_b.det() != F(0);
}

/// The explicit isomorphism r -> mutate_rep(mutate_rep(r)): (Id, -m_B).
template <class F>
std::pair<Matrix<F>, Matrix<F>> double_mutation_intertwiner(const Q0RepT<F>& r) {
  return {Matrix<F>::identity(r.dim_a()), -r.monodromy_b()};
}

/// Basis of Hom(r, s) as pairs (phi_A, phi_B), from the nullspace of the intertwining equations.
template <class F>
std::vector<std::pair<Matrix<F>, Matrix<F>>> hom_basis(const Q0RepT<F>& r, const Q0RepT<F>& s) {
  const std::size_t ra = r.dim_a(), rb = r.dim_b(), sa = s.dim_a(), sb = s.dim_b();
  const std::size_t na = sa * ra, nb = sb * rb, unknowns = na + nb;
  // unknown index of phi_A(i,j) is i*ra + j, of phi_B(i,j) is na + i*rb + j
  std::vector<std::vector<F>> eqs;
  // phi_B x - x' phi_A = 0 : sb x ra equations
  for (std::size_t i = 0; i < sb; ++i) {
    for (std::size_t j = 0; j < ra; ++j) {
      std::vector<F> e(unknowns, F(0));
      for (std::size_t t = 0; t < rb; ++t) e[na + i * rb + t] += r.x()(t, j);
      for (std::size_t t = 0; t < sa; ++t) e[t * ra + j] -= s.x()(i, t);
      eqs.push_back(std::move(e));
    }
  }
  // phi_A y - y' phi_B = 0 : sa x rb equations
  for (std::size_t i = 0; i < sa; ++i) {
    for (std::size_t j = 0; j < rb; ++j) {
      std::vector<F> e(unknowns, F(0));
      for (std::size_t t = 0; t < ra; ++t) e[i * ra + t] += r.y()(t, j);
      for (std::size_t t = 0; t < sb; ++t) e[na + t * rb + j] -= s.y()(i, t);
      eqs.push_back(std::move(e));
    }
  }
  Matrix<F> basis;
  if (eqs.empty()) {
    basis = Matrix<F>::identity(unknowns);
  } else {
    basis = Matrix<F>(eqs).nullspace();
  }
  std::vector<std::pair<Matrix<F>, Matrix<F>>> out;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    Matrix<F> pa(sa, ra), pb(sb, rb);
    for (std::size_t i = 0; i < sa; ++i) {
      for (std::size_t j = 0; j < ra; ++j) pa(i, j) = basis(i * ra + j, c);
    }
    for (std::size_t i = 0; i < sb; ++i) {
      for (std::size_t j = 0; j < rb; ++j) pb(i, j) = basis(na + i * rb + j, c);
    }
    out.emplace_back(std::move(pa), std::move(pb));
  }
  return out;
}

/// Searches small integer combinations of a Hom basis for an isomorphism; verified exactly.
template <class F>
std::optional<std::pair<Matrix<F>, Matrix<F>>> find_isomorphism(const Q0RepT<F>& r, const Q0RepT<F>& s,
                                                                   int attempts = 64) {
  if (r.dim_a() != s.dim_a() || r.dim_b() != s.dim_b()) return std::nullopt;
  auto basis = hom_basis(r, s);
  if (basis.empty()) {
    if (r.dim_a() == 0 && r.dim_b() == 0) return std::make_pair(Matrix<F>(0, 0), Matrix<F>(0, 0));
    return std::nullopt;
  }
  std::mt19937_64 rng(0x51a7e);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < attempts; ++t) {
    Matrix<F> pa(s.dim_a(), r.dim_a()), pb(s.dim_b(), r.dim_b());
    for (const auto& [ba, bb] : basis) {
      F c(coef(rng));
      pa = pa + c * ba;
      pb = pb + c * bb;
    }
    if (is_isomorphism(r, s, pa, pb)) return std::make_pair(pa, pb);
  }
  return std::nullopt;
}

template <class F>
struct Decomposition {
  /// S_A first, then S_B, then P(m) in increasing order of the eigenvalue 1 - m of yx.
  std::vector<Simple<F>> summands;
  /// Columns are adapted bases of A and B realizing the direct sum (the isomorphism witness).
  Matrix<F> basis_a;
  Matrix<F> basis_b;
};

/// Direct sum of representations.
template <class F>
Q0RepT<F> direct_sum(const std::vector<Q0RepT<F>>& parts) {
  std::size_t a = 0, b = 0;
  for (const auto& p : parts) {
    a += p.dim_a();
    b += p.dim_b();
  }
  Matrix<F> x(b, a), y(a, b);
  std::size_t oa = 0, ob = 0;
  for (const auto& p : parts) {
    x.set_block(ob, oa, p.x());
    y.set_block(oa, ob, p.y());
    oa += p.dim_a();
    ob += p.dim_b();
  }
  return Q0RepT<F>(a, b, std::move(x), std::move(y));
}

template <class F>
Q0RepT<F> realize(const std::vector<Simple<F>>& summands) {
  std::vector<Q0RepT<F>> parts;
  for (const auto& s : summands) parts.push_back(make_simple(s.kind, s.m));
  return direct_sum(parts);
}

namespace detail {

template <class F>
Matrix<F> hstack(const std::vector<Matrix<F>>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix<F> out(rows, cols);
  std::size_t c = 0;
  for (const auto& b : blocks) {
    out.set_block(0, c, b);
    c += b.cols();
  }
  return out;
}

template <class F>
bool value_less(const F& a, const F& b) {
  if constexpr (requires { a.value(); }) {
    return a.value() < b.value();
  } else {
    return a < b;
  }
}

}  // namespace detail

/// Splits a semisimple representation into simples with an explicit change of basis.
/// Throws NotSplitOverBase if yx has eigenvalues outside the base field and NotSemisimple
/// if the representation is a non-split extension.
template <class F>
Decomposition<F> decompose(const Q0RepT<F>& r) {
  const std::size_t a = r.dim_a(), b = r.dim_b();
  const Matrix<F> yx = r.y() * r.x();
  const Matrix<F> xy = r.x() * r.y();
  auto roots = base_field_roots(yx.charpoly());
  std::sort(roots.begin(), roots.end(), [](const auto& p, const auto& q) { return detail::value_less(p.first, q.first); });
  std::size_t found = 0;
  for (const auto& rt : roots) found += rt.second;
  if (found < a) fail(ErrorKind::NotSplitOverBase, "yx has eigenvalues outside the base field");

  const Matrix<F> ker_x = r.x().nullspace();
  const Matrix<F> ker_y = r.y().nullspace();
  if (yx.nullspace().cols() != ker_x.cols()) fail(ErrorKind::NotSemisimple, "ker yx is larger than ker x");
  if (xy.nullspace().cols() != ker_y.cols()) fail(ErrorKind::NotSemisimple, "ker xy is larger than ker y");

  Decomposition<F> d;
  std::vector<Matrix<F>> cols_a{ker_x}, cols_b{ker_y};
  for (std::size_t i = 0; i < ker_x.cols(); ++i) d.summands.push_back({SimpleKind::SA, F(1)});
  for (std::size_t i = 0; i < ker_y.cols(); ++i) d.summands.push_back({SimpleKind::SB, F(1)});
  for (const auto& [lambda, mult] : roots) {
    if (lambda == F(0)) continue;
    Matrix<F> eig = (yx - lambda * Matrix<F>::identity(a)).nullspace();
    if (eig.cols() != mult) fail(ErrorKind::NotSemisimple, "yx is not diagonalizable");
    cols_a.push_back(eig);
    cols_b.push_back(r.x() * eig);
    for (std::size_t i = 0; i < mult; ++i) d.summands.push_back({SimpleKind::P, F(1) - lambda});
  }
  d.basis_a = detail::hstack(cols_a, a);
  d.basis_b = detail::hstack(cols_b, b);
  if (d.basis_a.cols() != a || d.basis_b.cols() != b || d.basis_a.det() == F(0) || d.basis_b.det() == F(0)) {
    fail(ErrorKind::NotSemisimple, "eigenspaces do not span");
  }
  // the witness must carry the direct sum onto r exactly
  if (!is_isomorphism(realize(d.summands), r, d.basis_a, d.basis_b)) {
    fail(ErrorKind::NotSemisimple, "adapted basis does not split the representation");
  }
  return d;
}

}  // namespace mutwb
