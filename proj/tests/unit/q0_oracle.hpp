#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "mutwb/matrix.hpp"
#include "mutwb/q0/rep.hpp"

namespace mutwb::testing {

template <class F>
Matrix<F> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound, bool sparse = false) {
  std::uniform_int_distribution<int> e(-bound, bound);
  Matrix<F> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = F(sparse && rng() % 2 ? 0 : e(rng));
  }
  return m;
}

template <class F>
Matrix<F> random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    auto m = random_matrix<F>(rng, n, n, 3);
    if (m.det() != F(0)) return m;
  }
}

template <class F>
std::optional<Q0RepT<F>> random_rep(std::mt19937_64& rng, std::size_t a, std::size_t b, int bound, bool sparse = false) {
  auto x = random_matrix<F>(rng, b, a, bound, sparse);
  auto y = random_matrix<F>(rng, a, b, bound, sparse);
  if ((Matrix<F>::identity(a) - y * x).det() == F(0)) return std::nullopt;
  return Q0RepT<F>(a, b, x, y);
}

// change of basis by (g_A, g_B)
template <class F>
Q0RepT<F> conjugate(const Q0RepT<F>& r, const Matrix<F>& ga, const Matrix<F>& gb) {
  return Q0RepT<F>(r.dim_a(), r.dim_b(), gb * r.x() * *ga.try_inverse(), ga * r.y() * *gb.try_inverse());
}

template <class F>
std::vector<std::pair<int, F>> multiset(const std::vector<Simple<F>>& s) {
  std::vector<std::pair<int, F>> out;
  for (const auto& x : s) out.emplace_back(static_cast<int>(x.kind), x.m);
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return p.first < q.first;
    return detail::value_less(p.second, q.second);
  });
  return out;
}

// Exhaustive subrepresentation analysis over F_p for dimensions <= 2.
template <class F>
struct SubrepOracle {
  std::vector<std::pair<Matrix<F>, Matrix<F>>> subreps;
  bool semisimple = true;
  std::size_t s_a = 0, s_b = 0;
  std::vector<std::pair<F, std::size_t>> lines;  // monodromy and count of simple (1,1) subreps

  static std::vector<Matrix<F>> subspaces(std::size_t n, std::uint32_t p) {
    std::vector<Matrix<F>> out{Matrix<F>(n, 0)};
    if (n == 1) out.push_back(Matrix<F>({{F(1)}}));
    if (n == 2) {
      out.push_back(Matrix<F>({{F(0)}, {F(1)}}));
      for (std::uint32_t t = 0; t < p; ++t) out.push_back(Matrix<F>({{F(1)}, {F(static_cast<long>(t))}}));
      out.push_back(Matrix<F>::identity(2));
    }
    return out;
  }

  static Matrix<F> join(const Matrix<F>& u, const Matrix<F>& v) {
    Matrix<F> out(u.rows(), u.cols() + v.cols());
    if (u.cols()) out.set_block(0, 0, u);
    if (v.cols()) out.set_block(0, u.cols(), v);
    return out;
  }

  static bool contains(const Matrix<F>& big, const Matrix<F>& small) {
    if (small.cols() == 0) return true;
    if (big.cols() == 0) return small.rank() == 0;
    return join(big, small).rank() == big.cols();
  }

  SubrepOracle(const Q0RepT<F>& r, std::uint32_t p) {
    const auto us = subspaces(r.dim_a(), p), vs = subspaces(r.dim_b(), p);
    for (const auto& u : us) {
      for (const auto& v : vs) {
        bool ok = (u.cols() == 0 || contains(v, r.x() * u)) && (v.cols() == 0 || contains(u, r.y() * v));
        if (ok) subreps.emplace_back(u, v);
      }
    }
    for (const auto& [u, v] : subreps) {
      bool complement = false;
      for (const auto& [u2, v2] : subreps) {
        if (u.cols() + u2.cols() == r.dim_a() && v.cols() + v2.cols() == r.dim_b() && join(u, u2).rank() == r.dim_a() &&
            join(v, v2).rank() == r.dim_b()) {
          complement = true;
        }
      }
      semisimple = semisimple && complement;
      if (u.cols() == 1 && v.cols() == 0) ++s_a;
      if (u.cols() == 0 && v.cols() == 1) ++s_b;
      if (u.cols() == 1 && v.cols() == 1) {
        // simple iff neither line alone is a subrep
        bool has_a = false, has_b = false;
        for (const auto& [u2, v2] : subreps) {
          has_a = has_a || (u2.cols() == 1 && v2.cols() == 0 && contains(u, u2));
          has_b = has_b || (u2.cols() == 0 && v2.cols() == 1 && contains(v, v2));
        }
        if (has_a || has_b) continue;
        // restricted monodromy: y x acts on the line u by a scalar
        Matrix<F> img = r.y() * r.x() * u;
        std::size_t piv = u(0, 0) == F(0) ? 1 : 0;
        F lambda = img(piv, 0) * u(piv, 0).inverse();
        F m = F(1) - lambda;
        auto it = std::find_if(lines.begin(), lines.end(), [&](const auto& e) { return e.first == m; });
        if (it == lines.end()) {
          lines.emplace_back(m, 1);
        } else {
          ++it->second;
        }
      }
    }
  }

  // a semisimple summand with multiplicity k gives 1 + p + ... + p^(k-1) simple subobjects
  static std::size_t multiplicity(std::size_t count, std::uint32_t p) {
    std::size_t k = 0, total = 0, pk = 1;
    while (total < count) {
      total += pk;
      pk *= p;
      ++k;
    }
    if (total != count) throw std::logic_error("subrep count is not a sum of powers of p");
    return k;
  }
};

/// Summands predicted by the oracle when the representation splits into one-dimensional simples.
template <class F>
std::optional<std::vector<std::pair<int, F>>> predicted_summands(const SubrepOracle<F>& oracle, std::size_t a,
                                                                 std::size_t b, std::uint32_t p) {
  std::size_t covered_a = SubrepOracle<F>::multiplicity(oracle.s_a, p);
  std::size_t covered_b = SubrepOracle<F>::multiplicity(oracle.s_b, p);
  std::vector<std::pair<int, F>> expect(covered_a, {0, F(1)});
  for (std::size_t i = 0; i < covered_b; ++i) expect.emplace_back(1, F(1));
  for (const auto& [m, count] : oracle.lines) {
    std::size_t k = SubrepOracle<F>::multiplicity(count, p);
    covered_a += k;
    covered_b += k;
    for (std::size_t i = 0; i < k; ++i) expect.emplace_back(2, m);
  }
  if (covered_a != a || covered_b != b) return std::nullopt;
  std::sort(expect.begin(), expect.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return detail::value_less(x.second, y.second);
  });
  return expect;
}

}  // namespace mutwb::testing
