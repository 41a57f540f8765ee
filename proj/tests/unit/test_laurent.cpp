#include <doctest.h>

#include <random>

#include "mutwb/error.hpp"
#include "mutwb/laurent/map.hpp"
#include "random_seeds.hpp"

using namespace mutwb;

namespace {

LaurentExpr random_laurent(std::mt19937_64& rng, std::size_t n, int terms, int exp_lo, int exp_hi, int coef) {
  std::uniform_int_distribution<int> e(exp_lo, exp_hi), c(-coef, coef);
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Term x;
    for (std::size_t i = 0; i < n; ++i) x.exp[i] = e(rng);
    x.coef = c(rng);
    ts.push_back(x);
  }
  return LaurentExpr(n, ts);
}

LaurentExpr z(std::size_t n, std::vector<long> e, long c = 1) {
  LatticeVector v;
  for (long x : e) v.push_back(x);
  return LaurentExpr::monomial(n, v, c);
}

LaurentExpr one(std::size_t n) { return LaurentExpr::constant(n, 1); }

}  // namespace

TEST_CASE("Laurent ring laws") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 3;
    auto a = random_laurent(rng, n, 4, -2, 2, 5);
    auto b = random_laurent(rng, n, 3, -2, 2, 5);
    auto c = random_laurent(rng, n, 3, -1, 3, 5);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(pow(a, 3) == a * a * a);
  }
}

TEST_CASE("exact division and gcd") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + rng() % 3;
    auto a = random_laurent(rng, n, 3, 0, 2, 4);
    auto b = random_laurent(rng, n, 3, 0, 2, 4);
    auto g = random_laurent(rng, n, 2, 0, 2, 4) + one(n);
    if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
    auto q = divide_exact(a * g, g);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    auto h = laurent_gcd(a * g, b * g);
    // g divides the gcd up to a Laurent unit, and the gcd divides both inputs
    CHECK(divide_exact(h, g).has_value());
    CHECK(divide_exact(a * g, h).has_value());
    CHECK(divide_exact(b * g, h).has_value());
  }
  const std::size_t n = 2;
  CHECK_FALSE(divide_exact(one(n) + z(n, {1, 0}), one(n) + z(n, {0, 1})).has_value());
  // (1 + x + x^2)(1 - x) = 1 - x^3 has fewer terms than the divisor
  auto cube = one(n) - z(n, {3, 0});
  auto q = divide_exact(cube, one(n) + z(n, {1, 0}) + z(n, {2, 0}));
  REQUIRE(q.has_value());
  CHECK(*q == one(n) - z(n, {1, 0}));
  CHECK(laurent_gcd(z(n, {2, -1}, 6), z(n, {0, 3}, 4)) == LaurentExpr::constant(n, 2));
}

TEST_CASE("rational canonical form is sound") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 1 + rng() % 3;
    auto a = random_laurent(rng, n, 3, -1, 2, 4);
    auto b = random_laurent(rng, n, 2, -1, 2, 4) + one(n);
    auto c = random_laurent(rng, n, 2, 0, 2, 3) + z(n, std::vector<long>(n, 1));
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    RationalExpr x(a, b);
    RationalExpr y(a * c, b * c);
    RationalExpr w(-(a * c), -(b * c) * z(n, std::vector<long>(n, 2)));
    CHECK(x == y);
    CHECK(equal_by_cross_multiplication(x, y));
    CHECK(x == w * RationalExpr(z(n, std::vector<long>(n, 2))));
    CHECK(x.den().is_polynomial());
    CHECK(x.den().trailing().coef > 0);
    CHECK(parse_rational_expr(x.render(), n) == x);
    RationalExpr s(c, b);
    CHECK((x + s) - s == x);
    CHECK((x * s) / s == x);
    CHECK(equal_by_cross_multiplication(x + s, RationalExpr(a + c, b)));
  }
}

TEST_CASE("rendering and parsing") {
  const std::size_t n = 2;
  auto e = one(n) - z(n, {1, -1}, 2);
  CHECK(e.render() == "1*z[(0,0)] - 2*z[(1,-1)]");
  CHECK(parse_laurent(e.render(), n) == e);
  CHECK(parse_laurent("0", n).is_zero());
  CHECK(parse_laurent("-3*z[(2,0)] + 5", n) == z(n, {2, 0}, -3) + LaurentExpr::constant(n, 5));
  CHECK_THROWS_AS(parse_laurent("1*z[(1)]", n), Error);
  CHECK_THROWS_AS(parse_rational_expr("(1)/(0)", n), Error);
  RationalExpr r(z(n, {0, 1}), one(n) + z(n, {1, 0}));
  CHECK(r.render() == "(1*z[(0,1)])/(1*z[(0,0)] + 1*z[(1,0)])");
}

TEST_CASE("X-mutation map examples") {
  Seed a2(SkewLattice::standard_plane(), {{1, 0}, {0, 1}}, {1, 0});
  auto f = x_mutation_map(a2, 0, false);
  CHECK(f.image(0) == RationalExpr(z(2, {1, 0})));
  CHECK(f.image(1) == RationalExpr(z(2, {0, 1}) * (one(2) + z(2, {1, 0}))));
  auto fs = x_mutation_map(a2, 0, true);
  CHECK(fs.image(1) == RationalExpr(z(2, {0, 1}) * (one(2) - z(2, {1, 0}))));

  // x_b (1 + x_a)^{pairing(e_1, e_2)} at (2, 3)
  std::vector<Rational> p{2, 3};
  Rational oracle = p[1] * pow(1 + p[0], Integer(pairing(a2, 0, 1)));
  auto v = evaluate_map(f, p);
  CHECK(v[0] == 2);
  CHECK(v[1] == oracle);
  CHECK(v[1] == 9);
  CHECK(evaluate_map(RationalMap::identity(2), p) == p);
  // the signed factor sits in the numerator for mu_1, so (1, 5) lands on a zero coordinate
  CHECK(evaluate_map(fs, {1, 5}) == std::vector<Rational>{1, 0});
  // and in the denominator for mu_2, where z^{e_2} = 1 is a pole
  try {
    evaluate_map(x_mutation_map(a2.with_signing({1, 1}), 1, true), {5, 1});
    FAIL("expected a pole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtPoint);
  }

  Seed rank1(SkewLattice(IntMatrix{{0}}), {{1}});
  CHECK(x_mutation_map(rank1, 0, false).is_identity());
  CHECK_THROWS_AS(a_mutation_map(rank1, 0, false), Error);
}

TEST_CASE("A-mutation map example") {
  Seed a2(SkewLattice::standard_plane(), {{1, 0}, {0, 1}});
  auto f = a_mutation_map(a2, 0, false);
  CHECK(f.image(0) == RationalExpr(z(2, {1, 0}), one(2) + z(2, {0, 1})));
  CHECK(f.image(1) == RationalExpr(z(2, {0, 1})));
}

TEST_CASE("composition laws and the double-mutation twist") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 1 + rng() % 3;
    std::size_t cnt = 1 + rng() % 4;
    Seed s = testing::random_seed(rng, m, cnt, 2, 2);
    std::size_t k = rng() % s.size();
    bool sign = rng() % 2;
    auto f = x_mutation_map(s, k, sign);
    CHECK(compose_maps(RationalMap::identity(m), f) == f);
    CHECK(compose_maps(f, RationalMap::identity(m)) == f);

    // multiplicativity on random monomials
    LatticeVector n1(m), n2(m), sum(m);
    for (std::size_t i = 0; i < m; ++i) {
      n1[i] = static_cast<long>(rng() % 5) - 2;
      n2[i] = static_cast<long>(rng() % 5) - 2;
      sum[i] = n1[i] + n2[i];
    }
    CHECK(pullback_monomial(f, sum) == pullback_monomial(f, n1) * pullback_monomial(f, n2));

    // X: z^n -> eps^d z^{n + d e_k}, d = {e_k, n}
    auto twice = compose_maps(x_mutation_map(mutate_seed(s, k), k, sign), f);
    const int eps = sign && s.signing()[k] == 1 ? -1 : 1;
    const LatticeVector w = s.lattice().functional(s.vector(k));
    for (std::size_t j = 0; j < m; ++j) {
      LatticeVector e(m, Integer(0));
      e[j] = 1;
      Integer d = w[j];
      for (std::size_t t = 0; t < m; ++t) e[t] += d * s.vector(k)[t];
      Integer c = (eps < 0 && d % 2 != 0) ? -1 : 1;
      CHECK(twice.image(j) == RationalExpr::constant(m, c) * RationalExpr::monomial(m, e));
    }

    // A: z^m -> eps^c z^{m - c w}, c = <e_k, m>
    if (!is_zero(w)) {
      auto a_twice = compose_maps(a_mutation_map(mutate_seed(s, k), k, sign), a_mutation_map(s, k, sign));
      for (std::size_t j = 0; j < m; ++j) {
        LatticeVector e(m, Integer(0));
        e[j] = 1;
        Integer c = s.vector(k)[j];
        for (std::size_t t = 0; t < m; ++t) e[t] -= c * w[t];
        Integer sgn = (eps < 0 && c % 2 != 0) ? -1 : 1;
        CHECK(a_twice.image(j) == RationalExpr::constant(m, sgn) * RationalExpr::monomial(m, e));
      }
    }
  }
}

TEST_CASE("modular powers accept exponents past 64 bits") {
  std::mt19937_64 rng(41);
  const Integer order(std::to_string(modp::kPrime - 1));
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t a = 1 + rng() % (modp::kPrime - 1);
    std::int64_t e = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
    CHECK(modp::power_integer(a, Integer(e)) == modp::power_signed(a, e));
    // Fermat: shifting by a multiple of p-1 changes nothing
    Integer big = Integer(e) + order * Integer("123456789012345678901");
    CHECK(modp::power_integer(a, big) == modp::power_signed(a, e));
  }
  CHECK(modp::power_integer(0, Integer("100000000000000000000000")) == 0);
  CHECK(modp::power_integer(0, 0) == 1);
  CHECK_THROWS_AS(modp::power_integer(0, Integer(-3)), Error);
}
