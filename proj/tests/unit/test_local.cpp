#include <doctest.h>

#include <random>

#include "mutwb/error.hpp"
#include "mutwb/laurent/map.hpp"
#include "mutwb/local/local_system.hpp"
#include "random_seeds.hpp"

using namespace mutwb;
using namespace mutwb::testing;

namespace {

GeodesicConfig config(std::vector<std::vector<long>> cls) {
  std::vector<LatticeVector> out;
  for (const auto& c : cls) out.push_back({Integer(c[0]), Integer(c[1])});
  return GeodesicConfig(out);
}

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  while (true) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    if (r != 0) return r;
  }
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
  }
  return m;
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    auto m = random_matrix(rng, n, 3);
    if (m.det() != 0) return m;
  }
}

RationalMatrix diagonal(const std::vector<Rational>& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// naive repeated multiplication, independent of the library's power routine
RationalMatrix power_oracle(const RationalMatrix& m, long e) {
  RationalMatrix base = e >= 0 ? m : *m.try_inverse();
  RationalMatrix out = RationalMatrix::identity(m.rows());
  for (long i = 0; i < std::labs(e); ++i) out = out * base;
  return out;
}

long small(const Integer& v) { return v.get_si(); }

}  // namespace

TEST_CASE("character values and validation") {
  Character ch(Rational(2), Rational(3));
  CHECK(ch.value({Integer(2), Integer(-1)}) == Rational(4, 3));
  CHECK_THROWS_AS(Character(Rational(0), Rational(1)), Error);
}

TEST_CASE("crossing sign from the fundamental square") {
  // C_k is the vertical line x = 0 oriented upward, co-orientation (-1, 0).
  // The path a = (1,0) from (1/2,1/2) to (3/2,1/2) meets it once at x = 1 with tangent (1,0),
  // which pairs negatively with the co-orientation: that crossing carries exponent -1.
  const LatticeVector vk{Integer(0), Integer(1)}, a{Integer(1), Integer(0)}, b{Integer(0), Integer(1)};
  int tangent_dot_coorientation = 1 * -1 + 0 * 0;
  CHECK(crossing_sign(vk, a) == tangent_dot_coorientation);
  CHECK(crossing_sign(vk, b) == 0);
  auto out = mutate_character(Character(Rational(2), Rational(3)), config({{0, 1}}), 0);
  CHECK(out == Character(Rational(-1), Rational(3)));
  // a path in class (p,q) meets the geodesic |det| times, all with the same sign
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    auto v = random_class(rng, 6);
    LatticeVector g{Integer(static_cast<long>(rng() % 13) - 6), Integer(static_cast<long>(rng() % 13) - 6)};
    // co-orientation of v is v rotated by +90 degrees
    Integer dot = g[0] * -v[1] + g[1] * v[0];
    CHECK(crossing_sign(v, g) == dot);
  }
}

TEST_CASE("bridge to the signed X-transformation") {
  std::mt19937_64 rng(2);
  int checked = 0, singular = 0;
  while (checked < 100) {
    std::vector<LatticeVector> cls;
    const std::size_t n = 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) cls.push_back(random_class(rng, 4));
    GeodesicConfig cfg(cls);
    std::size_t k = rng() % n;
    Character ch(random_nonzero(rng), random_nonzero(rng));
    if (rng() % 4 == 0) {
      // force x(v_k) = 1 with x_a = s^q, x_b = s^-p
      Rational s = random_nonzero(rng);
      const auto& v = cfg.cls(k);
      ch = Character(pow(s, v[1]), pow(s, -v[0]));
    }
    Seed seed = seed_of_config(cfg);
    REQUIRE(seed.signing()[k] == 1);
    RationalMap map = x_mutation_map(seed, k, true);
    const bool pole = ch.value(cfg.cls(k)) == 1;
    if (pole) {
      ++singular;
      try {
        mutate_character(ch, cfg, k);
        FAIL("expected NotRegular");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRegular);
      }
      // the X-map has a pole there or sends a coordinate to zero, off the torus either way
      try {
        auto ev = evaluate_map(map, {ch.a(), ch.b()});
        CHECK((ev[0] == 0 || ev[1] == 0));
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleAtPoint);
      }
      continue;
    }
    auto out = mutate_character(ch, cfg, k);
    auto ev = evaluate_map(map, {ch.a(), ch.b()});
    CHECK(out.a() == ev[0]);
    CHECK(out.b() == ev[1]);
    ++checked;
  }
  CHECK(singular > 10);
}

TEST_CASE("double character mutation is the twist") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    GeodesicConfig cfg({random_class(rng, 4), random_class(rng, 4)});
    std::size_t k = rng() % 2;
    Character ch(random_nonzero(rng), random_nonzero(rng));
    if (ch.value(cfg.cls(k)) == 1) continue;
    auto once = mutate_character(ch, cfg, k);
    auto twice = mutate_character(once, mutate_geodesics(cfg, k), k);
    const auto& v = cfg.cls(k);
    for (const LatticeVector& g : {LatticeVector{Integer(1), Integer(0)}, LatticeVector{Integer(0), Integer(1)}}) {
      Integer d = v[0] * g[1] - v[1] * g[0];
      LatticeVector shifted{g[0] + d * v[0], g[1] + d * v[1]};
      Rational expect = ch.value(shifted) * (d % 2 == 0 ? 1 : -1);
      CHECK(twice.value(g) == expect);
    }
  }
}

TEST_CASE("holonomy examples") {
  CommutingPair id(RationalMatrix::identity(2), RationalMatrix::identity(2));
  CHECK(holonomy(id, {Integer(3), Integer(-2)}) == RationalMatrix::identity(2));
  CommutingPair scalar(RationalMatrix({{Rational(2)}}), RationalMatrix({{Rational(5)}}));
  CHECK(holonomy(scalar, {Integer(2), Integer(-1)}) == RationalMatrix({{Rational(4, 5)}}));
  CommutingPair unip(RationalMatrix({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}), RationalMatrix::identity(2));
  CHECK(holonomy(unip, {Integer(3), Integer(0)}) == RationalMatrix({{Rational(1), Rational(3)}, {Rational(0), Rational(1)}}));
  CHECK_THROWS_AS(CommutingPair(RationalMatrix({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}),
                                RationalMatrix({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}})),
                  Error);
}

TEST_CASE("rank-n mutation") {
  // diagonal blocks mutate independently
  CommutingPair diag(diagonal({2, 5}), diagonal({3, 7}));
  auto out = mutate_rank_n(diag, config({{0, 1}}), 0);
  CHECK(out.a() == diagonal({Rational(2) / (1 - 3), Rational(5) / (1 - 7)}));
  CHECK(out.b() == diagonal({3, 7}));

  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    GeodesicConfig cfg({random_class(rng, 3), random_class(rng, 3)});
    std::size_t k = rng() % 2;
    const auto& v = cfg.cls(k);
    const std::size_t n = 1 + rng() % 3;

    // rank 1 reproduces the character
    Character ch(random_nonzero(rng), random_nonzero(rng));
    if (ch.value(v) != 1) {
      auto r1 = mutate_rank_n(CommutingPair(RationalMatrix({{ch.a()}}), RationalMatrix({{ch.b()}})), cfg, k);
      auto c1 = mutate_character(ch, cfg, k);
      CHECK(r1.a()(0, 0) == c1.a());
      CHECK(r1.b()(0, 0) == c1.b());
    }

    // conjugated diagonal pairs mutate eigenline by eigenline
    std::vector<Rational> da, db, ma, mb;
    bool regular = true;
    for (std::size_t i = 0; i < n; ++i) {
      Character e(random_nonzero(rng), random_nonzero(rng));
      if (e.value(v) == 1) regular = false;
      da.push_back(e.a());
      db.push_back(e.b());
      if (regular) {
        auto m = mutate_character(e, cfg, k);
        ma.push_back(m.a());
        mb.push_back(m.b());
      }
    }
    RationalMatrix g = random_invertible(rng, n);
    RationalMatrix gi = *g.try_inverse();
    CommutingPair sys(g * diagonal(da) * gi, g * diagonal(db) * gi);
    if (!regular) {
      try {
        mutate_rank_n(sys, cfg, k);
        FAIL("expected NotRegular");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRegular);
      }
      continue;
    }
    auto m = mutate_rank_n(sys, cfg, k);
    CHECK(m.a() == g * diagonal(ma) * gi);
    CHECK(m.b() == g * diagonal(mb) * gi);
  }
}

TEST_CASE("rank-n mutation of non-diagonalizable pairs") {
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 40) {
    const std::size_t n = 2 + rng() % 2;
    // polynomials in one matrix commute
    RationalMatrix base = random_matrix(rng, n, 2);
    RationalMatrix a = base * base + Rational(static_cast<long>(rng() % 3) + 1) * RationalMatrix::identity(n);
    RationalMatrix b = base + Rational(static_cast<long>(rng() % 3) + 2) * RationalMatrix::identity(n);
    if (a.det() == 0 || b.det() == 0) continue;
    CommutingPair sys(a, b);
    GeodesicConfig cfg({random_class(rng, 3)});
    const auto& v = cfg.cls(0);
    RationalMatrix hv = power_oracle(a, small(v[0])) * power_oracle(b, small(v[1]));
    RationalMatrix m = RationalMatrix::identity(n) - hv;
    if (m.det() == 0) {
      CHECK_THROWS_AS(mutate_rank_n(sys, cfg, 0), Error);
      continue;
    }
    auto out = mutate_rank_n(sys, cfg, 0);
    // Hol'(g) = Hol(g) (Id - Hol(v))^{det(v, g)} on the basis classes
    CHECK(out.a() == a * power_oracle(m, -small(v[1])));
    CHECK(out.b() == b * power_oracle(m, small(v[0])));
    CHECK(out.a() * out.b() == out.b() * out.a());

    // twice: Hol''(g) = (-1)^d Hol(g + d v)
    auto twice = mutate_rank_n(out, mutate_geodesics(cfg, 0), 0);
    long d_a = -small(v[1]), d_b = small(v[0]);
    auto expect = [&](long ga, long gb, long d) {
      RationalMatrix h = power_oracle(a, ga + d * small(v[0])) * power_oracle(b, gb + d * small(v[1]));
      return d % 2 == 0 ? h : Rational(-1) * h;
    };
    CHECK(twice.a() == expect(1, 0, d_a));
    CHECK(twice.b() == expect(0, 1, d_b));
    ++done;
  }
}
