#include "mutwb/laurent/map.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "mutwb/error.hpp"

namespace mutwb {

RationalMap::RationalMap(std::vector<RationalExpr> images) : images_(std::move(images)) {
  for (const auto& e : images_) {
    if (e.nvars() != images_.size()) fail(ErrorKind::InvalidArgument, "map images must live in the ambient rank");
    if (e.is_zero()) fail(ErrorKind::InvalidArgument, "map images must be nonzero");
  }
}

RationalMap RationalMap::identity(std::size_t rank) {
  std::vector<RationalExpr> images;
  for (std::size_t j = 0; j < rank; ++j) {
    LatticeVector b(rank, Integer(0));
    b[j] = 1;
    images.push_back(RationalExpr::monomial(rank, b));
  }
  return RationalMap(std::move(images));
}

bool RationalMap::is_identity() const { return *this == identity(rank()); }

std::size_t RationalMap::max_image_size() const {
  std::size_t m = 0;
  for (const auto& e : images_) m = std::max(m, e.size());
  return m;
}

RationalExpr pullback_monomial(const RationalMap& f, const LatticeVector& n) {
  if (n.size() != f.rank()) fail(ErrorKind::InvalidArgument, "exponent length must equal map rank");
  RationalExpr out = RationalExpr::constant(f.rank(), 1);
  for (std::size_t j = 0; j < f.rank(); ++j) {
    if (n[j] != 0) out = out * pow(f.image(j), n[j]);
  }
  return out;
}

namespace {

// Clears denominators of f^*(p): returns (S, L) with f^*(p) = S / L.
std::pair<LaurentExpr, LaurentExpr> pullback_laurent(const RationalMap& f, const LaurentExpr& p) {
  const std::size_t m = f.rank();
  const Exponent lo = p.min_exponents();
  const Exponent hi = p.max_exponents();
  std::vector<std::int64_t> below(m), above(m);
  LaurentExpr l = LaurentExpr::constant(m, 1);
  for (std::size_t j = 0; j < m; ++j) {
    below[j] = std::min<std::int64_t>(lo[j], 0);
    above[j] = std::max<std::int64_t>(hi[j], 0);
    if (above[j] > 0) l = l * pow(f.image(j).den(), static_cast<unsigned long>(above[j]));
    if (below[j] < 0) l = l * pow(f.image(j).num(), static_cast<unsigned long>(-below[j]));
  }
  // powers[j][d] caches num_j^d and den_j^d
  std::vector<std::map<std::int64_t, LaurentExpr>> num_pow(m), den_pow(m);
  auto cached = [](std::map<std::int64_t, LaurentExpr>& cache, const LaurentExpr& base, std::int64_t d) -> const LaurentExpr& {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, pow(base, static_cast<unsigned long>(d))).first;
    return it->second;
  };
  LaurentExpr s(m);
  for (const auto& t : p.terms()) {
    LaurentExpr term = LaurentExpr::constant(m, t.coef);
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t dn = t.exp[j] - below[j];
      const std::int64_t dd = above[j] - t.exp[j];
      if (dn > 0) term = term * cached(num_pow[j], f.image(j).num(), dn);
      if (dd > 0) term = term * cached(den_pow[j], f.image(j).den(), dd);
    }
    s += term;
  }
  return {std::move(s), std::move(l)};
}

// p = a z^u (1 + c z^w)^k with k >= 1, recognized from its grlex extremes and checked exactly.
struct BinomialPower {
  Integer a;
  LatticeVector u;
  Integer c;
  LatticeVector w;
  unsigned long k = 0;
};

std::optional<BinomialPower> as_binomial_power(const LaurentExpr& p) {
  if (p.size() < 2) return std::nullopt;
  const std::size_t m = p.nvars();
  const unsigned long k = p.size() - 1;
  const Term& lo = p.trailing();
  const Term& hi = p.leading();
  Exponent step{};
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t d = hi.exp[i] - lo.exp[i];
    if (d % static_cast<std::int64_t>(k) != 0) return std::nullopt;
    step[i] = d / static_cast<std::int64_t>(k);
  }
  Exponent second{};
  for (std::size_t i = 0; i < m; ++i) second[i] = lo.exp[i] + step[i];
  const Term* next = nullptr;
  for (const auto& t : p.terms()) {
    if (t.exp == second) next = &t;
  }
  if (!next) return std::nullopt;
  Integer ak = lo.coef * Integer(k);
  if (next->coef % ak != 0) return std::nullopt;
  BinomialPower b;
  b.a = lo.coef;
  b.c = next->coef / ak;
  b.k = k;
  b.u.assign(m, Integer(0));
  b.w.assign(m, Integer(0));
  for (std::size_t i = 0; i < m; ++i) {
    b.u[i] = Integer(static_cast<long>(lo.exp[i]));
    b.w[i] = Integer(static_cast<long>(step[i]));
  }
  LaurentExpr base = LaurentExpr::constant(m, 1) + LaurentExpr::monomial(m, b.w, b.c);
  if (LaurentExpr::monomial(m, b.u, b.a) * pow(base, k) != p) return std::nullopt;
  return b;
}

RationalExpr pullback_polynomial(const RationalMap& f, const LaurentExpr& p) {
  const std::size_t m = f.rank();
  if (p.size() == 1) {
    const Term& t = p.leading();
    LatticeVector n(m);
    for (std::size_t j = 0; j < m; ++j) n[j] = Integer(static_cast<long>(t.exp[j]));
    return RationalExpr::constant(m, t.coef) * pullback_monomial(f, n);
  }
  if (auto b = as_binomial_power(p)) {
    RationalExpr base = RationalExpr::constant(m, 1) + RationalExpr::constant(m, b->c) * pullback_monomial(f, b->w);
    if (base.is_zero()) fail(ErrorKind::DivisionByZeroExpr, "substitution produced a zero factor");
    return RationalExpr::constant(m, b->a) * pullback_monomial(f, b->u) * pow(base, Integer(b->k));
  }
  auto [s, l] = pullback_laurent(f, p);
  if (s.is_zero()) return RationalExpr::constant(m, 0);
  return RationalExpr(std::move(s), std::move(l));
}

}  // namespace

RationalExpr pullback(const RationalMap& f, const RationalExpr& e) {
  if (e.nvars() != f.rank()) fail(ErrorKind::InvalidArgument, "expression rank must equal map rank");
  if (e.num().size() == 1 && e.den().is_one()) {
    const Term& t = e.num().leading();
    LatticeVector n(f.rank());
    for (std::size_t j = 0; j < f.rank(); ++j) n[j] = Integer(static_cast<long>(t.exp[j]));
    return RationalExpr::constant(f.rank(), t.coef) * pullback_monomial(f, n);
  }
  RationalExpr num = pullback_polynomial(f, e.num());
  if (e.den().is_one()) return num;
  RationalExpr den = pullback_polynomial(f, e.den());
  if (den.is_zero()) fail(ErrorKind::DivisionByZeroExpr, "substitution produced a zero denominator");
  return num / den;
}

RationalMap compose_maps(const RationalMap& f, const RationalMap& g) {
  if (f.rank() != g.rank()) fail(ErrorKind::InvalidArgument, "compose_maps: rank mismatch");
  std::vector<RationalExpr> images;
  images.reserve(f.rank());
  for (const auto& e : f.images()) images.push_back(pullback(g, e));
  return RationalMap(std::move(images));
}

std::vector<Rational> evaluate_map(const RationalMap& f, const std::vector<Rational>& point) {
  if (point.size() != f.rank()) fail(ErrorKind::InvalidArgument, "point length must equal map rank");
  for (const auto& x : point) {
    if (x == 0) fail(ErrorKind::InvalidArgument, "torus points must have nonzero coordinates");
  }
  std::vector<Rational> out;
  out.reserve(f.rank());
  for (const auto& e : f.images()) out.push_back(e.evaluate(point));
  return out;
}

namespace {

Exponent to_exponent(const LatticeVector& v) {
  Exponent e{};
  for (std::size_t i = 0; i < v.size(); ++i) e[i] = to_int64(v[i]);
  return e;
}

int sign_of(const Seed& seed, std::size_t k, bool use_sign) {
  return use_sign && seed.signing()[k] == 1 ? -1 : 1;
}

// z^{b_j} (1 + eps z^w)^{d_j}
RationalMap twist_map(std::size_t m, const Exponent& w, int eps, const std::vector<Integer>& d) {
  std::vector<RationalExpr> images;
  images.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    Exponent b{};
    b[j] = 1;
    LaurentExpr zb = LaurentExpr::monomial(m, b);
    if (d[j] == 0) {
      images.emplace_back(std::move(zb));
      continue;
    }
    Integer a = abs(d[j]);
    if (!mpz_fits_ulong_p(a.get_mpz_t())) fail(ErrorKind::Overflow, "mutation exponent too large");
    LaurentExpr factor = LaurentExpr::binomial_power(m, w, eps, a.get_ui());
    if (d[j] > 0) {
      images.emplace_back(zb * factor, LaurentExpr::constant(m, 1));
    } else {
      images.emplace_back(std::move(zb), std::move(factor));
    }
  }
  return RationalMap(std::move(images));
}

}  // namespace

RationalMap x_mutation_map(const Seed& seed, std::size_t k, bool use_sign) {
  check_index(k, seed.size(), "x_mutation_map");
  const std::size_t m = seed.rank();
  const LatticeVector& ek = seed.vector(k);
  // {e_k, b_j} is the j-th entry of the functional e_k^T Omega
  return twist_map(m, to_exponent(ek), sign_of(seed, k, use_sign), seed.lattice().functional(ek));
}

RationalMap a_mutation_map(const Seed& seed, std::size_t k, bool use_sign) {
  check_index(k, seed.size(), "a_mutation_map");
  const std::size_t m = seed.rank();
  const LatticeVector& ek = seed.vector(k);
  const LatticeVector w = seed.lattice().functional(ek);
  if (is_zero(w)) {
    fail(ErrorKind::NonMonomialConstant, "{e_k,-} vanishes; the base 1 + z^0 is not a Laurent unit");
  }
  std::vector<Integer> d(m);
  for (std::size_t j = 0; j < m; ++j) d[j] = -ek[j];
  return twist_map(m, to_exponent(w), sign_of(seed, k, use_sign), d);
}

}  // namespace mutwb
