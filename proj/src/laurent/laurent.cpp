#include "mutwb/laurent/laurent.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "mutwb/error.hpp"

namespace mutwb {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "exponent overflow");
  return r;
}

Exponent add_exp(const Exponent& a, const Exponent& b, std::size_t n) {
  Exponent r{};
  for (std::size_t i = 0; i < n; ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

void check_vars(std::size_t n) {
  if (n > kMaxVars) fail(ErrorKind::InvalidArgument, "at most " + std::to_string(kMaxVars) + " variables supported");
}

void require_same(const LaurentExpr& a, const LaurentExpr& b) {
  if (a.nvars() != b.nvars()) fail(ErrorKind::InvalidArgument, "Laurent expressions over different variable counts");
}

}  // namespace

int grlex_compare(const Exponent& a, const Exponent& b, std::size_t n) {
  __int128 da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

LaurentExpr::LaurentExpr(std::size_t nvars) : nvars_(nvars) { check_vars(nvars); }

LaurentExpr::LaurentExpr(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  check_vars(nvars);
  normalize();
}

LaurentExpr LaurentExpr::constant(std::size_t nvars, const Integer& c) {
  LaurentExpr e(nvars);
  if (c != 0) e.terms_.push_back(Term{Exponent{}, c});
  return e;
}

LaurentExpr LaurentExpr::monomial(std::size_t nvars, const Exponent& exp, const Integer& c) {
  LaurentExpr e(nvars);
  if (c != 0) e.terms_.push_back(Term{exp, c});
  return e;
}

LaurentExpr LaurentExpr::monomial(std::size_t nvars, const LatticeVector& exp, const Integer& c) {
  check_vars(nvars);
  if (exp.size() != nvars) fail(ErrorKind::InvalidArgument, "exponent length must equal variable count");
  Exponent e{};
  for (std::size_t i = 0; i < nvars; ++i) e[i] = to_int64(exp[i]);
  return monomial(nvars, e, c);
}

LaurentExpr LaurentExpr::binomial_power(std::size_t nvars, const Exponent& w, int eps, unsigned long d) {
  LaurentExpr e(nvars);
  e.terms_.reserve(d + 1);
  Integer c = 1;
  for (unsigned long i = 0; i <= d; ++i) {
    Exponent x{};
    for (std::size_t t = 0; t < nvars; ++t) x[t] = checked_mul(w[t], static_cast<std::int64_t>(i));
    e.terms_.push_back(Term{x, (eps < 0 && i % 2 == 1) ? Integer(-c) : c});
    c = c * (d - i) / (i + 1);
  }
  e.normalize();
  return e;
}

void LaurentExpr::normalize() {
  const std::size_t n = nvars_;
  std::sort(terms_.begin(), terms_.end(),
            [n](const Term& a, const Term& b) { return grlex_compare(a.exp, b.exp, n) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    Integer c = terms_[i].coef;
    while (j < terms_.size() && terms_[j].exp == terms_[i].exp) c += terms_[j++].coef;
    if (c != 0) {
      terms_[out].exp = terms_[i].exp;
      terms_[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

bool LaurentExpr::is_one() const {
  return terms_.size() == 1 && terms_[0].coef == 1 && terms_[0].exp == Exponent{};
}

bool LaurentExpr::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{}); }

bool LaurentExpr::is_polynomial() const {
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exp[i] < 0) return false;
    }
  }
  return true;
}

Exponent LaurentExpr::min_exponents() const {
  Exponent m{};
  if (terms_.empty()) return m;
  m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], t.exp[i]);
  }
  return m;
}

Exponent LaurentExpr::max_exponents() const {
  Exponent m{};
  if (terms_.empty()) return m;
  m = terms_[0].exp;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], t.exp[i]);
  }
  return m;
}

LaurentExpr LaurentExpr::shifted(const Exponent& by) const {
  LaurentExpr e = *this;
  for (auto& t : e.terms_) t.exp = add_exp(t.exp, by, nvars_);
  return e;
}

LaurentExpr LaurentExpr::scaled(const Integer& c) const {
  if (c == 0) return LaurentExpr(nvars_);
  LaurentExpr e = *this;
  for (auto& t : e.terms_) t.coef *= c;
  return e;
}

Integer LaurentExpr::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    g = gcd(g, t.coef);
    if (g == 1) break;
  }
  return g;
}

LaurentExpr LaurentExpr::divided_by_integer(const Integer& c) const {
  LaurentExpr e = *this;
  for (auto& t : e.terms_) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
  return e;
}

LaurentExpr LaurentExpr::operator-() const {
  LaurentExpr e = *this;
  for (auto& t : e.terms_) t.coef = -t.coef;
  return e;
}

LaurentExpr& LaurentExpr::operator+=(const LaurentExpr& o) {
  require_same(*this, o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : grlex_compare(terms_[i].exp, o.terms_[j].exp, nvars_);
    if (c > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      merged.push_back(o.terms_[j++]);
    } else {
      Integer s = terms_[i].coef + o.terms_[j].coef;
      if (s != 0) merged.push_back(Term{terms_[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentExpr& LaurentExpr::operator-=(const LaurentExpr& o) { return *this += -o; }

LaurentExpr& LaurentExpr::operator*=(const LaurentExpr& o) {
  *this = *this * o;
  return *this;
}

namespace {

thread_local std::size_t term_limit = std::numeric_limits<std::size_t>::max();
thread_local std::size_t work_left = std::numeric_limits<std::size_t>::max();

void check_term_budget(std::size_t size) {
  if (size > term_limit)
    fail(ErrorKind::BudgetExceeded, "intermediate product has " + std::to_string(size) + " terms, limit is " +
                                        std::to_string(term_limit));
}

}  // namespace

LaurentExpr operator*(const LaurentExpr& a, const LaurentExpr& b) {
  require_same(a, b);
  const std::size_t n = a.nvars_;
  LaurentExpr out(n);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.size() == 1 || b.size() == 1) {
    // shifting by a fixed monomial preserves the term order
    const LaurentExpr& single = a.size() == 1 ? a : b;
    const LaurentExpr& other = a.size() == 1 ? b : a;
    out.terms_.reserve(other.size());
    for (const auto& t : other.terms_) {
      out.terms_.push_back(Term{add_exp(t.exp, single.terms_[0].exp, n), t.coef * single.terms_[0].coef});
    }
    return out;
  }
  const std::size_t work = a.size() * b.size();
  if (work > work_left) fail(ErrorKind::BudgetExceeded, "product work budget exhausted");
  if (work_left != std::numeric_limits<std::size_t>::max()) work_left -= work;
  // rows are merged in chunks so cancellation keeps memory near the size of the result
  const std::size_t chunk = std::max<std::size_t>(4 * b.size(), 1 << 16);
  std::size_t merged = 0;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.terms_.push_back(Term{add_exp(s.exp, t.exp, n), s.coef * t.coef});
    if (out.terms_.size() - merged > chunk) {
      out.normalize();
      merged = out.terms_.size();
      check_term_budget(merged);
    }
  }
  out.normalize();
  check_term_budget(out.size());
  return out;
}

TermBudget::TermBudget(std::size_t max_terms, std::size_t max_work)
    : saved_terms_(term_limit), saved_work_(work_left) {
  term_limit = std::min(term_limit, max_terms);
  work_left = std::min(work_left, max_work);
  start_work_ = work_left;
}

TermBudget::~TermBudget() {
  constexpr auto unlimited = std::numeric_limits<std::size_t>::max();
  // the enclosing budget is charged for the work done inside
  const std::size_t spent = start_work_ == unlimited ? 0 : start_work_ - work_left;
  term_limit = saved_terms_;
  work_left = saved_work_ == unlimited ? unlimited : saved_work_ - std::min(spent, saved_work_);
}

bool LaurentExpr::operator==(const LaurentExpr& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
  }
  return true;
}

Rational LaurentExpr::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) fail(ErrorKind::InvalidArgument, "point length must equal variable count");
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exp[i] != 0) v *= pow(point[i], Integer(static_cast<long>(t.exp[i])));
    }
    total += v;
  }
  return total;
}

std::uint64_t LaurentExpr::evaluate_mod(const std::vector<std::uint64_t>& point) const {
  if (point.size() != nvars_) fail(ErrorKind::InvalidArgument, "point length must equal variable count");
  std::uint64_t total = 0;
  for (const auto& t : terms_) {
    std::uint64_t v = modp::from_integer(t.coef);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exp[i] != 0) v = modp::mul(v, modp::power_signed(point[i], t.exp[i]));
    }
    total = modp::add(total, v);
  }
  return total;
}

std::string LaurentExpr::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Integer& c = it->coef;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << Integer(abs(c)).get_str() << "*z[(";
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i) os << ',';
      os << it->exp[i];
    }
    os << ")]";
  }
  return os.str();
}

std::size_t LaurentExpr::hash() const {
  std::size_t h = std::hash<std::size_t>{}(nvars_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) mix(std::hash<std::int64_t>{}(t.exp[i]));
    mix(std::hash<std::string>{}(t.coef.get_str(16)));
  }
  return h;
}

LaurentExpr pow(const LaurentExpr& base, unsigned long n) {
  LaurentExpr result = LaurentExpr::constant(base.nvars(), 1);
  if (n == 0) return result;
  if (base.size() == 1) {
    const Term& t = base.leading();
    Exponent e{};
    for (std::size_t i = 0; i < base.nvars(); ++i) e[i] = checked_mul(t.exp[i], static_cast<std::int64_t>(n));
    Integer c;
    mpz_pow_ui(c.get_mpz_t(), t.coef.get_mpz_t(), n);
    return LaurentExpr::monomial(base.nvars(), e, c);
  }
  LaurentExpr b = base;
  while (n) {
    if (n & 1) result = result * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return result;
}

namespace {

bool exp_divides(const Exponent& a, const Exponent& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent sub_exp(const Exponent& a, const Exponent& b, std::size_t n) {
  Exponent r{};
  for (std::size_t i = 0; i < n; ++i) r[i] = checked_add(a[i], -b[i]);
  return r;
}

Exponent negated(const Exponent& a, std::size_t n) {
  Exponent r{};
  for (std::size_t i = 0; i < n; ++i) r[i] = -a[i];
  return r;
}

// Division of polynomials where b has no monomial factor; a = b * q forces q to be a polynomial.
std::optional<LaurentExpr> divide_polynomial(const LaurentExpr& a, const LaurentExpr& b) {
  const std::size_t n = a.nvars();
  LaurentExpr q(n);
  LaurentExpr r = a;
  const Term& lb = b.leading();
  std::vector<Term> quotient_terms;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!exp_divides(lb.exp, lr.exp, n)) return std::nullopt;
    if (!mpz_divisible_p(lr.coef.get_mpz_t(), lb.coef.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), lr.coef.get_mpz_t(), lb.coef.get_mpz_t());
    Exponent e = sub_exp(lr.exp, lb.exp, n);
    quotient_terms.push_back(Term{e, c});
    r -= b * LaurentExpr::monomial(n, e, c);
  }
  return LaurentExpr(n, std::move(quotient_terms));
}

}  // namespace

std::optional<LaurentExpr> divide_exact(const LaurentExpr& a, const LaurentExpr& b) {
  require_same(a, b);
  if (b.is_zero()) fail(ErrorKind::DivisionByZeroExpr, "division by the zero expression");
  const std::size_t n = a.nvars();
  if (a.is_zero()) return LaurentExpr(n);
  if (b.size() == 1) {
    const Term& t = b.leading();
    for (const auto& s : a.terms()) {
      if (!mpz_divisible_p(s.coef.get_mpz_t(), t.coef.get_mpz_t())) return std::nullopt;
    }
    std::vector<Term> terms;
    terms.reserve(a.size());
    for (const auto& s : a.terms()) {
      Integer c;
      mpz_divexact(c.get_mpz_t(), s.coef.get_mpz_t(), t.coef.get_mpz_t());
      terms.push_back(Term{sub_exp(s.exp, t.exp, n), c});
    }
    return LaurentExpr(n, std::move(terms));
  }
  const Exponent ma = a.min_exponents();
  const Exponent mb = b.min_exponents();
  auto q = divide_polynomial(a.shifted(negated(ma, n)), b.shifted(negated(mb, n)));
  if (!q) return std::nullopt;
  return q->shifted(sub_exp(ma, mb, n));
}

namespace {

using Univariate = std::vector<LaurentExpr>;  // coefficient of v^d at index d

LaurentExpr positive_leading(LaurentExpr p) {
  if (!p.is_zero() && p.leading().coef < 0) p = -p;
  return p;
}

Univariate to_univariate(const LaurentExpr& p, std::size_t v) {
  const std::size_t n = p.nvars();
  const auto deg = static_cast<std::size_t>(p.max_exponents()[v]);
  std::vector<std::vector<Term>> buckets(deg + 1);
  for (const auto& t : p.terms()) {
    Term s = t;
    s.exp[v] = 0;
    buckets[static_cast<std::size_t>(t.exp[v])].push_back(std::move(s));
  }
  Univariate out;
  out.reserve(deg + 1);
  for (auto& b : buckets) out.emplace_back(n, std::move(b));
  return out;
}

LaurentExpr from_univariate(const Univariate& u, std::size_t v, std::size_t n) {
  std::vector<Term> terms;
  for (std::size_t d = 0; d < u.size(); ++d) {
    for (const auto& t : u[d].terms()) {
      Term s = t;
      s.exp[v] = static_cast<std::int64_t>(d);
      terms.push_back(std::move(s));
    }
  }
  return LaurentExpr(n, std::move(terms));
}

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

LaurentExpr gcd_polynomial(const LaurentExpr& a, const LaurentExpr& b);

LaurentExpr univariate_content(const Univariate& u) {
  LaurentExpr g(u.empty() ? 0 : u[0].nvars());
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? positive_leading(c) : gcd_polynomial(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Univariate divide_coefficients(const Univariate& u, const LaurentExpr& c) {
  Univariate out;
  out.reserve(u.size());
  for (const auto& x : u) {
    auto q = divide_exact(x, c);
    if (!q) fail(ErrorKind::InvalidArgument, "internal: content does not divide coefficient");
    out.push_back(std::move(*q));
  }
  return out;
}

Univariate primitive_part(const Univariate& u) {
  LaurentExpr c = univariate_content(u);
  if (c.is_one()) return u;
  return divide_coefficients(u, c);
}

// Sparse pseudo-remainder: lc(b)^k * a mod b for some k.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const std::size_t db = b.size() - 1;
  const LaurentExpr& lb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const LaurentExpr la = a.back();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= b[i] * la;
    trim(a);
  }
  return a;
}

Univariate prs_gcd(Univariate a, Univariate b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    if (b.empty()) return a;
    if (b.size() == 1) return Univariate{LaurentExpr::constant(a[0].nvars(), 1)};
    Univariate r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    a = std::move(b);
    b = primitive_part(r);
  }
}

// Image of p in F_p[x_v] after substituting point values for the other variables; exponents >= 0.
std::vector<std::uint64_t> specialize(const LaurentExpr& p, std::size_t v, const std::vector<std::uint64_t>& point) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(p.max_exponents()[v]) + 1, 0);
  for (const auto& t : p.terms()) {
    std::uint64_t c = modp::from_integer(t.coef);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (i != v && t.exp[i] != 0) c = modp::mul(c, modp::power(point[i], static_cast<std::uint64_t>(t.exp[i])));
    }
    auto& slot = out[static_cast<std::size_t>(t.exp[v])];
    slot = modp::add(slot, c);
  }
  return out;
}

std::size_t univariate_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  auto trim = [](std::vector<std::uint64_t>& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    if (a.size() >= b.size()) {
      const std::uint64_t f = modp::mul(a.back(), modp::inverse(b.back()));
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i + shift] = modp::add(a[i + shift], modp::kPrime - modp::mul(f, b[i]));
      }
      trim(a);
    } else {
      std::swap(a, b);
    }
  }
  return a.size() - 1;
}

// True only when a and b provably share no nonconstant factor. For each shared variable the
// leading coefficients are checked not to vanish at the point, so the specialized gcd bounds
// the degree of the true gcd from above.
bool coprime_by_specialization(const LaurentExpr& a, const LaurentExpr& b) {
  const std::size_t n = a.nvars();
  const Exponent xa = a.max_exponents();
  const Exponent xb = b.max_exponents();
  std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ (a.size() * 131 + b.size());
  std::vector<std::uint64_t> point(n);
  for (auto& x : point) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    x = 2 + (z ^ (z >> 31)) % (modp::kPrime - 3);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (xa[v] == 0 || xb[v] == 0) continue;
    auto sa = specialize(a, v, point);
    auto sb = specialize(b, v, point);
    if (sa.back() == 0 || sb.back() == 0) return false;
    if (univariate_gcd_degree(std::move(sa), std::move(sb)) != 0) return false;
  }
  return true;
}

LaurentExpr gcd_without_monomials(const LaurentExpr& a, const LaurentExpr& b) {
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return LaurentExpr::constant(n, gcd(a.content(), b.content()));
  if (coprime_by_specialization(a, b)) return LaurentExpr::constant(n, gcd(a.content(), b.content()));
  if (a.size() <= b.size()) {
    if (auto q = divide_exact(b, a)) return positive_leading(a);
  } else {
    if (auto q = divide_exact(a, b)) return positive_leading(b);
  }
  const Exponent xa = a.max_exponents();
  const Exponent xb = b.max_exponents();
  std::size_t v = n;
  std::int64_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (xa[i] > 0 && xb[i] > 0) {
      std::int64_t cost = std::max(xa[i], xb[i]);
      if (v == n || cost < best) {
        v = i;
        best = cost;
      }
    }
  }
  if (v == n) return LaurentExpr::constant(n, gcd(a.content(), b.content()));
  Univariate ua = to_univariate(a, v);
  Univariate ub = to_univariate(b, v);
  LaurentExpr ca = univariate_content(ua);
  LaurentExpr cb = univariate_content(ub);
  LaurentExpr gc = gcd_polynomial(ca, cb);
  Univariate pa = ca.is_one() ? ua : divide_coefficients(ua, ca);
  Univariate pb = cb.is_one() ? ub : divide_coefficients(ub, cb);
  Univariate g = prs_gcd(std::move(pa), std::move(pb));
  g = primitive_part(g);
  return positive_leading(gc * from_univariate(g, v, n));
}

LaurentExpr gcd_polynomial(const LaurentExpr& a, const LaurentExpr& b) {
  if (a.is_zero()) return positive_leading(b);
  if (b.is_zero()) return positive_leading(a);
  const std::size_t n = a.nvars();
  const Exponent ma = a.min_exponents();
  const Exponent mb = b.min_exponents();
  Exponent mg{};
  for (std::size_t i = 0; i < n; ++i) mg[i] = std::min(ma[i], mb[i]);
  LaurentExpr g = gcd_without_monomials(a.shifted(negated(ma, n)), b.shifted(negated(mb, n)));
  return g.shifted(mg);
}

}  // namespace

LaurentExpr laurent_gcd(const LaurentExpr& a, const LaurentExpr& b) {
  require_same(a, b);
  const std::size_t n = a.nvars();
  if (a.is_zero() && b.is_zero()) return LaurentExpr(n);
  if (a.is_zero()) return positive_leading(b.shifted(negated(b.min_exponents(), n)));
  if (b.is_zero()) return positive_leading(a.shifted(negated(a.min_exponents(), n)));
  return gcd_without_monomials(a.shifted(negated(a.min_exponents(), n)), b.shifted(negated(b.min_exponents(), n)));
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view s, std::size_t n) : s_(s), n_(n) {}

  LaurentExpr run() {
    std::vector<Term> terms;
    skip();
    if (s_.substr(pos_) == "0") return LaurentExpr(n_);
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    terms.push_back(term(negative));
    skip();
    while (pos_ < s_.size()) {
      char c = s_[pos_++];
      if (c != '+' && c != '-') error("expected + or -");
      skip();
      terms.push_back(term(c == '-'));
      skip();
    }
    return LaurentExpr(n_, std::move(terms));
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string digits(bool allow_sign) {
    skip();
    std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !(s_[start] >= '0' && s_[start] <= '9'))) error("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Term term(bool negative) {
    Term t;
    t.coef = parse_integer(digits(false));
    if (negative) t.coef = -t.coef;
    skip();
    if (peek() != '*') {
      return t;
    }
    ++pos_;
    expect('z');
    expect('[');
    expect('(');
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) expect(',');
      t.exp[i] = to_int64(parse_integer(digits(true)));
    }
    expect(')');
    expect(']');
    return t;
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentExpr parse_laurent(std::string_view text, std::size_t nvars) {
  check_vars(nvars);
  return TermParser(text, nvars).run();
}

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t power(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a) {
  if (a == 0) fail(ErrorKind::DivisionByZeroExpr, "inverse of zero modulo p");
  return power(a, kPrime - 2);
}

std::uint64_t from_integer(const Integer& v) {
  static const Integer p(std::to_string(kPrime));
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return static_cast<std::uint64_t>(r.get_ui());
}

std::uint64_t power_signed(std::uint64_t a, std::int64_t e) {
  if (e >= 0) return power(a, static_cast<std::uint64_t>(e));
  return power(inverse(a), static_cast<std::uint64_t>(-(e + 1)) + 1);
}

std::uint64_t power_integer(std::uint64_t a, const Integer& e) {
  if (a == 0) return power_signed(a, e > 0 ? 1 : (e == 0 ? 0 : -1));
  static const Integer order(std::to_string(kPrime - 1));
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), e.get_mpz_t(), order.get_mpz_t());
  return power(a, static_cast<std::uint64_t>(r.get_ui()));
}

}  // namespace modp

}  // namespace mutwb
