#include "mutwb/q0/roots.hpp"

#include <algorithm>

#include "mutwb/error.hpp"

namespace mutwb {

namespace {

constexpr unsigned long kTrialLimit = 10'000'000;

// Prime factorization by trial division; large composite cofactors are refused.
std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> primes;
  n = abs(n);
  for (unsigned long p = 2; p <= kTrialLimit && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n > 1) {
    if (Integer(kTrialLimit) * kTrialLimit < n && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      fail(ErrorKind::Overflow, "coefficient too large for exact rational root search");
    }
    primes.push_back(n);
  }
  return primes;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  Integer m = abs(n);
  for (const auto& p : prime_factors(m)) {
    std::size_t base = divs.size();
    Integer pk = p;
    while (mpz_divisible_p(m.get_mpz_t(), pk.get_mpz_t())) {
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
      pk *= p;
    }
  }
  return divs;
}

}  // namespace

std::vector<std::pair<Rational, std::size_t>> base_field_roots(const std::vector<Rational>& poly) {
  std::vector<std::pair<Rational, std::size_t>> out;
  std::vector<Rational> rest = poly;
  while (rest.size() > 1 && rest.back() == 0) rest.pop_back();
  if (rest.size() <= 1) return out;
  std::size_t zero = strip_root(rest, Rational(0));
  if (zero) out.emplace_back(Rational(0), zero);
  if (rest.size() <= 1) return out;
  // integer coefficients with the same roots
  Integer l = 1;
  for (const auto& c : rest) l = lcm(l, c.get_den());
  std::vector<Integer> ip;
  for (const auto& c : rest) ip.push_back(Integer(c * l));
  std::vector<Integer> num = divisors(ip.front());
  std::vector<Integer> den = divisors(ip.back());
  std::vector<Rational> candidates;
  for (const auto& p : num) {
    for (const auto& q : den) {
      Rational r(p, q);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    if (rest.size() <= 1) break;
    std::size_t m = strip_root(rest, r);
    if (m) out.emplace_back(r, m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mutwb
