#include "tropnewton/field.hpp"

#include <algorithm>

#include "tropnewton/error.hpp"
#include "tropnewton/upoly.hpp"

namespace tropnewton {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::padic(long p) {
  if (!is_prime(p) || p > (1L << 31)) {
    throw Error(ErrorKind::NonPrimeModulus, "p-adic modulus " + std::to_string(p) + " is not a word-size prime");
  }
  return Field(FieldKind::Padic, p);
}

long Field::padic_order(const Rat& x, long p) {
  if (is_zero(x)) throw Error(ErrorKind::ZeroInput, "p-adic order of zero");
  Int pz(p);
  Int rest;
  long num = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_num().get_mpz_t(), pz.get_mpz_t()));
  long den = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_den().get_mpz_t(), pz.get_mpz_t()));
  return num - den;
}

ExtRat Field::val(const Scalar& a) const {
  if (a.is_zero()) return ExtRat::infinity();
  if (!is_padic()) return a.t_order();
  return Rat(padic_order(a.rational_value(), prime_));
}

Rat Field::leading_residue(const Scalar& a) const {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "leading residue of zero");
  if (!is_padic()) return a.t_leading_coeff();
  Rat x = a.rational_value();
  long v = padic_order(x, prime_);
  Int pz(prime_);
  Int pv;
  mpz_pow_ui(pv.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(std::labs(v)));
  Rat unit = v >= 0 ? Rat(x / Rat(pv)) : Rat(x * Rat(pv));
  // unit = n/d with p dividing neither; residue n * d^{-1} mod p.
  Int n = unit.get_num() % pz;
  Int d = unit.get_den() % pz;
  Int dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
  Int r = (n * dinv) % pz;
  if (r < 0) r += pz;
  return Rat(r);
}

Scalar Field::uniformizer_power(const Rat& e, const Rat& coeff) const {
  if (!is_padic()) return Scalar::t_power(e, coeff);
  if (e.get_den() != 1) {
    throw Error(ErrorKind::InvalidArgument, "p-adic uniformizer power needs an integral exponent, got " + to_string(e));
  }
  long k = e.get_num().get_si();
  Int pk;
  Int pz(prime_);
  mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(std::labs(k)));
  Rat v = k >= 0 ? Rat(pk) : Rat(Rat(1) / Rat(pk));
  return Scalar(coeff * v);
}

std::string Field::describe() const { return is_padic() ? "padic " + std::to_string(prime_) : "puiseux"; }

namespace {

std::vector<Int> divisors(Int n) {
  n = abs(n);
  static const Int kLimit("1000000000000");  // trial division up to 10^6
  if (n > kLimit) throw Error(ErrorKind::ResourceLimit, "coefficient too large for rational root search");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rat> rational_roots(const QPoly& f) {
  if (f.degree() < 1) return {};
  // Integer primitive form with nonzero constant term.
  Int l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> a;
  for (const auto& c : f.coeffs()) a.push_back(c.get_num() * (l / c.get_den()));
  size_t lo = 0;
  while (lo < a.size() && a[lo] == 0) ++lo;
  a.erase(a.begin(), a.begin() + static_cast<long>(lo));
  if (a.size() < 2) return {};
  QPoly g{std::vector<Rat>(a.begin(), a.end())};
  g = g.squarefree_part();
  // Re-derive integer coefficients from the squarefree part.
  l = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  a.clear();
  for (const auto& c : g.coeffs()) a.push_back(c.get_num() * (l / c.get_den()));

  std::vector<Rat> roots;
  for (const auto& pnum : divisors(a.front())) {
    for (const auto& qden : divisors(a.back())) {
      for (int sign : {1, -1}) {
        Rat cand(pnum * sign, qden);
        cand.canonicalize();
        if (is_zero(g.eval(cand)) && std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace tropnewton
