#include "tropnewton/upoly.hpp"

#include <algorithm>

namespace tropnewton {

namespace {

using ZPoly = std::vector<Int>;

// Primitive integer multiple with positive leading coefficient.
ZPoly primitive_part(const QPoly& f) {
  Int l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  z.reserve(f.coeffs().size());
  Int g = 0;
  for (const auto& c : f.coeffs()) {
    z.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (z.back() < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

Int max_norm(const ZPoly& z) {
  Int m = 0;
  for (const auto& c : z) m = std::max<Int>(m, abs(c));
  return m;
}

Int eval_at(const ZPoly& z, const Int& x) {
  Int acc = 0;
  for (size_t i = z.size(); i-- > 0;) acc = acc * x + z[i];
  return acc;
}

// Balanced base-xi digits of h.
ZPoly interpolate(Int h, const Int& xi) {
  ZPoly out;
  const Int half = xi / 2;
  while (h != 0) {
    Int d;
    mpz_fdiv_r(d.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    if (d > half) d -= xi;
    out.push_back(d);
    h -= d;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
  }
  return out;
}

QPoly to_q(const ZPoly& z) {
  std::vector<Rat> c;
  c.reserve(z.size());
  for (const auto& x : z) c.emplace_back(x);
  return QPoly(std::move(c));
}

bool divides(const QPoly& g, const QPoly& f) { return QPoly::divmod(f, g).second.is_zero_poly(); }

}  // namespace

template <>
QPoly QPoly::gcd(QPoly a, QPoly b) {
  if (a.is_zero_poly()) return b.monic();
  if (b.is_zero_poly()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return QPoly(Rat(1));
  const ZPoly za = primitive_part(a);
  const ZPoly zb = primitive_part(b);
  const QPoly qa = to_q(za);
  const QPoly qb = to_q(zb);
  Int xi = 2 * std::min(max_norm(za), max_norm(zb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Int h;
    mpz_gcd(h.get_mpz_t(), eval_at(za, xi).get_mpz_t(), eval_at(zb, xi).get_mpz_t());
    const ZPoly zg = interpolate(h, xi);
    if (!zg.empty()) {
      QPoly g = to_q(primitive_part(to_q(zg)));
      if (divides(g, qa) && divides(g, qb)) return g.monic();
    }
    xi = xi * 73794 / 27011;
  }
  return euclid_gcd(std::move(a), std::move(b));
}

}  // namespace tropnewton
