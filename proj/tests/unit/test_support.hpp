#pragma once

#include <random>
#include <string>

#include "tropnewton/field.hpp"
#include "tropnewton/poly.hpp"
#include "tropnewton/scalar.hpp"

namespace tropnewton::testing {

inline Scalar tp(const Rat& e, const Rat& c = 1) { return Scalar::t_power(e, c); }
inline Rat q(const char* s) { return parse_rat(s); }

// Random nonzero rational with small numerator and denominator.
inline Rat random_unit(std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> num(1, bound), den(1, 4), sign(0, 1);
  Rat r(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  r.canonicalize();
  return r;
}

inline Rat random_exponent(std::mt19937_64& rng, int lo = -5, int hi = 5, int max_den = 3) {
  std::uniform_int_distribution<int> den(1, max_den);
  int d = den(rng);
  std::uniform_int_distribution<int> num(lo * d, hi * d);
  Rat r(num(rng), d);
  r.canonicalize();
  return r;
}

// Sum of a few random t-power terms, optionally divided by 1 + c t^e.
inline Scalar random_puiseux(std::mt19937_64& rng, bool allow_fraction = true) {
  std::uniform_int_distribution<int> nterms(1, 3), coin(0, 3);
  Scalar s;
  do {
    s = Scalar();
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) s += tp(random_exponent(rng), random_unit(rng));
  } while (s.is_zero());
  if (allow_fraction && coin(rng) == 0) {
    std::uniform_int_distribution<int> e(1, 3);
    s /= Scalar(1) + tp(Rat(e(rng)), random_unit(rng));
  }
  return s;
}

inline Scalar random_padic(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<int> unit(1, 50), pw(-3, 3);
  Rat u;
  do {
    u = Rat(unit(rng), unit(rng));
    u.canonicalize();
  } while (Field::padic_order(u, p) != 0);
  int k = pw(rng);
  return Field::padic(p).uniformizer_power(Rat(k), u);
}

}  // namespace tropnewton::testing

#include <sstream>

#include "tropnewton/io.hpp"

namespace tropnewton::testing {

inline RingPtr ring(const std::string& names, Field field = Field::puiseux()) {
  std::istringstream in(names);
  std::vector<std::string> vars;
  std::string v;
  while (in >> v) vars.push_back(v);
  return make_ring(std::move(vars), field);
}

inline std::vector<MPoly> polys(const RingPtr& R, std::initializer_list<const char*> texts) {
  std::vector<MPoly> out;
  for (const char* s : texts) out.push_back(parse_polynomial(s, R));
  return out;
}

inline MPoly P(const RingPtr& R, const char* text) { return parse_polynomial(text, R); }

inline RingPtr grass25_ring() { return ring("x0 x1 x2 x3 x4 x5 x6 x7 x8 x9"); }

inline std::vector<MPoly> grass25(const RingPtr& R) {
  return polys(R, {"x2*x9 - x4*x8 + x5*x7", "x1*x9 - x3*x8 + x5*x6", "x0*x9 - x3*x7 + x4*x6",
                   "x0*x8 - x1*x7 + x2*x6", "x0*x5 - x1*x4 + x2*x3"});
}

}  // namespace tropnewton::testing
