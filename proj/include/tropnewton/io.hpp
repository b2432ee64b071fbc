#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tropnewton/poly.hpp"

namespace tropnewton {

// Ideal file layout:
//
//   field puiseux            | field padic <p>
//   ring <name> <name> ...
//   gens
//   <polynomial>             one per line
//   weight <name>: a,b,...   optional, anywhere after the ring line; may
//                            cover only the first variables
//
// '#' starts a comment. Polynomials use + - * / ^ and parentheses; '/' only
// divides by variable-free expressions, and t (Puiseux only) accepts
// rational exponents such as t^(3/2) or t^-1.
struct IdealFile {
  RingPtr ring;
  std::vector<MPoly> gens;
  std::map<std::string, WeightVec> weights;

  const Field& field() const { return ring->field; }
};

IdealFile parse_ideal_file(std::string_view text);
std::string print_ideal_file(const IdealFile& file);
bool operator==(const IdealFile& a, const IdealFile& b);

/// line is only used for diagnostics.
MPoly parse_polynomial(std::string_view text, const RingPtr& ring, int line = 1);
Scalar parse_scalar(std::string_view text, const Field& field);

}  // namespace tropnewton
