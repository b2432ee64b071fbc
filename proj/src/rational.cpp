#include "tropnewton/rational.hpp"

#include <algorithm>
#include <cctype>

#include "tropnewton/error.hpp"

namespace tropnewton {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::VariableOutOfScope: return "VariableOutOfScope";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NonConstantValuation: return "NonConstantValuation";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::NoResidueRoot: return "NoResidueRoot";
    case ErrorKind::MultipleResidueRoot: return "MultipleResidueRoot";
    case ErrorKind::IrrationalResidueRoot: return "IrrationalResidueRoot";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::NonTorusVariety: return "NonTorusVariety";
    case ErrorKind::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorKind::ProjectionCoversSpace: return "ProjectionCoversSpace";
    case ErrorKind::NotCombinatoriallyCurve: return "NotCombinatoriallyCurve";
    case ErrorKind::DegenerateSlice: return "DegenerateSlice";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rat parse_rat(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw Error(ErrorKind::SyntaxError, "empty rational literal");
  std::string body = s;
  if (body[0] == '+' || body[0] == '-') body = body.substr(1);
  auto slash = body.find('/');
  auto digits_only = [](std::string_view d) {
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (slash == std::string::npos ? !digits_only(body)
                                 : !(digits_only(std::string_view(body).substr(0, slash)) &&
                                     digits_only(std::string_view(body).substr(slash + 1)))) {
    throw Error(ErrorKind::SyntaxError, "malformed rational '" + s + "'");
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorKind::SyntaxError, "malformed rational '" + s + "'");
  if (r.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Int& x) { return x.get_str(); }

WeightVec parse_weight_list(std::string_view text) {
  WeightVec out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rat(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::string format_weight_list(std::span<const Rat> w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += to_string(w[i]);
  }
  return out;
}

Rat dot(std::span<const Rat> a, std::span<const int> exponents) {
  if (a.size() != exponents.size()) {
    throw Error(ErrorKind::LengthMismatch, "weight has length " + std::to_string(a.size()) + ", expected " +
                                               std::to_string(exponents.size()));
  }
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (exponents[i] != 0) s += a[i] * exponents[i];
  }
  return s;
}

std::vector<Int> primitive_integer_vector(std::span<const Rat> v) {
  Int l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Int> out;
  out.reserve(v.size());
  Int g = 0;
  for (const auto& x : v) {
    Int e = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    out.push_back(e);
  }
  if (g != 0) {
    for (auto& e : out) e /= g;
  }
  return out;
}

const Rat& ExtRat::value() const {
  if (!value_) throw Error(ErrorKind::InvalidArgument, "value() of an infinite valuation");
  return *value_;
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtRat::infinity();
  return ExtRat(*a.value_ + *b.value_);
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtRat::to_string() const { return value_ ? tropnewton::to_string(*value_) : "inf"; }

}  // namespace tropnewton
