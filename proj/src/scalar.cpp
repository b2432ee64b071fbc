#include "tropnewton/scalar.hpp"

#include <numeric>

#include "tropnewton/error.hpp"

namespace tropnewton {

namespace {

// Splits x^k out of p (k = number of vanishing low-order coefficients).
long strip_low_zeros(QPoly& p) {
  const auto& c = p.coeffs();
  size_t k = 0;
  while (k < c.size() && is_zero(c[k])) ++k;
  if (k == 0) return 0;
  p = QPoly(std::vector<Rat>(c.begin() + static_cast<long>(k), c.end()));
  return static_cast<long>(k);
}

QPoly spread(const QPoly& p, long factor) {
  if (factor == 1 || p.is_zero_poly()) return p;
  const auto& c = p.coeffs();
  std::vector<Rat> out((c.size() - 1) * static_cast<size_t>(factor) + 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i) out[i * static_cast<size_t>(factor)] = c[i];
  return QPoly(std::move(out));
}

QPoly compress(const QPoly& p, long factor) {
  if (factor == 1 || p.is_zero_poly()) return p;
  const auto& c = p.coeffs();
  std::vector<Rat> out;
  for (size_t i = 0; i < c.size(); i += static_cast<size_t>(factor)) out.push_back(c[i]);
  return QPoly(std::move(out));
}

long support_gcd(const QPoly& p, long g) {
  const auto& c = p.coeffs();
  for (size_t i = 0; i < c.size() && g != 1; ++i) {
    if (!is_zero(c[i])) g = std::gcd(g, static_cast<long>(i));
  }
  return g;
}

std::vector<std::pair<Rat, Rat>> terms_of(const QPoly& p, long shift, long ram) {
  std::vector<std::pair<Rat, Rat>> out;
  const auto& c = p.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (is_zero(c[i])) continue;
    Rat e(shift + static_cast<long>(i), ram);
    e.canonicalize();
    out.emplace_back(e, c[i]);
  }
  return out;
}

std::string format_terms(const std::vector<std::pair<Rat, Rat>>& terms) {
  // Descending exponent order reads naturally: "2*t^3 - 1".
  std::string out;
  for (size_t k = terms.size(); k-- > 0;) {
    const auto& [e, c] = terms[k];
    bool negative = sgn(c) < 0;
    Rat mag = abs(c);
    std::string body;
    if (is_zero(e)) {
      body = to_string(mag);
    } else {
      std::string tp = "t";
      if (e != 1) tp += (e.get_den() == 1 && sgn(e) > 0) ? "^" + to_string(e) : "^(" + to_string(e) + ")";
      body = (mag == 1) ? tp : to_string(mag) + "*" + tp;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Scalar Scalar::t_power(const Rat& exponent, const Rat& coeff) {
  Scalar s;
  if (tropnewton::is_zero(coeff)) return s;
  s.ram_ = exponent.get_den().get_si();
  s.shift_ = exponent.get_num().get_si();
  s.num_ = QPoly(coeff);
  return s;
}

Rat Scalar::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "scalar " + to_string() + " is not a rational constant");
  return num_.coeff(0);
}

ExtRat Scalar::t_order() const {
  if (is_zero()) return ExtRat::infinity();
  Rat e(shift_, ram_);
  e.canonicalize();
  return e;
}

Rat Scalar::t_leading_coeff() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInput, "leading coefficient of zero");
  return num_.coeff(0);  // den(0) == 1 in canonical form
}

std::vector<std::pair<Rat, Rat>> Scalar::numerator_terms() const { return terms_of(num_, shift_, ram_); }
std::vector<std::pair<Rat, Rat>> Scalar::denominator_terms() const { return terms_of(den_, 0, ram_); }

Scalar Scalar::lifted(long ram) const {
  if (ram == ram_) return *this;
  long f = ram / ram_;
  Scalar r;
  r.ram_ = ram;
  r.shift_ = shift_ * f;
  r.num_ = spread(num_, f);
  r.den_ = spread(den_, f);
  return r;
}

void Scalar::normalize() {
  if (num_.is_zero_poly()) {
    ram_ = 1;
    shift_ = 0;
    den_ = QPoly(Rat(1));
    return;
  }
  shift_ += strip_low_zeros(num_);
  shift_ -= strip_low_zeros(den_);
  if (den_.degree() > 0) {
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = QPoly::divmod(num_, g).first;
      den_ = QPoly::divmod(den_, g).first;
    }
  }
  const Rat d0 = den_.coeff(0);
  if (d0 != 1) {
    Rat inv = 1 / d0;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  if (ram_ > 1) {
    long g = std::gcd(ram_, std::labs(shift_));
    g = support_gcd(num_, g);
    g = support_gcd(den_, g);
    if (g > 1) {
      ram_ /= g;
      shift_ /= g;
      num_ = compress(num_, g);
      den_ = compress(den_, g);
    }
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_rational() && o.is_rational()) {
    num_ = QPoly(num_.coeff(0) + o.num_.coeff(0));
    return *this;
  }
  long ram = std::lcm(ram_, o.ram_);
  Scalar a = lifted(ram);
  Scalar b = o.lifted(ram);
  long m = std::min(a.shift_, b.shift_);
  QPoly an = a.num_ * QPoly::monomial(Rat(1), static_cast<size_t>(a.shift_ - m));
  QPoly bn = b.num_ * QPoly::monomial(Rat(1), static_cast<size_t>(b.shift_ - m));
  Scalar r;
  r.ram_ = ram;
  r.shift_ = m;
  if (a.den_ == b.den_) {
    r.num_ = an + bn;
    r.den_ = a.den_;
  } else {
    r.num_ = an * b.den_ + bn * a.den_;
    r.den_ = a.den_ * b.den_;
  }
  r.normalize();
  return *this = std::move(r);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator-(Scalar a) {
  a.num_ = -a.num_;
  return a;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (o.is_rational()) {
    num_ = num_.scaled(o.num_.coeff(0));
    return *this;
  }
  if (is_rational()) {
    Rat c = num_.coeff(0);
    *this = o;
    num_ = num_.scaled(c);
    return *this;
  }
  long ram = std::lcm(ram_, o.ram_);
  Scalar a = lifted(ram);
  Scalar b = o.lifted(ram);
  Scalar r;
  r.ram_ = ram;
  r.shift_ = a.shift_ + b.shift_;
  r.num_ = a.num_ * b.num_;
  r.den_ = (a.is_one_den() && b.is_one_den()) ? QPoly(Rat(1)) : a.den_ * b.den_;
  r.normalize();
  return *this = std::move(r);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division of " + to_string() + " by zero");
  if (is_zero()) return *this;
  if (o.is_rational()) {
    num_ = num_.scaled(1 / o.num_.coeff(0));
    return *this;
  }
  long ram = std::lcm(ram_, o.ram_);
  Scalar a = lifted(ram);
  Scalar b = o.lifted(ram);
  Scalar r;
  r.ram_ = ram;
  r.shift_ = a.shift_ - b.shift_;
  r.num_ = a.num_ * b.den_;
  r.den_ = a.den_ * b.num_;
  r.normalize();
  return *this = std::move(r);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return Scalar(1) / pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  std::string n = format_terms(numerator_terms());
  if (is_one_den()) return n;
  return "(" + n + ")/(" + format_terms(denominator_terms()) + ")";
}

}  // namespace tropnewton
