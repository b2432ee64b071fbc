#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropnewton/field.hpp"
#include "tropnewton/rational.hpp"
#include "tropnewton/scalar.hpp"

namespace tropnewton {

using Exponent = std::vector<int>;

/// Graded lexicographic order, greatest first; the canonical storage order.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

struct Ring {
  std::vector<std::string> vars;
  Field field;

  size_t nvars() const { return vars.size(); }
  std::optional<size_t> index_of(const std::string& name) const;
  friend bool operator==(const Ring& a, const Ring& b) { return a.vars == b.vars && a.field == b.field; }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, Field field);

/// Polynomial over the residue field Q; the codomain of initial forms.
struct ResiduePoly {
  std::map<Exponent, Rat, GrlexGreater> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const ResiduePoly&, const ResiduePoly&) = default;
  friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b);
  std::string to_string(const std::vector<std::string>& vars) const;
};

class MPoly {
 public:
  using TermMap = std::map<Exponent, Scalar, GrlexGreater>;

  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly constant(RingPtr ring, const Scalar& c);
  static MPoly variable(RingPtr ring, size_t index);
  static MPoly monomial(RingPtr ring, Exponent e, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field; }
  size_t nvars() const { return ring_->nvars(); }
  const TermMap& terms() const { return terms_; }
  size_t nterms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Scalar& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  friend MPoly operator-(MPoly a);
  MPoly scaled(const Scalar& c) const;
  MPoly pow(unsigned e) const;
  friend bool operator==(const MPoly& a, const MPoly& b);

  long degree_in(size_t var) const;
  long total_degree() const;
  bool involves(size_t var) const;
  /// Largest variable index present, or nullopt for constants.
  std::optional<size_t> max_variable() const;
  bool is_homogeneous() const;

  /// Same terms viewed in another ring with the same variable count.
  MPoly with_ring(RingPtr ring) const;

  std::string to_string() const;

 private:
  void check_ring(const MPoly& o) const;
  RingPtr ring_;
  TermMap terms_;
};

/// min over terms of w.alpha + val(c_alpha); infinity for the zero polynomial.
ExtRat trop_eval(const MPoly& f, std::span<const Rat> w);

/// Residues of the terms attaining trop_eval(f, w).
ResiduePoly initial_form(const MPoly& f, std::span<const Rat> w);

/// (f_0, ..., f_d) with f = sum f_i x_k^i; f must only involve x_0..x_k.
std::vector<MPoly> coefficients_wrt(const MPoly& f, size_t k);

/// Evaluates the assigned variables. The result lives in a new ring on the
/// unassigned variables (original order kept). Zero values are rejected
/// unless allow_zero is set.
MPoly substitute(const MPoly& f, const std::map<size_t, Scalar>& assignment, bool allow_zero = false);

/// Same evaluation, but the result stays in f's ring.
MPoly substitute_in_place(const MPoly& f, const std::map<size_t, Scalar>& assignment);

/// Coefficients of a polynomial that only involves x_var, indexed by degree.
std::vector<Scalar> univariate_coefficients(const MPoly& f, size_t var);

bool is_monomial(const ResiduePoly& g);

/// True iff every coefficient is a rational constant of valuation zero.
bool has_constant_valuation_zero(const MPoly& f);

}  // namespace tropnewton
