#include "tropnewton/triangular.hpp"

#include <algorithm>
#include <set>

#include "tropnewton/error.hpp"
#include "tropnewton/linalg.hpp"
#include "tropnewton/upoly.hpp"

namespace tropnewton {

namespace {

using SPoly = UPoly<Scalar>;

constexpr size_t kMaxDegree = 4096;

// Lex with x_{n-1} largest, so lex bases are triangular in x_0 < ... < x_{n-1}.
struct ReversedLex {
  RingPtr ring;
  RingPtr reversed;

  explicit ReversedLex(const RingPtr& r) : ring(r) {
    std::vector<std::string> names(r->vars.rbegin(), r->vars.rend());
    reversed = make_ring(std::move(names), r->field);
  }

  static MPoly flip(const MPoly& f, const RingPtr& target) {
    MPoly out(target);
    for (const auto& [e, c] : f.terms()) out.add_term(Exponent(e.rbegin(), e.rend()), c);
    return out;
  }

  std::vector<MPoly> back(const GroebnerBasis& G) const {
    std::vector<MPoly> out;
    for (const auto& g : G.polys) out.push_back(flip(g, ring));
    return out;
  }
};

// Adds the squarefree part of each variable's minimal polynomial; the
// result is radical for zero-dimensional input in characteristic zero.
GroebnerBasis radical(const RingPtr& ring, const std::vector<MPoly>& gens, const GroebnerOptions& opts) {
  GroebnerBasis G = buchberger(ring, gens, MonomialOrder::degrevlex(), opts);
  if (G.is_unit()) return G;
  if (dimension_and_independent_set(G).dimension != 0) {
    throw Error(ErrorKind::NotZeroDimensional, "ideal has positive dimension");
  }
  std::vector<MPoly> out = G.polys;
  bool changed = false;
  for (size_t v = 0; v < ring->nvars(); ++v) {
    SPoly mu(minimal_polynomial(G, v));
    SPoly sq = mu.squarefree_part();
    if (sq.degree() == mu.degree()) continue;
    MPoly r(ring);
    for (size_t k = 0; k < sq.coeffs().size(); ++k) {
      Exponent e(ring->nvars(), 0);
      e[v] = static_cast<int>(k);
      r.add_term(e, sq.coeffs()[k]);
    }
    out.push_back(std::move(r));
    changed = true;
  }
  if (!changed) return G;
  return buchberger(ring, out, MonomialOrder::degrevlex(), opts);
}

// Coefficient of the highest power of x_var.
MPoly leading_coefficient_in(const MPoly& f, size_t var) {
  return coefficients_wrt(f, var).back();
}

class Decomposer {
 public:
  Decomposer(const RingPtr& ring, const GroebnerOptions& opts) : ring_(ring), lex_(ring), opts_(opts) {}

  /// G is the reversed-ring lex basis of a radical ideal J.
  void run(const GroebnerBasis& G) {
    if (G.is_unit()) return;
    std::vector<MPoly> B = lex_.back(G);
    std::vector<MPoly> chosen;
    for (size_t i = 0; i < ring_->nvars(); ++i) {
      const MPoly* h = nullptr;
      for (const auto& g : B) {
        if (g.max_variable() != i) continue;
        if (h == nullptr || g.degree_in(i) < h->degree_in(i)) h = &g;
      }
      if (h == nullptr) throw Error(ErrorKind::NotZeroDimensional, "no basis element introduces " + ring_->vars[i]);
      MPoly c = leading_coefficient_in(*h, i);
      if (!c.is_constant()) {
        // J radical: J : c equals J exactly when c vanishes nowhere on V(J).
        const MPoly rc = ReversedLex::flip(c, lex_.reversed);
        GroebnerBasis rest = ideal_quotient(G, rc, MonomialOrder::lex());
        if (rest.polys != G.polys) {
          std::vector<MPoly> with_c = G.polys;
          with_c.push_back(rc);
          run(fglm(radical(lex_.reversed, with_c, opts_), MonomialOrder::lex()));
          run(rest);
          return;
        }
      }
      chosen.push_back(*h);
    }
    out_.push_back({ring_, std::move(chosen)});
  }

  const ReversedLex& lex() const { return lex_; }
  std::vector<TriangularSet> take() { return std::move(out_); }

 private:
  RingPtr ring_;
  ReversedLex lex_;
  GroebnerOptions opts_;
  std::vector<TriangularSet> out_;
};

}  // namespace

bool is_triangular(const RingPtr& ring, const std::vector<MPoly>& F) {
  if (F.size() != ring->nvars()) return false;
  for (size_t i = 0; i < F.size(); ++i) {
    if (F[i].nvars() != ring->nvars() || F[i].max_variable() != i) return false;
  }
  return true;
}

std::vector<TriangularSet> triangular_decomposition(const RingPtr& ring, const std::vector<MPoly>& gens,
                                                    const GroebnerOptions& opts) {
  Decomposer d(ring, opts);
  const ReversedLex& lex = d.lex();
  std::vector<MPoly> rg;
  for (const auto& g : gens) {
    if (g.nvars() != ring->nvars()) throw Error(ErrorKind::RingMismatch, "generator ring does not match");
    rg.push_back(ReversedLex::flip(g, lex.reversed));
  }
  d.run(fglm(radical(lex.reversed, rg, opts), MonomialOrder::lex()));
  std::vector<TriangularSet> out = d.take();
  auto key = [](const TriangularSet& T) {
    std::vector<std::pair<long, std::string>> k;
    for (size_t i = 0; i < T.polys.size(); ++i) k.emplace_back(T.polys[i].degree_in(i), T.polys[i].to_string());
    return k;
  };
  std::sort(out.begin(), out.end(), [&](const TriangularSet& a, const TriangularSet& b) { return key(a) < key(b); });
  return out;
}

std::vector<Scalar> minimal_polynomial(const GroebnerBasis& G, size_t var) {
  const RingPtr& R = G.ring;
  const MPoly x = MPoly::variable(R, var);
  std::vector<MPoly> powers{normal_form(MPoly::constant(R, 1), G)};
  for (;;) {
    powers.push_back(normal_form(powers.back() * x, G));
    std::set<Exponent> support;
    for (const auto& p : powers) {
      for (const auto& [e, c] : p.terms()) support.insert(e);
    }
    // Columns are the powers; look for a kernel vector involving the newest.
    const size_t k = powers.size();
    linalg::Matrix<Scalar> m;
    for (const auto& e : support) {
      std::vector<Scalar> row(k);
      for (size_t j = 0; j < k; ++j) {
        auto it = powers[j].terms().find(e);
        if (it != powers[j].terms().end()) row[j] = it->second;
      }
      m.push_back(std::move(row));
    }
    auto kernel = linalg::nullspace(m, k);
    if (kernel.empty()) {
      if (k > kMaxDegree) throw Error(ErrorKind::ResourceLimit, "minimal polynomial degree exceeds the cap");
      continue;
    }
    // The newest column is the only possible free one, so this vector is
    // monic in the top degree.
    return kernel.front();
  }
}

}  // namespace tropnewton
