#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilfill/bch.hpp"
#include "nilfill/lie_algebra.hpp"

namespace nilfill {

// Alternating k-form on the dual of a Lie algebra, sparse over strictly
// increasing index tuples.
class KForm {
 public:
  KForm() : dim_(0), degree_(0) {}
  KForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<std::vector<std::size_t>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * xi_{idx} with idx not necessarily sorted; sorts and signs.
  void add(std::vector<std::size_t> idx, Rational c) {
    if (c == 0) return;
    if (idx.size() != degree_) throw std::invalid_argument("KForm::add degree mismatch");
    int sign = 1;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
        if (idx[j] > idx[j + 1]) {
          std::swap(idx[j], idx[j + 1]);
          sign = -sign;
        }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1]) return;
    for (auto v : idx)
      if (v >= dim_) throw std::invalid_argument("KForm::add index out of range");
    Rational& slot = terms_[idx];
    slot += sign > 0 ? c : -c;
    if (slot == 0) terms_.erase(idx);
  }

  KForm operator+(const KForm& o) const {
    KForm r = *this;
    for (const auto& [idx, c] : o.terms_) r.add(idx, c);
    return r;
  }

  KForm operator-() const {
    KForm r = *this;
    for (auto& [idx, c] : r.terms_) c = -c;
    return r;
  }

  friend KForm operator*(const Rational& s, const KForm& f) {
    KForm r(f.dim_, f.degree_);
    if (s == 0) return r;
    for (const auto& [idx, c] : f.terms_) r.terms_[idx] = s * c;
    return r;
  }

  // Evaluation of a 2-form on vectors.
  Rational eval2(const QVector& u, const QVector& v) const {
    if (degree_ != 2) throw std::logic_error("eval2 on non-2-form");
    Rational s(0);
    for (const auto& [idx, c] : terms_)
      s += c * (u[idx[0]] * v[idx[1]] - u[idx[1]] * v[idx[0]]);
    return s;
  }

  bool operator==(const KForm& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  std::size_t dim_, degree_;
  std::map<std::vector<std::size_t>, Rational> terms_;
};

inline KForm wedge(const KForm& a, const KForm& b) {
  KForm r(a.dim(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<std::size_t> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add(std::move(idx), ca * cb);
    }
  return r;
}

inline KForm basis_one_form(std::size_t dim, std::size_t i) {
  KForm f(dim, 1);
  f.add({i}, Rational(1));
  return f;
}

inline KForm basis_two_form(std::size_t dim, std::size_t i, std::size_t j) {
  KForm f(dim, 2);
  f.add({i, j}, Rational(1));
  return f;
}

// Chevalley-Eilenberg differential: on generators d xi_k = -sum_{i<j}
// c_{ij}^k xi_i ^ xi_j, extended as an antiderivation.
inline KForm exterior_derivative(const LieAlgebra& a, const KForm& f) {
  KForm out(f.dim(), f.degree() + 1);
  for (const auto& [idx, c] : f.terms()) {
    for (std::size_t m = 0; m < idx.size(); ++m) {
      // Replace slot m by d xi_{idx[m]} = -sum c_{ij}^{idx[m]} xi_i ^ xi_j.
      // Writing the pair (i,j) at the end instead of at slot m costs an even
      // number of transpositions, so only the antiderivation sign (-1)^m and
      // the structure-constant sign enter.
      for (const auto& [ij, val] : a.brackets()) {
        const Rational& sc = val[idx[m]];
        if (sc == 0) continue;
        std::vector<std::size_t> nidx;
        for (std::size_t t = 0; t < idx.size(); ++t)
          if (t != m) nidx.push_back(idx[t]);
        nidx.push_back(ij.first);
        nidx.push_back(ij.second);
        Rational coef = (m % 2 == 0) ? Rational(-1) : Rational(1);
        out.add(std::move(nidx), coef * sc * c);
      }
    }
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i-- > 0) {
      if (cur[i] != i + n - k) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

}  // namespace detail

// Matrix of d_k : Lambda^k -> Lambda^{k+1} in lex-ordered bases.
inline QMatrix differential_matrix(const LieAlgebra& a, std::size_t k) {
  auto dom = detail::combinations(a.dim(), k);
  auto cod = detail::combinations(a.dim(), k + 1);
  std::map<std::vector<std::size_t>, std::size_t> cod_index;
  for (std::size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = i;
  QMatrix m(cod.size(), dom.size());
  for (std::size_t c = 0; c < dom.size(); ++c) {
    KForm f(a.dim(), k);
    if (k == 0)
      throw std::logic_error("differential_matrix: use k >= 1 (d_0 = 0)");
    f.add(dom[c], Rational(1));
    KForm df = exterior_derivative(a, f);
    for (const auto& [idx, coef] : df.terms()) m(cod_index.at(idx), c) = coef;
  }
  return m;
}

// Betti numbers b_0..b_dim of the Chevalley-Eilenberg complex.
inline std::vector<std::size_t> betti_numbers(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> rk(n + 1, 0);  // rk[k] = rank d_k (d_0 = 0)
  for (std::size_t k = 1; k < n; ++k) rk[k] = rank(differential_matrix(a, k));
  std::vector<std::size_t> b(n + 1, 0);
  auto choose = [n](std::size_t k) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return static_cast<std::size_t>(c.get_ui());
  };
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t dk = (k < n) ? rk[k] : 0;           // rank d_k
    std::size_t dkm1 = (k > 0) ? rk[k - 1] : 0;     // rank d_{k-1}
    b[k] = choose(k) - dk - dkm1;
  }
  return b;
}

// Coboundary test: returns a 1-form eta with d eta = omega when omega is
// exact, nullopt otherwise.
inline std::optional<KForm> coboundary_certificate(const LieAlgebra& a, const KForm& omega) {
  if (omega.degree() != 2) throw std::invalid_argument("coboundary test wants a 2-form");
  QMatrix d1 = differential_matrix(a, 1);
  auto cod = detail::combinations(a.dim(), 2);
  QVector target(cod.size(), Rational(0));
  std::map<std::vector<std::size_t>, std::size_t> cod_index;
  for (std::size_t i = 0; i < cod.size(); ++i) cod_index[cod[i]] = i;
  for (const auto& [idx, c] : omega.terms()) target[cod_index.at(idx)] = c;
  auto x = solve(d1, target);
  if (!x) return std::nullopt;
  KForm eta(a.dim(), 1);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if ((*x)[i] != 0) eta.add({i}, (*x)[i]);
  return eta;
}

// One-dimensional central extension defined by a closed 2-form.
struct CentralExtension {
  LieAlgebraPtr base;
  KForm cocycle;
  LieAlgebraPtr total;
  std::size_t ztilde;  // index of the new central generator in total
};

inline CentralExtension central_extension(LieAlgebraPtr base, const KForm& omega,
                                          const std::string& z_name = "Zt") {
  if (omega.degree() != 2 || omega.dim() != base->dim())
    throw std::invalid_argument("central_extension: need a 2-form on the base");
  KForm dw = exterior_derivative(*base, omega);
  if (!dw.is_zero()) {
    std::string msg = "central_extension: cocycle is not closed; d(omega) has " +
                      std::to_string(dw.terms().size()) + " terms";
    throw std::invalid_argument(msg);
  }
  const std::size_t n = base->dim();
  std::vector<std::string> names = base->basis_names();
  names.push_back(z_name);
  LieAlgebra tot(n + 1, names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QVector br = base->basis_bracket(i, j);
      Rational w = omega.eval2(unit_vector(n, i), unit_vector(n, j));
      if (is_zero(br) && w == 0) continue;
      QVector v = zero_vector(n + 1);
      for (std::size_t k = 0; k < n; ++k) v[k] = br[k];
      v[n] = w;
      tot.set_bracket(i, j, v);
    }
  auto total = std::make_shared<const LieAlgebra>(std::move(tot));
  auto rep = validate(*total);
  if (!rep.ok) throw std::logic_error("central_extension: total fails validation: " + rep.message);
  return CentralExtension{std::move(base), omega, total, n};
}

// Weight-3 graded two-cocycles Z^{2,3} = ker(d restricted to E* (x) V*) for a
// two-step algebra graded with E in weight 1 and V in weight 2.
struct GradedCocycles {
  std::vector<std::pair<std::size_t, std::size_t>> basis_pairs;  // (e index, v index)
  std::vector<QVector> kernel;                                   // coords over basis_pairs
  std::vector<KForm> forms;
};

inline GradedCocycles graded_two_cocycles(const LieAlgebra& a) {
  if (!a.weights()) throw std::invalid_argument("graded_two_cocycles: weights required");
  const auto& w = *a.weights();
  std::vector<std::size_t> E, V;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (w[i] == 1)
      E.push_back(i);
    else if (w[i] == 2)
      V.push_back(i);
    else
      throw std::invalid_argument("graded_two_cocycles: weights must be 1 or 2");
  }
  if (nilpotency_class(a) > 2)
    throw std::invalid_argument("graded_two_cocycles: algebra not 2-step");
  GradedCocycles out;
  for (auto e : E)
    for (auto v : V) out.basis_pairs.push_back({e, v});
  // d(xi_e ^ nu_v) lands in Lambda^3 E*; build that matrix.
  auto e_pos = [&](std::size_t idx) {
    for (std::size_t t = 0; t < E.size(); ++t)
      if (E[t] == idx) return t;
    throw std::logic_error("not an E index");
  };
  auto triples = detail::combinations(E.size(), 3);
  std::map<std::vector<std::size_t>, std::size_t> row_of;
  for (std::size_t i = 0; i < triples.size(); ++i) row_of[triples[i]] = i;
  QMatrix m(triples.size(), out.basis_pairs.size());
  for (std::size_t c = 0; c < out.basis_pairs.size(); ++c) {
    auto [e, v] = out.basis_pairs[c];
    KForm f(a.dim(), 2);
    f.add({e, v}, Rational(1));
    KForm df = exterior_derivative(a, f);
    for (const auto& [idx, coef] : df.terms()) {
      std::vector<std::size_t> tri = {e_pos(idx[0]), e_pos(idx[1]), e_pos(idx[2])};
      m(row_of.at(tri), c) += coef;
    }
  }
  out.kernel = kernel_basis(m);
  for (const auto& k : out.kernel) {
    KForm f(a.dim(), 2);
    for (std::size_t c = 0; c < k.size(); ++c)
      if (k[c] != 0) f.add({out.basis_pairs[c].first, out.basis_pairs[c].second}, k[c]);
    out.forms.push_back(std::move(f));
  }
  return out;
}

}  // namespace nilfill
