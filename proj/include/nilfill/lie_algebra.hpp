#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilfill/matrix.hpp"
#include "nilfill/rational.hpp"

namespace nilfill {

// Nilpotent Lie algebra over Q given by structure constants. Brackets are
// stored for i < j only; antisymmetry is implied. Instances are treated as
// immutable once validated.
class LieAlgebra {
 public:
  LieAlgebra() : dim_(0) {}
  LieAlgebra(std::size_t dim, std::vector<std::string> names)
      : dim_(dim), names_(std::move(names)) {
    if (names_.empty())
      for (std::size_t i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i + 1));
    if (names_.size() != dim_) throw std::invalid_argument("basis name count != dim");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::string& name_of(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < dim_; ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  // Sets [e_i, e_j] = value (0-based, i != j). Stored under i < j.
  void set_bracket(std::size_t i, std::size_t j, QVector value) {
    if (i == j) throw std::invalid_argument("bracket of a basis vector with itself");
    if (i >= dim_ || j >= dim_ || value.size() != dim_)
      throw std::invalid_argument("bracket index/value out of range");
    if (i > j) {
      for (auto& x : value) x = -x;
      std::swap(i, j);
    }
    if (is_zero(value))
      brackets_.erase({i, j});
    else
      brackets_[{i, j}] = std::move(value);
  }

  void set_weights(std::vector<int> w) {
    if (w.size() != dim_) throw std::invalid_argument("weights size != dim");
    weights_ = std::move(w);
  }
  const std::optional<std::vector<int>>& weights() const { return weights_; }

  void set_designated_center(std::size_t i) {
    if (i >= dim_) throw std::invalid_argument("center index out of range");
    designated_center_ = i;
  }
  const std::optional<std::size_t>& designated_center() const { return designated_center_; }

  const std::map<std::pair<std::size_t, std::size_t>, QVector>& brackets() const {
    return brackets_;
  }

  QVector basis_bracket(std::size_t i, std::size_t j) const {
    if (i == j) return zero_vector(dim_);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return zero_vector(dim_);
    QVector v = it->second;
    if (flip)
      for (auto& x : v) x = -x;
    return v;
  }

  // Bilinear antisymmetric extension of the structure constants.
  QVector bracket(const QVector& u, const QVector& v) const {
    if (u.size() != dim_ || v.size() != dim_)
      throw std::invalid_argument("bracket: dimension mismatch");
    QVector out = zero_vector(dim_);
    for (const auto& [ij, val] : brackets_) {
      auto [i, j] = ij;
      Rational c = u[i] * v[j] - u[j] * v[i];
      if (c != 0) add_scaled(out, c, val);
    }
    return out;
  }

  // Matrix of ad_v : x -> [v, x] in the standard basis.
  QMatrix adjoint(const QVector& v) const {
    QMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      QVector col = bracket(v, unit_vector(dim_, j));
      for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> names_;
  std::map<std::pair<std::size_t, std::size_t>, QVector> brackets_;
  std::optional<std::vector<int>> weights_;
  std::optional<std::size_t> designated_center_;
};

// A subspace of a parent algebra, kept as a canonical (rref) basis.
struct Subspace {
  std::vector<QVector> basis;  // rref rows, canonical

  std::size_t dim() const { return basis.size(); }
  bool contains(const QVector& v) const { return in_span(basis, v); }
};

inline Subspace make_subspace(const std::vector<QVector>& vectors) {
  return Subspace{span_basis(vectors)};
}

struct ValidationReport {
  bool ok = true;
  std::string message;  // first violation, human-readable
};

inline QVector jacobiator(const LieAlgebra& a, std::size_t i, std::size_t j,
                          std::size_t k) {
  QVector s = a.bracket(unit_vector(a.dim(), i), a.basis_bracket(j, k));
  add_scaled(s, Rational(1), a.bracket(unit_vector(a.dim(), j), a.basis_bracket(k, i)));
  add_scaled(s, Rational(1), a.bracket(unit_vector(a.dim(), k), a.basis_bracket(i, j)));
  return s;
}

// Checks the Jacobi identity on all basis triples, grading consistency and
// centrality of the designated center. Reports the first violation found.
inline ValidationReport validate(const LieAlgebra& a) {
  ValidationReport rep;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i + 2 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        QVector jac = jacobiator(a, i, j, k);
        if (!is_zero(jac)) {
          rep.ok = false;
          rep.message = "Jacobi fails on (" + a.name_of(i) + "," + a.name_of(j) + "," +
                        a.name_of(k) + ")";
          return rep;
        }
      }
  if (a.weights()) {
    const auto& w = *a.weights();
    for (const auto& [ij, val] : a.brackets()) {
      int target = w[ij.first] + w[ij.second];
      for (std::size_t k = 0; k < n; ++k)
        if (val[k] != 0 && w[k] != target) {
          rep.ok = false;
          rep.message = "grading violated by [" + a.name_of(ij.first) + "," +
                        a.name_of(ij.second) + "]";
          return rep;
        }
    }
  }
  if (a.designated_center()) {
    std::size_t z = *a.designated_center();
    for (std::size_t i = 0; i < n; ++i)
      if (!is_zero(a.basis_bracket(z, i))) {
        rep.ok = false;
        rep.message = "designated center " + a.name_of(z) + " is not central";
        return rep;
      }
  }
  return rep;
}

// Lower central series C^1 = g, C^{i+1} = [g, C^i]; returned list starts at
// C^1 and ends with the zero subspace.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& a) {
  std::vector<Subspace> series;
  std::vector<QVector> cur;
  for (std::size_t i = 0; i < a.dim(); ++i) cur.push_back(unit_vector(a.dim(), i));
  series.push_back(make_subspace(cur));
  for (std::size_t guard = 0; guard <= a.dim(); ++guard) {
    const Subspace& prev = series.back();
    if (prev.dim() == 0) break;
    std::vector<QVector> next;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (const auto& v : prev.basis) {
        QVector b = a.bracket(unit_vector(a.dim(), i), v);
        if (!is_zero(b)) next.push_back(std::move(b));
      }
    Subspace s = make_subspace(next);
    if (s.dim() >= prev.dim() && prev.dim() != 0)
      throw std::runtime_error("lower central series does not descend (not nilpotent?)");
    series.push_back(std::move(s));
  }
  if (series.back().dim() != 0)
    throw std::runtime_error("lower central series did not terminate");
  return series;
}

inline std::size_t nilpotency_class(const LieAlgebra& a) {
  return lower_central_series(a).size() - 1;
}

inline Subspace derived_subalgebra(const LieAlgebra& a) {
  auto s = lower_central_series(a);
  return s.size() > 1 ? s[1] : Subspace{};
}

// Center as the kernel of the stacked adjoint maps.
inline Subspace center(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  QMatrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    QMatrix ad = a.adjoint(unit_vector(n, j));
    // rows n*j .. n*j+n-1 hold ad_{e_j} composed with the unknown vector:
    // [v, e_j] = -ad_{e_j} v.
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(n * j + r, c) = ad(r, c);
  }
  return make_subspace(kernel_basis(stacked));
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> names = a.basis_names();
  for (const auto& nm : b.basis_names()) names.push_back(nm);
  LieAlgebra s(a.dim() + b.dim(), names);
  for (const auto& [ij, val] : a.brackets()) {
    QVector v = zero_vector(s.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) v[k] = val[k];
    s.set_bracket(ij.first, ij.second, v);
  }
  for (const auto& [ij, val] : b.brackets()) {
    QVector v = zero_vector(s.dim());
    for (std::size_t k = 0; k < b.dim(); ++k) v[a.dim() + k] = val[k];
    s.set_bracket(a.dim() + ij.first, a.dim() + ij.second, v);
  }
  return s;
}

namespace detail {

// Expresses v in the basis (complement | ideal); returns the complement part.
inline QVector reduce_mod(const std::vector<QVector>& complement,
                          const std::vector<QVector>& ideal, const QVector& v) {
  std::vector<QVector> cols = complement;
  for (const auto& w : ideal) cols.push_back(w);
  QMatrix m = QMatrix::from_rows(cols).transpose();
  auto x = solve(m, v);
  if (!x) throw std::runtime_error("reduce_mod: vector not in span");
  return QVector(x->begin(), x->begin() + static_cast<long>(complement.size()));
}

}  // namespace detail

// Quotient by a (verified) ideal. Basis of the quotient: standard basis
// vectors at the non-pivot columns of the ideal's rref basis.
inline LieAlgebra quotient(const LieAlgebra& a, const Subspace& ideal) {
  for (const auto& v : ideal.basis)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!ideal.contains(a.bracket(unit_vector(a.dim(), i), v)))
        throw std::invalid_argument("quotient: subspace is not an ideal");
  std::vector<bool> is_pivot(a.dim(), false);
  if (!ideal.basis.empty()) {
    Echelon e = rref(QMatrix::from_rows(ideal.basis));
    for (auto c : e.pivots) is_pivot[c] = true;
  }
  std::vector<QVector> comp;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!is_pivot[i]) {
      comp.push_back(unit_vector(a.dim(), i));
      names.push_back(a.name_of(i));
    }
  LieAlgebra q(comp.size(), names);
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = i + 1; j < comp.size(); ++j) {
      QVector br = a.bracket(comp[i], comp[j]);
      if (is_zero(br)) continue;
      q.set_bracket(i, j, detail::reduce_mod(comp, ideal.basis, br));
    }
  return q;
}

// Central product identifying the designated centers (theta(z_a) = z_b).
// Basis: A's basis (its center becomes the shared Z), then B's basis with
// B's center removed. B's names are renamed via the given prefix when they
// collide with A's. The maps give each factor's basis index in the product.
struct CentralProduct {
  LieAlgebra algebra;
  std::vector<std::size_t> a_map, b_map;
};

inline CentralProduct central_product_with_maps(const LieAlgebra& a, const LieAlgebra& b,
                                                const std::string& b_prefix = "y") {
  if (!a.designated_center() || !b.designated_center())
    throw std::invalid_argument("central_product: designated centers required");
  Subspace za = center(a), zb = center(b);
  if (za.dim() != 1 || zb.dim() != 1)
    throw std::invalid_argument("central_product: centers must be 1-dimensional");
  std::size_t ca = *a.designated_center(), cb = *b.designated_center();
  if (!za.contains(unit_vector(a.dim(), ca)) || !zb.contains(unit_vector(b.dim(), cb)))
    throw std::invalid_argument("central_product: designated element is not central");

  const std::size_t n = a.dim() + b.dim() - 1;
  std::vector<std::string> names = a.basis_names();
  auto b_index = [&](std::size_t j) -> std::size_t {
    // image of B's basis vector j in the product
    if (j == cb) return ca;
    return a.dim() + (j < cb ? j : j - 1);
  };
  for (std::size_t j = 0; j < b.dim(); ++j) {
    if (j == cb) continue;
    std::string nm = b.basis_names()[j];
    bool collision = false;
    for (const auto& an : names)
      if (an == nm) collision = true;
    names.push_back(collision ? b_prefix + nm : nm);
  }
  LieAlgebra p(n, names);
  for (const auto& [ij, val] : a.brackets()) {
    QVector v = zero_vector(n);
    for (std::size_t k = 0; k < a.dim(); ++k) v[k] = val[k];
    p.set_bracket(ij.first, ij.second, v);
  }
  for (const auto& [ij, val] : b.brackets()) {
    QVector v = zero_vector(n);
    for (std::size_t k = 0; k < b.dim(); ++k)
      if (val[k] != 0) v[b_index(k)] += val[k];
    p.set_bracket(b_index(ij.first), b_index(ij.second), v);
  }
  p.set_designated_center(ca);
  CentralProduct out;
  out.algebra = std::move(p);
  for (std::size_t i = 0; i < a.dim(); ++i) out.a_map.push_back(i);
  for (std::size_t j = 0; j < b.dim(); ++j) out.b_map.push_back(b_index(j));
  return out;
}

inline LieAlgebra central_product(const LieAlgebra& a, const LieAlgebra& b,
                                  const std::string& b_prefix = "y") {
  return central_product_with_maps(a, b, b_prefix).algebra;
}

// Carnot-graded algebra gr(g) = sum of C^i/C^{i+1} with induced brackets.
// Complements are read off the rref pivots of the series terms, so the
// output is basis-stable.
inline LieAlgebra carnot_graded(const LieAlgebra& a) {
  auto series = lower_central_series(a);
  // Pivot columns of nested spaces are nested, so the weight-i layer is the
  // set of rref rows of C^i whose pivot is not a pivot of C^{i+1}.
  std::vector<QVector> reps;
  std::vector<int> weights;
  std::vector<std::string> names;
  for (std::size_t lvl = 0; lvl + 1 < series.size(); ++lvl) {
    std::vector<std::size_t> next_pivots;
    if (!series[lvl + 1].basis.empty()) {
      Echelon e = rref(QMatrix::from_rows(series[lvl + 1].basis));
      next_pivots = e.pivots;
    }
    Echelon e = rref(QMatrix::from_rows(series[lvl].basis));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      bool in_next = false;
      for (auto c : next_pivots)
        if (c == e.pivots[r]) in_next = true;
      if (in_next) continue;
      QVector rep = e.mat.row(r);
      // Name after the original basis vector when the representative is one.
      std::string nm;
      std::size_t nonzero = 0, where = 0;
      for (std::size_t k = 0; k < rep.size(); ++k)
        if (rep[k] != 0) {
          ++nonzero;
          where = k;
        }
      if (nonzero == 1 && rep[where] == 1)
        nm = a.name_of(where);
      else
        nm = "g" + std::to_string(lvl + 1) + "_" + std::to_string(names.size() + 1);
      reps.push_back(std::move(rep));
      weights.push_back(static_cast<int>(lvl + 1));
      names.push_back(nm);
    }
  }
  LieAlgebra gr(reps.size(), names);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      QVector br = a.bracket(reps[i], reps[j]);
      if (is_zero(br)) continue;
      int w = weights[i] + weights[j];
      // Express br in (weight-w reps | C^{w+1}); graded bracket keeps the
      // rep coefficients only.
      std::vector<QVector> cols;
      std::vector<std::size_t> rep_ids;
      for (std::size_t k = 0; k < reps.size(); ++k)
        if (weights[k] == w) {
          cols.push_back(reps[k]);
          rep_ids.push_back(k);
        }
      std::size_t ncomp = cols.size();
      if (static_cast<std::size_t>(w) < series.size())
        for (const auto& v : series[static_cast<std::size_t>(w)].basis) cols.push_back(v);
      if (cols.empty()) continue;
      auto x = solve(QMatrix::from_rows(cols).transpose(), br);
      if (!x) throw std::runtime_error("carnot_graded: bracket not in expected filtration");
      QVector out = zero_vector(reps.size());
      bool nonzero = false;
      for (std::size_t t = 0; t < ncomp; ++t)
        if ((*x)[t] != 0) {
          out[rep_ids[t]] = (*x)[t];
          nonzero = true;
        }
      if (nonzero) gr.set_bracket(i, j, out);
    }
  gr.set_weights(weights);
  return gr;
}

// Searches basis vectors and pairwise sums/differences for an element
// outside the derived subalgebra whose adjoint has rank one. A negative
// answer certifies absence over this candidate set only.
inline std::optional<QVector> rank_one_adjoint_witness(const LieAlgebra& a) {
  Subspace derived = derived_subalgebra(a);
  std::vector<QVector> candidates;
  for (std::size_t i = 0; i < a.dim(); ++i) candidates.push_back(unit_vector(a.dim(), i));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      candidates.push_back(unit_vector(a.dim(), i) + unit_vector(a.dim(), j));
      candidates.push_back(unit_vector(a.dim(), i) - unit_vector(a.dim(), j));
    }
  for (const auto& v : candidates) {
    if (derived.contains(v)) continue;
    if (rank(a.adjoint(v)) == 1) return v;
  }
  return std::nullopt;
}

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

}  // namespace nilfill
