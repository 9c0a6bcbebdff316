#pragma once

#include <memory>
#include <vector>

#include "nilfill/lie_algebra.hpp"
#include "nilfill/rational.hpp"

namespace nilfill {

// Bernoulli numbers with the B_1 = +1/2 convention used by the BCH flow
// z/(1 - e^{-z}) = sum B_n z^n / n!.
inline const std::vector<Rational>& bernoulli_numbers(std::size_t upto) {
  static std::vector<Rational> cache;
  if (cache.size() <= upto) {
    std::size_t n0 = cache.size();
    cache.resize(upto + 1);
    for (std::size_t m = n0; m <= upto; ++m) {
      if (m == 0) {
        cache[0] = 1;
        continue;
      }
      // Standard recurrence for B^- (B_1 = -1/2): sum_{j=0}^m C(m+1,j) B_j = 0.
      Rational s(0);
      for (std::size_t j = 0; j < m; ++j) {
        Rational bj = (j == 1) ? Rational(-1, 2) : cache[j];
        s += binom(Rational(static_cast<long>(m + 1)), static_cast<unsigned>(j)) * bj;
      }
      cache[m] = -s / binom(Rational(static_cast<long>(m + 1)), static_cast<unsigned>(m));
      if (m == 1) cache[1] = Rational(1, 2);  // flip to B_1^+ convention
    }
  }
  return cache;
}

// Shared immutable context: validated algebra plus its nilpotency class.
struct GroupContext {
  LieAlgebraPtr algebra;
  std::size_t clazz;
};
using GroupContextPtr = std::shared_ptr<const GroupContext>;

inline GroupContextPtr make_group(LieAlgebraPtr algebra) {
  auto rep = validate(*algebra);
  if (!rep.ok) throw std::invalid_argument("make_group: " + rep.message);
  std::size_t c = nilpotency_class(*algebra);
  return std::make_shared<const GroupContext>(GroupContext{std::move(algebra), c});
}

// log(exp X exp Y) truncated at the algebra's class, computed from the flow
// Z(t) = log(exp X exp tY), dZ/dt = sum_n B_n/n! ad_Z^n Y, as a polynomial
// in t of degree <= class, then evaluated at t = 1. Exact.
inline QVector bch(const LieAlgebra& a, std::size_t clazz, const QVector& x,
                   const QVector& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bch: size mismatch");
  if (is_zero(x)) return y;
  if (is_zero(y)) return x;
  const std::size_t deg = clazz;  // coefficients beyond t^class vanish
  const auto& bern = bernoulli_numbers(clazz == 0 ? 0 : clazz - 1);

  std::vector<QVector> z(deg + 1, zero_vector(n));  // Z(t) = sum z[d] t^d
  z[0] = x;
  for (std::size_t d = 0; d + 1 <= deg; ++d) {
    // t^d coefficient of sum_m B_m/m! ad_Z^m Y, using z[0..d] only.
    // w holds ad_Z^m Y as a polynomial in t, truncated at degree d.
    std::vector<QVector> w(d + 1, zero_vector(n));
    w[0] = y;
    // m = 0 term is the constant polynomial Y; contributes only at t^0.
    QVector rhs = (d == 0) ? y : zero_vector(n);
    Rational mfact(1);
    for (std::size_t m = 1; m < clazz; ++m) {
      mfact *= Rational(static_cast<long>(m));
      std::vector<QVector> nw(d + 1, zero_vector(n));
      for (std::size_t adeg = 0; adeg <= d; ++adeg) {
        if (is_zero(z[adeg])) continue;
        for (std::size_t bdeg = 0; adeg + bdeg <= d; ++bdeg) {
          if (is_zero(w[bdeg])) continue;
          QVector br = a.bracket(z[adeg], w[bdeg]);
          if (!is_zero(br)) add_scaled(nw[adeg + bdeg], Rational(1), br);
        }
      }
      w = std::move(nw);
      if (bern[m] != 0) add_scaled(rhs, bern[m] / mfact, w[d]);
      bool all_zero = true;
      for (const auto& c : w)
        if (!is_zero(c)) all_zero = false;
      if (all_zero) break;
    }
    for (std::size_t k = 0; k < n; ++k)
      z[d + 1][k] = rhs[k] / Rational(static_cast<long>(d + 1));
  }
  QVector out = zero_vector(n);
  for (std::size_t d = 0; d <= deg; ++d) add_scaled(out, Rational(1), z[d]);
  return out;
}

// Group element in exponential coordinates of the first kind.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupContextPtr ctx, QVector log_coords)
      : ctx_(std::move(ctx)), log_(std::move(log_coords)) {
    if (log_.size() != ctx_->algebra->dim())
      throw std::invalid_argument("GroupElement: coordinate size mismatch");
  }

  static GroupElement identity(GroupContextPtr ctx) {
    std::size_t n = ctx->algebra->dim();
    return GroupElement(std::move(ctx), zero_vector(n));
  }
  static GroupElement exp_basis(GroupContextPtr ctx, std::size_t i,
                                const Rational& t = Rational(1)) {
    QVector v = zero_vector(ctx->algebra->dim());
    v.at(i) = t;
    return GroupElement(std::move(ctx), std::move(v));
  }

  const QVector& log() const { return log_; }
  const GroupContextPtr& context() const { return ctx_; }
  bool is_identity() const { return is_zero(log_); }

  friend GroupElement mul(const GroupElement& g, const GroupElement& h) {
    if (g.ctx_ != h.ctx_) throw std::invalid_argument("mul: algebra mismatch");
    return GroupElement(g.ctx_, bch(*g.ctx_->algebra, g.ctx_->clazz, g.log_, h.log_));
  }
  friend GroupElement inv(const GroupElement& g) {
    QVector v = g.log_;
    for (auto& c : v) c = -c;
    return GroupElement(g.ctx_, std::move(v));
  }
  friend GroupElement pow(const GroupElement& g, const Rational& a) {
    QVector v = g.log_;
    for (auto& c : v) c *= a;
    return GroupElement(g.ctx_, std::move(v));
  }

  bool operator==(const GroupElement& o) const {
    return ctx_ == o.ctx_ && log_ == o.log_;
  }

 private:
  GroupContextPtr ctx_;
  QVector log_;
};

// [g, h] = g^{-1} h^{-1} g h.
inline GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return mul(mul(inv(g), inv(h)), mul(g, h));
}

// Right-nested simple commutator [g_1, [g_2, ..., [g_{k-1}, g_k]]].
inline GroupElement simple_commutator(const std::vector<GroupElement>& gs) {
  if (gs.size() < 2) throw std::invalid_argument("simple_commutator: need >= 2 elements");
  GroupElement acc = gs.back();
  for (std::size_t i = gs.size() - 1; i-- > 0;) acc = commutator(gs[i], acc);
  return acc;
}

}  // namespace nilfill
