#include "nilfill/bch.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "nilfill/catalog.hpp"

using namespace nilfill;

namespace {

// Independent oracle: Dynkin's explicit double sum
//   log(e^X e^Y) = sum_{n>=1} (-1)^{n-1}/n sum_{(r_i,s_i)}
//     [X^(r_1) Y^(s_1) ... X^(r_n) Y^(s_n)] / ((sum r_i+s_i) prod r_i! s_i!)
// where the bracket is the left-normed iterated commutator of the written
// letter sequence. Terms of weight above the class vanish; usable to class 5.
QVector dynkin_bch(const LieAlgebra& a, std::size_t clazz, const QVector& x,
                   const QVector& y) {
  if (clazz > 5) throw std::logic_error("dynkin oracle capped at class 5");
  QVector total = zero_vector(a.dim());

  // letter sequence -> left-normed bracket [l1,[l2,[...,lk]]]
  auto nested = [&](const std::vector<int>& letters) {
    QVector acc = letters.back() == 0 ? x : y;
    for (std::size_t i = letters.size() - 1; i-- > 0;)
      acc = a.bracket(letters[i] == 0 ? x : y, acc);
    return acc;
  };

  // enumerate block sequences (r_1,s_1),...,(r_n,s_n), r_i+s_i >= 1
  struct Block {
    unsigned r, s;
  };
  std::vector<Block> blocks;
  std::function<void(unsigned, int)> rec = [&](unsigned weight, int n) {
    if (n > 0 && !blocks.empty()) {
      // contribute current sequence
      std::vector<int> letters;
      Rational denom(1);
      for (const auto& b : blocks) {
        for (unsigned i = 0; i < b.r; ++i) letters.push_back(0);
        for (unsigned i = 0; i < b.s; ++i) letters.push_back(1);
        denom *= Rational(factorial(b.r)) * Rational(factorial(b.s));
      }
      Rational coef = Rational((blocks.size() % 2 == 1) ? 1 : -1) /
                      Rational(static_cast<long>(blocks.size()));
      coef /= Rational(static_cast<long>(letters.size())) * denom;
      QVector term = nested(letters);
      add_scaled(total, coef, term);
    }
    if (weight >= clazz) return;
    for (unsigned r = 0; r <= clazz - weight; ++r)
      for (unsigned s = 0; r + s <= clazz - weight; ++s) {
        if (r + s == 0) continue;
        blocks.push_back({r, s});
        rec(weight + r + s, n + 1);
        blocks.pop_back();
      }
  };
  rec(0, 0);
  return total;
}

QVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-2, 2);
  QVector v(n);
  for (auto& c : v) c = rat(d(rng), 2);
  return v;
}

}  // namespace

TEST(Bch, AbelianIsAddition) {
  auto ab = std::make_shared<const LieAlgebra>(abelian(3));
  auto ctx = make_group(ab);
  QVector x = {rat(1), rat(2), rat(0)};
  QVector y = {rat(0), rat(1, 2), rat(-1)};
  EXPECT_EQ(bch(*ab, ctx->clazz, x, y), x + y);
}

TEST(Bch, HeisenbergClosedForm) {
  // bch(a X1, b X2) = a X1 + b X2 + ab/2 X3 in l_3
  auto l3 = std::make_shared<const LieAlgebra>(model_filiform(3));
  auto ctx = make_group(l3);
  Rational a = rat(3, 2), b = rat(4, 5);
  QVector r = bch(*l3, ctx->clazz, a * unit_vector(3, 0), b * unit_vector(3, 1));
  QVector expect = a * unit_vector(3, 0) + b * unit_vector(3, 1) +
                   (a * b / 2) * unit_vector(3, 2);
  EXPECT_EQ(r, expect);
}

TEST(Bch, L55Fixture) {
  // log(x1 x2) = X1 + X2 + 1/2 X3 + 1/12 X4 in l_{5,5}
  auto a = std::make_shared<const LieAlgebra>(l55_algebra());
  auto ctx = make_group(a);
  QVector r = bch(*a, ctx->clazz, unit_vector(5, 0), unit_vector(5, 1));
  QVector expect = unit_vector(5, 0) + unit_vector(5, 1);
  expect[2] = rat(1, 2);
  expect[3] = rat(1, 12);
  EXPECT_EQ(r, expect);
}

TEST(Bch, IdentityLaws) {
  auto a = std::make_shared<const LieAlgebra>(corner_filiform(6));
  auto ctx = make_group(a);
  std::mt19937_64 rng(5);
  QVector x = random_vector(6, rng);
  EXPECT_EQ(bch(*a, ctx->clazz, x, zero_vector(6)), x);
  EXPECT_EQ(bch(*a, ctx->clazz, zero_vector(6), x), x);
  QVector nx = x;
  for (auto& c : nx) c = -c;
  EXPECT_TRUE(is_zero(bch(*a, ctx->clazz, x, nx)));
}

TEST(Bch, MatchesDynkinOracle) {
  std::mt19937_64 rng(23);
  std::vector<LieAlgebra> algebras = {model_filiform(3), model_filiform(5),
                                      corner_filiform(5), l55_algebra(), heisenberg(2),
                                      central_product(l55_algebra(), model_filiform(3))};
  for (const auto& alg : algebras) {
    auto a = std::make_shared<const LieAlgebra>(alg);
    auto ctx = make_group(a);
    ASSERT_LE(ctx->clazz, 5u);
    for (int t = 0; t < 8; ++t) {
      QVector x = random_vector(a->dim(), rng), y = random_vector(a->dim(), rng);
      EXPECT_EQ(bch(*a, ctx->clazz, x, y), dynkin_bch(*a, ctx->clazz, x, y));
    }
  }
}

TEST(Bch, Associativity) {
  std::mt19937_64 rng(29);
  std::vector<LieAlgebra> algebras = {model_filiform(6), corner_filiform(7), l55_algebra(),
                                      k7_algebra(rat(2, 3)), g_lambda(rat(1, 2))};
  for (const auto& alg : algebras) {
    auto a = std::make_shared<const LieAlgebra>(alg);
    auto ctx = make_group(a);
    for (int t = 0; t < 100; ++t) {
      GroupElement g(ctx, random_vector(a->dim(), rng));
      GroupElement h(ctx, random_vector(a->dim(), rng));
      GroupElement k(ctx, random_vector(a->dim(), rng));
      EXPECT_EQ(mul(mul(g, h), k), mul(g, mul(h, k)));
    }
  }
}

TEST(Bch, PowLaws) {
  auto a = std::make_shared<const LieAlgebra>(corner_filiform(6));
  auto ctx = make_group(a);
  std::mt19937_64 rng(31);
  GroupElement g(ctx, random_vector(6, rng));
  EXPECT_TRUE(pow(g, rat(0)).is_identity());
  EXPECT_EQ(pow(g, rat(1)), g);
  EXPECT_EQ(mul(pow(g, rat(1, 2)), pow(g, rat(1, 2))), g);
  EXPECT_EQ(mul(pow(g, rat(2, 3)), pow(g, rat(1, 3))), g);
  // pow(g, a+b) = pow(g,a) pow(g,b)
  EXPECT_EQ(pow(g, rat(5, 6)), mul(pow(g, rat(1, 2)), pow(g, rat(1, 3))));
}

TEST(Bch, CornerCommutatorFixture) {
  // [x2, x3] = x_p in L_p^corner for p = 5..8
  for (std::size_t p = 5; p <= 8; ++p) {
    auto a = std::make_shared<const LieAlgebra>(corner_filiform(p));
    auto ctx = make_group(a);
    GroupElement x2 = GroupElement::exp_basis(ctx, 1);
    GroupElement x3 = GroupElement::exp_basis(ctx, 2);
    EXPECT_EQ(commutator(x2, x3), GroupElement::exp_basis(ctx, p - 1)) << "p=" << p;
  }
}

TEST(Bch, SimpleCommutatorPowerScaling) {
  // [x1^s, x2^s] = exp(s^2 Z) in Heisenberg
  auto h = std::make_shared<const LieAlgebra>(model_filiform(3));
  auto ctx = make_group(h);
  for (const Rational& s : {rat(1), rat(3, 2), rat(2), rat(5)}) {
    GroupElement g = commutator(pow(GroupElement::exp_basis(ctx, 0), s),
                                pow(GroupElement::exp_basis(ctx, 1), s));
    QVector expect = zero_vector(3);
    expect[2] = s * s;
    EXPECT_EQ(g.log(), expect);
  }
  // [g, identity] = identity
  GroupElement g = GroupElement::exp_basis(ctx, 0);
  EXPECT_TRUE(simple_commutator({g, GroupElement::identity(ctx)}).is_identity());
}

TEST(Bch, SimpleKFoldScaling) {
  // [x1^s, ..., x_k^s] = x^{s^k} when [x1,...,xk] is central (class k).
  // In l_5 (class 4): [x1, x1, x1, x2] = exp(X5).
  auto a = std::make_shared<const LieAlgebra>(model_filiform(5));
  auto ctx = make_group(a);
  GroupElement x1 = GroupElement::exp_basis(ctx, 0);
  GroupElement x2 = GroupElement::exp_basis(ctx, 1);
  GroupElement base = simple_commutator({x1, x1, x1, x2});
  EXPECT_EQ(base, GroupElement::exp_basis(ctx, 4));
  for (const Rational& s : {rat(2), rat(3, 2)}) {
    GroupElement scaled = simple_commutator(
        {pow(x1, s), pow(x1, s), pow(x1, s), pow(x2, s)});
    EXPECT_EQ(scaled, pow(base, s * s * s * s));
  }
}

TEST(Bch, TruncationProjectionConsistency) {
  // Computing in g then projecting to g/C^j equals computing in g/C^j.
  auto a = std::make_shared<const LieAlgebra>(model_filiform(6));
  auto ctx = make_group(a);
  auto series = lower_central_series(*a);
  std::mt19937_64 rng(37);
  for (std::size_t j = 2; j < series.size(); ++j) {
    LieAlgebra qa = quotient(*a, series[j]);
    auto q = std::make_shared<const LieAlgebra>(qa);
    auto qctx = make_group(q);
    for (int t = 0; t < 5; ++t) {
      QVector x = random_vector(6, rng), y = random_vector(6, rng);
      QVector full = bch(*a, ctx->clazz, x, y);
      // project: for model filiform, C^j = span(X_{j+1}..X_p), quotient keeps
      // the leading coordinates.
      QVector px(q->dim()), py(q->dim()), pfull(q->dim());
      for (std::size_t i = 0; i < q->dim(); ++i) {
        px[i] = x[i];
        py[i] = y[i];
        pfull[i] = full[i];
      }
      EXPECT_EQ(bch(*q, qctx->clazz, px, py), pfull);
    }
  }
}

TEST(Bch, CentralFactorSplitsOffConjugation) {
  // conj(g * z) = conj(g) * z for central z: the central part is untouched,
  // which is what winding computations rely on.
  auto a = std::make_shared<const LieAlgebra>(l55_algebra());
  auto ctx = make_group(a);
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) {
    GroupElement g(ctx, random_vector(5, rng));
    GroupElement h(ctx, random_vector(5, rng));
    GroupElement z = pow(GroupElement::exp_basis(ctx, 3), rat(7, 3));  // central X4
    GroupElement lhs = mul(mul(inv(h), mul(g, z)), h);
    GroupElement rhs = mul(mul(mul(inv(h), g), h), z);
    EXPECT_EQ(lhs, rhs);
    // and central elements are fixed by conjugation
    EXPECT_EQ(mul(mul(inv(h), z), h), z);
  }
}

TEST(Bch, LogXiLeadingCoefficient) {
  // In l_p^corner with x_{i+1} = [x1, x_i]: log x_i = X_i + higher, leading
  // coefficient exactly 1.
  for (std::size_t p : {5, 6, 7}) {
    auto a = std::make_shared<const LieAlgebra>(corner_filiform(p));
    auto ctx = make_group(a);
    GroupElement x1 = GroupElement::exp_basis(ctx, 0);
    GroupElement xi = GroupElement::exp_basis(ctx, 1);  // x2
    for (std::size_t i = 3; i <= p; ++i) {
      xi = commutator(x1, xi);
      for (std::size_t k = 0; k + 1 < i; ++k) EXPECT_EQ(xi.log()[k], rat(0));
      EXPECT_EQ(xi.log()[i - 1], rat(1));
    }
  }
}
