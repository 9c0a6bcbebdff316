#include "nilfill/forms.hpp"

#include <gtest/gtest.h>

#include "nilfill/catalog.hpp"

using namespace nilfill;

TEST(Forms, ExteriorDerivativeFiliformDual) {
  // In the l_p dual: d xi_3 = -xi_1 ^ xi_2, d xi_1 = 0.
  LieAlgebra l5 = model_filiform(5);
  KForm dxi3 = exterior_derivative(l5, basis_one_form(5, 2));
  KForm expect(5, 2);
  expect.add({0, 1}, rat(-1));
  EXPECT_EQ(dxi3, expect);
  EXPECT_TRUE(exterior_derivative(l5, basis_one_form(5, 0)).is_zero());
  EXPECT_TRUE(exterior_derivative(l5, basis_one_form(5, 1)).is_zero());
}

TEST(Forms, DSquaredZero) {
  for (const auto& a : {model_filiform(6), corner_filiform(6), l55_algebra(),
                        central_product(l55_algebra(), model_filiform(3)),
                        k7_algebra(rat(2, 3))}) {
    for (std::size_t k = 1; k + 2 <= a.dim(); ++k) {
      auto combos = rank(differential_matrix(a, k));  // force build
      (void)combos;
      // dized twice on every basis k-form
      auto base = detail::combinations(a.dim(), k);
      for (const auto& idx : base) {
        KForm f(a.dim(), k);
        f.add(idx, rat(1));
        KForm ddf = exterior_derivative(a, exterior_derivative(a, f));
        EXPECT_TRUE(ddf.is_zero());
      }
    }
  }
}

TEST(Forms, WedgeAntisymmetry) {
  KForm a = basis_one_form(4, 0), b = basis_one_form(4, 2);
  KForm ab = wedge(a, b), ba = wedge(b, a);
  EXPECT_EQ(ab, -ba);
  EXPECT_TRUE(wedge(a, a).is_zero());
}

TEST(Forms, JkmDerivativeTableEntry) {
  // In the j_{k,m} dual: d(xi_1 ^ zeta) = xi_1 ^ omega, with
  // d zeta = -xi_1 ^ xi_k - omega and omega = sum theta_j ^ theta_{j+m}.
  std::size_t k = 4, m = 2;
  LieAlgebra j = j_km(k, m);
  // Basis layout from central_product(model_filiform(k+1), heisenberg(m)):
  // X1..X_{k+1} (X_{k+1} = shared Z = zeta-direction), then A1..Am,B1..Bm.
  std::size_t zeta = k;  // index of X_{k+1}
  KForm xi1zeta(j.dim(), 2);
  xi1zeta.add({0, zeta}, rat(1));
  KForm d = exterior_derivative(j, xi1zeta);
  // expected: xi_1 ^ omega = sum_j xi_1 ^ theta_j ^ theta_{j+m}
  KForm expect(j.dim(), 3);
  for (std::size_t t = 0; t < m; ++t) expect.add({0, k + 1 + t, k + 1 + m + t}, rat(1));
  EXPECT_EQ(d, expect);
}

TEST(Forms, BettiAbelian) {
  auto b = betti_numbers(abelian(4));
  std::vector<std::size_t> expect = {1, 4, 6, 4, 1};
  EXPECT_EQ(b, expect);
}

TEST(Forms, BettiHeisenberg) {
  // b(h_3) = 1,2,2,1
  auto b = betti_numbers(model_filiform(3));
  std::vector<std::size_t> expect = {1, 2, 2, 1};
  EXPECT_EQ(b, expect);
}

TEST(Forms, BettiPalindromeAndEuler) {
  for (const auto& a : {model_filiform(5), corner_filiform(6), l55_algebra(),
                        j_km(3, 2), k7_algebra(rat(1, 3))}) {
    auto b = betti_numbers(a);
    ASSERT_EQ(b.size(), a.dim() + 1);
    EXPECT_EQ(b.front(), 1u);
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b[i], b[b.size() - 1 - i]);
    long euler = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
      euler += (i % 2 == 0) ? static_cast<long>(b[i]) : -static_cast<long>(b[i]);
    EXPECT_EQ(euler, 0);
  }
}

TEST(Forms, Table3FirstRow) {
  LieAlgebra g = central_product(l55_algebra(), model_filiform(3));
  std::vector<std::size_t> expect = {1, 5, 10, 11, 11, 10, 5, 1};
  EXPECT_EQ(betti_numbers(g), expect);
  std::vector<std::size_t> expect_gr = {1, 5, 11, 15, 15, 11, 5, 1};
  EXPECT_EQ(betti_numbers(carnot_graded(g)), expect_gr);
}

TEST(Forms, Table3AllRows) {
  for (const auto& row : table3_rows()) {
    LieAlgebra g = table1_product(Table1Row{row.k_label, row.l_label, 0, 0, 0});
    EXPECT_EQ(betti_numbers(g), row.betti) << row.k_label << " x " << row.l_label;
    EXPECT_EQ(betti_numbers(carnot_graded(g)), row.betti_gr)
        << "gr of " << row.k_label << " x " << row.l_label;
  }
}

TEST(Forms, B2FormulasSmall) {
  // b2(j_{k,m}) = floor((k+1)/2) - 1 + m(2m+3) at (k,m) = (3,2) and (4,2)
  for (std::size_t k : {3, 4}) {
    std::size_t m = 2;
    auto b = betti_numbers(j_km(k, m));
    std::size_t expect = (k + 1) / 2 - 1 + m * (2 * m + 3);
    EXPECT_EQ(b[2], expect) << "j_{" << k << "," << m << "}";
    auto bc = betti_numbers(j_corner_km(k, m));
    EXPECT_EQ(bc[2], b[2]);
    auto bgr = betti_numbers(direct_sum(model_filiform(k + 1), abelian(2 * m)));
    std::size_t expect_gr = (k + 2) / 2 + m * (2 * m + 3);
    EXPECT_EQ(bgr[2], expect_gr);
  }
}

TEST(Forms, CoboundaryCertificate) {
  // In l_{p-1} dual, theta_2 ^ theta_3 is closed and not a coboundary is
  // FALSE in general; here test both directions mechanically:
  LieAlgebra l4 = model_filiform(4);
  // d xi_4-dual? l4: brackets [X1,X2]=X3,[X1,X3]=X4. d xi_3 = -xi_1^xi_2 so
  // xi_1 ^ xi_2 is exact.
  KForm w(4, 2);
  w.add({0, 1}, rat(1));
  auto cert = coboundary_certificate(l4, w);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(exterior_derivative(l4, *cert), w);
  // xi_2 ^ xi_3 in l_4: d(xi_2^xi_3) = -xi_2 ^ d xi_3 ... check closed first
  KForm w23(4, 2);
  w23.add({1, 2}, rat(1));
  if (exterior_derivative(l4, w23).is_zero())
    EXPECT_FALSE(coboundary_certificate(l4, w23).has_value());
}

TEST(Forms, CentralExtensionHeisenberg) {
  // base abelian(2), omega = xi1 ^ xi2 -> l_3.
  auto base = std::make_shared<const LieAlgebra>(abelian(2));
  KForm w(2, 2);
  w.add({0, 1}, rat(1));
  CentralExtension e = central_extension(base, w);
  EXPECT_EQ(e.total->dim(), 3u);
  EXPECT_EQ(nilpotency_class(*e.total), 2u);
  EXPECT_EQ(betti_numbers(*e.total), betti_numbers(model_filiform(3)));
}

TEST(Forms, CentralExtensionCornerFiliform) {
  // base l_{p-1}, omega = xi_1 ^ xi_{p-1} + xi_2 ^ xi_3 -> l_p^corner.
  for (std::size_t p : {5, 6, 7}) {
    auto base = std::make_shared<const LieAlgebra>(model_filiform(p - 1));
    KForm w(p - 1, 2);
    w.add({0, p - 2}, rat(1));
    w.add({1, 2}, rat(1));
    CentralExtension e = central_extension(base, w);
    LieAlgebra expect = corner_filiform(p);
    ASSERT_EQ(e.total->dim(), p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j)
        EXPECT_EQ(e.total->basis_bracket(i, j), expect.basis_bracket(i, j))
            << "p=" << p << " (" << i << "," << j << ")";
  }
}

TEST(Forms, CentralExtensionRejectsNonClosed) {
  LieAlgebra l4 = model_filiform(4);
  auto base = std::make_shared<const LieAlgebra>(l4);
  KForm w(4, 2);
  w.add({0, 3}, rat(1));  // xi_1 ^ xi_4: d != 0? check
  KForm dw = exterior_derivative(l4, w);
  if (!dw.is_zero()) EXPECT_THROW(central_extension(base, w), std::invalid_argument);
}

TEST(Forms, ExtensionQuotientRoundTrip) {
  // Quotienting the total algebra by Z~ recovers the base structure
  // constants; re-extending with the induced cocycle recovers the total.
  auto base = std::make_shared<const LieAlgebra>(
      central_product(l55_algebra(), model_filiform(3)));
  KForm w(base->dim(), 2);
  w.add({1, 2}, rat(1));  // xi_2 ^ xi_3
  ASSERT_TRUE(exterior_derivative(*base, w).is_zero());
  CentralExtension e = central_extension(base, w);
  Subspace zspan = make_subspace({unit_vector(e.total->dim(), e.ztilde)});
  LieAlgebra q = quotient(*e.total, zspan);
  ASSERT_EQ(q.dim(), base->dim());
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i + 1; j < q.dim(); ++j)
      EXPECT_EQ(q.basis_bracket(i, j), base->basis_bracket(i, j));
  // induced cocycle = Z~ coordinate of total brackets
  KForm induced(base->dim(), 2);
  for (std::size_t i = 0; i < base->dim(); ++i)
    for (std::size_t j = i + 1; j < base->dim(); ++j) {
      Rational c = e.total->basis_bracket(i, j)[e.ztilde];
      if (c != 0) induced.add({i, j}, c);
    }
  EXPECT_EQ(induced, w);
}

TEST(Forms, GradedTwoCocycles) {
  // mu = 0 on (m,k) = (3,1): whole space, dim 3.
  LieAlgebra a = abelian(4);
  std::vector<int> w = {1, 1, 1, 2};
  a.set_weights(w);
  auto gc = graded_two_cocycles(a);
  EXPECT_EQ(gc.kernel.size(), 3u);

  // (m,k) = (6,4), sampled surjective mu: dim >= 24 - 20 = 4.
  auto sample = sample_Lmk(6, 4, 1);
  ASSERT_TRUE(sample.surjective);
  EXPECT_TRUE(sample.conditions_ok);
  auto gc2 = graded_two_cocycles(sample.algebra);
  EXPECT_GE(gc2.kernel.size(), 4u);
  // every kernel form is closed
  for (const auto& f : gc2.forms)
    EXPECT_TRUE(exterior_derivative(sample.algebra, f).is_zero());
  // rank of d_mu on E* (x) V* is at most C(6,3) = 20
  QMatrix dm(binom(rat(6), 3).get_num().get_ui(), 24);
  EXPECT_LE(24 - gc2.kernel.size(), 20u);
}

TEST(Forms, MinimalPairConditions) {
  // (m,k) = (6,4): 52 = m^2+k^2 < C(m,2) k = 60 and C(m,3)/m = 10/3 < 4.
  EXPECT_LT(6 * 6 + 4 * 4, 15 * 4);
  EXPECT_LT(rat(20, 6), rat(4));
  auto s = sample_Lmk(6, 4, 99);
  EXPECT_TRUE(s.conditions_ok);
  auto s31 = sample_Lmk(3, 1, 5);
  EXPECT_FALSE(s31.conditions_ok);  // conditions fail, sampling still allowed
  EXPECT_TRUE(s31.surjective);
}
