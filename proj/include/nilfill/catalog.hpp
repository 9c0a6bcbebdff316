#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilfill/forms.hpp"
#include "nilfill/presentation.hpp"

namespace nilfill {

// ---------------------------------------------------------------------------
// Named Lie algebras
// ---------------------------------------------------------------------------

inline LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("A" + std::to_string(i + 1));
  return LieAlgebra(n, names);
}

// Model filiform l_p: [X1, Xi] = X_{i+1} for 2 <= i <= p-1.
inline LieAlgebra model_filiform(std::size_t p) {
  if (p < 3) throw std::invalid_argument("model_filiform: p >= 3");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= p; ++i) names.push_back("X" + std::to_string(i));
  LieAlgebra a(p, names);
  for (std::size_t i = 2; i <= p - 1; ++i)
    a.set_bracket(0, i - 1, unit_vector(p, i));
  std::vector<int> w(p);
  w[0] = 1;
  w[1] = 1;
  for (std::size_t i = 3; i <= p; ++i) w[i - 1] = static_cast<int>(i - 1);
  a.set_weights(w);
  a.set_designated_center(p - 1);
  return a;
}

// Corner filiform l_p^|_ : model brackets plus [X2, X3] = X_p (p >= 5).
inline LieAlgebra corner_filiform(std::size_t p) {
  if (p < 5) throw std::invalid_argument("corner_filiform: p >= 5");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= p; ++i) names.push_back("X" + std::to_string(i));
  LieAlgebra a(p, names);
  for (std::size_t i = 2; i <= p - 1; ++i)
    a.set_bracket(0, i - 1, unit_vector(p, i));
  a.set_bracket(1, 2, unit_vector(p, p - 1));
  // Grading: X1 -> 1, X2 -> p-3, Xk -> p-5+k for 3 <= k <= p.
  std::vector<int> w(p);
  w[0] = 1;
  w[1] = static_cast<int>(p) - 3;
  for (std::size_t k = 3; k <= p; ++k) w[k - 1] = static_cast<int>(p + k) - 5;
  a.set_weights(w);
  a.set_designated_center(p - 1);
  return a;
}

// Heisenberg h_{2m+1}: pairs [A_i, B_i] = Z.
inline LieAlgebra heisenberg(std::size_t m) {
  if (m < 1) throw std::invalid_argument("heisenberg: m >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back("A" + std::to_string(i));
  for (std::size_t i = 1; i <= m; ++i) names.push_back("B" + std::to_string(i));
  names.push_back("Z");
  LieAlgebra a(2 * m + 1, names);
  for (std::size_t i = 0; i < m; ++i)
    a.set_bracket(i, m + i, unit_vector(2 * m + 1, 2 * m));
  std::vector<int> w(2 * m + 1, 1);
  w[2 * m] = 2;
  a.set_weights(w);
  a.set_designated_center(2 * m);
  return a;
}

// l_{5,5}: [X1,X2] = X3, [X1,X3] = X4 = [X2,X5].
inline LieAlgebra l55_algebra() {
  std::vector<std::string> names = {"X1", "X2", "X3", "X4", "X5"};
  LieAlgebra a(5, names);
  a.set_bracket(0, 1, unit_vector(5, 2));
  a.set_bracket(0, 2, unit_vector(5, 3));
  a.set_bracket(1, 4, unit_vector(5, 3));
  a.set_designated_center(3);
  return a;
}

// k_{7,lambda}: filiform of class 6 with parameter lambda != 0.
inline LieAlgebra k7_algebra(const Rational& lambda) {
  if (lambda == 0) throw std::invalid_argument("k7: lambda must be nonzero");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= 7; ++i) names.push_back("Y" + std::to_string(i));
  LieAlgebra a(7, names);
  for (std::size_t i = 2; i <= 6; ++i) a.set_bracket(0, i - 1, unit_vector(7, i));
  a.set_bracket(1, 2, unit_vector(7, 4));                 // [Y2,Y3] = Y5
  a.set_bracket(1, 3, unit_vector(7, 5));                 // [Y2,Y4] = Y6
  a.set_bracket(1, 4, lambda * unit_vector(7, 6));        // [Y2,Y5] = lambda Y7
  a.set_bracket(2, 3, (1 - lambda) * unit_vector(7, 6));  // [Y3,Y4] = (1-lambda) Y7
  a.set_designated_center(6);
  return a;
}

// j_{k,m} = l_{k+1} x_Z h_{2m+1} and the corner variant.
inline LieAlgebra j_km(std::size_t k, std::size_t m) {
  return central_product(model_filiform(k + 1), heisenberg(m));
}
inline LieAlgebra j_corner_km(std::size_t k, std::size_t m) {
  return central_product(corner_filiform(k + 1), heisenberg(m));
}

// g_lambda = l_8 x_Z k_{7,lambda}, 14-dimensional of class 7.
inline LieAlgebra g_lambda(const Rational& lambda) {
  return central_product(model_filiform(8), k7_algebra(lambda));
}

// ---------------------------------------------------------------------------
// Random two-step algebras from surjective mu in L(m,k)
// ---------------------------------------------------------------------------

struct SampledLmk {
  LieAlgebra algebra;
  bool conditions_ok = false;  // m^2+k^2 < C(m,2)k and C(m,3)/m < k
  bool surjective = false;
  unsigned resamples = 0;
};

inline SampledLmk sample_Lmk(std::size_t m, std::size_t k, std::uint64_t seed) {
  SampledLmk out;
  Rational c2 = binom(Rational(static_cast<long>(m)), 2);
  Rational c3 = binom(Rational(static_cast<long>(m)), 3);
  out.conditions_ok = Rational(static_cast<long>(m * m + k * k)) < c2 * Rational(static_cast<long>(k)) &&
                      c3 / Rational(static_cast<long>(m)) < Rational(static_cast<long>(k));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  const std::size_t pairs = m * (m - 1) / 2;
  for (unsigned attempt = 0; attempt < 64; ++attempt) {
    QMatrix mu(pairs, k);
    for (std::size_t r = 0; r < pairs; ++r)
      for (std::size_t c = 0; c < k; ++c) mu(r, c) = coeff(rng);
    if (rank(mu) != k) {
      ++out.resamples;
      continue;
    }
    out.surjective = true;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back("E" + std::to_string(i));
    for (std::size_t i = 1; i <= k; ++i) names.push_back("V" + std::to_string(i));
    LieAlgebra a(m + k, names);
    std::size_t r = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j, ++r) {
        QVector v = zero_vector(m + k);
        for (std::size_t c = 0; c < k; ++c) v[m + c] = mu(r, c);
        if (!is_zero(v)) a.set_bracket(i, j, v);
      }
    std::vector<int> w(m + k, 1);
    for (std::size_t c = 0; c < k; ++c) w[m + c] = 2;
    a.set_weights(w);
    out.algebra = std::move(a);
    return out;
  }
  throw std::runtime_error("sample_Lmk: no surjective mu found");
}

// ---------------------------------------------------------------------------
// Compact presentations (parametric relator schemas)
// ---------------------------------------------------------------------------

namespace detail {

inline RelatorSchema power_schema(std::size_t gen, const std::string& gname) {
  RelatorSchema s;
  s.name = "pow(" + gname + ")";
  s.kind = RelatorKind::Power;
  s.nparams = 2;
  s.box = {{rat(-1), rat(1)}, {rat(-1), rat(1)}};
  ExponentExpr a = ExponentExpr::param(0, 2);
  ExponentExpr b = ExponentExpr::param(1, 2);
  ExponentExpr mab;
  for (auto t : a.terms) {
    t.coeff = -t.coeff;
    mab.terms.push_back(t);
  }
  for (auto t : b.terms) {
    t.coeff = -t.coeff;
    mab.terms.push_back(t);
  }
  s.word = {{gen, a}, {gen, b}, {gen, mab}};
  return s;
}

inline RelatorSchema comm_schema(const std::string& name, std::size_t gi, std::size_t gj,
                                 std::vector<SchemaLetter> rhs) {
  RelatorSchema s;
  s.name = name;
  s.kind = RelatorKind::Commutator;
  s.nparams = 2;
  s.box = {{rat(-1), rat(1)}, {rat(-1), rat(1)}};
  s.gi = gi;
  s.gj = gj;
  s.rhs = std::move(rhs);
  finalize_commutator_schema(s);
  return s;
}

}  // namespace detail

// Compact presentation P_p (model) or P_p^|_ (corner) of the filiform group,
// over the box generators x_i^a, |a| <= 1.
inline Presentation compact_filiform_presentation(std::size_t p, bool corner) {
  auto algebra = std::make_shared<const LieAlgebra>(corner ? corner_filiform(p)
                                                           : model_filiform(p));
  auto ctx = make_group(algebra);
  Presentation pres(std::string(corner ? "P" : "P") + std::to_string(p) +
                        (corner ? "_corner" : ""),
                    ctx);
  for (std::size_t i = 0; i < p; ++i)
    pres.add_generator({"x" + std::to_string(i + 1), GroupElement::exp_basis(ctx, i), true});
  for (std::size_t i = 0; i < p; ++i)
    pres.add_relator(detail::power_schema(i, "x" + std::to_string(i + 1)));

  auto binom_tail = [p](std::size_t i) {
    // rhs of [x1^a, x_i^b]: prod_{m>=1} x_{i+m}^{(-1)^{m+1} C(a,m) b}
    std::vector<SchemaLetter> rhs;
    for (std::size_t mdeg = 1; i + mdeg <= p; ++mdeg) {
      Rational sign = (mdeg % 2 == 1) ? 1 : -1;
      rhs.push_back({i + mdeg - 1, ExponentExpr::binom_term(sign, 2, 0, static_cast<unsigned>(mdeg), 1, 1)});
    }
    return rhs;
  };

  for (std::size_t i = 2; i <= p - 1; ++i) {
    if (corner && i == 2) continue;
    pres.add_relator(detail::comm_schema("[x1^a,x" + std::to_string(i) + "^b]", 0, i - 1,
                                         binom_tail(i)));
  }
  if (corner) {
    // [x1^a, x2^b] with the extra -a*C(b,2) on the x_p exponent.
    auto rhs = binom_tail(2);
    rhs.back().exp += ExponentExpr::binom_term(Rational(-1), 2, 0, 1, 1, 2);
    pres.add_relator(detail::comm_schema("[x1^a,x2^b]", 0, 1, std::move(rhs)));
    // [x2^a, x3^b] = x_p^{ab}
    std::vector<SchemaLetter> cr = {{p - 1, ExponentExpr::binom_term(Rational(1), 2, 0, 1, 1, 1)}};
    pres.add_relator(detail::comm_schema("[x2^a,x3^b]", 1, 2, std::move(cr)));
  }
  return pres;
}

// Compact presentation P_{5,5} of L_{5,5}.
inline Presentation compact_l55_presentation() {
  auto algebra = std::make_shared<const LieAlgebra>(l55_algebra());
  auto ctx = make_group(algebra);
  Presentation pres("P55", ctx);
  for (std::size_t i = 0; i < 5; ++i)
    pres.add_generator({"x" + std::to_string(i + 1), GroupElement::exp_basis(ctx, i), true});
  for (std::size_t i = 0; i < 5; ++i)
    pres.add_relator(detail::power_schema(i, "x" + std::to_string(i + 1)));
  std::vector<SchemaLetter> r12 = {
      {2, ExponentExpr::binom_term(Rational(1), 2, 0, 1, 1, 1)},
      {3, ExponentExpr::binom_term(Rational(-1), 2, 0, 2, 1, 1)}};
  pres.add_relator(detail::comm_schema("[x1^a,x2^b]", 0, 1, std::move(r12)));
  std::vector<SchemaLetter> r13 = {{3, ExponentExpr::binom_term(Rational(1), 2, 0, 1, 1, 1)}};
  pres.add_relator(detail::comm_schema("[x1^a,x3^b]", 0, 2, std::move(r13)));
  std::vector<SchemaLetter> r25 = {{3, ExponentExpr::binom_term(Rational(1), 2, 0, 1, 1, 1)}};
  pres.add_relator(detail::comm_schema("[x2^a,x5^b]", 1, 4, std::move(r25)));
  return pres;
}

// ---------------------------------------------------------------------------
// Lattice (pc-style) presentations: integer generators, full pair table
// ---------------------------------------------------------------------------

struct PcPair {
  std::size_t i, j;  // 0-based generator indices, i < j
  std::vector<SchemaLetter> rhs;
};

// Integer lattice presentation over exp(X_i) generators: all pairs carry a
// commutator schema; pairs missing from `pairs` commute.
inline Presentation lattice_presentation(const std::string& name, GroupContextPtr ctx,
                                         const std::vector<std::string>& gen_names,
                                         const std::vector<std::size_t>& gen_basis,
                                         const std::vector<PcPair>& pairs) {
  Presentation pres(name, ctx);
  for (std::size_t g = 0; g < gen_names.size(); ++g)
    pres.add_generator({gen_names[g], GroupElement::exp_basis(ctx, gen_basis[g]), false});
  std::map<std::pair<std::size_t, std::size_t>, const PcPair*> table;
  for (const auto& pr : pairs) table[{pr.i, pr.j}] = &pr;
  for (std::size_t i = 0; i < gen_names.size(); ++i)
    for (std::size_t j = i + 1; j < gen_names.size(); ++j) {
      auto it = table.find({i, j});
      std::vector<SchemaLetter> rhs;
      if (it != table.end()) rhs = it->second->rhs;
      pres.add_relator(detail::comm_schema(
          "[" + gen_names[i] + "," + gen_names[j] + "]", i, j, std::move(rhs)));
    }
  return pres;
}

// Single-run right-hand side x_g^{c*a*b} for pc tables.
inline std::vector<SchemaLetter> pc_rhs(std::size_t gen, const Rational& c = Rational(1)) {
  return {{gen, ExponentExpr::binom_term(c, 2, 0, 1, 1, 1)}};
}

// ---------------------------------------------------------------------------
// Adapted presentations for central products
// ---------------------------------------------------------------------------

// Combines compact presentations of the factors over the central-product
// group: generators and relators of both factors, pairwise cross
// commutation, and the center identification word z_K * z_L^{-1}.
struct AdaptedPresentation {
  Presentation presentation;
  std::vector<std::size_t> k_gens, l_gens;  // generator ids per factor
};

inline AdaptedPresentation adapted_presentation(
    const std::string& name, const Presentation& pk, const Presentation& pl,
    const CentralProduct& cp, std::size_t zk_gen, std::size_t zl_gen,
    const std::string& l_prefix = "y") {
  auto algebra = std::make_shared<const LieAlgebra>(cp.algebra);
  auto ctx = make_group(algebra);
  AdaptedPresentation out{Presentation(name, ctx), {}, {}};
  Presentation& pres = out.presentation;

  auto lift = [&](const GroupElement& g, const std::vector<std::size_t>& map) {
    QVector v = zero_vector(algebra->dim());
    for (std::size_t i = 0; i < map.size(); ++i) v[map[i]] += g.log()[i];
    return GroupElement(ctx, v);
  };

  for (const auto& g : pk.generators())
    out.k_gens.push_back(pres.add_generator({g.name, lift(g.image, cp.a_map), g.one_parameter}));
  for (const auto& g : pl.generators()) {
    std::string nm = g.name;
    if (pres.generator_index(nm)) nm = l_prefix + nm;
    out.l_gens.push_back(pres.add_generator({nm, lift(g.image, cp.b_map), g.one_parameter}));
  }

  auto reindex = [](RelatorSchema s, const std::vector<std::size_t>& gmap) {
    for (auto& l : s.word) l.gen = gmap[l.gen];
    for (auto& l : s.rhs) l.gen = gmap[l.gen];
    if (s.kind == RelatorKind::Commutator) {
      s.gi = gmap[s.gi];
      s.gj = gmap[s.gj];
    }
    return s;
  };
  for (const auto& r : pk.relators()) pres.add_relator(reindex(r, out.k_gens));
  for (const auto& r : pl.relators()) pres.add_relator(reindex(r, out.l_gens));

  // Cross commutation [a^s, b^t] = 1 for a in S_K, b in S_L.
  for (auto gk : out.k_gens)
    for (auto gl : out.l_gens)
      pres.add_relator(detail::comm_schema(
          "[" + pres.generators()[gk].name + "," + pres.generators()[gl].name + "]", gk, gl, {}));

  // Center identification z_K = z_L.
  RelatorSchema ident;
  ident.name = "center-ident";
  ident.kind = RelatorKind::Plain;
  ident.nparams = 0;
  ident.word = {{out.k_gens[zk_gen], ExponentExpr::constant(Rational(1), 0)},
                {out.l_gens[zl_gen], ExponentExpr::constant(Rational(-1), 0)}};
  pres.add_relator(std::move(ident));
  return out;
}

// ---------------------------------------------------------------------------
// Catalog entries and fixtures
// ---------------------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  LieAlgebraPtr algebra;
  GroupContextPtr group;
  std::optional<Presentation> presentation;  // compact, when available
  std::string provenance;
};

inline CatalogEntry make_entry(const std::string& name, LieAlgebra a,
                               const std::string& provenance,
                               std::optional<Presentation> pres = std::nullopt) {
  auto ptr = std::make_shared<const LieAlgebra>(std::move(a));
  auto rep = validate(*ptr);
  if (!rep.ok) throw std::logic_error("catalog entry '" + name + "' invalid: " + rep.message);
  return CatalogEntry{name, ptr, make_group(ptr), std::move(pres), provenance};
}

// de Graaf's names for the <=5-dimensional algebras with 1-dim centre.
inline LieAlgebra algebra_by_degraaf(const std::string& label) {
  if (label == "L_{3,2}") return model_filiform(3);
  if (label == "L_{4,3}") return model_filiform(4);
  if (label == "L_{5,4}") return heisenberg(2);
  if (label == "L_{5,5}") return l55_algebra();
  if (label == "L_{5,6}") return corner_filiform(5);
  if (label == "L_{5,7}") return model_filiform(5);
  throw std::invalid_argument("unknown de Graaf label: " + label);
}

struct Table1Row {
  std::string k_label, l_label;
  std::size_t class_k, class_l, dim;
};

// The 21 central products with both factors of dimension <= 5 and
// one-dimensional centre. Classes are those of the factors as computed from
// the algebras (the source table prints l = 3 for the L_{3,2} rows at k = 4;
// the computed class of L_{3,2} is 2).
inline std::vector<Table1Row> table1_rows() {
  return {
      {"L_{3,2}", "L_{3,2}", 2, 2, 5},  {"L_{5,4}", "L_{3,2}", 2, 2, 7},
      {"L_{5,4}", "L_{5,4}", 2, 2, 9},  {"L_{4,3}", "L_{3,2}", 3, 2, 6},
      {"L_{5,5}", "L_{3,2}", 3, 2, 7},  {"L_{4,3}", "L_{5,4}", 3, 2, 8},
      {"L_{5,5}", "L_{5,4}", 3, 2, 9},  {"L_{4,3}", "L_{4,3}", 3, 3, 7},
      {"L_{5,5}", "L_{4,3}", 3, 3, 8},  {"L_{5,5}", "L_{5,5}", 3, 3, 9},
      {"L_{5,6}", "L_{5,4}", 4, 2, 9},  {"L_{5,7}", "L_{5,4}", 4, 2, 9},
      {"L_{5,7}", "L_{3,2}", 4, 2, 7},  {"L_{5,6}", "L_{3,2}", 4, 2, 7},
      {"L_{5,7}", "L_{4,3}", 4, 3, 8},  {"L_{5,6}", "L_{4,3}", 4, 3, 8},
      {"L_{5,7}", "L_{5,5}", 4, 3, 9},  {"L_{5,6}", "L_{5,5}", 4, 3, 9},
      {"L_{5,7}", "L_{5,7}", 4, 4, 9},  {"L_{5,7}", "L_{5,6}", 4, 4, 9},
      {"L_{5,6}", "L_{5,6}", 4, 4, 9},
  };
}

struct Table3Row {
  std::string k_label, l_label;
  std::vector<std::size_t> betti;        // of the central product
  std::vector<std::size_t> betti_gr;     // of its Carnot-graded algebra
};

// Betti-number table for the non-Carnot low-dimensional central products.
inline std::vector<Table3Row> table3_rows() {
  return {
      {"L_{5,5}", "L_{3,2}", {1, 5, 10, 11, 11, 10, 5, 1}, {1, 5, 11, 15, 15, 11, 5, 1}},
      {"L_{5,5}", "L_{4,3}", {1, 5, 11, 14, 14, 14, 11, 5, 1}, {1, 5, 11, 15, 16, 15, 11, 5, 1}},
      {"L_{5,5}", "L_{5,5}", {1, 6, 16, 25, 26, 26, 25, 16, 6, 1}, {1, 6, 16, 25, 26, 26, 25, 16, 6, 1}},
      {"L_{5,5}", "L_{5,4}", {1, 7, 21, 34, 33, 33, 34, 21, 7, 1}, {1, 7, 21, 34, 37, 37, 34, 21, 7, 1}},
      {"L_{5,7}", "L_{3,2}", {1, 4, 6, 9, 9, 6, 4, 1}, {1, 4, 8, 11, 11, 8, 4, 1}},
      {"L_{5,6}", "L_{3,2}", {1, 4, 6, 8, 8, 6, 4, 1}, {1, 4, 8, 11, 11, 8, 4, 1}},
      {"L_{5,7}", "L_{4,3}", {1, 4, 7, 9, 10, 9, 7, 4, 1}, {1, 4, 9, 14, 16, 14, 9, 4, 1}},
      {"L_{5,6}", "L_{4,3}", {1, 4, 7, 10, 12, 10, 7, 4, 1}, {1, 4, 9, 14, 16, 14, 9, 4, 1}},
      {"L_{5,6}", "L_{5,5}", {1, 5, 11, 16, 21, 21, 16, 11, 5, 1}, {1, 5, 11, 17, 22, 22, 17, 11, 5, 1}},
      {"L_{5,7}", "L_{5,5}", {1, 5, 11, 16, 19, 19, 16, 11, 5, 1}, {1, 5, 11, 17, 22, 22, 17, 11, 5, 1}},
  };
}

inline LieAlgebra table1_product(const Table1Row& row) {
  return central_product(algebra_by_degraaf(row.k_label), algebra_by_degraaf(row.l_label));
}

// Compact presentation of a <=5-dim factor by de Graaf label.
inline Presentation presentation_by_degraaf(const std::string& label) {
  if (label == "L_{3,2}") return compact_filiform_presentation(3, false);
  if (label == "L_{4,3}") return compact_filiform_presentation(4, false);
  if (label == "L_{5,5}") return compact_l55_presentation();
  if (label == "L_{5,6}") return compact_filiform_presentation(5, true);
  if (label == "L_{5,7}") return compact_filiform_presentation(5, false);
  if (label == "L_{5,4}") {
    // H_5 as a compact presentation: pairs [a_i^s, b_i^t] = z^{st}.
    auto algebra = std::make_shared<const LieAlgebra>(heisenberg(2));
    auto ctx = make_group(algebra);
    Presentation pres("H5", ctx);
    std::vector<std::string> names = {"a1", "a2", "b1", "b2", "z"};
    for (std::size_t i = 0; i < 5; ++i)
      pres.add_generator({names[i], GroupElement::exp_basis(ctx, i), true});
    for (std::size_t i = 0; i < 5; ++i) pres.add_relator(detail::power_schema(i, names[i]));
    pres.add_relator(detail::comm_schema("[a1,b1]", 0, 2, pc_rhs(4)));
    pres.add_relator(detail::comm_schema("[a2,b2]", 1, 3, pc_rhs(4)));
    pres.add_relator(detail::comm_schema("[a1,a2]", 0, 1, {}));
    pres.add_relator(detail::comm_schema("[a1,b2]", 0, 3, {}));
    pres.add_relator(detail::comm_schema("[a2,b1]", 1, 2, {}));
    pres.add_relator(detail::comm_schema("[b1,b2]", 2, 3, {}));
    pres.add_relator(detail::comm_schema("[a1,z]", 0, 4, {}));
    pres.add_relator(detail::comm_schema("[a2,z]", 1, 4, {}));
    pres.add_relator(detail::comm_schema("[b1,z]", 2, 4, {}));
    pres.add_relator(detail::comm_schema("[b2,z]", 3, 4, {}));
    return pres;
  }
  throw std::invalid_argument("no presentation for label: " + label);
}

// Index of the generator whose image spans the centre, for adapted products.
inline std::size_t center_generator_index(const std::string& label) {
  if (label == "L_{3,2}") return 2;   // x3
  if (label == "L_{4,3}") return 3;   // x4
  if (label == "L_{5,5}") return 3;   // x4
  if (label == "L_{5,6}") return 4;   // x5
  if (label == "L_{5,7}") return 4;   // x5
  if (label == "L_{5,4}") return 4;   // z
  throw std::invalid_argument("no center generator for label: " + label);
}

inline AdaptedPresentation adapted_table1_presentation(const Table1Row& row) {
  auto ka = algebra_by_degraaf(row.k_label);
  auto la = algebra_by_degraaf(row.l_label);
  auto cp = central_product_with_maps(ka, la);
  return adapted_presentation(row.k_label + " xZ " + row.l_label,
                              presentation_by_degraaf(row.k_label),
                              presentation_by_degraaf(row.l_label), cp,
                              center_generator_index(row.k_label),
                              center_generator_index(row.l_label));
}

}  // namespace nilfill
