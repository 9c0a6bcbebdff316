#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nilfill/bch.hpp"
#include "nilfill/word.hpp"

namespace nilfill {

// Exponent expression: sum of coeff * prod_j binom(param_j, deg_j).
// Covers every relator exponent in the compact presentations (products of
// generalized binomials), exactly evaluable at rational parameters.
struct ExpTerm {
  Rational coeff;
  std::vector<unsigned> degs;
};

struct ExponentExpr {
  std::vector<ExpTerm> terms;

  static ExponentExpr constant(const Rational& c, std::size_t nparams) {
    if (c == 0) return {};
    return {{ExpTerm{c, std::vector<unsigned>(nparams, 0)}}};
  }
  static ExponentExpr param(std::size_t i, std::size_t nparams) {
    std::vector<unsigned> d(nparams, 0);
    d[i] = 1;
    return {{ExpTerm{Rational(1), d}}};
  }
  // coeff * binom(param_i, di) * binom(param_j, dj)
  static ExponentExpr binom_term(const Rational& coeff, std::size_t nparams,
                                 std::size_t i, unsigned di, std::size_t j, unsigned dj) {
    std::vector<unsigned> d(nparams, 0);
    d[i] += di;
    d[j] += dj;
    return {{ExpTerm{coeff, d}}};
  }

  ExponentExpr& operator+=(const ExponentExpr& o) {
    for (const auto& t : o.terms) terms.push_back(t);
    return *this;
  }

  Rational eval(const std::vector<Rational>& params) const {
    Rational s(0);
    for (const auto& t : terms) {
      Rational v = t.coeff;
      for (std::size_t j = 0; j < t.degs.size(); ++j)
        if (t.degs[j] > 0) v *= binom(params.at(j), t.degs[j]);
      s += v;
    }
    return s;
  }

  // True iff the expression is exactly c * a * b for the two parameters.
  std::optional<Rational> as_bilinear() const {
    Rational c(0);
    for (const auto& t : terms) {
      unsigned total = 0;
      bool bilinear = true;
      for (auto d : t.degs) total += d;
      if (total != 2) bilinear = false;
      for (auto d : t.degs)
        if (d > 1) { /* deg-2 binom is quadratic, not bilinear */
          bilinear = bilinear && false;
        }
      if (!bilinear) {
        if (t.coeff != 0) return std::nullopt;
        continue;
      }
      c += t.coeff;
    }
    return c;
  }
};

struct SchemaLetter {
  std::size_t gen;
  ExponentExpr exp;
};

enum class RelatorKind { Power, Commutator, Plain };

// Parametric relator: a word schema evaluating to the identity for all
// parameter values inside the box. Commutator relators keep their pair and
// right-hand side separately so rewriting engines can derive exchange rules.
struct RelatorSchema {
  std::string name;
  RelatorKind kind = RelatorKind::Plain;
  std::size_t nparams = 0;
  std::vector<std::pair<Rational, Rational>> box;  // per-parameter bounds
  std::vector<SchemaLetter> word;                  // the full relator word

  // Commutator metadata: word == [x_gi^p0, x_gj^p1] * reverse(rhs)^{-1}.
  std::size_t gi = 0, gj = 0;
  std::vector<SchemaLetter> rhs;

  bool params_in_box(const std::vector<Rational>& params) const {
    if (params.size() != nparams) return false;
    for (std::size_t i = 0; i < nparams; ++i)
      if (params[i] < box[i].first || params[i] > box[i].second) return false;
    return true;
  }

  Word instantiate(const std::vector<Rational>& params) const {
    Word w;
    for (const auto& l : word) w.append(l.gen, l.exp.eval(params));
    return w;
  }

  Word instantiate_rhs(const std::vector<Rational>& params) const {
    Word w;
    for (const auto& l : rhs) w.append(l.gen, l.exp.eval(params));
    return w;
  }
};

// Builds the relator word [x_i^a, x_j^b] * (rhs reversed and inverted) from
// commutator metadata.
inline void finalize_commutator_schema(RelatorSchema& s) {
  ExponentExpr a = ExponentExpr::param(0, s.nparams);
  ExponentExpr b = ExponentExpr::param(1, s.nparams);
  ExponentExpr na = a, nb = b;
  for (auto& t : na.terms) t.coeff = -t.coeff;
  for (auto& t : nb.terms) t.coeff = -t.coeff;
  s.word.clear();
  s.word.push_back({s.gi, na});
  s.word.push_back({s.gj, nb});
  s.word.push_back({s.gi, a});
  s.word.push_back({s.gj, b});
  for (auto it = s.rhs.rbegin(); it != s.rhs.rend(); ++it) {
    SchemaLetter l = *it;
    for (auto& t : l.exp.terms) t.coeff = -t.coeff;
    s.word.push_back(std::move(l));
  }
}

struct PresGenerator {
  std::string name;
  GroupElement image;
  bool one_parameter = true;  // compact box generator x^a, |a| <= 1
};

struct VerifyFailure {
  std::size_t relator;
  std::vector<Rational> params;
  QVector residual_log;
};

struct VerifyReport {
  bool ok = true;
  std::vector<VerifyFailure> failures;
  std::size_t instances_checked = 0;
};

class Presentation {
 public:
  Presentation() = default;
  Presentation(std::string name, GroupContextPtr ctx) : name_(std::move(name)), ctx_(std::move(ctx)) {}

  const std::string& name() const { return name_; }
  const GroupContextPtr& context() const { return ctx_; }

  std::size_t add_generator(PresGenerator g) {
    generators_.push_back(std::move(g));
    return generators_.size() - 1;
  }
  std::size_t add_relator(RelatorSchema r) {
    if (r.kind == RelatorKind::Commutator) {
      std::size_t lo = std::min(r.gi, r.gj), hi = std::max(r.gi, r.gj);
      comm_index_[{lo, hi}] = relators_.size();
    }
    relators_.push_back(std::move(r));
    return relators_.size() - 1;
  }

  const std::vector<PresGenerator>& generators() const { return generators_; }
  const std::vector<RelatorSchema>& relators() const { return relators_; }
  const RelatorSchema& relator(std::size_t i) const { return relators_.at(i); }

  std::optional<std::size_t> generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i].name == name) return i;
    return std::nullopt;
  }

  // Commutator schema for the unordered pair, if declared.
  std::optional<std::size_t> comm_schema(std::size_t a, std::size_t b) const {
    auto it = comm_index_.find({std::min(a, b), std::max(a, b)});
    if (it == comm_index_.end()) return std::nullopt;
    return it->second;
  }

  GroupElement evaluate(const Word& w) const {
    GroupElement g = GroupElement::identity(ctx_);
    for (const auto& l : w.letters())
      g = mul(g, pow(generators_.at(l.gen).image, l.exp));
    return g;
  }

  bool is_null_homotopic(const Word& w) const { return evaluate(w).is_identity(); }

  Word word_from_names(const std::vector<std::pair<std::string, Rational>>& runs) const {
    Word w;
    for (const auto& [nm, e] : runs) {
      auto gi = generator_index(nm);
      if (!gi) throw std::invalid_argument("unknown generator: " + nm);
      w.append(*gi, e);
    }
    return w;
  }

 private:
  std::string name_;
  GroupContextPtr ctx_;
  std::vector<PresGenerator> generators_;
  std::vector<RelatorSchema> relators_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comm_index_;
};

// Evaluates every relator schema on the standard grid plus seeded random
// rational parameter tuples; collects any instance that does not evaluate to
// the identity.
inline VerifyReport verify_presentation(const Presentation& p, unsigned random_tuples = 20,
                                        std::uint64_t seed = 12345) {
  static const long grid_num[] = {-3, -2, -3, -1, 0, 1, 3, 2, 3};
  static const long grid_den[] = {3, 3, 6, 3, 1, 3, 6, 3, 3};
  std::vector<Rational> grid;
  for (int i = 0; i < 9; ++i) grid.push_back(rat(grid_num[i], grid_den[i]));
  // grid == {-1, -2/3, -1/2, -1/3, 0, 1/3, 1/2, 2/3, 1}

  VerifyReport rep;
  std::mt19937_64 rng(seed);
  auto random_param = [&rng]() {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 12);
    long d = den(rng);
    long n = num(rng) % (d + 1);
    return rat(n, d);  // in [-1, 1]
  };

  for (std::size_t ri = 0; ri < p.relators().size(); ++ri) {
    const auto& r = p.relator(ri);
    std::vector<std::vector<Rational>> tuples;
    if (r.nparams == 0) {
      tuples.push_back({});
    } else if (r.nparams == 1) {
      for (const auto& a : grid) tuples.push_back({a});
      for (unsigned t = 0; t < random_tuples; ++t) tuples.push_back({random_param()});
    } else if (r.nparams == 2) {
      for (const auto& a : grid)
        for (const auto& b : grid) tuples.push_back({a, b});
      for (unsigned t = 0; t < random_tuples; ++t)
        tuples.push_back({random_param(), random_param()});
    } else {
      throw std::logic_error("verify_presentation: >2 parameters unsupported");
    }
    for (auto& params : tuples) {
      // clamp into the box (power relators constrain a+b implicitly; the box
      // here is per-parameter only, which all our schemas use)
      bool in_box = r.params_in_box(params);
      if (!in_box) continue;
      GroupElement g = p.evaluate(r.instantiate(params));
      ++rep.instances_checked;
      if (!g.is_identity()) {
        rep.ok = false;
        rep.failures.push_back({ri, params, g.log()});
      }
    }
  }
  return rep;
}

}  // namespace nilfill
