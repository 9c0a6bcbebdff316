#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilfill {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator); every constructor below canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p/q" or "p/q". Throws on malformed input.
inline Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer floor_int(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

inline Integer ceil_int(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c;
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer exceeds long");
  return z.get_si();
}

// Combinatorial length of a run x^e: ceil(|e|).
inline long run_length(const Rational& e) {
  return to_long(ceil_int(rat_abs(e)));
}

inline Rational rat_pow(const Rational& base, long e) {
  Rational r(1);
  Rational b = base;
  long n = e < 0 ? -e : e;
  for (long i = 0; i < n; ++i) r *= b;
  if (e < 0) {
    if (r == 0) throw std::domain_error("zero to negative power");
    r = 1 / r;
  }
  return r;
}

// Generalized binomial C(a, r) = a(a-1)...(a-r+1)/r!, exact at rational a.
inline Rational binom(const Rational& a, unsigned r) {
  Rational num(1);
  for (unsigned i = 0; i < r; ++i) num *= (a - Rational(static_cast<long>(i)));
  Rational den(1);
  for (unsigned i = 2; i <= r; ++i) den *= Rational(static_cast<long>(i));
  return num / den;
}

inline Integer factorial(unsigned n) {
  Integer f(1);
  for (unsigned i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

using QVector = std::vector<Rational>;

inline QVector zero_vector(std::size_t n) { return QVector(n, Rational(0)); }

inline QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline QVector& add_scaled(QVector& dst, const Rational& c, const QVector& src) {
  if (dst.size() != src.size()) throw std::invalid_argument("vector size mismatch");
  if (c == 0) return dst;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
  return dst;
}

inline QVector operator+(QVector a, const QVector& b) {
  add_scaled(a, Rational(1), b);
  return a;
}

inline QVector operator-(QVector a, const QVector& b) {
  add_scaled(a, Rational(-1), b);
  return a;
}

inline QVector operator*(const Rational& c, QVector v) {
  for (auto& x : v) x *= c;
  return v;
}

}  // namespace nilfill
