#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilfill/rational.hpp"

namespace nilfill {

// Run-length letter: generator id with a nonzero rational exponent.
struct Letter {
  std::size_t gen;
  Rational exp;

  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

// Word over generators, run-length encoded. Combinatorial length counts
// ceil(|e|) per run, matching letter counting for compact generating sets
// (each x^a with |a| <= 1 is one letter).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const auto& l : letters_)
      if (l.exp == 0) throw std::invalid_argument("word with zero exponent letter");
  }

  static Word single(std::size_t gen, const Rational& e) {
    if (e == 0) return Word();
    return Word({Letter{gen, e}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t runs() const { return letters_.size(); }

  long length() const {
    long n = 0;
    for (const auto& l : letters_) n += run_length(l.exp);
    return n;
  }

  Word& append(std::size_t gen, const Rational& e) {
    if (e == 0) return *this;
    if (!letters_.empty() && letters_.back().gen == gen) {
      letters_.back().exp += e;
      if (letters_.back().exp == 0) letters_.pop_back();
    } else {
      letters_.push_back(Letter{gen, e});
    }
    return *this;
  }

  Word& append(const Word& w) {
    for (const auto& l : w.letters_) append(l.gen, l.exp);
    return *this;
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word w = a;
    w.append(b);
    return w;
  }

  Word inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.append(it->gen, -it->exp);
    return w;
  }

  // Free reduction: merge adjacent runs of the same generator, drop zeros.
  // Confluent; append() keeps words reduced, so this mostly normalizes
  // externally built letter lists.
  Word reduced() const {
    Word w;
    for (const auto& l : letters_) w.append(l.gen, l.exp);
    return w;
  }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }

 private:
  std::vector<Letter> letters_;
};

// [u, v] = u^{-1} v^{-1} u v as a word.
inline Word commutator_word(const Word& u, const Word& v) {
  return u.inverse() * v.inverse() * u * v;
}

inline Word conjugate_word(const Word& u, const Word& by) {
  return by.inverse() * u * by;
}

inline Word power_word(const Word& u, long k) {
  Word w;
  Word base = k < 0 ? u.inverse() : u;
  long n = k < 0 ? -k : k;
  for (long i = 0; i < n; ++i) w.append(base);
  return w;
}

}  // namespace nilfill
