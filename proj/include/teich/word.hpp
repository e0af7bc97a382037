#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "teich/errors.hpp"

namespace teich {

// A letter is +g or -g for generator index g >= 1 (negative = inverse).
using Letter = std::int16_t;

// Total order on letters used by every canonical form: a < a^-1 < b < b^-1...
inline int letter_key(Letter l) {
  const int g = l > 0 ? l : -l;
  return 2 * (g - 1) + (l < 0 ? 1 : 0);
}

// A word in a free group, stored freely reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  static Word one() { return Word(); }
  static Word gen(int g) { return Word({static_cast<Letter>(g)}); }

  // Parse "abAB" style: a..z are generators 1..26, A..Z their inverses.
  static Word parse(const std::string& s);
  std::string str() const;

  const std::vector<Letter>& letters() const { return ls_; }
  std::size_t size() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }

  Word inverse() const;
  Word pow(int k) const;
  Word cyclic_rotation(std::size_t k) const;  // move first k letters to the end

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word& u, const Word& v) { return u.ls_ == v.ls_; }
  // Shortlex on letter keys.
  friend bool operator<(const Word& u, const Word& v);

 private:
  std::vector<Letter> ls_;  // invariant: freely reduced
  void reduce();
};

// Cyclically reduced form (conjugate of minimal length).
Word cyclic_reduce(const Word& w);

// Canonical representative of the conjugacy class of w up to inversion:
// the shortlex-least cyclic rotation of the cyclically reduced word or of
// its inverse.
Word canonical_cyclic(const Word& w);

// True if the cyclically reduced word is a proper power u^k, k >= 2.
bool is_proper_power(const Word& w);

// Largest generator index appearing (0 for the empty word).
int max_generator(const Word& w);

// Abelianized exponent vector over generators 1..n.
std::vector<long> abelianization(const Word& w, int n);

// Lower Christoffel word for the slope (p, q): p copies of generator `ga`
// and q of `gb` in the standard mediant pattern.  Requires p, q >= 0 coprime
// and (p, q) != (0, 0); negative slopes are handled by the caller swapping a
// generator for its inverse.
Word christoffel(long p, long q, int ga, int gb);

}  // namespace teich
