#include "teich/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace teich {

Word::Word(std::vector<Letter> letters) : ls_(std::move(letters)) { reduce(); }

void Word::reduce() {
  std::vector<Letter> out;
  out.reserve(ls_.size());
  for (Letter l : ls_) {
    if (l == 0) throw Error("zero letter in word");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  ls_ = std::move(out);
}

Word Word::parse(const std::string& s) {
  std::vector<Letter> ls;
  ls.reserve(s.size());
  for (char ch : s) {
    if (ch >= 'a' && ch <= 'z') {
      ls.push_back(static_cast<Letter>(ch - 'a' + 1));
    } else if (ch >= 'A' && ch <= 'Z') {
      ls.push_back(static_cast<Letter>(-(ch - 'A' + 1)));
    } else if (ch == ' ' || ch == '1') {
      continue;  // allow "1" for the empty word
    } else {
      throw ConfigError(std::string("bad word character: ") + ch);
    }
  }
  return Word(std::move(ls));
}

std::string Word::str() const {
  if (ls_.empty()) return "1";
  std::string s;
  for (Letter l : ls_) {
    const int g = std::abs(l) - 1;
    s.push_back(static_cast<char>(l > 0 ? 'a' + g : 'A' + g));
  }
  return s;
}

Word Word::inverse() const {
  std::vector<Letter> ls(ls_.rbegin(), ls_.rend());
  for (Letter& l : ls) l = -l;
  Word w;
  w.ls_ = std::move(ls);  // reversal of a reduced word is reduced
  return w;
}

Word Word::pow(int k) const {
  Word r;
  Word base = k >= 0 ? *this : inverse();
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

Word Word::cyclic_rotation(std::size_t k) const {
  std::vector<Letter> ls;
  ls.reserve(ls_.size());
  for (std::size_t i = 0; i < ls_.size(); ++i) {
    ls.push_back(ls_[(i + k) % ls_.size()]);
  }
  return Word(std::move(ls));
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> ls = u.ls_;
  ls.insert(ls.end(), v.ls_.begin(), v.ls_.end());
  return Word(std::move(ls));
}

bool operator<(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int a = letter_key(u.ls_[i]);
    const int b = letter_key(v.ls_[i]);
    if (a != b) return a < b;
  }
  return false;
}

Word cyclic_reduce(const Word& w) {
  std::vector<Letter> ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + static_cast<long>(lo),
                                  ls.begin() + static_cast<long>(hi)));
}

Word canonical_cyclic(const Word& w0) {
  const Word w = cyclic_reduce(w0);
  if (w.empty()) return w;
  Word best = w;
  for (const Word& base : {w, w.inverse()}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word r = base.cyclic_rotation(k);
      if (r < best) best = r;
    }
  }
  return best;
}

bool is_proper_power(const Word& w0) {
  const Word w = cyclic_reduce(w0);
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    if (w.cyclic_rotation(d) == w) return true;
  }
  return false;
}

int max_generator(const Word& w) {
  int m = 0;
  for (Letter l : w.letters()) m = std::max(m, std::abs(static_cast<int>(l)));
  return m;
}

std::vector<long> abelianization(const Word& w, int n) {
  std::vector<long> v(static_cast<std::size_t>(n), 0);
  for (Letter l : w.letters()) {
    const int g = std::abs(l) - 1;
    if (g < n) v[static_cast<std::size_t>(g)] += l > 0 ? 1 : -1;
  }
  return v;
}

Word christoffel(long p, long q, int ga, int gb) {
  if (p < 0 || q < 0 || (p == 0 && q == 0)) {
    throw Error("christoffel slope must be nonnegative and nonzero");
  }
  if (std::gcd(p, q) != 1) throw Error("christoffel slope must be coprime");
  if (p == 1 && q == 0) return Word::gen(ga);
  if (p == 0 && q == 1) return Word::gen(gb);
  // Stern-Brocot descent: mediant refinement towards (p, q).
  long pl = 1, ql = 0, pr = 0, qr = 1;
  Word wl = Word::gen(ga), wr = Word::gen(gb);
  for (;;) {
    const long pm = pl + pr, qm = ql + qr;
    const Word wm = wl * wr;
    if (pm == p && qm == q) return wm;
    // (p, q) is on the left of the mediant iff p * qm - q * pm > 0.
    if (p * qm - q * pm > 0) {
      pr = pm;
      qr = qm;
      wr = wm;
    } else {
      pl = pm;
      ql = qm;
      wl = wm;
    }
  }
}

}  // namespace teich
