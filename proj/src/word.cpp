#include "bridgecancel/word.hpp"

#include <algorithm>
#include <ostream>

#include "bridgecancel/cyclic.hpp"
#include "bridgecancel/error.hpp"

namespace bridgecancel {

Letter Letter::from_char(char c) {
  switch (c) {
    case 'a': return kA;
    case 'A': return kAInv;
    case 'b': return kB;
    case 'B': return kBInv;
    default: throw ParseError(std::string("not a letter of {a, A, b, B}: '") + c + "'");
  }
}

char Letter::to_char() const {
  switch (code_) {
    case 1: return 'a';
    case -1: return 'A';
    case 2: return 'b';
    default: return 'B';
  }
}

Word free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (Letter x : letters) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(std::move(stack));
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(Letter::from_char(c));
  return free_reduce(letters);
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != letters_.back().inverse();
}

Word Word::rotated(std::size_t start) const {
  if (!is_cyclically_reduced()) throw DomainError("rotating a word that is not cyclically reduced: " + to_string());
  return Word(cyclic::rotate_left(std::span<const Letter>(letters_), start));
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(x.to_char());
  return out;
}

std::vector<int> Word::tokens() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(x.code());
  return out;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(),
                                                y.letters_.begin(), y.letters_.end());
}

Word operator*(const Word& x, const Word& y) {
  std::vector<Letter> joined(x.letters_);
  joined.insert(joined.end(), y.letters_.begin(), y.letters_.end());
  return free_reduce(joined);
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

CyclicWord::CyclicWord(Word w) : rep_(std::move(w)) {
  if (!rep_.is_cyclically_reduced()) {
    throw DomainError("cyclic word needs a cyclically reduced representative: " + rep_.to_string());
  }
}

Word CyclicWord::canonical() const {
  return rep_.rotated(cyclic::least_rotation(rep_.letters()));
}

bool operator==(const CyclicWord& x, const CyclicWord& y) { return cyclically_equal(x, y); }

CyclicWord cyclic_reduce(const Word& w) {
  const auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return CyclicWord(free_reduce(letters.subspan(lo, hi - lo)));
}

bool cyclically_equal(const CyclicWord& x, const CyclicWord& y) {
  return cyclic::is_rotation(x.representative().letters(), y.representative().letters());
}

bool is_cyclically_alternating(const CyclicWord& w) {
  const auto letters = w.representative().letters();
  const std::size_t n = letters.size();
  if (n == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (letters[i].generator() == letters[(i + 1) % n].generator()) return false;
  }
  return true;
}

Word flip_b(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w.letters()) out.push_back(x.generator() == Generator::b ? x.inverse() : x);
  return free_reduce(out);
}

Word relator(const Rational& r) {
  if (r.is_infinite() || r <= Rational(0) || r > Rational(1)) {
    throw DomainError("relator needs a slope 0 < r <= 1, got " + r.to_string());
  }
  const std::int64_t q = to_int64(r.num(), "slope numerator");
  const std::int64_t p = to_int64(r.den(), "slope denominator");

  // û alternates b, a, b, ... starting with b; its i-th letter carries e_i.
  std::vector<Letter> hat;
  hat.reserve(static_cast<std::size_t>(p - 1));
  for (std::int64_t i = 1; i <= p - 1; ++i) {
    const Integer fl = Integer(i) * q / p;  // floor: both positive
    const int e = mpz_even_p(fl.get_mpz_t()) ? 1 : -1;
    hat.emplace_back(i % 2 == 1 ? Generator::b : Generator::a, e);
  }

  std::vector<Letter> u;
  u.reserve(static_cast<std::size_t>(2 * p));
  u.push_back(kA);
  u.insert(u.end(), hat.begin(), hat.end());
  if (p % 2 == 1) {
    u.emplace_back(Generator::b, q % 2 == 0 ? 1 : -1);
  } else {
    u.push_back(kAInv);
  }
  for (auto it = hat.rbegin(); it != hat.rend(); ++it) u.push_back(it->inverse());

  Word w = free_reduce(u);
  if (w.size() != u.size()) throw InternalError("relator was not freely reduced for " + r.to_string());
  return w;
}

}  // namespace bridgecancel
