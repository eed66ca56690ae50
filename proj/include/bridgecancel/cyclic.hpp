#pragma once

// Rotation utilities shared by cyclic words and cyclic S-sequences.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace bridgecancel::cyclic {

/// Start index of the lexicographically least rotation (Booth's algorithm).
template <class T, class Less = std::less<T>>
std::size_t least_rotation(std::span<const T> s, Less less = {}) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> failure(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) -> const T& { return s[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    std::ptrdiff_t i = failure[j - k - 1];
    while (i != -1 && !(at(j) == at(k + i + 1))) {
      if (less(at(j), at(k + i + 1))) k = j - i - 1;
      i = failure[i];
    }
    if (i == -1 && !(at(j) == at(k))) {
      if (less(at(j), at(k))) k = j;
      failure[j - k] = -1;
    } else {
      failure[j - k] = i + 1;
    }
  }
  return k % n;
}

template <class T>
std::vector<T> rotate_left(std::span<const T> s, std::size_t by) {
  std::vector<T> out(s.begin(), s.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(by % out.size()), out.end());
  return out;
}

/// Positions i in [0, |text|) where pattern matches text read cyclically from
/// i. Knuth-Morris-Pratt over text followed by its first |pattern|-1 items.
/// A pattern longer than the text never matches.
template <class T>
std::vector<std::size_t> cyclic_match_positions(std::span<const T> text, std::span<const T> pattern) {
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  std::vector<std::size_t> hits;
  if (m == 0 || m > n) return hits;
  std::vector<std::size_t> border(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && !(pattern[i] == pattern[k])) k = border[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    border[i] = k;
  }
  const std::size_t span_len = n + m - 1;
  for (std::size_t i = 0, k = 0; i < span_len; ++i) {
    const T& c = text[i % n];
    while (k > 0 && !(c == pattern[k])) k = border[k - 1];
    if (c == pattern[k]) ++k;
    if (k == m) {
      hits.push_back(i + 1 - m);
      k = border[k - 1];
    }
  }
  return hits;
}

/// True iff `b` is a rotation of `a`.
template <class T>
bool is_rotation(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return !cyclic_match_positions(a, b).empty();
}

}  // namespace bridgecancel::cyclic
