#include "bridgecancel/smallcancel.hpp"

#include <algorithm>

#include "bridgecancel/error.hpp"
#include "bridgecancel/kernels.hpp"

namespace bridgecancel {

namespace {

std::span<const std::int8_t> bytes(const Word& w) {
  return {reinterpret_cast<const std::int8_t*>(w.letters().data()), w.size()};
}

// Cyclic read of w from position i, materialized once per query.
Word rotation_of(const Word& w, std::size_t i) { return w.rotated(i % std::max<std::size_t>(w.size(), 1)); }

std::size_t min_cover(std::size_t n, auto&& piece_at) {
  constexpr std::size_t inf = kNoPieceDecomposition;
  std::vector<std::size_t> best(n + 1, inf);
  best[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t longest = std::min(piece_at(i), n - i);
    for (std::size_t len = 1; len <= longest; ++len) {
      if (best[i + len] != inf) best[i] = std::min(best[i], best[i + len] + 1);
    }
  }
  return best[0];
}

void require_open_unit(const Rational& r) {
  if (r.is_infinite() || r <= Rational(0) || r >= Rational(1)) {
    throw DomainError("small cancellation check needs 0 < r < 1, got " + r.to_string());
  }
}

}  // namespace

std::optional<std::size_t> SymmetrizedSet::index_of(const Word& w) const {
  const auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

SymmetrizedSet symmetrize(const Word& u) {
  if (u.empty() || !u.is_cyclically_reduced()) {
    throw DomainError("symmetrize needs a nonempty cyclically reduced word, got '" + u.to_string() + "'");
  }
  SymmetrizedSet set;
  const Word inv = u.inverse();
  for (std::size_t i = 0; i < u.size(); ++i) {
    set.words_.push_back(u.rotated(i));
    set.words_.push_back(inv.rotated(i));
  }
  std::sort(set.words_.begin(), set.words_.end());
  set.words_.erase(std::unique(set.words_.begin(), set.words_.end()), set.words_.end());
  set.inverse_.reserve(set.words_.size());
  for (const Word& w : set.words_) set.inverse_.push_back(*set.index_of(w.inverse()));
  return set;
}

std::size_t max_piece_prefix(std::span<const Word> set, const Word& w, std::size_t i) {
  const Word self = rotation_of(w, i);
  std::size_t best = 0;
  for (const Word& other : set) {
    if (other != self) best = std::max(best, kernels::common_prefix_length(bytes(self), bytes(other)));
  }
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j == i % w.size()) continue;
    const Word other = w.rotated(j);
    if (other != self) best = std::max(best, kernels::common_prefix_length(bytes(self), bytes(other)));
  }
  return best;
}

std::size_t min_piece_count(std::span<const Word> set, const Word& w) {
  return min_cover(w.size(), [&](std::size_t i) { return max_piece_prefix(set, w, i); });
}

std::vector<std::size_t> longest_shared_prefixes(const SymmetrizedSet& set) {
  const std::size_t n = set.size();
  std::vector<std::size_t> longest(n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t lcp = kernels::common_prefix_length(bytes(set[i]), bytes(set[i + 1]));
    longest[i] = std::max(longest[i], lcp);
    longest[i + 1] = std::max(longest[i + 1], lcp);
  }
  return longest;
}

std::size_t min_pieces_per_relator(const SymmetrizedSet& set) {
  const std::vector<std::size_t> longest = longest_shared_prefixes(set);
  std::size_t best = kNoPieceDecomposition;
  for (const Word& w : set.relators()) {
    // Every rotation of w is itself an element, so its shared-prefix length
    // is the longest piece starting at that position.
    std::vector<std::size_t> at(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) at[i] = longest[*set.index_of(w.rotated(i))];
    best = std::min(best, min_cover(w.size(), [&](std::size_t i) { return at[i]; }));
  }
  return best;
}

bool satisfies_t4(const SymmetrizedSet& set) {
  const std::size_t n = set.size();
  const std::size_t words = (n + 63) / 64;
  // cancels_into[x] has bit y when the last letter of x cancels the first of
  // y; cancelled_by[y] has bit x for the same pairs.
  std::vector<std::uint64_t> cancels_into(n * words, 0);
  std::vector<std::uint64_t> cancelled_by(n * words, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (set[x].back() == set[y].front().inverse()) {
        cancels_into[x * words + y / 64] |= std::uint64_t{1} << (y % 64);
        cancelled_by[y * words + x / 64] |= std::uint64_t{1} << (x % 64);
      }
    }
  }
  auto bit = [&](const std::vector<std::uint64_t>& m, std::size_t row, std::size_t col) {
    return (m[row * words + col / 64] >> (col % 64)) & 1u;
  };
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t x_inv = set.inverse_index(x);
    for (std::size_t y = 0; y < n; ++y) {
      if (!bit(cancels_into, x, y) || y == x_inv) continue;
      const std::size_t y_inv = set.inverse_index(y);
      const std::span<const std::uint64_t> after_y(cancels_into.data() + y * words, words);
      const std::span<const std::uint64_t> before_x(cancelled_by.data() + x * words, words);
      std::size_t third = kernels::intersection_count(after_y, before_x);
      // z = y^-1 and z = x^-1 are excluded from the triple.
      if (bit(cancels_into, y, y_inv) && bit(cancels_into, y_inv, x)) --third;
      if (x_inv != y_inv && bit(cancels_into, y, x_inv) && bit(cancels_into, x_inv, x)) --third;
      if (third > 0) return false;
    }
  }
  return true;
}

PieceReport small_cancellation_report(const SymmetrizedSet& set) {
  PieceReport report;
  const std::vector<std::size_t> longest = longest_shared_prefixes(set);
  report.max_piece_length = longest.empty() ? 0 : *std::max_element(longest.begin(), longest.end());
  report.min_pieces_per_relator = min_pieces_per_relator(set);
  report.c4 = report.min_pieces_per_relator >= 4;
  report.t4 = satisfies_t4(set);
  return report;
}

PieceReport check_c4(const Rational& r) {
  require_open_unit(r);
  return small_cancellation_report(symmetrize(relator(r)));
}

PieceReport check_t4(const Rational& r) {
  require_open_unit(r);
  return small_cancellation_report(symmetrize(relator(r)));
}

}  // namespace bridgecancel
