#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "bridgecancel/rational.hpp"
#include "bridgecancel/word.hpp"

namespace bridgecancel {

/// All cyclic permutations of u and u^-1, deduplicated and sorted
/// (a < A < b < B letterwise).
class SymmetrizedSet {
 public:
  std::span<const Word> relators() const { return words_; }
  std::size_t size() const { return words_.size(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }

  std::optional<std::size_t> index_of(const Word& w) const;
  /// Index of words_[i]^-1, which is always present.
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }

 private:
  friend SymmetrizedSet symmetrize(const Word& u);
  std::vector<Word> words_;
  std::vector<std::size_t> inverse_;
};

/// Throws DomainError unless u is nonempty and cyclically reduced.
SymmetrizedSet symmetrize(const Word& u);

/// Longest prefix of w rotated to start at i that is also a prefix of a
/// different word of `set`, or of a different rotation of w. A piece may run
/// past the end of w; callers cap it where they need a subword.
std::size_t max_piece_prefix(std::span<const Word> set, const Word& w, std::size_t i);

inline constexpr std::size_t kNoPieceDecomposition = std::numeric_limits<std::size_t>::max();

/// Fewest pieces whose concatenation is w (dynamic programming over
/// max_piece_prefix), or kNoPieceDecomposition.
std::size_t min_piece_count(std::span<const Word> set, const Word& w);

/// For each element, the longest prefix it shares with any other element.
/// In lexicographic order that is attained at a sorted neighbour.
std::vector<std::size_t> longest_shared_prefixes(const SymmetrizedSet& set);

/// Fewest pieces over all elements of a symmetrized set.
std::size_t min_pieces_per_relator(const SymmetrizedSet& set);

/// No triple (x, y, z) with y != x^-1, z != y^-1, x != z^-1 has all of
/// xy, yz, zx cancelling. Bitset triangle search over the cancellation
/// adjacency matrix.
bool satisfies_t4(const SymmetrizedSet& set);

struct PieceReport {
  std::size_t max_piece_length = 0;
  std::size_t min_pieces_per_relator = kNoPieceDecomposition;
  bool c4 = false;
  bool t4 = false;
};

PieceReport small_cancellation_report(const SymmetrizedSet& set);

/// Both reject r outside (0, 1) and report on symmetrize(relator(r)).
PieceReport check_c4(const Rational& r);
PieceReport check_t4(const Rational& r);

}  // namespace bridgecancel
