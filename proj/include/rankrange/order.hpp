#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rankrange/types.hpp"

namespace rankrange {

/// A complete ranking. `order[i]` is the candidate at 0-based index i;
/// `position_of(c)` is the 1-based rank position used throughout the library.
class LinearOrder {
 public:
  LinearOrder() = default;

  /// Throws RangeError unless `sequence` is a permutation of [0, size).
  explicit LinearOrder(std::vector<Cand> sequence);

  /// The identity order (0, 1, ..., m-1).
  static LinearOrder identity(int m);

  int size() const { return static_cast<int>(order_.size()); }
  Cand operator[](int index) const { return order_[static_cast<std::size_t>(index)]; }
  int position_of(Cand c) const { return position_[static_cast<std::size_t>(c)] + 1; }
  bool prefers(Cand a, Cand b) const { return position_of(a) < position_of(b); }
  const std::vector<Cand>& sequence() const { return order_; }

  LinearOrder reversed() const;

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
  friend auto operator<=>(const LinearOrder& a, const LinearOrder& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<Cand> order_;
  std::vector<int> position_;
};

/// Strict partial order over [0, m), stored transitively closed.
class PartialOrder {
 public:
  PartialOrder() = default;

  /// Empty order over m candidates.
  explicit PartialOrder(int m);

  /// Transitive closure of `pairs`; each pair (a, b) means a precedes b.
  /// Throws RangeError for indices outside [0, m) and CycleError when the
  /// closure is not irreflexive.
  static PartialOrder from_pairs(int m, std::span<const std::pair<Cand, Cand>> pairs);

  /// Closure of an arbitrary relation matrix.
  static PartialOrder from_relation(const Relation& relation);

  static PartialOrder from_linear(const LinearOrder& order);

  int size() const { return m_; }
  bool precedes(Cand a, Cand b) const { return relation_(a, b); }
  bool comparable(Cand a, Cand b) const { return relation_(a, b) || relation_(b, a); }
  const Relation& relation() const { return relation_; }

  /// All pairs of the closure in lexicographic order.
  std::vector<std::pair<Cand, Cand>> pairs() const;

  /// Covering pairs only (transitive reduction), lexicographic.
  std::vector<std::pair<Cand, Cand>> cover_pairs() const;

  std::size_t pair_count() const { return static_cast<std::size_t>(relation_.count()); }
  bool is_total() const;

  /// Number of candidates forced above / below c.
  int predecessor_count(Cand c) const { return static_cast<int>(relation_.col(c).count()); }
  int successor_count(Cand c) const { return static_cast<int>(relation_.row(c).count()); }

  /// Whether `order` is a linear extension of this order.
  bool admits(const LinearOrder& order) const;

  /// Closure of the union with `other`; throws CycleError on conflict.
  PartialOrder merged(const PartialOrder& other) const;

  friend bool operator==(const PartialOrder& a, const PartialOrder& b) {
    return a.m_ == b.m_ && a.relation_ == b.relation_;
  }

 private:
  int m_ = 0;
  Relation relation_;
};

/// (a, b) in result iff (b, a) in p.
PartialOrder reverse_order(const PartialOrder& p);

/// Emits the linear extensions of a partial order one at a time, in
/// lexicographic order of the candidate sequence.
class LinearExtensionStream {
 public:
  explicit LinearExtensionStream(const PartialOrder& order);
  std::optional<LinearOrder> next();

 private:
  bool advance();
  void fill_from(int depth);
  void place(Cand c);
  void unplace(Cand c);

  PartialOrder order_;
  std::vector<std::vector<Cand>> successors_;
  std::vector<int> pending_;  // unplaced predecessors per candidate
  std::vector<char> placed_;
  std::vector<Cand> sequence_;
  bool started_ = false;
  bool done_ = false;
};

/// All extensions; throws LimitError when there are more than `cap`.
std::vector<LinearOrder> linear_extensions(const PartialOrder& p, std::uint64_t cap = kDefaultCap);

/// Visits extensions in lexicographic order until the visitor returns false.
/// Returns the number visited.
std::uint64_t for_each_linear_extension(const PartialOrder& p,
                                        const std::function<bool(const LinearOrder&)>& visit);

/// Counts extensions, stopping at limit + 1.
std::uint64_t count_linear_extensions(const PartialOrder& p, std::uint64_t limit);

/// P(A_1, ..., A_t): every member of an earlier block precedes every member
/// of a later block. Empty blocks are skipped. Throws OverlapError when the
/// blocks intersect.
PartialOrder partitioned_order(int m, std::span<const std::vector<Cand>> blocks);

/// The blocks concatenated, ascending inside each block.
std::vector<Cand> ordered_blocks(std::span<const std::vector<Cand>> blocks);

/// O(A_1, ..., A_t): the completion of P(A_1, ..., A_t) that sorts each block
/// ascending. The blocks must cover [0, m).
LinearOrder partitioned_completion(int m, std::span<const std::vector<Cand>> blocks);

/// M_i(a_1..a_t) = (a_i, ..., a_t, a_1, ..., a_{i-1}) with 1 <= i <= t.
std::vector<Cand> circular_vote(int shift, std::span<const Cand> sequence);
LinearOrder circular_vote(int shift, const LinearOrder& sequence);

/// Topological order of `p` that always takes the available candidate with
/// the smallest key (ties by index).
LinearOrder prioritized_extension(const PartialOrder& p, std::span<const int> key);

}  // namespace rankrange
