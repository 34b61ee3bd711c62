#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rankrange/order.hpp"

namespace rankrange {

/// One linear order per voter over a common candidate set. May be empty.
class CompleteProfile {
 public:
  CompleteProfile() = default;
  explicit CompleteProfile(int m) : m_(m) {}
  CompleteProfile(int m, std::vector<LinearOrder> votes);

  int candidates() const { return m_; }
  int voters() const { return static_cast<int>(votes_.size()); }
  const LinearOrder& operator[](int i) const { return votes_[static_cast<std::size_t>(i)]; }
  const std::vector<LinearOrder>& votes() const { return votes_; }

  void add(const LinearOrder& vote);
  void add(const LinearOrder& vote, int copies);

  friend bool operator==(const CompleteProfile&, const CompleteProfile&) = default;

 private:
  int m_ = 0;
  std::vector<LinearOrder> votes_;
};

/// T1 followed by T2.
CompleteProfile concat(const CompleteProfile& a, const CompleteProfile& b);

/// One partial order per voter; n >= 1 and every voter has the same m.
class PartialProfile {
 public:
  PartialProfile() = default;

  /// Throws RangeError when `voters` is empty or the sizes disagree.
  PartialProfile(int m, std::vector<PartialOrder> voters);

  static PartialProfile from_complete(const CompleteProfile& profile);

  int candidates() const { return m_; }
  int voters() const { return static_cast<int>(voters_.size()); }
  const PartialOrder& operator[](int i) const { return voters_[static_cast<std::size_t>(i)]; }
  const std::vector<PartialOrder>& orders() const { return voters_; }

  bool is_complete() const;

  /// Whether every vote of `t` extends the matching voter.
  bool admits(const CompleteProfile& t) const;

  friend bool operator==(const PartialProfile&, const PartialProfile&) = default;

 private:
  int m_ = 0;
  std::vector<PartialOrder> voters_;
};

/// Profile of reversed voters.
PartialProfile reverse_profile(const PartialProfile& profile);
CompleteProfile reverse_profile(const CompleteProfile& profile);

/// Product of per-voter extension counts, saturating at limit + 1.
std::uint64_t count_completions(const PartialProfile& profile, std::uint64_t limit);

/// Completions in lexicographic order (first voter most significant).
/// Per-voter extension lists are materialised up front; the constructor
/// throws LimitError when the number of completions exceeds `cap`.
class CompletionStream {
 public:
  explicit CompletionStream(const PartialProfile& profile, std::uint64_t cap = kDefaultCap);
  std::optional<CompleteProfile> next();
  std::uint64_t total() const { return total_; }

 private:
  int m_;
  std::vector<std::vector<LinearOrder>> choices_;
  std::vector<std::size_t> index_;
  std::uint64_t total_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// The lexicographically first completion.
CompleteProfile first_completion(const PartialProfile& profile);

/// Visits completions until the visitor returns false; returns the count visited.
std::uint64_t for_each_completion(const PartialProfile& profile,
                                  const std::function<bool(const CompleteProfile&)>& visit,
                                  std::uint64_t cap = kDefaultCap);

}  // namespace rankrange
