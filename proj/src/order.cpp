#include "rankrange/order.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rankrange {

LinearOrder::LinearOrder(std::vector<Cand> sequence) : order_(std::move(sequence)) {
  const int m = size();
  position_.assign(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    const Cand c = order_[static_cast<std::size_t>(i)];
    if (c < 0 || c >= m || position_[static_cast<std::size_t>(c)] != -1)
      throw RangeError("linear order is not a permutation of [0, " + std::to_string(m) + ")");
    position_[static_cast<std::size_t>(c)] = i;
  }
}

LinearOrder LinearOrder::identity(int m) {
  std::vector<Cand> seq(static_cast<std::size_t>(m));
  std::iota(seq.begin(), seq.end(), 0);
  return LinearOrder(std::move(seq));
}

LinearOrder LinearOrder::reversed() const {
  return LinearOrder(std::vector<Cand>(order_.rbegin(), order_.rend()));
}

PartialOrder::PartialOrder(int m) : m_(m), relation_(Relation::Constant(m, m, false)) {
  if (m < 0) throw RangeError("negative candidate count");
}

namespace {

void close_transitively(Relation& r) {
  const Eigen::Index m = r.rows();
  for (Eigen::Index k = 0; k < m; ++k)
    for (Eigen::Index i = 0; i < m; ++i)
      if (r(i, k))
        for (Eigen::Index j = 0; j < m; ++j)
          if (r(k, j)) r(i, j) = true;
}

}  // namespace

PartialOrder PartialOrder::from_relation(const Relation& relation) {
  if (relation.rows() != relation.cols()) throw RangeError("relation matrix is not square");
  PartialOrder p(static_cast<int>(relation.rows()));
  p.relation_ = relation;
  close_transitively(p.relation_);
  for (int c = 0; c < p.m_; ++c)
    if (p.relation_(c, c)) throw CycleError("preference pairs contain a cycle through candidate " + std::to_string(c));
  return p;
}

PartialOrder PartialOrder::from_pairs(int m, std::span<const std::pair<Cand, Cand>> pairs) {
  Relation r = Relation::Constant(m, m, false);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw RangeError("pair (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range for m=" +
                       std::to_string(m));
    r(a, b) = true;
  }
  return from_relation(r);
}

PartialOrder PartialOrder::from_linear(const LinearOrder& order) {
  const int m = order.size();
  PartialOrder p(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) p.relation_(order[i], order[j]) = true;
  return p;
}

std::vector<std::pair<Cand, Cand>> PartialOrder::pairs() const {
  std::vector<std::pair<Cand, Cand>> out;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      if (relation_(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<Cand, Cand>> PartialOrder::cover_pairs() const {
  std::vector<std::pair<Cand, Cand>> out;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) {
      if (!relation_(a, b)) continue;
      bool covered = true;
      for (int x = 0; x < m_ && covered; ++x)
        if (relation_(a, x) && relation_(x, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

bool PartialOrder::is_total() const {
  return pair_count() == static_cast<std::size_t>(m_) * static_cast<std::size_t>(std::max(m_ - 1, 0)) / 2;
}

bool PartialOrder::admits(const LinearOrder& order) const {
  if (order.size() != m_) return false;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b)
      if (relation_(a, b) && !order.prefers(a, b)) return false;
  return true;
}

PartialOrder PartialOrder::merged(const PartialOrder& other) const {
  if (other.m_ != m_) throw RangeError("merging orders over different candidate counts");
  return from_relation(relation_ || other.relation_);
}

PartialOrder reverse_order(const PartialOrder& p) {
  return PartialOrder::from_relation(p.relation().transpose());
}

LinearExtensionStream::LinearExtensionStream(const PartialOrder& order) : order_(order) {
  const int m = order.size();
  successors_.resize(static_cast<std::size_t>(m));
  pending_.assign(static_cast<std::size_t>(m), 0);
  placed_.assign(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (order.precedes(a, b)) {
        successors_[static_cast<std::size_t>(a)].push_back(b);
        ++pending_[static_cast<std::size_t>(b)];
      }
  sequence_.reserve(static_cast<std::size_t>(m));
}

void LinearExtensionStream::place(Cand c) {
  placed_[static_cast<std::size_t>(c)] = 1;
  for (Cand s : successors_[static_cast<std::size_t>(c)]) --pending_[static_cast<std::size_t>(s)];
  sequence_.push_back(c);
}

void LinearExtensionStream::unplace(Cand c) {
  placed_[static_cast<std::size_t>(c)] = 0;
  for (Cand s : successors_[static_cast<std::size_t>(c)]) ++pending_[static_cast<std::size_t>(s)];
  sequence_.pop_back();
}

void LinearExtensionStream::fill_from(int depth) {
  const int m = order_.size();
  for (int d = depth; d < m; ++d) {
    for (Cand c = 0; c < m; ++c)
      if (!placed_[static_cast<std::size_t>(c)] && pending_[static_cast<std::size_t>(c)] == 0) {
        place(c);
        break;
      }
  }
}

bool LinearExtensionStream::advance() {
  const int m = order_.size();
  while (!sequence_.empty()) {
    const Cand last = sequence_.back();
    unplace(last);
    for (Cand c = last + 1; c < m; ++c)
      if (!placed_[static_cast<std::size_t>(c)] && pending_[static_cast<std::size_t>(c)] == 0) {
        place(c);
        fill_from(static_cast<int>(sequence_.size()));
        return true;
      }
  }
  return false;
}

std::optional<LinearOrder> LinearExtensionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    fill_from(0);
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return LinearOrder(sequence_);
}

std::uint64_t for_each_linear_extension(const PartialOrder& p,
                                        const std::function<bool(const LinearOrder&)>& visit) {
  LinearExtensionStream stream(p);
  std::uint64_t visited = 0;
  while (auto ext = stream.next()) {
    ++visited;
    if (!visit(*ext)) break;
  }
  return visited;
}

std::vector<LinearOrder> linear_extensions(const PartialOrder& p, std::uint64_t cap) {
  std::vector<LinearOrder> out;
  for_each_linear_extension(p, [&](const LinearOrder& t) {
    if (out.size() >= cap) throw LimitError("more than " + std::to_string(cap) + " linear extensions");
    out.push_back(t);
    return true;
  });
  return out;
}

std::uint64_t count_linear_extensions(const PartialOrder& p, std::uint64_t limit) {
  const int m = p.size();
  if (m <= 20) {
    // Subset DP over down-sets; exact, saturating at limit + 1.
    std::vector<std::uint32_t> pred_mask(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (p.precedes(a, b)) pred_mask[static_cast<std::size_t>(b)] |= 1u << a;
    const std::uint64_t ceiling = limit + 1;
    std::vector<std::uint64_t> ways(std::size_t{1} << m, 0);
    ways[0] = 1;
    for (std::uint32_t set = 0; set < (1u << m); ++set) {
      if (ways[set] == 0) continue;
      for (int c = 0; c < m; ++c) {
        if (set & (1u << c)) continue;
        if ((pred_mask[static_cast<std::size_t>(c)] & set) != pred_mask[static_cast<std::size_t>(c)]) continue;
        auto& slot = ways[set | (1u << c)];
        slot = std::min(ceiling, slot + ways[set]);
      }
    }
    return ways[(std::size_t{1} << m) - 1];
  }
  // Orders placed level by level (by longest chain below) are extensions, so
  // the product of level-size factorials is a lower bound.
  std::vector<int> height(static_cast<std::size_t>(m), 0);
  std::vector<int> level_size(static_cast<std::size_t>(m), 0);
  LinearOrder topo = prioritized_extension(p, std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) {
    const Cand c = topo[i];
    for (Cand a = 0; a < m; ++a)
      if (p.precedes(a, c)) height[static_cast<std::size_t>(c)] = std::max(height[static_cast<std::size_t>(c)], height[static_cast<std::size_t>(a)] + 1);
    ++level_size[static_cast<std::size_t>(height[static_cast<std::size_t>(c)])];
  }
  std::uint64_t bound = 1;
  for (int size : level_size)
    for (int f = 2; f <= size; ++f)
      if (__builtin_mul_overflow(bound, static_cast<std::uint64_t>(f), &bound) || bound > limit) return limit + 1;
  std::uint64_t count = 0;
  for_each_linear_extension(p, [&](const LinearOrder&) { return ++count <= limit; });
  return count;
}

PartialOrder partitioned_order(int m, std::span<const std::vector<Cand>> blocks) {
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (const auto& block : blocks)
    for (Cand c : block) {
      if (c < 0 || c >= m) throw RangeError("block member " + std::to_string(c) + " out of range");
      if (seen[static_cast<std::size_t>(c)]) throw OverlapError("candidate " + std::to_string(c) + " appears in two blocks");
      seen[static_cast<std::size_t>(c)] = 1;
    }
  Relation r = Relation::Constant(m, m, false);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      for (Cand a : blocks[i])
        for (Cand b : blocks[j]) r(a, b) = true;
  return PartialOrder::from_relation(r);
}

std::vector<Cand> ordered_blocks(std::span<const std::vector<Cand>> blocks) {
  std::vector<Cand> seq;
  for (const auto& block : blocks) {
    std::vector<Cand> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    seq.insert(seq.end(), sorted.begin(), sorted.end());
  }
  return seq;
}

LinearOrder partitioned_completion(int m, std::span<const std::vector<Cand>> blocks) {
  partitioned_order(m, blocks);
  std::vector<Cand> seq = ordered_blocks(blocks);
  if (static_cast<int>(seq.size()) != m) throw RangeError("blocks do not cover every candidate");
  return LinearOrder(std::move(seq));
}

std::vector<Cand> circular_vote(int shift, std::span<const Cand> sequence) {
  const int t = static_cast<int>(sequence.size());
  if (shift < 1 || shift > t) throw RangeError("circular shift " + std::to_string(shift) + " outside [1, " + std::to_string(t) + "]");
  std::vector<Cand> out;
  out.reserve(sequence.size());
  for (int j = 0; j < t; ++j) out.push_back(sequence[static_cast<std::size_t>((shift - 1 + j) % t)]);
  return out;
}

LinearOrder circular_vote(int shift, const LinearOrder& sequence) {
  return LinearOrder(circular_vote(shift, std::span<const Cand>(sequence.sequence())));
}

LinearOrder prioritized_extension(const PartialOrder& p, std::span<const int> key) {
  const int m = p.size();
  std::vector<char> placed(static_cast<std::size_t>(m), 0);
  std::vector<Cand> seq;
  seq.reserve(static_cast<std::size_t>(m));
  for (int step = 0; step < m; ++step) {
    Cand best = -1;
    for (Cand c = 0; c < m; ++c) {
      if (placed[static_cast<std::size_t>(c)]) continue;
      bool ready = true;
      for (Cand a = 0; a < m && ready; ++a)
        if (!placed[static_cast<std::size_t>(a)] && p.precedes(a, c)) ready = false;
      if (!ready) continue;
      if (best < 0 || key[static_cast<std::size_t>(c)] < key[static_cast<std::size_t>(best)]) best = c;
    }
    placed[static_cast<std::size_t>(best)] = 1;
    seq.push_back(best);
  }
  return LinearOrder(std::move(seq));
}

}  // namespace rankrange
