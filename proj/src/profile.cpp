#include "rankrange/profile.hpp"

#include <string>

namespace rankrange {

CompleteProfile::CompleteProfile(int m, std::vector<LinearOrder> votes) : m_(m), votes_(std::move(votes)) {
  for (const auto& v : votes_)
    if (v.size() != m_) throw RangeError("vote over " + std::to_string(v.size()) + " candidates in an m=" + std::to_string(m_) + " profile");
}

void CompleteProfile::add(const LinearOrder& vote) {
  if (vote.size() != m_) throw RangeError("vote size does not match the profile");
  votes_.push_back(vote);
}

void CompleteProfile::add(const LinearOrder& vote, int copies) {
  for (int i = 0; i < copies; ++i) add(vote);
}

CompleteProfile concat(const CompleteProfile& a, const CompleteProfile& b) {
  if (a.candidates() != b.candidates()) throw RangeError("concatenating profiles over different candidate sets");
  std::vector<LinearOrder> votes = a.votes();
  votes.insert(votes.end(), b.votes().begin(), b.votes().end());
  return CompleteProfile(a.candidates(), std::move(votes));
}

PartialProfile::PartialProfile(int m, std::vector<PartialOrder> voters) : m_(m), voters_(std::move(voters)) {
  if (voters_.empty()) throw RangeError("a partial profile needs at least one voter");
  for (const auto& v : voters_)
    if (v.size() != m_) throw RangeError("voter over " + std::to_string(v.size()) + " candidates in an m=" + std::to_string(m_) + " profile");
}

PartialProfile PartialProfile::from_complete(const CompleteProfile& profile) {
  std::vector<PartialOrder> voters;
  for (const auto& v : profile.votes()) voters.push_back(PartialOrder::from_linear(v));
  return PartialProfile(profile.candidates(), std::move(voters));
}

bool PartialProfile::is_complete() const {
  for (const auto& v : voters_)
    if (!v.is_total()) return false;
  return true;
}

bool PartialProfile::admits(const CompleteProfile& t) const {
  if (t.candidates() != m_ || t.voters() != voters()) return false;
  for (int i = 0; i < voters(); ++i)
    if (!voters_[static_cast<std::size_t>(i)].admits(t[i])) return false;
  return true;
}

PartialProfile reverse_profile(const PartialProfile& profile) {
  std::vector<PartialOrder> voters;
  for (const auto& v : profile.orders()) voters.push_back(reverse_order(v));
  return PartialProfile(profile.candidates(), std::move(voters));
}

CompleteProfile reverse_profile(const CompleteProfile& profile) {
  CompleteProfile out(profile.candidates());
  for (const auto& v : profile.votes()) out.add(v.reversed());
  return out;
}

std::uint64_t count_completions(const PartialProfile& profile, std::uint64_t limit) {
  std::uint64_t product = 1;
  for (const auto& v : profile.orders()) {
    const std::uint64_t here = count_linear_extensions(v, limit / product);
    if (__builtin_mul_overflow(product, here, &product) || product > limit) return limit + 1;
  }
  return product;
}

CompletionStream::CompletionStream(const PartialProfile& profile, std::uint64_t cap) : m_(profile.candidates()) {
  total_ = count_completions(profile, cap);
  if (total_ > cap) throw LimitError("more than " + std::to_string(cap) + " completions");
  for (const auto& v : profile.orders()) choices_.push_back(linear_extensions(v, cap));
  index_.assign(choices_.size(), 0);
}

std::optional<CompleteProfile> CompletionStream::next() {
  if (done_) return std::nullopt;
  if (started_) {
    std::size_t i = index_.size();
    while (i > 0) {
      --i;
      if (++index_[i] < choices_[i].size()) break;
      index_[i] = 0;
      if (i == 0) {
        done_ = true;
        return std::nullopt;
      }
    }
  }
  started_ = true;
  std::vector<LinearOrder> votes;
  votes.reserve(choices_.size());
  for (std::size_t i = 0; i < choices_.size(); ++i) votes.push_back(choices_[i][index_[i]]);
  return CompleteProfile(m_, std::move(votes));
}

std::uint64_t for_each_completion(const PartialProfile& profile,
                                  const std::function<bool(const CompleteProfile&)>& visit, std::uint64_t cap) {
  CompletionStream stream(profile, cap);
  std::uint64_t visited = 0;
  while (auto t = stream.next()) {
    ++visited;
    if (!visit(*t)) break;
  }
  return visited;
}

CompleteProfile first_completion(const PartialProfile& profile) {
  CompleteProfile out(profile.candidates());
  const std::vector<int> zero(static_cast<std::size_t>(profile.candidates()), 0);
  for (const auto& v : profile.orders()) out.add(prioritized_extension(v, zero));
  return out;
}

}  // namespace rankrange
