#include "rankrange/scheduling.hpp"

#include <algorithm>

namespace rankrange {

std::optional<LinearOrder> schedule_unit_tasks(const SchedulingInstance& si) {
  const int m = si.m;
  if (static_cast<int>(si.release.size()) != m || static_cast<int>(si.deadline.size()) != m || si.precedence.size() != m)
    throw LengthMismatchError("scheduling instance sizes disagree");
  if (m == 0) return LinearOrder(std::vector<Cand>{});

  const LinearOrder topo = prioritized_extension(si.precedence, std::vector<int>(static_cast<std::size_t>(m), 0));
  std::vector<int> release = si.release, deadline = si.deadline;
  for (int i = 0; i < m; ++i) {
    const Cand y = topo[i];
    for (Cand x = 0; x < m; ++x)
      if (si.precedence.precedes(x, y))
        release[static_cast<std::size_t>(y)] = std::max(release[static_cast<std::size_t>(y)], release[static_cast<std::size_t>(x)] + 1);
  }
  for (int i = m - 1; i >= 0; --i) {
    const Cand x = topo[i];
    for (Cand y = 0; y < m; ++y)
      if (si.precedence.precedes(x, y))
        deadline[static_cast<std::size_t>(x)] = std::min(deadline[static_cast<std::size_t>(x)], deadline[static_cast<std::size_t>(y)] - 1);
  }

  std::vector<char> done(static_cast<std::size_t>(m), 0);
  std::vector<Cand> sequence;
  for (int slot = 1; slot <= m; ++slot) {
    Cand pick = -1;
    for (Cand x = 0; x < m; ++x) {
      if (done[static_cast<std::size_t>(x)] || release[static_cast<std::size_t>(x)] > slot) continue;
      bool ready = true;
      for (Cand a = 0; a < m && ready; ++a)
        if (!done[static_cast<std::size_t>(a)] && si.precedence.precedes(a, x)) ready = false;
      if (!ready) continue;
      if (pick < 0 || deadline[static_cast<std::size_t>(x)] < deadline[static_cast<std::size_t>(pick)]) pick = x;
    }
    if (pick < 0 || slot >= deadline[static_cast<std::size_t>(pick)]) return std::nullopt;
    done[static_cast<std::size_t>(pick)] = 1;
    sequence.push_back(pick);
  }
  return LinearOrder(std::move(sequence));
}

}  // namespace rankrange
