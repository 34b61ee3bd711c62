#pragma once

#include <optional>
#include <vector>

#include "rankrange/order.hpp"

namespace rankrange {

/// Unit tasks 0..m-1 on slots 1..m. Task x must run in [release[x], deadline[x])
/// and after every predecessor in `precedence`.
struct SchedulingInstance {
  int m = 0;
  std::vector<int> release;
  std::vector<int> deadline;
  PartialOrder precedence;
};

/// A linear extension of the precedence order meeting every window, or
/// nullopt. Windows are tightened along the order, then filled earliest
/// deadline first (ties by index).
std::optional<LinearOrder> schedule_unit_tasks(const SchedulingInstance& instance);

}  // namespace rankrange
