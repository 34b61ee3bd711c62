#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rankrange {

/// Each left node picks exactly one incident edge; right node w ends up with
/// between alpha[w] and beta[w] picks. Returns the chosen right node per left
/// node, or nullopt when no such selection exists. Solved as a circulation
/// with lower bounds.
std::optional<std::vector<int>> polygamous_matching(int left, int right, std::span<const std::pair<int, int>> edges,
                                                    std::span<const int> alpha, std::span<const int> beta);

}  // namespace rankrange
