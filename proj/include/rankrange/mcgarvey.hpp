#pragma once

#include "rankrange/profile.hpp"

namespace rankrange {

/// Votes T' with D(base + T') = target exactly. Every pair (a, b) whose
/// margin must move by 2j gets |j| vote pairs (a, b, rest ascending) and
/// (rest descending, a, b), which cancel on every other pair, so
/// |T'| = sum over a < b of |target - D(base)|.
/// Throws SkewSymmetryError unless target = -target^T with a zero diagonal,
/// ParityError unless target - D(base) is even everywhere.
CompleteProfile mcgarvey(const CompleteProfile& base, const MatrixX<Score>& target);

/// The size bound 1/2 * sum over ordered pairs of (|target - D(base)| + 1).
Score mcgarvey_size_bound(const CompleteProfile& base, const MatrixX<Score>& target);

}  // namespace rankrange
