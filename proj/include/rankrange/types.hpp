#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <limits>

#include "rankrange/errors.hpp"

namespace rankrange {

/// Candidate index, dense in [0, m).
using Cand = int;

/// Default scalar for scores and tallies.
using Score = std::int64_t;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Per-candidate totals for one complete profile.
using ScoreTable = VectorX<Score>;

/// Strict precedence relation: (a, b) is true when a is ranked above b.
using Relation = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Default enumeration cap for completions, extensions and tally states.
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

template <typename Scalar>
Scalar checked_mul(Scalar a, Scalar b) {
  Scalar out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("score arithmetic overflows the scalar type");
  return out;
}

template <typename Scalar>
Scalar checked_add(Scalar a, Scalar b) {
  Scalar out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("score arithmetic overflows the scalar type");
  return out;
}

}  // namespace rankrange
