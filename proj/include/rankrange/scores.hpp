#pragma once

#include <vector>

#include "rankrange/profile.hpp"
#include "rankrange/rule.hpp"

namespace rankrange {

/// counts(c, j) = number of voters placing c at position j + 1.
template <typename Scalar = Score>
MatrixX<Scalar> position_counts(const CompleteProfile& t) {
  const int m = t.candidates();
  MatrixX<Scalar> counts = MatrixX<Scalar>::Zero(m, m);
  for (const auto& vote : t.votes())
    for (int j = 0; j < m; ++j) counts(vote[j], j) += Scalar(1);
  return counts;
}

/// s(T, c) for every c. Overflow raises OverflowError.
template <typename Scalar = Score>
VectorX<Scalar> positional_scores(const MatrixX<Scalar>& counts, const VectorX<Scalar>& vec) {
  const Eigen::Index m = counts.rows();
  VectorX<Scalar> out = VectorX<Scalar>::Zero(m);
  for (Eigen::Index c = 0; c < m; ++c)
    for (Eigen::Index j = 0; j < m; ++j)
      out(c) = checked_add(out(c), checked_mul(counts(c, j), vec(j)));
  return out;
}

template <typename Scalar = Score>
VectorX<Scalar> positional_scores(const CompleteProfile& t, const VectorX<Scalar>& vec) {
  return positional_scores<Scalar>(position_counts<Scalar>(t), vec);
}

/// Smallest t such that more than n/2 voters place c within the top t.
template <typename Scalar = Score>
VectorX<Scalar> bucklin_scores(const MatrixX<Scalar>& counts, Scalar n) {
  const Eigen::Index m = counts.rows();
  VectorX<Scalar> out(m);
  for (Eigen::Index c = 0; c < m; ++c) {
    Scalar within = 0;
    out(c) = Scalar(m);
    for (Eigen::Index j = 0; j < m; ++j) {
      within += counts(c, j);
      if (2 * within > n) {
        out(c) = Scalar(j + 1);
        break;
      }
    }
  }
  return out;
}

template <typename Scalar = Score>
VectorX<Scalar> bucklin_scores(const CompleteProfile& t) {
  return bucklin_scores<Scalar>(position_counts<Scalar>(t), Scalar(t.voters()));
}

/// N(a, b) = number of voters ranking a ahead of b.
template <typename Scalar = Score>
MatrixX<Scalar> pairwise_counts(const CompleteProfile& t) {
  const int m = t.candidates();
  MatrixX<Scalar> n = MatrixX<Scalar>::Zero(m, m);
  for (const auto& vote : t.votes())
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) n(vote[i], vote[j]) += Scalar(1);
  return n;
}

/// D = 2N - n, skew-symmetric.
template <typename Scalar = Score>
MatrixX<Scalar> pairwise_margins(const MatrixX<Scalar>& n_matrix, Scalar n) {
  MatrixX<Scalar> d = Scalar(2) * n_matrix - MatrixX<Scalar>::Constant(n_matrix.rows(), n_matrix.cols(), n);
  d.diagonal().setZero();
  return d;
}

template <typename Scalar = Score>
MatrixX<Scalar> pairwise_margins(const CompleteProfile& t) {
  return pairwise_margins<Scalar>(pairwise_counts<Scalar>(t), Scalar(t.voters()));
}

/// Number of rivals beaten by a strict pairwise majority.
template <typename Scalar = Score>
VectorX<Scalar> copeland_scores(const MatrixX<Scalar>& n_matrix, Scalar n) {
  const Eigen::Index m = n_matrix.rows();
  VectorX<Scalar> out = VectorX<Scalar>::Zero(m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      if (a != b && 2 * n_matrix(a, b) > n) out(a) += Scalar(1);
  return out;
}

/// min over rivals of N(c, c').
template <typename Scalar = Score>
VectorX<Scalar> maximin_scores(const MatrixX<Scalar>& n_matrix) {
  const Eigen::Index m = n_matrix.rows();
  VectorX<Scalar> out(m);
  for (Eigen::Index a = 0; a < m; ++a) {
    Scalar best = std::numeric_limits<Scalar>::max();
    for (Eigen::Index b = 0; b < m; ++b)
      if (a != b) best = std::min(best, n_matrix(a, b));
    out(a) = m > 1 ? best : Scalar(0);
  }
  return out;
}

/// Score table of T under any supported rule.
ScoreTable scores(const CompleteProfile& t, const ScoringRule& rule);

/// 1 + number of candidates that defeat c: a better score, or an equal
/// score and an earlier tiebreaker position.
int rank_from_scores(const ScoreTable& s, Cand c, const LinearOrder& tie, bool lower_is_better);

/// Whether a defeats b.
bool defeats(const ScoreTable& s, Cand a, Cand b, const LinearOrder& tie, bool lower_is_better);

int rank(const CompleteProfile& t, Cand c, const LinearOrder& tie, const ScoringRule& rule);

/// R_T as a candidate sequence.
LinearOrder ranking(const CompleteProfile& t, const LinearOrder& tie, const ScoringRule& rule);

}  // namespace rankrange
