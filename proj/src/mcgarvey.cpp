#include "rankrange/mcgarvey.hpp"

#include <cstdlib>
#include <string>

#include "rankrange/scores.hpp"

namespace rankrange {

namespace {

MatrixX<Score> base_margins(const CompleteProfile& base, Eigen::Index m) {
  if (base.candidates() != m) throw RangeError("target matrix and base profile disagree on m");
  return pairwise_margins<Score>(base);
}

}  // namespace

CompleteProfile mcgarvey(const CompleteProfile& base, const MatrixX<Score>& target) {
  const int m = static_cast<int>(target.rows());
  if (target.cols() != m) throw SkewSymmetryError("target matrix is not square");
  if (target.diagonal().any() || target != -target.transpose())
    throw SkewSymmetryError("target matrix is not skew-symmetric");
  const MatrixX<Score> gap = target - base_margins(base, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (gap(a, b) % 2 != 0)
        throw ParityError("target(" + std::to_string(a) + ", " + std::to_string(b) + ") - D has odd parity");

  CompleteProfile out(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (gap(a, b) == 0) continue;
      const Cand hi = gap(a, b) > 0 ? a : b, lo = gap(a, b) > 0 ? b : a;
      std::vector<Cand> rest;
      for (Cand x = 0; x < m; ++x)
        if (x != a && x != b) rest.push_back(x);
      std::vector<Cand> up{hi, lo};
      up.insert(up.end(), rest.begin(), rest.end());
      std::vector<Cand> down(rest.rbegin(), rest.rend());
      down.push_back(hi);
      down.push_back(lo);
      for (Score j = 0; j < std::abs(gap(a, b)) / 2; ++j) {
        out.add(LinearOrder(up));
        out.add(LinearOrder(down));
      }
    }
  return out;
}

Score mcgarvey_size_bound(const CompleteProfile& base, const MatrixX<Score>& target) {
  const MatrixX<Score> gap = target - base_margins(base, target.rows());
  Score total = 0;
  for (Eigen::Index a = 0; a < gap.rows(); ++a)
    for (Eigen::Index b = 0; b < gap.cols(); ++b)
      if (a != b) total += std::abs(gap(a, b)) + 1;
  return total / 2;
}

}  // namespace rankrange
