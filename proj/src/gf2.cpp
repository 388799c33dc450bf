#include "dnsurf/gf2.hpp"

#include <utility>

namespace dnsurf::gf2 {

std::vector<int> Matrix::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows(); ++c) {
    int p = -1;
    for (int i = r; i < rows(); ++i)
      if (rows_[static_cast<size_t>(i)].get(c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows_[static_cast<size_t>(r)], rows_[static_cast<size_t>(p)]);
    for (int i = 0; i < rows(); ++i)
      if (i != r && rows_[static_cast<size_t>(i)].get(c)) rows_[static_cast<size_t>(i)] ^= rows_[static_cast<size_t>(r)];
    pivots.push_back(c);
    ++r;
  }
  rank_ = r;
  return pivots;
}

std::vector<BitVec> Matrix::kernel_basis(const Matrix& m) {
  Matrix red = m;
  std::vector<int> pivots = red.rref();
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<BitVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    BitVec v(m.cols());
    v.set(c, true);
    // Back-substitute: pivot row r has its pivot at pivots[r].
    for (size_t r = 0; r < pivots.size(); ++r)
      if (red.row(static_cast<int>(r)).get(c)) v.set(pivots[r], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

RowSpace::RowSpace(Matrix m) {
  pivots_ = m.rref();
  for (int r = 0; r < m.rank(); ++r) basis_.push_back(m.row(r));
}

}  // namespace dnsurf::gf2
