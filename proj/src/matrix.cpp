#include "semilin/matrix.hpp"

#include <algorithm>

namespace semilin {

FMat fmat_zero(int rows, int cols, const FEl& zero) {
  FMat m;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<size_t>(rows) * cols, zero);
  return m;
}

FMat fmat_identity(int n, const FEl& zero, const FEl& one) {
  FMat m = fmat_zero(n, n, zero);
  for (int i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

FMat fmat_mul(const FMat& A, const FMat& B) {
  internal_check(A.cols == B.rows, "matrix dimension mismatch in product");
  FMat C;
  C.rows = A.rows;
  C.cols = B.cols;
  C.a.reserve(static_cast<size_t>(C.rows) * C.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < B.cols; ++j) {
      FEl acc = fe_mul(A.at(i, 0), B.at(0, j));
      for (int k = 1; k < A.cols; ++k) acc = fe_add(acc, fe_mul(A.at(i, k), B.at(k, j)));
      C.a.push_back(acc);
    }
  }
  return C;
}

FMat fmat_add(const FMat& A, const FMat& B) {
  internal_check(A.rows == B.rows && A.cols == B.cols, "matrix dimension mismatch in sum");
  FMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = fe_add(C.a[i], B.a[i]);
  return C;
}

FMat fmat_sub(const FMat& A, const FMat& B) {
  internal_check(A.rows == B.rows && A.cols == B.cols, "matrix dimension mismatch in difference");
  FMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = fe_sub(C.a[i], B.a[i]);
  return C;
}

FMat fmat_transpose(const FMat& A) {
  FMat C;
  C.rows = A.cols;
  C.cols = A.rows;
  C.a.resize(A.a.size(), A.a.empty() ? FEl(Rat(0)) : A.a[0]);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(j, i) = A.at(i, j);
  return C;
}

FMat fmat_kronecker(const FMat& A, const FMat& B) {
  FMat C;
  C.rows = A.rows * B.rows;
  C.cols = A.cols * B.cols;
  C.a.resize(static_cast<size_t>(C.rows) * C.cols, A.a.empty() ? FEl(Rat(0)) : A.a[0]);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      for (int r = 0; r < B.rows; ++r)
        for (int c = 0; c < B.cols; ++c)
          C.at(i * B.rows + r, j * B.cols + c) = fe_mul(A.at(i, j), B.at(r, c));
  return C;
}

FMat fmat_block_diag(const FMat& A, const FMat& B) {
  FEl zero = fe_sub(A.a.empty() ? B.a[0] : A.a[0], A.a.empty() ? B.a[0] : A.a[0]);
  FMat C = fmat_zero(A.rows + B.rows, A.cols + B.cols, zero);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) C.at(A.rows + i, A.cols + j) = B.at(i, j);
  return C;
}

FEl fmat_trace(const FMat& A, const FEl& zero) {
  FEl acc = zero;
  for (int i = 0; i < std::min(A.rows, A.cols); ++i) acc = fe_add(acc, A.at(i, i));
  return acc;
}

bool fmat_eq(const FMat& A, const FMat& B) {
  if (A.rows != B.rows || A.cols != B.cols) return false;
  for (size_t i = 0; i < A.a.size(); ++i)
    if (!fe_eq(A.a[i], B.a[i])) return false;
  return true;
}

bool fmat_is_identity(const FMat& A) {
  if (A.rows != A.cols) return false;
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      if (i == j) {
        // x = 1 iff x is a nonzero idempotent in a field
        FEl sq = fe_mul(A.at(i, j), A.at(i, j));
        if (!fe_eq(sq, A.at(i, j)) || fe_is_zero(A.at(i, j))) return false;
      } else if (!fe_is_zero(A.at(i, j))) {
        return false;
      }
    }
  return true;
}

FMat fmat_map(const FMat& A, const std::function<FEl(const FEl&)>& f) {
  FMat C = A;
  for (auto& x : C.a) x = f(x);
  return C;
}

namespace {

// Row echelon with column pivot bookkeeping. Works in place.
struct Echelon {
  std::vector<int> pivot_col;  // pivot column of row r
  int rank = 0;
};

Echelon row_reduce(FMat& A) {
  Echelon e;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int pr = -1;
    for (int i = r; i < A.rows; ++i)
      if (!fe_is_zero(A.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(pr, j), A.at(r, j));
    FEl inv = fe_inv(A.at(r, c));
    for (int j = c; j < A.cols; ++j) A.at(r, j) = fe_mul(inv, A.at(r, j));
    for (int i = 0; i < A.rows; ++i) {
      if (i == r || fe_is_zero(A.at(i, c))) continue;
      FEl f = A.at(i, c);
      for (int j = c; j < A.cols; ++j) A.at(i, j) = fe_sub(A.at(i, j), fe_mul(f, A.at(r, j)));
    }
    e.pivot_col.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

}  // namespace

int fmat_rank(FMat A) { return row_reduce(A).rank; }

std::optional<FMat> fmat_inverse(const FMat& A, const FEl& zero, const FEl& one) {
  internal_check(A.rows == A.cols, "inverse of a non-square matrix");
  int n = A.rows;
  FMat aug = fmat_zero(n, 2 * n, zero);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = one;
  }
  Echelon e = row_reduce(aug);
  if (e.rank < n) return std::nullopt;
  FMat inv = fmat_zero(n, n, zero);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<std::vector<FEl>> fmat_kernel(const FMat& A, const FEl& zero, const FEl& one) {
  FMat R = A;
  Echelon e = row_reduce(R);
  std::vector<bool> is_pivot(A.cols, false);
  for (int c : e.pivot_col) is_pivot[c] = true;
  std::vector<std::vector<FEl>> basis;
  for (int c = 0; c < A.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<FEl> v(A.cols, zero);
    v[c] = one;
    for (int r = 0; r < e.rank; ++r) {
      int pc = e.pivot_col[r];
      v[pc] = fe_neg(R.at(r, c));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<FEl>> fmat_solve(const FMat& A, const std::vector<FEl>& b,
                                           const FEl& zero, const FEl& one) {
  internal_check(static_cast<int>(b.size()) == A.rows, "solve: rhs length mismatch");
  FMat aug = fmat_zero(A.rows, A.cols + 1, zero);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  Echelon e = row_reduce(aug);
  // Inconsistent if a pivot lands in the rhs column.
  for (int c : e.pivot_col)
    if (c == A.cols) return std::nullopt;
  std::vector<FEl> x(A.cols, zero);
  for (int r = 0; r < e.rank; ++r) x[e.pivot_col[r]] = aug.at(r, A.cols);
  (void)one;
  return x;
}

}  // namespace semilin
