#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "semilin/fields.hpp"

namespace semilin {

// Dense exact matrix over one of the library's fields. All algorithms are
// plain fraction-free-enough Gaussian elimination; sizes here are desk scale.
struct FMat {
  int rows = 0, cols = 0;
  std::vector<FEl> a;

  FEl& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const FEl& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

FMat fmat_zero(int rows, int cols, const FEl& zero);
FMat fmat_identity(int n, const FEl& zero, const FEl& one);
FMat fmat_mul(const FMat& A, const FMat& B);
FMat fmat_add(const FMat& A, const FMat& B);
FMat fmat_sub(const FMat& A, const FMat& B);
FMat fmat_transpose(const FMat& A);
FMat fmat_kronecker(const FMat& A, const FMat& B);
FMat fmat_block_diag(const FMat& A, const FMat& B);
FEl fmat_trace(const FMat& A, const FEl& zero);
bool fmat_eq(const FMat& A, const FMat& B);
bool fmat_is_identity(const FMat& A);
FMat fmat_map(const FMat& A, const std::function<FEl(const FEl&)>& f);

int fmat_rank(FMat A);
std::optional<FMat> fmat_inverse(const FMat& A, const FEl& zero, const FEl& one);

// Basis of the right kernel {v : A v = 0}, echelonized deterministically.
std::vector<std::vector<FEl>> fmat_kernel(const FMat& A, const FEl& zero, const FEl& one);

// Solve A x = b; nullopt if inconsistent. Returns one particular solution.
std::optional<std::vector<FEl>> fmat_solve(const FMat& A, const std::vector<FEl>& b,
                                           const FEl& zero, const FEl& one);

}  // namespace semilin
