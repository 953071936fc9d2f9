#pragma once

#include <vector>

#include "scimap/matrix.hpp"

namespace scimap {

/// Eigenpairs of a symmetric matrix. Column k of `vectors` belongs to
/// `values[k]`; values are sorted descending.
struct EigenResult {
  std::vector<double> values;
  Matrix vectors;
  int sweeps = 0;
  bool converged = false;
};

struct EigenOptions {
  int max_sweeps = 100;
  /// Stop once the off-diagonal Frobenius mass is below tol * ||S||_F.
  double tol = 1e-12;
  /// Relative asymmetry accepted on input.
  double symmetry_tol = 1e-9;
};

/// Full symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps visit every (p, q) pair once, in round-robin order so that each
/// round applies n/2 disjoint rotations with row-contiguous memory access.
/// Ties in the sorted values keep the order of their diagonal positions, and
/// each eigenvector is signed so its largest-magnitude entry is nonnegative.
///
/// Throws scimap::Error for non-square input or asymmetry beyond
/// `symmetry_tol` relative to the largest entry.
EigenResult sym_eig(const Matrix& s, const EigenOptions& options = {});

/// Flips v (in place) so that its first largest-magnitude entry is >= 0.
void canonicalize_sign(std::span<double> v);

}  // namespace scimap
