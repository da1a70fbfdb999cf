#pragma once

#include "pellcirc/dense_matrix.hpp"

namespace pellcirc {

/// Throws ShapeError when a.cols() != b.rows().
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);

/// Block-diagonal diag(a, b).
DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination. Rows are first
/// scaled to integers by their denominators' lcm, so all intermediate work is
/// over ℤ. Throws ShapeError for non-square input.
Rational oracle_det(const DenseMatrix& m);

/// Exact determinant by plain Gaussian elimination over ℚ. Independent of the
/// Bareiss path; used to cross-check it.
Rational oracle_det_rational(const DenseMatrix& m);

/// Gauss-Jordan inverse. Pivot is the first nonzero entry scanning down the
/// column. Throws SingularMatrixError (with the column) or ShapeError.
DenseMatrix oracle_inverse(const DenseMatrix& m);

}  // namespace pellcirc
