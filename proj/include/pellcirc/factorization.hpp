#pragma once

#include "pellcirc/dense_matrix.hpp"
#include "pellcirc/sequences.hpp"

namespace pellcirc {

/// The matrices that reduce ℙ (or ℚ) to Hessenberg and then block-diagonal form:
///   left · circulant · right            == hessenberg
///   left · circulant · right · column_op == block
/// For Pell: left = M, right = N, block = diag(1, g_n) ⊕ C.
/// For Pell-Lucas: left = K, right = L, block = diag(2, u_n) ⊕ A.
struct FactorizationBundle {
    DenseMatrix left;
    DenseMatrix right;
    DenseMatrix hessenberg;
    DenseMatrix column_op;
    DenseMatrix block;
};

/// Builds and verifies every product exactly, for n >= 4. Throws IntegrityError
/// naming the first entry that disagrees with the expected structure.
FactorizationBundle hessenberg_factorization(SequenceKind kind, std::size_t n);

}  // namespace pellcirc
