#include "pellcirc/closed_forms.hpp"
#include "pellcirc/errors.hpp"
#include "pellcirc/factorization.hpp"
#include "pellcirc/linalg.hpp"

#include <doctest.h>

using namespace pellcirc;

TEST_CASE("Hessenberg entries at small n") {
    CHECK(hessenberg_factorization(SequenceKind::Pell, 4).hessenberg(2, 2) == -28);
    CHECK(hessenberg_factorization(SequenceKind::Pell, 5).hessenberg(3, 2) == -29);
    CHECK(hessenberg_factorization(SequenceKind::PellLucas, 4).hessenberg(3, 2) == -32);
    // Row 3 has no subdiagonal entry; the bidiagonal block starts there.
    CHECK(hessenberg_factorization(SequenceKind::Pell, 6).hessenberg(2, 1).is_zero());
    CHECK_THROWS_AS(hessenberg_factorization(SequenceKind::Pell, 3), DomainError);
}

TEST_CASE("factorization bundle products hold for 4 <= n <= 12") {
    for (auto kind : {SequenceKind::Pell, SequenceKind::PellLucas}) {
        for (std::size_t n = 4; n <= 12; ++n) {
            const auto b = hessenberg_factorization(kind, n);
            const DenseMatrix c = circ_expand(sequence_circulant(kind, n));
            const DenseMatrix lcr = mat_mul(mat_mul(b.left, c), b.right);
            REQUIRE(lcr == b.hessenberg);
            REQUIRE(mat_mul(lcr, b.column_op) == b.block);

            for (std::size_t i = 2; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i && j + 1 != i) REQUIRE(b.hessenberg(i, j).is_zero());

            const Rational head = kind == SequenceKind::Pell ? pell_scalars(n).g : pell_lucas_scalars(n).u;
            DenseMatrix h(2, 2);
            h(0, 0) = kind == SequenceKind::Pell ? 1 : 2;
            h(1, 1) = head;
            const DenseMatrix tail = kind == SequenceKind::Pell ? bidiagonal_pell(n) : bidiagonal_pell_lucas(n);
            REQUIRE(b.block == direct_sum(h, tail));

            // det(left) det(right) = 1, so the Hessenberg determinant is the circulant's.
            REQUIRE(oracle_det(b.hessenberg) == Rational(det_closed(kind, n)));
        }
    }
}

TEST_CASE("block form yields the inverse: P^-1 = N U (H^-1 + C^-1) M") {
    for (std::size_t n = 4; n <= 10; ++n) {
        const auto b = hessenberg_factorization(SequenceKind::Pell, n);
        DenseMatrix h_inv(2, 2);
        h_inv(0, 0) = 1;
        h_inv(1, 1) = pell_scalars(n).g.reciprocal();
        const DenseMatrix inverse = mat_mul(mat_mul(mat_mul(b.right, b.column_op),
                                                    direct_sum(h_inv, bidiagonal_inverse_pell(n))),
                                            b.left);
        REQUIRE(inverse == circ_expand(inv_pell_closed(n)));
    }
}
