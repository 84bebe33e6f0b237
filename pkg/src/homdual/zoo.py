"""Ready-made algebra instances for tests and randomized sweeps.

Classical associative seeds (dual numbers, diagonal algebras, 2x2 matrix
units) plus twisted instances produced from them with yau_twist, plus the
truncated quotient families viewed as finite Hom-algebras.  Twisted
instances are hard to write down directly by hand; everything here passes
the verifiers by construction.
"""

from fractions import Fraction

from .exact_math import Matrix, rat
from .homalg_core import FiniteHomAlgebra, yau_twist
from .sweedler import make_poly_quotient, make_qplane_quotient, make_tensor_quotient


def dual_numbers():
    """Basis 1, x with x^2 = 0 and identity twist."""
    mul = {
        (0, 0): {0: Fraction(1)},
        (0, 1): {1: Fraction(1)},
        (1, 0): {1: Fraction(1)},
    }
    return FiniteHomAlgebra(2, mul, Matrix.identity(2))


def diagonal_algebra(n):
    """Componentwise product on n idempotents, identity twist."""
    mul = {(i, i): {i: Fraction(1)} for i in range(n)}
    return FiniteHomAlgebra(n, mul, Matrix.identity(n))


def matrix_algebra_2x2():
    """Matrix units E11, E12, E21, E22 with E_ab E_cd = [b = c] E_ad."""
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    index = {unit: pos for pos, unit in enumerate(units)}
    mul = {}
    for pos1, (a, b) in enumerate(units):
        for pos2, (c, d) in enumerate(units):
            if b == c:
                mul[(pos1, pos2)] = {index[(a, d)]: Fraction(1)}
    return FiniteHomAlgebra(4, mul, Matrix.identity(4))


def conjugation_endo_2x2(p11, p12, p21, p22):
    """Matrix of M -> P M P^(-1) on the unit basis of the 2x2 matrix algebra."""
    p = ((rat(p11), rat(p12)), (rat(p21), rat(p22)))
    det = p[0][0] * p[1][1] - p[0][1] * p[1][0]
    if det == 0:
        raise ValueError("conjugating matrix must be invertible")
    pinv = (
        (p[1][1] / det, -p[0][1] / det),
        (-p[1][0] / det, p[0][0] / det),
    )
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    cols = []
    for a, b in units:
        image = [[p[i][a] * pinv[b][j] for j in range(2)] for i in range(2)]
        cols.append([image[c][d] for (c, d) in units])
    return Matrix([[cols[j][i] for j in range(4)] for i in range(4)])


def permutation_endo(perm):
    """Matrix of e_i -> e_perm[i]."""
    n = len(perm)
    return Matrix(
        [[Fraction(int(perm[j] == i)) for j in range(n)] for i in range(n)]
    )


def scaling_endo_dual_numbers(c):
    """1 -> 1, x -> c x; multiplicative because x^2 = 0."""
    return Matrix([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(c)]])


def zoo_algebras(max_dim=12):
    """Named verified Hom-algebra instances of dimension at most max_dim.

    Mix of classical associative algebras (identity twist), their Yau
    twists (invertible and non-invertible), and truncated quotient
    presentations of the three shipped families.
    """
    instances = [
        ("dual-numbers", dual_numbers()),
        (
            "dual-numbers-scaled",
            yau_twist(dual_numbers(), scaling_endo_dual_numbers(3)),
        ),
        ("diagonal-4", diagonal_algebra(4)),
        (
            "diagonal-4-swapped",
            yau_twist(diagonal_algebra(4), permutation_endo([1, 0, 3, 2])),
        ),
        (
            "diagonal-3-projected",
            yau_twist(
                diagonal_algebra(3),
                Matrix(
                    [
                        [Fraction(1), Fraction(0), Fraction(0)],
                        [Fraction(0), Fraction(1), Fraction(0)],
                        [Fraction(0), Fraction(0), Fraction(0)],
                    ]
                ),
            ),
        ),
        ("matrix-2x2", matrix_algebra_2x2()),
        (
            "matrix-2x2-conjugated",
            yau_twist(matrix_algebra_2x2(), conjugation_endo_2x2(1, 1, 0, 1)),
        ),
        (
            "matrix-2x2-conjugated-scaled",
            yau_twist(matrix_algebra_2x2(), conjugation_endo_2x2(2, 0, 1, 3)),
        ),
        ("poly-trunc-N5-k1", make_poly_quotient(5, 1).as_hom_algebra()),
        ("poly-trunc-N5-k2", make_poly_quotient(5, 2).as_hom_algebra()),
        ("poly-trunc-N10-k3/2", make_poly_quotient(10, Fraction(3, 2)).as_hom_algebra()),
        (
            "tensor-trunc-a2-n2",
            make_tensor_quotient(2, 2, (Fraction(2), Fraction(3))).as_hom_algebra(),
        ),
        ("qplane-R2-S2-q2-k1", make_qplane_quotient(2, 2, 2, 1).as_hom_algebra()),
        ("qplane-R2-S2-q2-k3", make_qplane_quotient(2, 2, 2, 3).as_hom_algebra()),
        (
            "qplane-R2-S3-q2-k3",
            make_qplane_quotient(2, 3, 2, 3).as_hom_algebra(),
        ),
    ]
    return [(name, alg) for name, alg in instances if alg.dim <= max_dim]
