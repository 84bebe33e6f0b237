"""Quotient presentations, functionals on them, and the induced coalgebras."""

from fractions import Fraction

import pytest

from homdual.errors import InputError, MorphismError
from homdual.exact_math import Matrix
from homdual.homalg_core import (
    LinearMapCandidate,
    check_algebra_morphism,
    dualize_algebra,
    verify_hom_coalgebra,
)
from homdual.sweedler import (
    SweedlerFunctional,
    add_functionals,
    check_pullback_naturality,
    dual_basis_functional,
    make_poly_quotient,
    make_qplane_quotient,
    make_tensor_quotient,
    pullback_functional,
    quotient_dual_coalgebra,
    sweedler_delta,
    sweedler_twist,
    verify_quotient,
)


def square_matrix(dim):
    return Matrix(
        [[1 if t == 2 * s and t < dim else 0 for s in range(dim)] for t in range(dim)]
    )


# ---------------------------------------------------------- presentations


def test_poly_quotient_table():
    q = make_poly_quotient(3, 2)
    assert q.dim == 4
    assert q.labels == ["1", "x", "x^2", "x^3"]
    assert q.qmul[(1, 2)] == {3: 8}
    assert (2, 2) not in q.qmul
    assert q.qtwist[(2, 2)] == 4


def test_poly_quotient_edge_cases():
    one = make_poly_quotient(0, 5)
    assert one.dim == 1
    assert one.qmul[(0, 0)] == {0: 1}
    with pytest.raises(InputError):
        make_poly_quotient(2, 0)
    with pytest.raises(InputError):
        make_poly_quotient(-1, 1)


def test_classical_poly_quotient_is_plain_truncation():
    q = make_poly_quotient(2, 1)
    assert q.qmul[(1, 1)] == {2: 1}
    assert q.qtwist.is_identity()


def test_tensor_quotient_table():
    q = make_tensor_quotient(2, 2, (1, 1))
    xi = q.keys.index((0,))
    yi = q.keys.index((1,))
    xyi = q.keys.index((0, 1))
    assert q.labels[xyi] == "xy"
    assert q.qmul[(xi, yi)] == {xyi: 1}
    assert (xyi, xi) not in q.qmul
    twisted = make_tensor_quotient(2, 2, (2, 3))
    assert twisted.qmul[(xi, yi)] == {xyi: 6}


def test_tensor_one_letter_matches_poly():
    qt = make_tensor_quotient(1, 4, (Fraction(3, 2),))
    qp = make_poly_quotient(4, Fraction(3, 2))
    assert qt.dim == qp.dim
    for i in range(qt.dim):
        for j in range(qt.dim):
            assert qt.qmul.get((i, j), {}) == qp.qmul.get((i, j), {})
    assert qt.qtwist == qp.qtwist


def test_tensor_quotient_validation():
    with pytest.raises(InputError):
        make_tensor_quotient(0, 2, ())
    with pytest.raises(InputError):
        make_tensor_quotient(2, 2, (1,))
    with pytest.raises(InputError):
        make_tensor_quotient(2, 2, (1, 0))


def test_qplane_quotient_table():
    classical = make_qplane_quotient(1, 1, 1, 1)
    yi = classical.keys.index((0, 1))
    xi = classical.keys.index((1, 0))
    xyi = classical.keys.index((1, 1))
    assert classical.qmul[(yi, xi)] == {xyi: 1}

    q21 = make_qplane_quotient(2, 2, 2, 1)
    yi = q21.keys.index((0, 1))
    xi = q21.keys.index((1, 0))
    xyi = q21.keys.index((1, 1))
    assert q21.qmul[(yi, xi)] == {xyi: 2}

    q23 = make_qplane_quotient(2, 2, 2, 3)
    assert q23.qmul[(yi, xi)] == {xyi: 18}


def test_quotients_verify():
    assert verify_quotient(make_poly_quotient(5, 2)).passed
    assert verify_quotient(make_tensor_quotient(2, 2, (2, 3))).passed
    assert verify_quotient(make_qplane_quotient(2, 3, 2, 3)).passed


def test_verify_quotient_catches_bad_table():
    q = make_poly_quotient(3, 2)
    q.qmul[(1, 1)] = {2: 5}  # should be k^2 = 4
    report = verify_quotient(q)
    assert not report.passed
    axioms = {v[0] for v in report.violations}
    assert "quotient-projection-consistency" in axioms


def test_project_and_ambient_product():
    q = make_poly_quotient(3, 2)
    assert q.project_index(2) == 2
    assert q.project_index(9) is None
    coeff, key = q.ambient_product(2, 2)
    assert (coeff, key) == (16, 4)
    qq = make_qplane_quotient(2, 2, 2, 1)
    coeff, key = qq.ambient_product((0, 1), (1, 0))
    assert coeff == 2 and key == (1, 1)


# ------------------------------------------------------------- functionals


def test_functional_evaluation():
    q = make_poly_quotient(3, 2)
    f = SweedlerFunctional(q, [0, 0, 1, 0])
    assert f.evaluate_key(2) == 1
    assert f.evaluate_key(9) == 0
    assert f.evaluate_vector([0, 3, 5, 0]) == 5
    with pytest.raises(InputError):
        SweedlerFunctional(q, [1, 2])


def test_sweedler_delta_classical_deconcatenation():
    q = make_poly_quotient(3, 1)
    d2 = dual_basis_functional(q, 2)
    delta = sweedler_delta(q, d2)
    assert delta.terms == {(0, 2): 1, (1, 1): 1, (2, 0): 1}


def test_sweedler_delta_twisted():
    q = make_poly_quotient(3, 2)
    d2 = dual_basis_functional(q, 2)
    delta = sweedler_delta(q, d2)
    assert delta.terms == {(0, 2): 4, (1, 1): 4, (2, 0): 4}


def test_sweedler_delta_poly_closed_form():
    # Delta(d_n) = k^n sum_{i+j=n} d_i (x) d_j on every truncation level
    for k in (1, 2, Fraction(3, 2), -1):
        for N in range(11):
            q = make_poly_quotient(N, k)
            for n in range(N + 1):
                delta = sweedler_delta(q, dual_basis_functional(q, n))
                want = {(i, n - i): Fraction(k) ** n for i in range(n + 1)}
                assert delta.terms == want


def test_sweedler_delta_tensor_deconcatenation():
    q = make_tensor_quotient(2, 2, (1, 1))
    w = q.keys.index((0, 1))
    delta = sweedler_delta(q, dual_basis_functional(q, w))
    empty = q.keys.index(())
    x = q.keys.index((0,))
    y = q.keys.index((1,))
    assert delta.terms == {(empty, w): 1, (x, y): 1, (w, empty): 1}


def test_sweedler_twist():
    q1 = make_poly_quotient(3, 1)
    f = SweedlerFunctional(q1, [1, 2, 3, 4])
    assert sweedler_twist(q1, f).coeffs == f.coeffs

    q2 = make_poly_quotient(3, 2)
    d2 = dual_basis_functional(q2, 2)
    assert sweedler_twist(q2, d2).coeffs == [0, 0, 4, 0]

    qt = make_tensor_quotient(2, 2, (2, 3))
    w = qt.keys.index((0, 1))
    dw = dual_basis_functional(qt, w)
    twisted = sweedler_twist(qt, dw)
    want = [Fraction(0)] * qt.dim
    want[w] = Fraction(6)
    assert twisted.coeffs == want


def test_dual_coalgebra_two_routes_agree():
    for q in (
        make_poly_quotient(5, 1),
        make_poly_quotient(5, 3),
        make_tensor_quotient(2, 2, (2, 3)),
        make_qplane_quotient(2, 2, 2, 1),
    ):
        via_delta = quotient_dual_coalgebra(q)
        via_transpose = dualize_algebra(q.as_hom_algebra())
        assert via_delta == via_transpose
        assert verify_hom_coalgebra(via_delta).passed


def test_dual_coalgebra_divided_powers():
    dual = quotient_dual_coalgebra(make_poly_quotient(5, 3))
    for n in range(6):
        want = {(i, n - i): Fraction(3) ** n for i in range(n + 1)}
        assert dual.comul_vector(n) == want


# ---------------------------------------------------------------- pullback


def test_pullback_identity():
    q = make_poly_quotient(4, 2)
    f = SweedlerFunctional(q, [1, 0, 2, 0, 5])
    pulled = pullback_functional(q, q, Matrix.identity(5), f)
    assert pulled.coeffs == f.coeffs


def test_pullback_square_map():
    q = make_poly_quotient(6, 1)
    F = square_matrix(7)
    d4 = dual_basis_functional(q, 4)
    pulled = pullback_functional(q, q, F, d4)
    assert pulled.coeffs == [0, 0, 1, 0, 0, 0, 0]
    d3 = dual_basis_functional(q, 3)
    assert pullback_functional(q, q, F, d3).coeffs == [0] * 7


def test_pullback_rejects_non_morphism():
    q = make_poly_quotient(2, 1)
    shift = Matrix([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    with pytest.raises(MorphismError) as err:
        pullback_functional(q, q, shift, dual_basis_functional(q, 1))
    assert not err.value.report.passed


def test_pullback_naturality_square_map():
    q = make_poly_quotient(6, 1)
    report = check_pullback_naturality(q, q, square_matrix(7))
    assert report.passed


def test_pullback_naturality_twisted_pair():
    # x -> x^2 from the k=4 cube truncation into the k=2 one: alpha' o F = F o alpha
    src = make_poly_quotient(3, 4)
    tgt = make_poly_quotient(6, 2)
    F = Matrix([[1 if t == 2 * s else 0 for s in range(4)] for t in range(7)])
    assert check_algebra_morphism(
        src.as_hom_algebra(), tgt.as_hom_algebra(), LinearMapCandidate(4, 7, F)
    ).passed
    assert check_pullback_naturality(src, tgt, F).passed


def test_pullback_naturality_detects_non_morphism():
    q = make_poly_quotient(2, 1)
    shift = Matrix([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    with pytest.raises(MorphismError):
        check_pullback_naturality(q, q, shift)


# ---------------------------------------------------------------- addition


def test_add_functionals_same_quotient():
    q = make_poly_quotient(3, 2)
    f = SweedlerFunctional(q, [1, 0, 2, 0])
    g = SweedlerFunctional(q, [0, 1, 1, 0])
    s = add_functionals(f, g)
    assert s.quotient == q
    assert s.coeffs == [1, 1, 3, 0]


def test_add_functionals_merges_truncations():
    f = SweedlerFunctional(make_poly_quotient(3, 2), [0, 1, 0, 0])
    g = SweedlerFunctional(make_poly_quotient(5, 2), [0, 0, 1, 0, 0, 0])
    s = add_functionals(f, g)
    assert s.quotient.params["N"] == 5
    assert s.coeffs == [0, 1, 1, 0, 0, 0]
    # the merged functional still evaluates like the sum on common monomials
    assert s.evaluate_key(1) == 1
    assert s.evaluate_key(2) == 1


def test_add_functionals_qplane_box_merge():
    fa = make_qplane_quotient(2, 1, 2, 3)
    fb = make_qplane_quotient(1, 2, 2, 3)
    f = dual_basis_functional(fa, fa.keys.index((2, 1)))
    g = dual_basis_functional(fb, fb.keys.index((1, 2)))
    s = add_functionals(f, g)
    assert s.quotient.params["R"] == 2 and s.quotient.params["S"] == 2
    assert s.evaluate_key((2, 1)) == 1
    assert s.evaluate_key((1, 2)) == 1
    assert s.evaluate_key((0, 0)) == 0


def test_add_functionals_incompatible():
    f = SweedlerFunctional(make_poly_quotient(3, 2), [0, 1, 0, 0])
    g = SweedlerFunctional(make_poly_quotient(3, 3), [0, 1, 0, 0])
    with pytest.raises(InputError):
        add_functionals(f, g)
    h = SweedlerFunctional(make_tensor_quotient(1, 3, (2,)), [0, 1, 0, 0])
    with pytest.raises(InputError):
        add_functionals(f, h)


# ------------------------------------------------------------------- grids


def test_quotient_grid_verifies():
    for k in (1, 2, Fraction(3, 2), -1):
        for N in (0, 1, 4, 7):
            assert verify_quotient(make_poly_quotient(N, k)).passed
    for twists in ((1, 1), (2, 3), (Fraction(1, 2), -1)):
        for n in (0, 1, 2, 3):
            assert verify_quotient(make_tensor_quotient(2, n, twists)).passed
    for q in (1, 2):
        for k in (1, 3):
            assert verify_quotient(make_qplane_quotient(2, 2, q, k)).passed
