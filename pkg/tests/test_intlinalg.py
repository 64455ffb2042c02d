import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from perikit.intlinalg import (
    IntMatrix,
    IntPolynomial,
    char_poly,
    det,
    eval_poly,
    inverse_unimodular,
    power_sum,
    rank,
    smith_normal_form,
)

# -- independent oracles -----------------------------------------------------


def det_by_permanent_expansion(m: IntMatrix) -> int:
    # Leibniz expansion; hopeless beyond n ~ 6 but fully independent.
    n = m.n
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = 1
        for i in range(n):
            term *= m.rows[i][perm[i]]
        total += sign * term
    return total


def rank_by_fraction_elimination(m: IntMatrix) -> int:
    rows = [[Fraction(x) for x in row] for row in m.rows]
    n = m.n
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col] / rows[r][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def kernel_basis(m: IntMatrix):
    """Rational kernel basis by full Gauss-Jordan elimination."""
    n = m.n
    rows = [[Fraction(x) for x in row] for row in m.rows]
    pivots = {}
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [a / rows[r][col] for a in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots[col] = r
        r += 1
    basis = []
    for col in range(n):
        if col in pivots:
            continue
        vec = [Fraction(0)] * n
        vec[col] = Fraction(1)
        for pcol, prow in pivots.items():
            vec[pcol] = -rows[prow][col]
        basis.append(vec)
    return basis


small_matrix = st.integers(min_value=-5, max_value=5)


def matrices(n):
    return st.lists(
        st.lists(small_matrix, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(IntMatrix)


def random_unimodular(rng, n, steps=12, bound=3):
    m = IntMatrix.identity(n)
    for _ in range(steps):
        kind = rng.randrange(3)
        if kind == 0 and n > 1:
            i, j = rng.sample(range(n), 2)
            shear = [[int(a == b) for b in range(n)] for a in range(n)]
            shear[i][j] = rng.randint(-bound, bound)
            m = m * IntMatrix(shear)
        elif kind == 1 and n > 1:
            i, j = rng.sample(range(n), 2)
            perm = [[int(a == b) for b in range(n)] for a in range(n)]
            perm[i][i] = perm[j][j] = 0
            perm[i][j] = perm[j][i] = 1
            m = m * IntMatrix(perm)
        else:
            i = rng.randrange(n)
            flip = [[int(a == b) for b in range(n)] for a in range(n)]
            flip[i][i] = -1
            m = m * IntMatrix(flip)
    return m


# -- determinant -------------------------------------------------------------


def test_det_identity():
    assert det(IntMatrix.identity(3)) == 1


def test_det_hand_cofactor():
    # [[-1,-1],[1,-2]]: (-1)(-2) - (-1)(1) = 3
    assert det(IntMatrix([[-1, -1], [1, -2]])) == 3


def test_det_coxeter_a2_minus_identity():
    c = IntMatrix([[0, -1], [1, -1]])
    shifted = c - IntMatrix.identity(2)
    a, b = shifted.rows[0]
    cc, dd = shifted.rows[1]
    assert abs(det(shifted)) == abs(a * dd - b * cc) == 3


@settings(max_examples=60, deadline=None)
@given(matrices(4), matrices(4))
def test_det_multiplicative(a, b):
    assert det(a * b) == det(a) * det(b)


@settings(max_examples=60, deadline=None)
@given(matrices(4))
def test_det_matches_permutation_expansion(a):
    assert det(a) == det_by_permanent_expansion(a)


# -- characteristic polynomial ------------------------------------------------


def test_char_poly_identity():
    # (x - 1)^2
    assert char_poly(IntMatrix.identity(2)) == IntPolynomial([1, -2, 1])


def test_char_poly_cyclic_shift():
    a = IntMatrix([[0, 0, -1], [1, 0, -1], [0, 1, -1]])
    assert char_poly(a) == IntPolynomial([1, 1, 1, 1])


def test_char_poly_g2_coxeter():
    from perikit.weyl import coxeter_element, root_system

    c = coxeter_element(root_system("G2"))
    assert char_poly(c.matrix) == IntPolynomial([1, -1, 1])


@settings(max_examples=60, deadline=None)
@given(matrices(4))
def test_char_poly_at_zero_is_det(a):
    p = char_poly(a)
    assert p.eval(0) == (-1) ** a.n * det(a)


@settings(max_examples=30, deadline=None)
@given(matrices(3), st.integers(min_value=-6, max_value=6))
def test_char_poly_evaluates_to_shifted_det(a, t):
    expected = det(t * IntMatrix.identity(a.n) - a)
    assert char_poly(a).eval(t) == expected


def test_eval_poly_examples():
    assert eval_poly(IntPolynomial([1, -1, 1]), 1) == 1
    companion = IntMatrix([[0, -1], [1, 1]])  # companion of (x^3+1)/(x+1)
    assert eval_poly(char_poly(companion), 1) == 1
    assert eval_poly(IntPolynomial([1, -2, 1]), 1) == 0


# -- rank ---------------------------------------------------------------------


def test_rank_examples():
    assert rank(IntMatrix.zeros(3)) == 0
    assert rank(IntMatrix.identity(3)) == 3


def test_rank_simple_reflection_is_one():
    from perikit.weyl import root_system, simple_reflections

    s1 = simple_reflections(root_system("A", 2))[0]
    assert rank(s1.matrix - IntMatrix.identity(2)) == 1


@settings(max_examples=80, deadline=None)
@given(matrices(4))
def test_rank_matches_fraction_elimination(a):
    assert rank(a) == rank_by_fraction_elimination(a)


@settings(max_examples=40, deadline=None)
@given(matrices(4))
def test_rank_nullity_with_explicit_kernel(a):
    basis = kernel_basis(a)
    assert rank(a) + len(basis) == a.n
    for vec in basis:
        assert all(v == 0 for v in a.apply(vec))


# -- Smith normal form ---------------------------------------------------------


def test_snf_examples():
    assert smith_normal_form(IntMatrix([[2, 0], [0, 3]])).d == (1, 6)
    assert smith_normal_form(IntMatrix.identity(4)).d == (1, 1, 1, 1)
    assert smith_normal_form(IntMatrix([[-1, -1], [1, -2]])).d == (1, 3)


def _check_snf(a):
    snf = smith_normal_form(a)
    n = a.n
    diag = IntMatrix([[snf.d[i] if i == j else 0 for j in range(n)] for i in range(n)])
    assert snf.U * a * snf.V == diag
    assert abs(det(snf.U)) == 1
    assert abs(det(snf.V)) == 1
    nonzero = [x for x in snf.d if x]
    assert list(snf.d) == nonzero + [0] * (n - len(nonzero))
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0
    d0 = det(a)
    if d0:
        prod = 1
        for x in snf.d:
            prod *= x
        assert prod == abs(d0)


@settings(max_examples=80, deadline=None)
@given(matrices(4))
def test_snf_reconstruction_and_chain(a):
    _check_snf(a)


def test_snf_singular_matrices():
    _check_snf(IntMatrix([[2, 4], [1, 2]]))
    _check_snf(IntMatrix.zeros(3))
    _check_snf(IntMatrix([[0, 0, 0], [0, 4, 6], [0, 6, 9]]))


# -- power sums and inverses ----------------------------------------------------


def test_power_sum_examples():
    a = IntMatrix([[3, 1], [2, 1]])
    assert power_sum(a, 1) == IntMatrix.identity(2)
    assert power_sum(IntMatrix([[-1]]), 2) == IntMatrix([[0]])
    shift = IntMatrix([[0, 0, -1], [1, 0, -1], [0, 1, -1]])
    assert power_sum(shift, 4) == IntMatrix.zeros(3)


def test_power_sum_telescopes_for_random_unimodular():
    rng = random.Random(7)
    ident = IntMatrix.identity(3)
    for _ in range(25):
        a = random_unimodular(rng, 3)
        for m in (1, 2, 5, 12):
            assert (a - ident) * power_sum(a, m) == a ** m - ident


def test_inverse_unimodular():
    rng = random.Random(11)
    for n in (1, 2, 3, 4):
        for _ in range(10):
            a = random_unimodular(rng, n)
            assert a * inverse_unimodular(a) == IntMatrix.identity(n)
    with pytest.raises(ValueError):
        inverse_unimodular(IntMatrix([[2, 0], [0, 1]]))


def test_matrix_json_roundtrip():
    a = IntMatrix([[1, -2], [3, 4]])
    assert IntMatrix.from_json(a.to_json()) == a
    p = IntPolynomial([0, 2, 1])
    assert IntPolynomial.from_json(p.to_json()) == p
