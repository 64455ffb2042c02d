"""Monomial matrices whose nonzero entries are roots of unity.

A matrix is stored as a permutation sigma plus one exponent per column:
column j holds the root of unity with exponent q_j (a reduced rational in
[0, 1)) at row sigma(j).  Roots of unity are never realized as complex
numbers; all products, orders and form checks happen in Q/Z exponent
arithmetic, so every result is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, InvalidDivisor, NonRealEntries
from .intlinalg import IntMatrix, IntPolynomial
from .torsion import mod1


class MonomialMatrix:
    __slots__ = ("n", "sigma", "q")

    def __init__(self, sigma, q):
        sigma = tuple(int(s) for s in sigma)
        n = len(sigma)
        if sorted(sigma) != list(range(n)):
            raise ValueError("sigma must be a permutation of 0..n-1")
        q = tuple(mod1(Fraction(v)) for v in q)
        if len(q) != n:
            raise ValueError("need one exponent per column")
        self.n = n
        self.sigma = sigma
        self.q = q

    @classmethod
    def identity(cls, n: int) -> "MonomialMatrix":
        return cls(range(n), [Fraction(0)] * n)

    @classmethod
    def from_json(cls, obj) -> "MonomialMatrix":
        """Parse {"n": int, "sigma": [1-based images], "q": ["p/q", ...]}."""
        from .torsion import parse_rational

        sigma = [int(s) - 1 for s in obj["sigma"]]
        q = [parse_rational(s) for s in obj["q"]]
        m = cls(sigma, q)
        if m.n != int(obj["n"]):
            raise ValueError("declared dimension does not match sigma")
        return m

    def to_json(self):
        from .torsion import format_rational

        return {
            "n": self.n,
            "sigma": [s + 1 for s in self.sigma],
            "q": [format_rational(v) for v in self.q],
        }

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if not isinstance(other, MonomialMatrix):
            return NotImplemented
        if self.n != other.n:
            raise DimensionMismatch(
                f"monomial dimensions differ: {self.n} vs {other.n}"
            )
        # (a*b) e_j = q_b[j] * a(e_{sigma_b(j)}) lands at sigma_a(sigma_b(j))
        sigma = tuple(self.sigma[other.sigma[j]] for j in range(self.n))
        q = tuple(
            mod1(other.q[j] + self.q[other.sigma[j]]) for j in range(self.n)
        )
        return MonomialMatrix(sigma, q)

    def __pow__(self, k: int) -> "MonomialMatrix":
        if k < 0:
            raise ValueError("negative powers not supported")
        result = MonomialMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return self.sigma == tuple(range(self.n)) and all(v == 0 for v in self.q)

    def exponent_grid(self):
        """Dense n x n grid of entries, each None (zero) or an exponent."""
        grid = [[None] * self.n for _ in range(self.n)]
        for j in range(self.n):
            grid[self.sigma[j]][j] = self.q[j]
        return grid

    def realize_int(self) -> IntMatrix:
        """Realize as an integer matrix; only entries +-1 can be realized."""
        rows = [[0] * self.n for _ in range(self.n)]
        for j, exp in enumerate(self.q):
            if exp == 0:
                rows[self.sigma[j]][j] = 1
            elif exp == Fraction(1, 2):
                rows[self.sigma[j]][j] = -1
            else:
                raise NonRealEntries(f"entry exponent {exp} is not 0 or 1/2")
        return IntMatrix(rows)

    def det_exponent(self) -> Fraction:
        """Exponent of det in Q/Z: permutation sign plus the entry exponents."""
        total = sum(self.q, Fraction(0))
        if permutation_sign(self.sigma) < 0:
            total += Fraction(1, 2)
        return mod1(total)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialMatrix)
            and self.sigma == other.sigma
            and self.q == other.q
        )

    def __hash__(self):
        return hash((self.sigma, self.q))

    def __repr__(self):
        return f"MonomialMatrix(sigma={self.sigma}, q={self.q})"


def permutation_cycles(sigma):
    """Cycles of a permutation given as a tuple of 0-based images."""
    n = len(sigma)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = sigma[j]
        cycles.append(tuple(cyc))
    return cycles


def permutation_sign(sigma) -> int:
    return -1 if (len(sigma) - len(permutation_cycles(sigma))) % 2 else 1


@dataclass(frozen=True)
class CycleFactorization:
    """Per-cycle data: support, length s_j, and product exponent p_j."""

    cycles: tuple


def cycle_factorization(a: MonomialMatrix) -> CycleFactorization:
    out = []
    for cyc in permutation_cycles(a.sigma):
        p = mod1(sum((a.q[j] for j in cyc), Fraction(0)))
        out.append((cyc, len(cyc), p))
    return CycleFactorization(tuple(out))


def order(a: MonomialMatrix) -> int:
    """Multiplicative order: lcm over cycles of s_j times the order of p_j.

    A cycle of length s whose entry exponents sum to p satisfies
    block^s = (root with exponent p) * I, so it contributes s * ord(p).
    The closed form is certified against iterated multiplication.
    """
    from math import lcm

    n_ord = 1
    for _, s, p in cycle_factorization(a).cycles:
        n_ord = lcm(n_ord, s * p.denominator)
    if not (a ** n_ord).is_identity():
        raise AssertionError("closed-form order does not annihilate the matrix")
    p = 2
    rest = n_ord
    while p * p <= rest:
        if rest % p == 0:
            if (a ** (n_ord // p)).is_identity():
                raise AssertionError("closed-form order is not minimal")
            while rest % p == 0:
                rest //= p
        p += 1
    if rest > 1 and (a ** (n_ord // rest)).is_identity():
        raise AssertionError("closed-form order is not minimal")
    return n_ord


def char_poly_blocks(a: MonomialMatrix, assemble: bool = True):
    """Block data (s_j, p_j) of the characteristic polynomial, and the
    assembled integer polynomial prod(x^s_j - P_j) when all entries are
    +-1 (P_j = +-1).

    With assemble=True (default) a matrix with other roots of unity raises
    NonRealEntries; pass assemble=False to get only the block list.
    """
    blocks = [(s, p) for _, s, p in cycle_factorization(a).cycles]
    if not assemble:
        return blocks, None
    poly = IntPolynomial([1])
    for s, p in blocks:
        if p == 0:
            pj = 1
        elif p == Fraction(1, 2):
            pj = -1
        else:
            raise NonRealEntries(f"cycle product exponent {p} is not 0 or 1/2")
        poly = poly * IntPolynomial([-pj] + [0] * (s - 1) + [1])
    return blocks, poly


def has_eigenvalue_one(a: MonomialMatrix) -> bool:
    """True iff some cycle product is 1, i.e. some block has eigenvalue 1."""
    return any(p == 0 for _, _, p in cycle_factorization(a).cycles)


def _form_entry(form: str, n_total: int, i: int, j: int):
    if i + j != n_total - 1:
        return None
    if form == "omega":
        return Fraction(0)
    # lambda: +1 on the upper half of the antidiagonal, -1 on the lower
    return Fraction(0) if i < n_total // 2 else Fraction(1, 2)


def preserves_form(a: MonomialMatrix, form: str) -> bool:
    """Exact check of g^T F g = F in exponent arithmetic.

    form="omega" is the antidiagonal all-ones matrix (any dimension);
    form="lambda" is the symplectic form [[0, I'], [-I', 0]] with I'
    antidiagonal, which needs even dimension.

    Because g is monomial, (g^T F g)[i][j] has at most one term, so no
    sums of roots of unity ever appear.
    """
    form = form.lower()
    if form not in ("omega", "lambda"):
        raise ValueError("form must be 'omega' or 'lambda'")
    if form == "lambda" and a.n % 2 != 0:
        raise DimensionMismatch("the symplectic form needs even dimension")
    n = a.n
    for i in range(n):
        for j in range(n):
            target = _form_entry(form, n, i, j)
            src = _form_entry(form, n, a.sigma[i], a.sigma[j])
            lhs = None if src is None else mod1(src + a.q[i] + a.q[j])
            if lhs != target:
                return False
    return True


def twisted_double_shift(n: int, k: int) -> MonomialMatrix:
    """Block pair of n-cycles over k-th roots of unity with order n*k.

    The first block is the n-cycle whose wrap-around entry carries the
    exponent (n-1)/k; the second is the same cycle additionally scaled by
    diag(zeta, 1, ..., 1) with zeta of exponent 1/k.  Requires k | n,
    which makes the second block's cycle product trivial, so the first
    block alone fixes the order at n*k.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if n % k != 0:
        raise InvalidDivisor(f"k = {k} must divide n = {n}")
    size = 2 * n
    sigma = [0] * size
    q = [Fraction(0)] * size
    corner = Fraction(n - 1, k)
    for j in range(n - 1):
        sigma[j] = j + 1
        sigma[n + j] = n + j + 1
    sigma[n - 1] = 0
    sigma[2 * n - 1] = n
    q[n - 1] = corner
    q[2 * n - 1] = corner
    q[n] = Fraction(1, k)  # the diag(zeta, 1, ..., 1) twist on the second block
    return MonomialMatrix(sigma, q)


def involution_family_order(t: Fraction, s: Fraction) -> int:
    """Order of the 4x4 rational matrix antidiag(1/t, t) (+) [[1, s], [0, -1]].

    Computed by exact rational iteration; the square is the identity for
    every nonzero t and every s, so the result is always 2.
    """
    t = Fraction(t)
    s = Fraction(s)
    if t == 0:
        raise ValueError("t must be nonzero")
    m = [
        [Fraction(0), 1 / t, Fraction(0), Fraction(0)],
        [t, Fraction(0), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1), s],
        [Fraction(0), Fraction(0), Fraction(0), Fraction(-1)],
    ]

    def mat_mult(x, y):
        return [
            [sum(x[i][l] * y[l][j] for l in range(4)) for j in range(4)]
            for i in range(4)
        ]

    ident = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    acc = [row[:] for row in ident]
    for n_ord in range(1, 9):
        acc = mat_mult(acc, m)
        if acc == ident:
            return n_ord
    raise AssertionError("family member order exceeded the expected bound")
