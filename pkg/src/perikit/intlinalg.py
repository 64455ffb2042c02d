"""Exact linear algebra over arbitrary-precision integers.

Determinant and rank use fraction-free (Bareiss) elimination, the
characteristic polynomial uses the Faddeev-LeVerrier recurrence (whose
divisions are exact over the integers), and the Smith normal form tracks
unimodular transforms on both sides.  All values are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class IntMatrix:
    """Immutable square matrix with arbitrary-precision integer entries."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if n < 1:
            raise ValueError("matrix needs at least one row")
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def from_json(cls, obj) -> "IntMatrix":
        """Parse the repo-wide matrix literal ``{"n": int, "rows": [[int,...],...]}``."""
        m = cls(obj["rows"])
        if m.n != int(obj["n"]):
            raise ValueError("declared dimension does not match rows")
        return m

    def to_json(self):
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_dim(other)
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_dim(other)
        return IntMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix([[other * a for a in row] for row in self.rows])
        if not isinstance(other, IntMatrix):
            return NotImplemented
        self._check_dim(other)
        cols = list(zip(*other.rows))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "IntMatrix":
        if k < 0:
            return inverse_unimodular(self) ** (-k)
        result = IntMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def _check_dim(self, other: "IntMatrix") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.rows)))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))

    def apply(self, vec):
        """Matrix-vector product; entries may be ints or Fractions."""
        if len(vec) != self.n:
            raise ValueError("vector length must equal matrix dimension")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.rows)

    def is_identity(self) -> bool:
        return all(
            self.rows[i][j] == (1 if i == j else 0)
            for i in range(self.n)
            for j in range(self.n)
        )

    def max_abs(self) -> int:
        return max(abs(a) for row in self.rows for a in row)


class IntPolynomial:
    """Integer polynomial stored low-degree-first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_json(cls, obj) -> "IntPolynomial":
        return cls(obj["coeffs"])

    def to_json(self):
        return {"coeffs": list(self.coeffs)}

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    __call__ = eval

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


@dataclass(frozen=True)
class SmithForm:
    """Diagonalization U*A*V = diag(d) with unimodular U, V and d_i | d_{i+1}."""

    d: tuple
    U: IntMatrix
    V: IntMatrix


def det(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = a.n
    m = [list(row) for row in a.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a: IntMatrix) -> int:
    """Rank over the rationals, computed by integer fraction-free elimination."""
    n = a.n
    m = [list(row) for row in a.rows]
    r = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(r, n) if m[i][col] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, n):
            for j in range(col + 1, n):
                m[i][j] = (m[i][j] * m[r][col] - m[i][col] * m[r][j]) // prev
            m[i][col] = 0
        prev = m[r][col]
        r += 1
        if r == n:
            break
    return r


def char_poly(a: IntMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(t*I - A), low-degree-first.

    Uses the Faddeev-LeVerrier recurrence; the division by the step index
    is exact over the integers, which is asserted.
    """
    n = a.n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = IntMatrix.identity(n)
    for k in range(1, n + 1):
        am = a * m
        tr = am.trace()
        q, rem = divmod(-tr, k)
        if rem:
            raise AssertionError("Faddeev-LeVerrier division must be exact")
        coeffs[n - k] = q
        if k < n:
            m = am + q * IntMatrix.identity(n)
    return IntPolynomial(coeffs)


def eval_poly(p: IntPolynomial, t: int) -> int:
    """Exact evaluation of an integer polynomial at an integer point."""
    return p.eval(t)


def power_sum(a: IntMatrix, m: int) -> IntMatrix:
    """Exact sum I + A + A^2 + ... + A^(m-1).

    Satisfies (A - I) * power_sum(A, m) = A^m - I.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    acc = IntMatrix.identity(a.n)
    term = IntMatrix.identity(a.n)
    for _ in range(m - 1):
        term = a * term
        acc = acc + term
    return acc


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    """Exact integer inverse of a matrix with determinant +-1.

    Built from the characteristic polynomial via Cayley-Hamilton, so the
    result stays in integers; raises ValueError when |det| != 1.
    """
    p = char_poly(a)
    c0 = p.coeffs[0]
    if abs(c0) != 1:
        raise ValueError("matrix is not unimodular")
    n = a.n
    acc = IntMatrix.identity(n) * p.coeffs[n]
    for k in range(n - 1, 0, -1):
        acc = acc * a + p.coeffs[k] * IntMatrix.identity(n)
    return acc * (-c0)


def smith_normal_form(a: IntMatrix) -> SmithForm:
    """Smith normal form with both unimodular transforms.

    Pivots are chosen as the minimal-absolute-value nonzero entry of the
    working submatrix, ties broken by lowest (row, column) index, which
    makes the output deterministic.  Returns SmithForm(d, U, V) with
    U*A*V = diag(d), d_i >= 0 and d_i | d_{i+1} (zeros last).
    """
    n = a.n
    d = [list(row) for row in a.rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in range(n):
            d[r][i], d[r][j] = d[r][j], d[r][i]
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def row_addmul(i, j, q):
        # row i += q * row j
        d[i] = [x + q * y for x, y in zip(d[i], d[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]

    def col_addmul(i, j, q):
        # col i += q * col j
        for r in range(n):
            d[r][i] += q * d[r][j]
            v[r][i] += q * v[r][j]

    def row_negate(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]

    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    val = abs(d[i][j])
                    if val and (best is None or val < best[0]):
                        best = (val, i, j)
            if best is None:
                break  # remaining submatrix is zero
            _, pi, pj = best
            if pi != t:
                row_swap(t, pi)
            if pj != t:
                col_swap(t, pj)
            if d[t][t] < 0:
                row_negate(t)
            p = d[t][t]
            for i in range(t + 1, n):
                if d[i][t]:
                    row_addmul(i, t, -(d[i][t] // p))
            for j in range(t + 1, n):
                if d[t][j]:
                    col_addmul(j, t, -(d[t][j] // p))
            if any(d[i][t] for i in range(t + 1, n)) or any(
                d[t][j] for j in range(t + 1, n)
            ):
                continue  # remainders left a smaller pivot candidate
            witness = next(
                (
                    i
                    for i in range(t + 1, n)
                    if any(d[i][j] % p for j in range(t + 1, n))
                ),
                None,
            )
            if witness is None:
                break
            # pull a non-divisible row up so the next pivot becomes a gcd
            row_addmul(t, witness, 1)
        if d[t][t] == 0:
            break
    diag = tuple(d[i][i] for i in range(n))
    return SmithForm(diag, IntMatrix(u), IntMatrix(v))
