"""Built-in root system data and the reflection representation.

Convention, fixed repo-wide: the Cartan matrix C is stored so that the
simple reflection i acts on simple roots by s_i(alpha_j) = alpha_j -
C[i][j] * alpha_i, i.e. C[i][j] = <alpha_j, alpha_i^vee>.  Group elements
are integer matrices in the simple-root basis acting on coordinate
columns, and products compose left-to-right as usual (apply rightmost
first).  The generator-relation test suite guards the convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InternalCheckFailed
from ..intlinalg import IntMatrix, det

FAMILIES = ("A", "B", "C", "D", "G2", "F4", "E6", "E7", "E8")

_EXCEPTIONAL_RANK = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}

_EXCEPTIONAL_EXPONENTS = {
    "G2": (1, 5),
    "F4": (1, 5, 7, 11),
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
}

_CLASSICAL_GROUP_NAMES = {
    "A": lambda n: f"SL_{n + 1}",
    "B": lambda n: f"SO_{2 * n + 1}",
    "C": lambda n: f"Sp_{2 * n}",
    "D": lambda n: f"SO_{2 * n}",
}


@dataclass(frozen=True)
class RootSystemType:
    family: str
    rank: int
    cartan: IntMatrix
    exponents: tuple
    coxeter_number: int
    weyl_order: int

    @property
    def label(self) -> str:
        if self.family in _EXCEPTIONAL_RANK:
            return self.family
        return f"{self.family}{self.rank}"

    @property
    def matrix_group_name(self) -> str:
        if self.family in _CLASSICAL_GROUP_NAMES:
            return _CLASSICAL_GROUP_NAMES[self.family](self.rank)
        return self.family


def _exponents(family: str, n: int):
    if family == "A":
        return tuple(range(1, n + 1))
    if family in ("B", "C"):
        return tuple(range(1, 2 * n, 2))
    if family == "D":
        return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
    return _EXCEPTIONAL_EXPONENTS[family]


def _cartan(family: str, n: int) -> IntMatrix:
    c = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def bond(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if family == "B" and n >= 2:
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            c[n - 1][n - 2] = -2
        if family == "C" and n >= 2:
            c[n - 2][n - 1] = -2
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif family == "G2":
        bond(0, 1, cij=-1, cji=-3)
    elif family == "F4":
        bond(0, 1)
        bond(2, 3)
        bond(1, 2, cij=-1, cji=-2)
    else:
        # E-series, Bourbaki numbering: chain 1-3-4-5-..., branch node 2 at 4
        chain = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: n - 2]
        for i, j in chain:
            bond(i, j)
        bond(1, 3)
    return IntMatrix(c)


def root_system(family: str, rank: int | None = None) -> RootSystemType:
    """Build one of the nine built-in root system types."""
    family = family.upper()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family in _EXCEPTIONAL_RANK:
        fixed = _EXCEPTIONAL_RANK[family]
        if rank is not None and rank != fixed:
            raise ValueError(f"{family} has rank {fixed}")
        rank = fixed
    else:
        if rank is None:
            raise ValueError(f"family {family} needs an explicit rank")
        minimum = {"A": 1, "B": 1, "C": 1, "D": 3}[family]
        if rank < minimum:
            raise ValueError(f"family {family} needs rank >= {minimum}")
    exps = _exponents(family, rank)
    h = exps[-1] + 1
    order = 1
    for m in exps:
        order *= m + 1
    for i, m in enumerate(exps):
        if m + exps[rank - 1 - i] != h:
            raise InternalCheckFailed("exponent duality table error")
    return RootSystemType(family, rank, _cartan(family, rank), exps, h, order)


def all_builtin_types():
    """The concrete types of the reference table: classical ranks used in
    the census plus all five exceptional groups."""
    out = [root_system("A", n) for n in range(1, 7)]
    out += [root_system("B", n) for n in range(2, 7)]
    out += [root_system("C", n) for n in range(2, 7)]
    out += [root_system("D", n) for n in range(3, 7)]
    out += [root_system(f) for f in ("G2", "F4", "E6", "E7", "E8")]
    return out


class WeylElement:
    """Group element as an integer matrix in the simple-root basis."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: IntMatrix):
        self.matrix = matrix

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.matrix * other.matrix)

    def __pow__(self, k: int) -> "WeylElement":
        return WeylElement(self.matrix ** k)

    def is_identity(self) -> bool:
        return self.matrix.is_identity()

    def order(self, cap: int = 10_000) -> int:
        acc = self.matrix
        for k in range(1, cap + 1):
            if acc.is_identity():
                return k
            acc = acc * self.matrix
        raise InternalCheckFailed(f"order exceeds cap {cap}")

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"WeylElement({self.matrix!r})"


def simple_reflections(t: RootSystemType):
    """Reflection matrices: the identity with row i replaced by e_i - C_i."""
    n = t.rank
    out = []
    for i in range(n):
        rows = [[int(a == b) for b in range(n)] for a in range(n)]
        rows[i] = [int(i == j) - t.cartan.rows[i][j] for j in range(n)]
        out.append(WeylElement(IntMatrix(rows)))
    return out


def coxeter_element(t: RootSystemType) -> WeylElement:
    """Product of all simple reflections in index order."""
    refs = simple_reflections(t)
    acc = refs[0]
    for s in refs[1:]:
        acc = acc * s
    return acc


def is_periodic_component(w: WeylElement) -> bool:
    """True iff det(w - I) != 0, i.e. w fixes no nonzero vector."""
    m = w.matrix
    return det(m - IntMatrix.identity(m.n)) != 0
