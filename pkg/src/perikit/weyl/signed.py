"""Signed permutations: the Weyl groups of types B, C and D.

A signed permutation is a pair (sigma, theta) with sigma a permutation of
n points and theta a vector of signs; as an n x n matrix it sends e_j to
theta[sigma(j)] * e_{sigma(j)} (the sign is attached to the target
coordinate).  Type D is the subgroup with an even number of -1 signs.
"""

from __future__ import annotations

import itertools

from ..intlinalg import IntMatrix
from ..monomial import permutation_cycles


class SignedPermutation:
    __slots__ = ("sigma", "theta")

    def __init__(self, sigma, theta):
        sigma = tuple(int(s) for s in sigma)
        theta = tuple(int(e) for e in theta)
        n = len(sigma)
        if sorted(sigma) != list(range(n)):
            raise ValueError("sigma must be a permutation of 0..n-1")
        if len(theta) != n or any(e not in (1, -1) for e in theta):
            raise ValueError("theta must be a vector of +-1 of matching length")
        self.sigma = sigma
        self.theta = theta

    @property
    def n(self) -> int:
        return len(self.sigma)

    @classmethod
    def from_cycles(cls, n: int, cycles, signs) -> "SignedPermutation":
        """Build from 1-based cycles and a sign vector.

        `cycles` is an iterable of tuples like ((1, 2), (3,)); fixed points
        may be omitted.  `signs` is a string like "+--" or a list of +-1.
        """
        images = list(range(n))
        seen = set()
        for cyc in cycles:
            cyc = [int(v) - 1 for v in cyc]
            if any(not 0 <= v < n for v in cyc) or len(set(cyc)) != len(cyc):
                raise ValueError(f"bad cycle {cyc}")
            if seen & set(cyc):
                raise ValueError("cycles must be disjoint")
            seen |= set(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        if isinstance(signs, str):
            table = {"+": 1, "-": -1}
            try:
                theta = [table[ch] for ch in signs.strip()]
            except KeyError:
                raise ValueError("signs string may contain only '+' and '-'")
        else:
            theta = [int(s) for s in signs]
        return cls(images, theta)

    def cycles(self):
        return permutation_cycles(self.sigma)

    def minus_count(self) -> int:
        return sum(1 for e in self.theta if e < 0)

    def is_even_signed(self) -> bool:
        return self.minus_count() % 2 == 0

    def matrix(self) -> IntMatrix:
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for j in range(n):
            rows[self.sigma[j]][j] = self.theta[self.sigma[j]]
        return IntMatrix(rows)

    def __eq__(self, other):
        return (
            isinstance(other, SignedPermutation)
            and self.sigma == other.sigma
            and self.theta == other.theta
        )

    def __hash__(self):
        return hash((self.sigma, self.theta))

    def __repr__(self):
        return f"SignedPermutation(sigma={self.sigma}, theta={self.theta})"


def check_condition2(sp: SignedPermutation) -> bool:
    """True iff every cycle of sigma (fixed points included) has sign
    product -1 over its support; equivalently det(matrix - I) != 0."""
    for cyc in sp.cycles():
        prod = 1
        for i in cyc:
            prod *= sp.theta[i]
        if prod != -1:
            return False
    return True


def all_signed_permutations(n: int, even_only: bool = False):
    """Iterate the full hyperoctahedral group (or its even-signed half)."""
    for sigma in itertools.permutations(range(n)):
        for theta in itertools.product((1, -1), repeat=n):
            sp = SignedPermutation(sigma, theta)
            if even_only and not sp.is_even_signed():
                continue
            yield sp
