"""Cyclic extensions of tori restricted to torsion points.

The model: a torus of rank n contributes its torsion subgroup (Q/Z)^n in
exponent coordinates; a group element g acting by conjugation contributes
a unimodular integer matrix B acting as x -> B*x mod 1; and a cyclic
extension of degree m is determined by (B, tau0) where tau0 is the
exponent vector of g^m.  Structural requirements (B^m = I, B*tau0 = tau0)
are enforced at construction.  Every element of the model has finite
order, so orders, bounds and fixed subgroups are all computed exactly.

Multiplication convention for elements (i, x) ~ g^i * t_x:

    (i, x) * (j, y) = ((i + j) mod m,  B^j x + y + c * tau0),
    c = (i + j) // m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InternalCheckFailed, InvalidExtension, NonPeriodic
from .intlinalg import IntMatrix, char_poly, det, power_sum, smith_normal_form
from .torsion import TorsionPoint


class TorusAutomorphism:
    """Unimodular integer matrix acting on torsion points by x -> B*x mod 1."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        if not isinstance(matrix, IntMatrix):
            matrix = IntMatrix(matrix)
        if abs(det(matrix)) != 1:
            raise InvalidExtension("torus automorphism matrix must be unimodular")
        self.matrix = matrix

    @property
    def rank(self) -> int:
        return self.matrix.n

    def apply(self, x: TorsionPoint) -> TorsionPoint:
        return TorsionPoint(self.matrix.apply(x.coords))

    def __eq__(self, other):
        return isinstance(other, TorusAutomorphism) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"TorusAutomorphism({self.matrix!r})"


def is_periodic(auto: TorusAutomorphism) -> bool:
    """True iff the automorphism has finitely many fixed points.

    Equivalent tests: det(B - I) != 0, or 1 is not an eigenvalue of B,
    or char_poly(B)(1) != 0.  The determinant form is used.
    """
    b = auto.matrix
    return det(b - IntMatrix.identity(b.n)) != 0


@dataclass(frozen=True)
class FixedSubgroup:
    """Finite fixed-point subgroup, as independent cyclic generators."""

    generators: tuple
    orders: tuple
    cardinality: int
    rank: int

    def elements(self):
        """Iterate over all fixed points (cardinality of them)."""

        def rec(idx, acc):
            if idx == len(self.generators):
                yield acc
                return
            g = self.generators[idx]
            cur = acc
            for _ in range(self.orders[idx]):
                yield from rec(idx + 1, cur)
                cur = cur + g

        yield from rec(0, TorsionPoint.zeros(self.rank))


def fixed_subgroup(auto: TorusAutomorphism) -> FixedSubgroup:
    """Solve (B - I) x = 0 mod 1 via the Smith normal form of B - I.

    With U (B - I) V = diag(d), the substitution x = V w decouples the
    system into d_i * w_i = 0 mod 1, so V * (e_i / d_i) generate the
    solution group and the cardinality is |det(B - I)|.
    """
    b = auto.matrix
    n = b.n
    bmi = b - IntMatrix.identity(n)
    d0 = det(bmi)
    if d0 == 0:
        raise NonPeriodic("automorphism fixes a positive-dimensional subtorus")
    snf = smith_normal_form(bmi)
    gens = []
    orders = []
    for idx, di in enumerate(snf.d):
        if di > 1:
            w = [Fraction(0)] * n
            w[idx] = Fraction(1, di)
            gens.append(TorsionPoint(snf.V.apply(w)))
            orders.append(di)
    card = abs(d0)
    prod = 1
    for o in orders:
        prod *= o
    if prod != card:
        raise InternalCheckFailed("fixed subgroup size disagrees with det(B - I)")
    return FixedSubgroup(tuple(gens), tuple(orders), card, n)


class CyclicExtension:
    """Degree-m cyclic extension of a rank-n torus, torsion model.

    Construction validates the two structural invariants: the automorphism
    matrix must satisfy B^m = I (conjugation by g^m is trivial on the
    torus) and tau0, the exponent vector of g^m, must be fixed by B.
    """

    __slots__ = ("rank", "degree", "auto", "tau0", "_powers")

    def __init__(self, rank, degree, auto, tau0):
        if not isinstance(auto, TorusAutomorphism):
            auto = TorusAutomorphism(auto)
        if not isinstance(tau0, TorsionPoint):
            tau0 = TorsionPoint(tau0)
        if auto.rank != rank or len(tau0) != rank:
            raise InvalidExtension("rank, matrix size and tau0 length must agree")
        if degree < 1:
            raise InvalidExtension("extension degree must be >= 1")
        powers = [IntMatrix.identity(rank)]
        for _ in range(degree - 1):
            powers.append(auto.matrix * powers[-1])
        if not (auto.matrix * powers[-1]).is_identity():
            raise InvalidExtension(
                f"automorphism matrix must satisfy B^{degree} = I "
                "(its multiplicative order does not divide the degree)"
            )
        if auto.apply(tau0) != tau0:
            raise InvalidExtension("tau0 must be fixed by the automorphism")
        self.rank = rank
        self.degree = degree
        self.auto = auto
        self.tau0 = tau0
        self._powers = tuple(powers)

    @property
    def auto_order(self) -> int:
        """Multiplicative order k of the automorphism matrix; divides m."""
        for d in range(1, self.degree + 1):
            if self.degree % d == 0 and self._powers_get(d).is_identity():
                return d
        raise InternalCheckFailed("no divisor order found despite B^m = I")

    def _powers_get(self, j: int) -> IntMatrix:
        if j < self.degree:
            return self._powers[j]
        return self.auto.matrix * self._powers[-1]  # only j == degree is used

    def identity(self) -> "ExtElement":
        return ExtElement(self, 0, TorsionPoint.zeros(self.rank))

    def element(self, i: int, x=None) -> "ExtElement":
        if x is None:
            x = TorsionPoint.zeros(self.rank)
        elif not isinstance(x, TorsionPoint):
            x = TorsionPoint(x)
        return ExtElement(self, i, x)

    def component_matrix(self, i: int) -> IntMatrix:
        """Matrix of the automorphism induced by component i, i.e. B^i."""
        return self._powers[i % self.degree]

    @classmethod
    def from_json(cls, obj) -> "CyclicExtension":
        return cls(
            int(obj["rank"]),
            int(obj["degree"]),
            IntMatrix.from_json(obj["matrix"]),
            TorsionPoint.from_strings(obj["tau0"]),
        )

    def to_json(self):
        return {
            "rank": self.rank,
            "degree": self.degree,
            "matrix": self.auto.matrix.to_json(),
            "tau0": self.tau0.to_strings(),
        }

    def __eq__(self, other):
        return (
            isinstance(other, CyclicExtension)
            and self.degree == other.degree
            and self.auto == other.auto
            and self.tau0 == other.tau0
        )

    def __hash__(self):
        return hash((self.degree, self.auto, self.tau0))

    def __repr__(self):
        return (
            f"CyclicExtension(rank={self.rank}, degree={self.degree}, "
            f"auto={self.auto.matrix!r}, tau0={self.tau0!r})"
        )


class ExtElement:
    """Element g^i * t of a cyclic extension, as (component index, torsion point)."""

    __slots__ = ("ext", "i", "x")

    def __init__(self, ext: CyclicExtension, i: int, x: TorsionPoint):
        if not 0 <= i < ext.degree:
            raise ValueError("component index out of range")
        if len(x) != ext.rank:
            raise ValueError("torsion part has wrong rank")
        self.ext = ext
        self.i = i
        self.x = x

    def __mul__(self, other: "ExtElement") -> "ExtElement":
        if self.ext != other.ext:
            raise ValueError("elements belong to different extensions")
        ext = self.ext
        total = self.i + other.i
        c, idx = divmod(total, ext.degree)
        moved = TorsionPoint(ext.component_matrix(other.i).apply(self.x.coords))
        x = moved + other.x
        if c:
            x = x + c * ext.tau0
        return ExtElement(ext, idx, x)

    def __pow__(self, k: int) -> "ExtElement":
        if k < 0:
            raise ValueError("negative powers are not needed in this model")
        result = self.ext.identity()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return self.i == 0 and self.x.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, ExtElement)
            and self.ext == other.ext
            and self.i == other.i
            and self.x == other.x
        )

    def __hash__(self):
        return hash((self.i, self.x))

    def __repr__(self):
        return f"ExtElement(i={self.i}, x={self.x!r})"


def _prime_factors(n: int):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def element_order(e: ExtElement) -> int:
    """Smallest N >= 1 with e^N = identity.

    Closed form: with d = gcd(i, m), e^(m/d) lands in the torus component,
    so the order is (m/d) times the additive order of that torsion point.
    The result is certified by checking e^N = identity and e^(N/p) !=
    identity for every prime p dividing N.
    """
    m = e.ext.degree
    if e.i == 0:
        n_ord = e.x.order()
    else:
        j = m // gcd(e.i, m)
        torus_part = (e ** j).x
        n_ord = j * torus_part.order()
    if not (e ** n_ord).is_identity():
        raise InternalCheckFailed("closed-form order does not annihilate element")
    for p in _prime_factors(n_ord):
        if (e ** (n_ord // p)).is_identity():
            raise InternalCheckFailed("closed-form order is not minimal")
    return n_ord


def _random_torsion_point(rng, rank: int, max_den: int) -> TorsionPoint:
    coords = []
    for _ in range(rank):
        den = rng.randint(1, max_den)
        num = rng.randint(0, den - 1)
        coords.append(Fraction(num, den))
    return TorsionPoint(coords)


def component_order(ext: CyclicExtension, i: int, samples: int = 10, max_den: int = 24, seed: int = 0xC0FFEE) -> int:
    """Common order of all elements (i, x) of a periodic component.

    Raises NonPeriodic when B^i has eigenvalue 1.  The returned value is
    verified against `samples` random torsion points; a disagreement would
    mean the constant-order property failed and raises InternalCheckFailed.
    """
    import random

    m = ext.degree
    bi = ext.component_matrix(i)
    if det(bi - IntMatrix.identity(ext.rank)) == 0:
        raise NonPeriodic(f"component {i} is not periodic (B^{i} has eigenvalue 1)")
    base = element_order(ext.element(i % m))
    rng = random.Random(seed)
    for _ in range(samples):
        x = _random_torsion_point(rng, ext.rank, max_den)
        if element_order(ext.element(i % m, x)) != base:
            raise InternalCheckFailed("component order is not constant")
    return base


def order_bound_cor5(ext: CyclicExtension) -> int:
    """Upper bound m*k on element orders, k the order of the automorphism."""
    return ext.degree * ext.auto_order


def order_bound_prop7(ext: CyclicExtension) -> int:
    """Upper bound m*|chi(1)| where chi is the characteristic polynomial of B."""
    return ext.degree * abs(char_poly(ext.auto.matrix).eval(1))


def solve_congruence_mod1(m: IntMatrix, b: TorsionPoint):
    """One solution x of M x = b (mod 1), or None when insolvable.

    Diagonalize U M V = diag(d); then w = V^-1 x satisfies d_i w_i = c_i
    (mod 1) with c = U b, which is solvable per coordinate unless d_i = 0
    and c_i is nonzero.
    """
    n = m.n
    snf = smith_normal_form(m)
    c = TorsionPoint(snf.U.apply(b.coords))
    w = []
    for di, ci in zip(snf.d, c.coords):
        if di == 0:
            if ci != 0:
                return None
            w.append(Fraction(0))
        else:
            w.append(Fraction(ci.numerator, ci.denominator * di))
    x = TorsionPoint(snf.V.apply(w))
    if TorsionPoint(m.apply(x.coords)) != b:
        raise InternalCheckFailed("congruence solver produced a non-solution")
    return x


def find_mk_representative(ext: CyclicExtension) -> ExtElement:
    """An element (1, x0) whose order divides m*k.

    Writes the order condition on the torus part of (1, x)^m as
    Q (tau0 + P x) = 0 mod 1 with P = I + B + ... + B^(m-1) and
    Q = I + B + ... + B^(k-1), and solves it by Smith reduction.
    """
    m = ext.degree
    k = ext.auto_order
    p = power_sum(ext.auto.matrix, m)
    q = power_sum(ext.auto.matrix, k)
    rhs = -TorsionPoint(q.apply(ext.tau0.coords))
    x = solve_congruence_mod1(q * p, rhs)
    if x is None:
        raise InternalCheckFailed("mk-representative congruence is insolvable")
    e = ext.element(1, x)
    if (m * k) % element_order(e) != 0:
        raise InternalCheckFailed("representative order does not divide m*k")
    return e


@dataclass(frozen=True)
class Unresolved:
    """Outcome of the order-constraint propagation when the torsion part
    of g^h is not pinned down: several multipliers remain admissible."""

    admissible: tuple

    def __bool__(self):
        return False


def _divisors(n: int):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def resolve_order_constraints(h: int, exponents):
    """Propagate power-order constraints for a component with ord(c) = h.

    Model: elements of the component have order h*a where a divides h (a
    is the order of the B-fixed torsion point g^h).  For every power d
    whose matrix c^d stays free of eigenvalue 1 (checked against the
    exponents), the element g^d lives in a sub-extension of degree and
    automorphism order k_d = h / gcd(h, d), so its order h*a / gcd(h*a, d)
    must divide k_d^2.  When exactly one multiplier a survives, returns
    the orders of the components of c, c^2, ...; otherwise returns
    Unresolved with the admissible multipliers.

    Components of c^d and c^(h-d) consist of mutually inverse elements and
    share one order, so for h > 6 the returned list is folded at h/2; for
    small h all h-1 powers are listed.
    """
    exponents = tuple(int(m) for m in exponents)
    valid_d = [
        d for d in range(1, h) if all((mi * d) % h != 0 for mi in exponents)
    ]
    admissible = []
    for a in _divisors(h):
        ord_g = h * a
        ok = True
        for d in valid_d:
            ord_gd = ord_g // gcd(ord_g, d)
            kd = h // gcd(h, d)
            if (kd * kd) % ord_gd != 0:
                ok = False
                break
        if ok:
            admissible.append(a)
    if len(admissible) != 1:
        return Unresolved(tuple(admissible))
    a = admissible[0]
    top = h - 1 if h <= 6 else h // 2
    ord_g = h * a
    return [ord_g // gcd(ord_g, d) for d in range(1, top + 1)]


def shift_extension(k: int, r: int) -> CyclicExtension:
    """Degree r*k extension of the diagonal torus of SL_k by a cyclic shift.

    The automorphism cyclically shifts the k diagonal entries, which in
    the (k-1)-coordinate exponent chart is the matrix with a 1 on the
    superdiagonal and -1 across the last row; the torus part of g^(rk) is
    the scalar matrix with entries of exponent r/k.  All component element
    orders are finite and computed exactly by element_order.
    """
    if k < 2 or r < 1:
        raise ValueError("need k >= 2 and r >= 1")
    n = k - 1
    rows = [[0] * n for _ in range(n)]
    for j in range(n - 1):
        rows[j][j + 1] = 1
    rows[n - 1] = [-1] * n
    tau0 = TorsionPoint([Fraction(r, k)] * n)
    return CyclicExtension(n, r * k, IntMatrix(rows), tau0)


def companion_extension(r: int, m: int) -> CyclicExtension:
    """Degree-m extension whose automorphism is the companion matrix of
    (x^r + 1)/(x + 1), r odd; here chi(1) = 1, so the only torsion point
    fixed by B is zero and every element of the g-component has order
    exactly m.

    The companion matrix has multiplicative order 2r, so construction
    fails with InvalidExtension unless 2r divides m.
    """
    if r < 3 or r % 2 == 0:
        raise ValueError("r must be an odd integer >= 3")
    n = r - 1
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        # coefficients of (x^r+1)/(x+1) alternate: +1, -1, +1, ...
        rows[i][n - 1] = -((-1) ** i)
    return CyclicExtension(n, m, IntMatrix(rows), TorsionPoint.zeros(n))
