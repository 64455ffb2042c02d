"""Explicit monomial lifts of periodic Weyl elements into the classical
matrix groups, together with their closed-form orders.

For each signed permutation (sigma, theta) the lift permutes the 2n (or
2n+1) torus coordinate slots, sending slot j to sigma(j) when the sign is
+1 and to the mirror slot when it is -1.  Entries are chosen in {1, -1}
so that the result lies in the named matrix group, deterministically:

* SL_n:      all ones; one -1 in the last column when sigma is odd;
* SO_2n:     all ones (the even sign count makes det = 1 automatic);
* SO_2n+1:   all ones; the middle entry becomes -1 when det needs fixing;
* Sp_2n:     for every sign flip, -1 on the column whose image crosses
             into the lower block, +1 on its mirror.

The order of the lift is a component invariant, so the closed-form rules
(n or 2n for SL; twice the lcm of the cycle lengths for SO; four times
the lcm for Sp) apply to every element of the component.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..errors import InternalCheckFailed, NotPeriodic, UnsupportedFamily
from ..monomial import MonomialMatrix, permutation_cycles, permutation_sign, preserves_form
from .rootdata import RootSystemType
from .signed import SignedPermutation, check_condition2

_CLASSICAL = ("A", "B", "C", "D")


def _require_classical(t: RootSystemType) -> None:
    if t.family not in _CLASSICAL:
        raise UnsupportedFamily(
            f"no matrix model for family {t.family}; lifts exist for A-D only"
        )


def _coerce_a_permutation(t: RootSystemType, w):
    n = t.rank + 1
    perm = tuple(int(v) for v in w)
    if sorted(perm) != list(range(n)):
        raise ValueError(
            f"type A{t.rank} lift needs a permutation of 0..{n - 1} (got {perm})"
        )
    return perm


def _coerce_signed(t: RootSystemType, w) -> SignedPermutation:
    if not isinstance(w, SignedPermutation):
        raise ValueError("families B, C, D need a SignedPermutation")
    if w.n != t.rank:
        raise ValueError(f"signed permutation size {w.n} != rank {t.rank}")
    if t.family == "D" and not w.is_even_signed():
        raise ValueError("type D Weyl elements must have an even number of -1 signs")
    return w


def _mirror_permutation(sp: SignedPermutation, size: int):
    """Slot permutation on `size` points induced by (sigma, theta)."""
    n = sp.n
    pi = [0] * size
    if size % 2:
        pi[size // 2] = size // 2
    for j in range(n):
        target = sp.sigma[j]
        if sp.theta[target] > 0:
            pi[j] = target
            pi[size - 1 - j] = size - 1 - target
        else:
            pi[j] = size - 1 - target
            pi[size - 1 - j] = target
    return pi


def lift_to_normalizer(t: RootSystemType, w) -> MonomialMatrix:
    """A monomial matrix in SL/SO/Sp normalizing the diagonal torus and
    inducing w on it; raises UnsupportedFamily outside types A-D."""
    _require_classical(t)
    half = Fraction(1, 2)
    if t.family == "A":
        perm = _coerce_a_permutation(t, w)
        n = len(perm)
        q = [Fraction(0)] * n
        if permutation_sign(perm) < 0:
            q[n - 1] = half  # -1 at the largest column index fixes det = 1
        mono = MonomialMatrix(perm, q)
        if mono.det_exponent() != 0:
            raise InternalCheckFailed("SL lift has nontrivial determinant")
        if weyl_image(t, mono) != perm:
            raise InternalCheckFailed("SL lift does not induce the input element")
        return mono

    sp = _coerce_signed(t, w)
    n = sp.n
    size = 2 * n + 1 if t.family == "B" else 2 * n
    pi = _mirror_permutation(sp, size)
    q = [Fraction(0)] * size
    if t.family == "C":
        for j in range(n):
            if sp.theta[sp.sigma[j]] < 0:
                q[j] = half  # -1 on the entry landing in the lower block
    mono = MonomialMatrix(pi, q)
    if t.family == "B" and mono.det_exponent() != 0:
        q[n] = half  # middle slot is its own mirror; flipping it fixes det
        mono = MonomialMatrix(pi, q)
    form = "lambda" if t.family == "C" else "omega"
    if not preserves_form(mono, form):
        raise InternalCheckFailed(f"lift does not preserve the {form} form")
    if mono.det_exponent() != 0:
        raise InternalCheckFailed("lift has nontrivial determinant")
    if weyl_image(t, mono) != sp:
        raise InternalCheckFailed("lift does not induce the input element")
    return mono


def weyl_image(t: RootSystemType, mono: MonomialMatrix):
    """Read the induced Weyl element back off the slot permutation."""
    _require_classical(t)
    if t.family == "A":
        return tuple(mono.sigma)
    n = t.rank
    size = mono.n
    sigma = [0] * n
    theta = [1] * n
    for j in range(n):
        target = mono.sigma[j]
        if target < n:
            sigma[j] = target
            theta[target] = 1
        elif target >= size - n:
            sigma[j] = size - 1 - target
            theta[size - 1 - target] = -1
        else:
            raise ValueError("matrix does not normalize the diagonal torus")
    return SignedPermutation(sigma, theta)


def lift_order_rule(t: RootSystemType, w) -> int:
    """Closed-form order of the lift of a periodic Weyl element.

    Raises NotPeriodic when w does not define a periodic component
    (type A: not an n-cycle; B/C/D: some cycle sign product is +1).
    """
    _require_classical(t)
    if t.family == "A":
        perm = _coerce_a_permutation(t, w)
        n = len(perm)
        if len(permutation_cycles(perm)) != 1:
            raise NotPeriodic("type A periodic components correspond to n-cycles")
        return n if n % 2 else 2 * n
    sp = _coerce_signed(t, w)
    if not check_condition2(sp):
        raise NotPeriodic("some cycle has sign product +1, so the component "
                          "contains elements of infinite order")
    cycle_lcm = lcm(*(len(c) for c in sp.cycles()))
    return 4 * cycle_lcm if t.family == "C" else 2 * cycle_lcm
