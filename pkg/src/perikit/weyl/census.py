"""Weyl group enumeration and the periodic-component census.

Enumeration is a breadth-first closure of the simple reflections under
right multiplication, with matrices batched in numpy and deduplicated by
a canonical byte encoding.  E8 is never enumerated (|W| = 696,729,600);
E7 (2,903,040 elements, roughly a couple of GB of working set) sits
behind an explicit opt-in.  Closed-form census values are available for
every type from the exponents alone.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InternalCheckFailed, TooLarge
from ..intlinalg import IntMatrix
from ..torusext import Unresolved, resolve_order_constraints
from .kernels import batch_ranks
from .rootdata import RootSystemType, WeylElement, coxeter_element, simple_reflections


def _gen_stack(t: RootSystemType) -> np.ndarray:
    gens = [np.array(s.matrix.rows, dtype=np.int64) for s in simple_reflections(t)]
    return np.stack(gens)


def _encode(mats: np.ndarray) -> list:
    """Canonical per-element byte keys; entries must fit int8."""
    if mats.size and int(np.abs(mats).max()) > 127:
        raise InternalCheckFailed("Weyl matrix entries exceed int8 packing range")
    packed = mats.astype(np.int8)
    count = len(packed)
    flat = packed.reshape(count, -1)
    return [flat[i].tobytes() for i in range(count)]


def _gate(t: RootSystemType, allow_e7: bool) -> None:
    if t.family == "E8":
        raise TooLarge(
            "E8 enumeration (696,729,600 elements) is not supported; "
            "use the closed-form census"
        )
    if t.family == "E7" and not allow_e7:
        raise TooLarge(
            "E7 enumeration (2,903,040 elements) requires the explicit "
            "opt-in flag; expect minutes of runtime and a few GB of memory"
        )


class WeylGroup:
    """Enumerated Weyl group: a (N, n, n) int64 array of matrices."""

    __slots__ = ("type", "matrices")

    def __init__(self, t: RootSystemType, matrices: np.ndarray):
        self.type = t
        self.matrices = matrices

    @property
    def count(self) -> int:
        return len(self.matrices)

    def __iter__(self):
        for m in self.matrices:
            yield WeylElement(IntMatrix(m.tolist()))


def enumerate_weyl(t: RootSystemType, allow_e7: bool = False) -> WeylGroup:
    """BFS closure of the simple reflections; |result| = weyl_order."""
    _gate(t, allow_e7)
    n = t.rank
    gens = _gen_stack(t)
    entry_cap = 4 * t.coxeter_number  # safety assertion on coordinate growth
    ident = np.eye(n, dtype=np.int64)[None, :, :]
    seen = set(_encode(ident))
    chunks = [ident]
    frontier = ident
    while len(frontier):
        nxt = np.concatenate([frontier @ g for g in gens])
        if int(np.abs(nxt).max()) > entry_cap:
            raise InternalCheckFailed("entry bound exceeded during enumeration")
        keys = _encode(nxt)
        fresh_idx = []
        for i, key in enumerate(keys):
            if key not in seen:
                seen.add(key)
                fresh_idx.append(i)
        frontier = nxt[fresh_idx]
        if len(frontier):
            chunks.append(frontier)
    mats = np.concatenate(chunks)
    if len(mats) != t.weyl_order:
        raise InternalCheckFailed(
            f"enumeration found {len(mats)} elements, expected {t.weyl_order}"
        )
    return WeylGroup(t, mats)


def coxeter_class_size(t: RootSystemType, allow_e7: bool = False) -> int:
    """Size of the conjugacy class of the Coxeter element.

    Orbit closure under conjugation by the (involutive) generators; the
    result is checked against |W| / h.
    """
    _gate(t, allow_e7)
    gens = _gen_stack(t)
    c = np.array(coxeter_element(t).matrix.rows, dtype=np.int64)[None, :, :]
    seen = set(_encode(c))
    frontier = c
    while len(frontier):
        conj = np.concatenate([g @ frontier @ g for g in gens])
        keys = _encode(conj)
        fresh_idx = []
        for i, key in enumerate(keys):
            if key not in seen:
                seen.add(key)
                fresh_idx.append(i)
        frontier = conj[fresh_idx]
    expected, rem = divmod(t.weyl_order, t.coxeter_number)
    if rem or len(seen) != expected:
        raise InternalCheckFailed(
            f"Coxeter class size {len(seen)} does not equal |W|/h = {expected}"
        )
    return len(seen)


def solomon_coefficients(exponents) -> tuple:
    """Coefficients (g_0, ..., g_n) of prod_i (1 + m_i z)."""
    coeffs = [1]
    for m in exponents:
        coeffs = [a + m * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return tuple(coeffs)


@dataclass(frozen=True)
class CensusReport:
    family: str
    rank: int
    label: str
    weyl_order: int
    periodic_count: int
    coxeter_count: int
    solomon: tuple
    exponents: tuple
    coxeter_number: int
    enumerated: bool
    coxeter_power_orders: tuple | None

    def to_json(self):
        return {
            "family": self.family,
            "rank": self.rank,
            "label": self.label,
            "weyl_order": self.weyl_order,
            "periodic_count": self.periodic_count,
            "coxeter_count": self.coxeter_count,
            "solomon": list(self.solomon),
            "exponents": list(self.exponents),
            "coxeter_number": self.coxeter_number,
            "enumerated": self.enumerated,
            "coxeter_power_orders": (
                None
                if self.coxeter_power_orders is None
                else list(self.coxeter_power_orders)
            ),
        }


def _coxeter_power_orders(t: RootSystemType):
    resolved = resolve_order_constraints(t.coxeter_number, t.exponents)
    if isinstance(resolved, Unresolved):
        return None
    return tuple(resolved)


def census(
    t: RootSystemType, allow_e7: bool = False, closed_form: bool = False
) -> CensusReport:
    """Count periodic components and fixed-space codimensions.

    The enumerated path computes rank(w - I) exactly for every element
    and cross-checks the counts against the product formula for
    prod(1 + m_i z); the closed-form path (mandatory for E8, default for
    nothing else) reports the formula values directly.
    """
    n = t.rank
    solomon = solomon_coefficients(t.exponents)
    product_mi = 1
    for m in t.exponents:
        product_mi *= m
    n_c = t.weyl_order // t.coxeter_number
    power_orders = _coxeter_power_orders(t)

    if closed_form:
        return CensusReport(
            t.family, n, t.label, t.weyl_order, product_mi, n_c, solomon,
            t.exponents, t.coxeter_number, False, power_orders,
        )

    group = enumerate_weyl(t, allow_e7=allow_e7)
    shifted = group.matrices - np.eye(n, dtype=np.int64)[None, :, :]
    ranks = batch_ranks(shifted)
    counts = np.bincount(ranks, minlength=n + 1)
    g = tuple(int(c) for c in counts[: n + 1])
    if g != solomon:
        raise InternalCheckFailed(
            f"fixed-space census {g} disagrees with the product formula {solomon}"
        )
    if g[n] != product_mi or sum(g) != t.weyl_order:
        raise InternalCheckFailed("census counts fail the consistency identities")
    class_size = coxeter_class_size(t, allow_e7=allow_e7)
    return CensusReport(
        t.family, n, t.label, t.weyl_order, g[n], class_size, solomon,
        t.exponents, t.coxeter_number, True, power_orders,
    )
