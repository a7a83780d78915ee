"""The extremal ideal: one generator per index i, in a ring with one variable
per nonempty subset of {1..q}.

Generator i is the product of the subset variables whose subset contains i.
This module also builds the named special elements used to separate ordinary
powers from their integral closures and symbolic powers, and the closed-form
minimal generators of the second symbolic power.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .errors import LimitExceededError
from .monomials import Monomial, MonomialIdeal, Ring, Vec, make_ideal

# Rings get 2^q - 1 variables; beyond this the objects are not desk-scale.
MAX_Q = 12

Mask = int


def subsets_in_order(q: int) -> list[Mask]:
    """All nonempty subsets of {1..q} as bit masks, sorted by (size, elements)."""
    masks = []
    for size in range(1, q + 1):
        for elems in combinations(range(1, q + 1), size):
            m = 0
            for e in elems:
                m |= 1 << (e - 1)
            masks.append(m)
    return masks


def mask_elements(mask: Mask) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(elements: Sequence[int]) -> Mask:
    m = 0
    for e in elements:
        if e < 1:
            raise ValueError("subset elements are 1-based")
        m |= 1 << (e - 1)
    return m


def subset_var_name(mask: Mask, q: int) -> str:
    elems = mask_elements(mask)
    if q <= 9:
        return "y_" + "".join(str(e) for e in elems)
    return "y_{" + ",".join(str(e) for e in elems) + "}"


@lru_cache(maxsize=None)
def subset_ring(q: int) -> Ring:
    if q < 1:
        raise ValueError("q must be >= 1")
    if q > MAX_Q:
        raise LimitExceededError("q-cap", f"q = {q} exceeds the cap {MAX_Q} (ring would have 2^q - 1 variables)")
    masks = tuple(subsets_in_order(q))
    names = tuple(subset_var_name(m, q) for m in masks)
    return Ring(f"S[{q}]", names, subset_q=q, subset_masks=masks)


@lru_cache(maxsize=None)
def _mask_index(q: int) -> dict[Mask, int]:
    return {m: i for i, m in enumerate(subset_ring(q).subset_masks)}


def extremal_generator(q: int, i: int) -> Monomial:
    """Square-free monomial with support {subsets containing i}; degree 2^(q-1)."""
    if not 1 <= i <= q:
        raise ValueError(f"index {i} out of range 1..{q}")
    ring = subset_ring(q)
    bit = 1 << (i - 1)
    exps = tuple(1 if m & bit else 0 for m in ring.subset_masks)
    return Monomial(ring, exps)


@lru_cache(maxsize=None)
def extremal_ideal(q: int) -> MonomialIdeal:
    ring = subset_ring(q)
    return make_ideal(ring, [extremal_generator(q, i) for i in range(1, q + 1)], already_minimal=True)


def compositions(q: int, r: int) -> Iterator[tuple[int, ...]]:
    """All length-q tuples of nonnegative integers summing to r, lex order."""
    if q == 1:
        yield (r,)
        return
    for first in range(r, -1, -1):
        for rest in compositions(q - 1, r - first):
            yield (first,) + rest


def composition_exponent(q: int, a: Sequence[int]) -> Vec:
    """Exponent vector of the power generator indexed by composition `a`:
    the coordinate at subset A is the sum of a_i over i in A."""
    if len(a) != q or any(x < 0 for x in a):
        raise ValueError("composition must be a length-q tuple of nonnegative integers")
    ring = subset_ring(q)
    out = []
    for m in ring.subset_masks:
        s = 0
        for i in range(q):
            if m & (1 << i):
                s += a[i]
        out.append(s)
    return tuple(out)


@lru_cache(maxsize=None)
def extremal_power(q: int, r: int) -> MonomialIdeal:
    """The r-th power of the extremal ideal; its generator list (one per
    composition of r into q parts) is already minimal."""
    if q < 1 or r < 1:
        raise ValueError("q and r must be >= 1")
    ring = subset_ring(q)
    gens = [Monomial(ring, composition_exponent(q, a)) for a in compositions(q, r)]
    return make_ideal(ring, gens, already_minimal=True)


def integral_test_element(r: int, q: int) -> Monomial:
    """Element integral over the r-th extremal power but outside it.

    Exponent at subset A: 1 if |A| <= 2 else 2, plus r-2 extra on every
    subset containing 1. Defined for r >= 2, q >= 4.
    """
    if r < 2 or q < 4:
        raise ValueError("integral test element needs r >= 2 and q >= 4")
    ring = subset_ring(q)
    exps = []
    for m in ring.subset_masks:
        e = 1 if bin(m).count("1") <= 2 else 2
        if m & 1:
            e += r - 2
        exps.append(e)
    return Monomial(ring, tuple(exps))


def symbolic_test_element(r: int, q: int) -> Monomial:
    """Element of the r-th symbolic power of the extremal ideal outside the
    r-th ordinary power: all variables once, the top variable squared, times
    the (r-2)-th power of generator 1. Defined for r >= 2, q >= 3."""
    if r < 2 or q < 3:
        raise ValueError("symbolic test element needs r >= 2 and q >= 3")
    ring = subset_ring(q)
    top = (1 << q) - 1
    exps = []
    for m in ring.subset_masks:
        e = 2 if m == top else 1
        if m & 1:
            e += r - 2
        exps.append(e)
    return Monomial(ring, tuple(exps))


def second_symbolic_generator(q: int, x: Sequence[int] | Mask) -> Monomial:
    """Minimal generator of the second symbolic power indexed by a nonempty
    subset X: exponent 2 on supersets of X, 0 on subsets disjoint from X,
    1 elsewhere. Total degree 2^q."""
    xmask = x if isinstance(x, int) else mask_of(x)
    if xmask == 0:
        raise ValueError("X must be nonempty")
    if xmask >= 1 << q:
        raise ValueError("X must be a subset of 1..q")
    ring = subset_ring(q)
    exps = []
    for m in ring.subset_masks:
        if xmask & m == xmask:
            exps.append(2)
        elif xmask & m == 0:
            exps.append(0)
        else:
            exps.append(1)
    return Monomial(ring, tuple(exps))


@lru_cache(maxsize=None)
def second_symbolic_mingens(q: int) -> MonomialIdeal:
    """Closed-form minimal generating set of the second symbolic power of the
    extremal ideal: one generator per nonempty subset of {1..q}."""
    ring = subset_ring(q)
    gens = [second_symbolic_generator(q, m) for m in subsets_in_order(q)]
    return make_ideal(ring, gens, already_minimal=True)


def as_extremal_q(J: MonomialIdeal) -> int | None:
    """q if J is exactly the q-extremal ideal in its subset ring, else None."""
    q = J.ring.subset_q
    if q is None:
        return None
    return q if J == extremal_ideal(q) else None
