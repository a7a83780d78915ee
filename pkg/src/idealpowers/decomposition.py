"""Irredundant irreducible primary decomposition of monomial ideals.

An irreducible monomial ideal is generated by pure powers of distinct
variables. Decomposition splits a generator with at least two variables in
its support into coprime parts and recurses; correctness is enforced by the
re-intersection identity in the test suite rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .monomials import Monomial, MonomialIdeal, Ring, Vec, make_ideal, minimalize, monomial_from_exponents


@dataclass(frozen=True)
class IrreducibleComponent:
    """(variable, power) entries with distinct variables, sorted by variable."""

    ring: Ring
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        idxs = [i for i, _ in self.entries]
        if len(set(idxs)) != len(idxs):
            raise ValueError("component variables must be distinct")
        if any(p < 1 for _, p in self.entries):
            raise ValueError("component powers must be positive")
        if list(idxs) != sorted(idxs):
            raise ValueError("component entries must be sorted by variable index")

    def ideal(self) -> MonomialIdeal:
        gens = [monomial_from_exponents(self.ring, {i: p}) for i, p in self.entries]
        return make_ideal(self.ring, gens, already_minimal=True)

    def contains(self, other: "IrreducibleComponent") -> bool:
        """Ideal containment other <= self: every pure-power generator of
        `other` is a multiple of one of self's."""
        mine = dict(self.entries)
        return all(i in mine and mine[i] <= p for i, p in other.entries)

    def sort_key(self):
        return (tuple(i for i, _ in self.entries), tuple(p for _, p in self.entries))


def component_from_monomial_powers(ring: Ring, pairs: Sequence[tuple[int, int]]) -> IrreducibleComponent:
    return IrreducibleComponent(ring, tuple(sorted(pairs)))


def drop_redundant(components: Sequence[IrreducibleComponent]) -> list[IrreducibleComponent]:
    """Irredundant form of an irreducible decomposition: for irreducible
    components, redundancy is exactly pairwise containment, so drop any
    component containing another (duplicates collapse). Idempotent."""
    uniq = sorted(set(components), key=IrreducibleComponent.sort_key)
    # mutual containment of distinct irreducible monomial ideals is impossible,
    # so dropping any component that contains another is safe and complete
    out = []
    for c in uniq:
        if not any(d is not c and c.contains(d) for d in uniq):
            out.append(c)
    return out


def _is_pure_power(v: Vec) -> bool:
    return sum(1 for e in v if e) <= 1


def irreducible_decomposition(J: MonomialIdeal) -> list[IrreducibleComponent]:
    """Unique irredundant irreducible decomposition; components are pairwise
    incomparable and intersect back to J."""
    if J.is_zero():
        raise ValueError("zero ideal has no irreducible decomposition")
    if J.is_unit_ideal():
        raise ValueError("unit ideal has no irreducible decomposition")
    ring = J.ring

    @lru_cache(maxsize=None)
    def split(gens: tuple[Vec, ...]) -> frozenset[tuple[tuple[int, int], ...]]:
        for g in gens:
            if not _is_pure_power(g):
                # coprime split: one variable's pure power vs the rest
                k = next(i for i, e in enumerate(g) if e)
                u = tuple(e if i == k else 0 for i, e in enumerate(g))
                v = tuple(0 if i == k else e for i, e in enumerate(g))
                rest = [h for h in gens if h != g]
                left = _reduce(rest + [u])
                right = _reduce(rest + [v])
                return split(left) | split(right)
        entries = tuple(sorted((next(i for i, e in enumerate(g) if e), max(g)) for g in gens))
        return frozenset([entries])

    def _reduce(vs: list[Vec]) -> tuple[Vec, ...]:
        reduced = minimalize(ring, [Monomial(ring, v) for v in vs])
        return tuple(g.exps for g in reduced.gens)

    start = tuple(g.exps for g in J.gens)
    comps = [IrreducibleComponent(ring, e) for e in split(start)]
    return drop_redundant(comps)


def intersect_components(ring: Ring, components: Sequence[IrreducibleComponent]) -> MonomialIdeal:
    """Re-intersection of components; empty list gives the unit ideal."""
    from .monomials import unit_monomial

    acc = make_ideal(ring, [unit_monomial(ring)], already_minimal=True)
    for c in components:
        acc = acc.intersect(c.ideal())
    return acc
