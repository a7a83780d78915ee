"""Exact arithmetic on monomials and monomial ideals.

Monomials are immutable dense exponent vectors over a fixed ring. Ideals keep
a canonically sorted minimal generating set: sorted by (total degree, exponent
vector), no generator dividing another. Exponents are plain Python integers,
so power computations never overflow. Every value is immutable and every
operation is a pure function; everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .errors import RingMismatchError

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Ring:
    """An ordered set of variable names. Order is the canonical term order base.

    For subset-indexed rings (one variable per nonempty subset of [q]),
    `subset_q` holds q and `subset_masks` the bit mask of each variable,
    ordered by (cardinality, sorted element list).
    """

    name: str
    variables: tuple[str, ...]
    subset_q: int | None = None
    subset_masks: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in ring {self.name!r}")
        if self.subset_masks is not None and len(self.subset_masks) != len(self.variables):
            raise ValueError("subset_masks must parallel variables")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index_of(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in ring {self.name!r}") from None

    def __repr__(self):
        return f"Ring({self.name!r}, {len(self.variables)} vars)"


def polynomial_ring(names: Sequence[str], name: str = "R") -> Ring:
    return Ring(name, tuple(names))


def _check_ring(a: "Monomial | MonomialIdeal", b: "Monomial | MonomialIdeal") -> None:
    if a.ring is not b.ring and a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring.name!r} vs {b.ring.name!r}")


@dataclass(frozen=True)
class Monomial:
    ring: Ring
    exps: Vec

    def __post_init__(self):
        if len(self.exps) != self.ring.nvars:
            raise ValueError("exponent vector length != ring dimension")
        if any(e < 0 for e in self.exps):
            raise ValueError("negative exponent")

    def degree(self) -> int:
        return sum(self.exps)

    def is_unit(self) -> bool:
        return not any(self.exps)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exps) if e)

    def exponents(self) -> dict[int, int]:
        """Sparse view: variable index -> positive exponent."""
        return {i: e for i, e in enumerate(self.exps) if e}

    def divides(self, other: "Monomial") -> bool:
        _check_ring(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_ring(self, other)
        return Monomial(self.ring, tuple(map(max, self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        _check_ring(self, other)
        return Monomial(self.ring, tuple(map(min, self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_ring(self, other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, n: int) -> "Monomial":
        if n < 0:
            raise ValueError("negative power")
        return Monomial(self.ring, tuple(e * n for e in self.exps))

    def sort_key(self):
        return (sum(self.exps), self.exps)

    def __str__(self):
        from .ideal_io import format_monomial

        return format_monomial(self)


def unit_monomial(ring: Ring) -> Monomial:
    return Monomial(ring, (0,) * ring.nvars)


def monomial_from_exponents(ring: Ring, sparse: dict[int, int]) -> Monomial:
    exps = [0] * ring.nvars
    for i, e in sparse.items():
        exps[i] = e
    return Monomial(ring, tuple(exps))


# -- raw exponent-vector kernels ------------------------------------------
#
# Hot loops (minimalization, intersections) run on bare tuples. When every
# exponent fits in 7 bits the divisibility test is done on packed integers:
# with a headroom bit per 8-bit field, k | c iff ((c|H) - k) & H == H.

_PACK_LIMIT = 128


def _pack_mask(n: int) -> int:
    h = 0
    for _ in range(n):
        h = (h << 8) | 0x80
    return h


def _pack(v: Vec) -> int:
    p = 0
    for e in v:
        p = (p << 8) | e
    return p


def vec_divides(a: Vec, b: Vec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimal_vectors(vecs: Iterable[Vec]) -> list[Vec]:
    """Divisibility-minimal elements of a set of exponent vectors, sorted."""
    uniq = sorted(set(vecs), key=lambda v: (sum(v), v))
    if not uniq:
        return []
    n = len(uniq[0])
    if all(e < _PACK_LIMIT for v in uniq for e in v):
        hmask = _pack_mask(n)
        kept: list[Vec] = []
        kept_packed: list[int] = []
        for v in uniq:
            pv = _pack(v) | hmask
            for pk in kept_packed:
                if (pv - pk) & hmask == hmask:
                    break
            else:
                kept.append(v)
                kept_packed.append(_pack(v))
        return kept
    kept = []
    for v in uniq:
        if not any(vec_divides(k, v) for k in kept):
            kept.append(v)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal with canonical minimal generators.

    Conventions: empty generator tuple is the zero ideal; the single unit
    monomial is the unit ideal. Instances are built through `make_ideal` or
    `minimalize`, which establish the canonical form.
    """

    ring: Ring
    gens: tuple[Monomial, ...]

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit_ideal(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def gen_vectors(self) -> list[Vec]:
        return [g.exps for g in self.gens]

    def max_exponents(self) -> Vec:
        """Componentwise max over generators; the zero vector for the zero ideal."""
        if not self.gens:
            return (0,) * self.ring.nvars
        return tuple(map(max, *[g.exps for g in self.gens])) if len(self.gens) > 1 else self.gens[0].exps

    def member(self, m: Monomial) -> bool:
        _check_ring(self, m)
        return any(g.divides(m) for g in self.gens)

    def subset_of(self, other: "MonomialIdeal") -> bool:
        _check_ring(self, other)
        return all(other.member(g) for g in self.gens)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _check_ring(self, other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal(self.ring, ())
        vecs = [
            tuple(map(max, a, b))
            for a in self.gen_vectors()
            for b in other.gen_vectors()
        ]
        return _ideal_from_vectors(self.ring, vecs)

    def mul(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _check_ring(self, other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal(self.ring, ())
        vecs = [
            tuple(a + b for a, b in zip(u, v))
            for u in self.gen_vectors()
            for v in other.gen_vectors()
        ]
        return _ideal_from_vectors(self.ring, vecs)

    def power(self, r: int) -> "MonomialIdeal":
        """Ideal generated by all products of r generators with repetition."""
        if r < 1:
            raise ValueError("power requires r >= 1 (the unit ideal is not modeled as a power)")
        if self.is_zero():
            return self
        n = self.ring.nvars
        vecs = []
        for combo in combinations_with_replacement(self.gen_vectors(), r):
            acc = [0] * n
            for v in combo:
                for i, e in enumerate(v):
                    acc[i] += e
            vecs.append(tuple(acc))
        return _ideal_from_vectors(self.ring, vecs)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self):
        from .ideal_io import format_ideal

        return format_ideal(self)


def _ideal_from_vectors(ring: Ring, vecs: Iterable[Vec]) -> MonomialIdeal:
    mins = minimal_vectors(vecs)
    if any(not any(v) for v in mins):
        return MonomialIdeal(ring, (unit_monomial(ring),))
    return MonomialIdeal(ring, tuple(Monomial(ring, v) for v in mins))


def minimalize(ring: Ring, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Canonical minimal generating set of the ideal generated by `gens`."""
    gens = list(gens)
    for g in gens:
        if g.ring is not ring and g.ring != ring:
            raise RingMismatchError("generator from a different ring")
    return _ideal_from_vectors(ring, [g.exps for g in gens])


def make_ideal(ring: Ring, gens: Iterable[Monomial], *, already_minimal: bool = False) -> MonomialIdeal:
    """Build an ideal; `already_minimal` skips reduction for trusted antichains."""
    if not already_minimal:
        return minimalize(ring, gens)
    gens = tuple(sorted(gens, key=Monomial.sort_key))
    for g in gens:
        if g.ring is not ring and g.ring != ring:
            raise RingMismatchError("generator from a different ring")
    return MonomialIdeal(ring, gens)


def ideal_intersect_many(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Fold intersection with reduction after every pairwise merge."""
    if not ideals:
        raise ValueError("need at least one ideal")
    acc = ideals[0]
    for nxt in ideals[1:]:
        acc = acc.intersect(nxt)
    return acc
