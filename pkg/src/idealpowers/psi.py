"""The ring map that realizes any square-free monomial ideal as the image of
the extremal ideal.

Variables of the target ring are clustered by which generators they divide:
cluster(A) holds exactly the variables dividing generator j iff j is in A.
The map sends the subset variable indexed by A to the product of cluster(A),
the empty product being 1. It is multiplicative, preserves lcms, and carries
powers, integral closures, symbolic powers and primary decompositions of the
extremal ideal onto those of the image ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Sequence

from .decomposition import IrreducibleComponent, drop_redundant
from .errors import RingMismatchError
from .extremal import Mask, subset_ring
from .monomials import Monomial, MonomialIdeal, Ring, make_ideal, minimalize, unit_monomial


@dataclass(frozen=True)
class PsiMap:
    """Frozen cluster map. `gens` keeps the generator order it was built
    from (the file order of the input ideal); the map depends on it."""

    q: int
    source_ring: Ring  # subset ring on q indices
    target_ring: Ring
    gens: tuple[Monomial, ...]
    clusters: dict[Mask, tuple[int, ...]]  # nonempty images only

    def cluster(self, mask: Mask) -> tuple[int, ...]:
        return self.clusters.get(mask, ())

    def variable_image(self, mask: Mask) -> Monomial:
        exps = [0] * self.target_ring.nvars
        for k in self.clusters.get(mask, ()):
            exps[k] = 1
        return Monomial(self.target_ring, tuple(exps))

    def apply(self, m: Monomial) -> Monomial:
        """Multiplicative image of a monomial of the subset ring."""
        if m.ring != self.source_ring:
            raise RingMismatchError("monomial does not live in the map's subset ring")
        exps = [0] * self.target_ring.nvars
        masks = self.source_ring.subset_masks
        for j, e in enumerate(m.exps):
            if e:
                for k in self.clusters.get(masks[j], ()):
                    exps[k] += e
        return Monomial(self.target_ring, tuple(exps))

    def image(self, J: MonomialIdeal) -> MonomialIdeal:
        """Ideal generated by the images of J's minimal generators."""
        if J.ring != self.source_ring:
            raise RingMismatchError("ideal does not live in the map's subset ring")
        if J.is_zero():
            return MonomialIdeal(self.target_ring, ())
        return minimalize(self.target_ring, [self.apply(g) for g in J.gens])

    def transport_components(
        self, components: Sequence[IrreducibleComponent]
    ) -> list[IrreducibleComponent]:
        """Image of an irreducible decomposition: components hitting an empty
        cluster map to the unit ideal and are dropped; each survivor expands
        into one component per choice of target variable from each cluster.
        The result is made irredundant by pairwise containment."""
        masks = self.source_ring.subset_masks
        out: list[IrreducibleComponent] = []
        for comp in components:
            if comp.ring != self.source_ring:
                raise RingMismatchError("component does not live in the map's subset ring")
            entry_masks = [masks[i] for i, _ in comp.entries]
            powers = [p for _, p in comp.entries]
            cluster_lists = [self.clusters.get(m, ()) for m in entry_masks]
            if any(not c for c in cluster_lists):
                continue
            for choice in iproduct(*cluster_lists):
                entries = tuple(sorted(zip(choice, powers)))
                out.append(IrreducibleComponent(self.target_ring, entries))
        return drop_redundant(out)


def build_psi(gens: Sequence[Monomial] | MonomialIdeal, ring: Ring | None = None) -> PsiMap:
    """Build the cluster map from an ordered minimal square-free generating set.

    Violations (non-square-free generator, redundant generator, mixed rings)
    are hard errors.
    """
    if isinstance(gens, MonomialIdeal):
        ring = gens.ring
        gen_list = list(gens.gens)
    else:
        gen_list = list(gens)
        if not gen_list:
            raise ValueError("need at least one generator")
        if ring is None:
            ring = gen_list[0].ring
    if not gen_list:
        raise ValueError("need at least one generator")
    for g in gen_list:
        if g.ring != ring:
            raise RingMismatchError("generators from different rings")
        if not g.is_squarefree():
            raise ValueError(f"generator {g} is not square-free")
        if g.is_unit():
            raise ValueError("unit generator is not a valid square-free generator")
    for i, g in enumerate(gen_list):
        for j, h in enumerate(gen_list):
            if i != j and g.divides(h):
                raise ValueError("generating set is not minimal: one generator divides another")

    q = len(gen_list)
    source = subset_ring(q)
    clusters: dict[Mask, list[int]] = {}
    for k in range(ring.nvars):
        mask = 0
        for j, g in enumerate(gen_list):
            if g.exps[k]:
                mask |= 1 << j
        if mask:
            clusters.setdefault(mask, []).append(k)
    frozen = {m: tuple(ks) for m, ks in clusters.items()}
    return PsiMap(q=q, source_ring=source, target_ring=ring, gens=tuple(gen_list), clusters=frozen)


def identity_psi(q: int) -> PsiMap:
    """The cluster map of the extremal ideal itself (generators in index
    order): every subset variable maps to itself."""
    from .extremal import extremal_generator

    gens = [extremal_generator(q, i) for i in range(1, q + 1)]
    return build_psi(gens, subset_ring(q))
