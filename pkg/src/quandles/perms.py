"""Finite permutation groups by explicit enumeration.

Everything here is desk scale: groups are enumerated fully (breadth first
over generator words, shortest word first, generator order breaking ties)
and all questions (normality, quotients, abelian invariants) are answered
by walking the element list.  No stabilizer chains.

Composition convention, used consistently across the package: the product
``f * g`` means "apply f, then g".  Acting on the right, ``x . (f g) =
g(f(x))``.  Inverses and conjugation follow the same reading, so
``h.inverse() * g * h`` is "conjugate g by h".
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import BoundExceededError

DEFAULT_GROUP_BOUND = 200_000


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0, .., n-1}, stored as its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.images}")

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    @staticmethod
    def from_mapping(mapping: dict, degree: int) -> "Permutation":
        images = list(range(degree))
        for k, v in mapping.items():
            images[k] = v
        return Permutation(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def act(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self first, then other
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == img for i, img in enumerate(self.images))

    def order(self) -> int:
        k = 1
        p = self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def key(self) -> str:
        return "[" + ",".join(str(i) for i in self.images) + "]"

    def __repr__(self):
        return f"Permutation({self.images})"


def _named(generators) -> list[tuple[str, Permutation]]:
    named = []
    for i, g in enumerate(generators):
        if isinstance(g, tuple) and len(g) == 2 and isinstance(g[0], str):
            named.append(g)
        else:
            named.append((f"g{i}", g))
    return named


class PermGroup:
    """A permutation group given by named generators, enumerated on demand.

    The element list is deterministic: breadth-first over words in the
    generators, shortest word first, with ties broken by generator order.
    The identity is always elements[0].
    """

    def __init__(self, generators, bound: int = DEFAULT_GROUP_BOUND):
        self.generators = _named(generators)
        if not self.generators:
            raise ValueError("PermGroup needs at least one generator")
        self.degree = self.generators[0][1].degree
        for name, g in self.generators:
            if g.degree != self.degree:
                raise ValueError(f"generator {name} has mismatched degree")
        self.bound = bound
        self._elements: Optional[tuple[Permutation, ...]] = None

    @property
    def elements(self) -> tuple[Permutation, ...]:
        if self._elements is None:
            self._elements = tuple(
                group_closure([g for _, g in self.generators], bound=self.bound)
            )
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        names = ",".join(name for name, _ in self.generators)
        return f"PermGroup(<{names}>, degree={self.degree})"


def group_closure(
    generators: Sequence[Permutation], bound: int = DEFAULT_GROUP_BOUND
) -> list[Permutation]:
    """Enumerate the group generated by ``generators``.

    Breadth-first multiplication on the right; for a finite group this
    closes up (inverses are powers).  Raises BoundExceededError once more
    than ``bound`` elements have been found.
    """
    generators = [g for _, g in _named(generators)]
    if not generators:
        raise ValueError("need at least one generator")
    identity = Permutation.identity(generators[0].degree)
    seen = {identity}
    order = [identity]
    frontier = [identity]
    while frontier:
        new = []
        for el in frontier:
            for g in generators:
                prod = el * g
                if prod not in seen:
                    seen.add(prod)
                    order.append(prod)
                    new.append(prod)
                    if len(seen) > bound:
                        raise BoundExceededError("group closure", bound)
        frontier = new
    return order


def orbits(group, domain: Iterable[int]) -> list[list[int]]:
    """Partition ``domain`` into orbits under the group's generators.

    Orbits are sorted internally and listed by smallest element, so the
    output is canonical.  ``group`` may be a PermGroup or a sequence of
    Permutations.
    """
    gens = [g for _, g in group.generators] if isinstance(group, PermGroup) else list(group)
    domain = list(domain)
    remaining = set(domain)
    parts = []
    for start in domain:
        if start not in remaining:
            continue
        orbit = {start}
        queue = [start]
        while queue:
            x = queue.pop()
            for g in gens:
                for y in (g.act(x), g.inverse().act(x)):
                    if y not in orbit:
                        orbit.add(y)
                        queue.append(y)
        parts.append(sorted(orbit))
        remaining -= orbit
    return parts


def is_free_action(elements: Iterable[Permutation], orbit: Iterable[int]) -> bool:
    """True iff no non-identity element fixes any point of ``orbit``."""
    pts = list(orbit)
    for g in elements:
        if g.is_identity():
            continue
        if any(g.act(p) == p for p in pts):
            return False
    return True


def normal_closure(group: PermGroup, g: Permutation, bound: Optional[int] = None) -> PermGroup:
    """Smallest normal subgroup of ``group`` containing ``g``.

    Built from the full conjugate set h^-1 g h over the enumerated parent,
    which is normal by construction.
    """
    bound = bound if bound is not None else group.bound
    conj = {h.inverse() * g * h for h in group.elements}
    gens = sorted(conj, key=lambda p: p.images)
    return PermGroup([(f"c{i}", c) for i, c in enumerate(gens)], bound=bound)


def commutator_subgroup(group: PermGroup, bound: Optional[int] = None) -> PermGroup:
    """Subgroup generated by all commutators a^-1 b^-1 a b of ``group``."""
    bound = bound if bound is not None else group.bound
    els = group.elements
    comms = set()
    for a, b in combinations(els, 2):
        comms.add(a.inverse() * b.inverse() * a * b)
    comms.discard(Permutation.identity(group.degree))
    if not comms:
        return PermGroup([("id", Permutation.identity(group.degree))], bound=bound)
    gens = sorted(comms, key=lambda p: p.images)
    return PermGroup([(f"k{i}", c) for i, c in enumerate(gens)], bound=bound)


def _coset_table(elements: Sequence[Permutation], sub: Sequence[Permutation]):
    """Cosets of ``sub`` in ``elements`` as (labels, mult table, identity index)."""
    subset = set(sub)

    def coset_key(p: Permutation) -> tuple:
        return min((d * p).images for d in subset)

    keys = []
    index = {}
    reps = []
    for p in elements:
        k = coset_key(p)
        if k not in index:
            index[k] = len(keys)
            keys.append(k)
            reps.append(p)
    m = len(reps)
    table = [[index[coset_key(reps[i] * reps[j])] for j in range(m)] for i in range(m)]
    ident = index[coset_key(Permutation.identity(elements[0].degree))]
    return reps, table, ident


def quotient_is_cyclic(group: PermGroup, sub: PermGroup) -> tuple[bool, int]:
    """Whether group/sub is cyclic (sub must be normal).  Returns (flag, order)."""
    _, table, ident = _coset_table(group.elements, sub.elements)
    m = len(table)
    for start in range(m):
        seen = {ident}
        cur = ident
        while True:
            cur = table[cur][start]
            if cur in seen:
                break
            seen.add(cur)
        if len(seen) == m:
            return True, m
    return m == 1, m


def _abelian_invariants_from_table(table: list[list[int]], ident: int) -> list[int]:
    """Invariant factors of a finite abelian group given by its table.

    Peels off a cyclic factor of maximal order (always a direct summand in
    the abelian case), then recurses on the quotient.
    """
    m = len(table)
    if m == 1:
        return []

    def order_of(x: int) -> int:
        k, cur = 1, x
        while cur != ident:
            cur = table[cur][x]
            k += 1
        return k

    best = max(range(m), key=lambda x: (order_of(x), -x))
    e = order_of(best)
    cyc = {ident}
    cur = best
    while cur != ident:
        cyc.add(cur)
        cur = table[cur][best]
    # quotient by <best>
    def ckey(x: int) -> int:
        return min(table[x][c] for c in cyc)

    keys = sorted({ckey(x) for x in range(m)})
    idx = {k: i for i, k in enumerate(keys)}
    qtable = [[idx[ckey(table[a][b])] for b in keys] for a in keys]
    rest = _abelian_invariants_from_table(qtable, idx[ckey(ident)])
    return sorted(rest + [e])


def abelianization_invariants(group: PermGroup) -> list[int]:
    """Invariant factors of group/[group, group], ascending.

    Empty list for a perfect or trivial abelianization; [2] for S3; [2, 2]
    for the Klein four-group.
    """
    derived = commutator_subgroup(group)
    _, table, ident = _coset_table(group.elements, derived.elements)
    return _abelian_invariants_from_table(table, ident)


def word_length(generators, target, max_length: int) -> Optional[int]:
    """Length of the shortest word in the generators (and their inverses)
    equal to ``target``, or None if no word of length <= max_length works.

    Works for any automorphism representation with exact equality and
    hashing, not just Permutation; mixing representations is a TypeError.
    """
    named = []
    for i, g in enumerate(generators):
        if isinstance(g, tuple) and len(g) == 2 and isinstance(g[0], str):
            named.append(g)
        else:
            named.append((f"g{i}", g))
    if not named:
        raise ValueError("word_length needs at least one generator")
    family = type(named[0][1])
    for name, g in named:
        if type(g) is not family:
            raise TypeError(f"generator {name} is a {type(g).__name__}, expected {family.__name__}")
    if type(target) is not family:
        raise TypeError(f"target is a {type(target).__name__}, expected {family.__name__}")

    steps = []
    for _, g in named:
        steps.append(g)
        steps.append(g.inverse())
    identity = named[0][1] * named[0][1].inverse()
    if target == identity:
        return 0
    seen = {identity}
    frontier = [identity]
    for depth in range(1, max_length + 1):
        new = []
        for el in frontier:
            for s in steps:
                prod = el * s
                if prod in seen:
                    continue
                if prod == target:
                    return depth
                seen.add(prod)
                new.append(prod)
        if not new:
            return None
        frontier = new
    return None
