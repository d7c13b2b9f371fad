"""Finite groups as explicit multiplication tables.

Only what the quandle constructions need: identity and inverses, the
regular permutation representation (so subgroup questions can reuse the
permutation machinery), conjugacy closure tests, and a handful of stock
groups for tests and demos.
"""

from __future__ import annotations

from itertools import permutations as iter_permutations
from typing import Optional, Sequence

from .errors import MalformedTableError
from .perms import PermGroup, Permutation, abelianization_invariants


class GroupTable:
    """A finite group on {0, .., n-1} given by its multiplication table
    mul[a][b] = a*b.  Associativity is assumed, identity and inverses are
    computed and checked."""

    def __init__(self, mul: Sequence[Sequence[int]]):
        n = len(mul)
        self.mul = tuple(tuple(int(v) for v in row) for row in mul)
        if any(len(row) != n for row in self.mul):
            raise MalformedTableError("multiplication table must be square")
        if any(v < 0 or v >= n for row in self.mul for v in row):
            raise MalformedTableError("table entry out of range")
        self.size = n
        ident = None
        for e in range(n):
            if all(self.mul[e][x] == x and self.mul[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise MalformedTableError("table has no identity element")
        self.identity = ident
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self.mul[a][b] == ident and self.mul[b][a] == ident:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise MalformedTableError(f"element {a} has no inverse")
        self.inverse = tuple(inv)

    def conj(self, x: int, by: int) -> int:
        """by^-1 * x * by."""
        return self.mul[self.mul[self.inverse[by]][x]][by]

    def is_automorphism(self, images: Sequence[int]) -> Optional[tuple[int, int]]:
        """None if the map is a bijective homomorphism, else a witness.

        The witness is (a, b) with images[a*b] != images[a]*images[b], or
        (-1, a) when the map is not injective at value a.
        """
        if sorted(images) != list(range(self.size)):
            dup = next(v for v in range(self.size) if list(images).count(v) != 1)
            return (-1, dup)
        for a in range(self.size):
            for b in range(self.size):
                if images[self.mul[a][b]] != self.mul[images[a]][images[b]]:
                    return (a, b)
        return None

    def conjugation_closed(self, subset: Sequence[int]) -> Optional[tuple[int, int]]:
        """None if subset is closed under conjugation by the whole group,
        else a witness (x, by) with conj(x, by) outside the subset."""
        inside = set(subset)
        for x in subset:
            for by in range(self.size):
                if self.conj(x, by) not in inside:
                    return (x, by)
        return None

    def right_translation(self, x: int) -> Permutation:
        """The permutation y -> y*x of the regular representation."""
        return Permutation(tuple(self.mul[y][x] for y in range(self.size)))

    def regular_group(self, elements: Optional[Sequence[int]] = None) -> PermGroup:
        els = range(self.size) if elements is None else elements
        return PermGroup([(f"r{x}", self.right_translation(x)) for x in els])

    def subgroup_closure(self, subset: Sequence[int]) -> list[int]:
        """Elements of the subgroup generated by ``subset``, sorted."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(subset) + [self.inverse[x] for x in subset]
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = self.mul[a][g]
                    if b not in seen:
                        seen.add(b)
                        new.append(b)
            frontier = new
        return sorted(seen)

    def normal_closure_of(self, x: int) -> list[int]:
        conjugates = {self.conj(x, by) for by in range(self.size)}
        return self.subgroup_closure(sorted(conjugates))

    def commutator_of_subgroup(self, subset: Sequence[int]) -> list[int]:
        comms = {
            self.mul[self.mul[self.inverse[a]][self.inverse[b]]][self.mul[a][b]]
            for a in subset
            for b in subset
        }
        return self.subgroup_closure(sorted(comms))

    def abelian_invariants_of_subgroup(self, subset: Sequence[int]) -> list[int]:
        """Invariant factors of H/[H, H] for the subgroup H = subset."""
        sub = sorted(subset)
        perms = [(f"r{x}", self.right_translation(x)) for x in sub]
        return abelianization_invariants(PermGroup(perms))

    def __repr__(self):
        return f"GroupTable(size={self.size})"


def group_from_elements(elements: list, multiply) -> GroupTable:
    """Build a GroupTable from concrete elements and a multiply callable.

    The element order fixes the numbering, so tables are reproducible.
    """
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    mul = [[index[multiply(elements[a], elements[b])] for b in range(n)] for a in range(n)]
    return GroupTable(mul)


def _perm_mul(a: tuple, b: tuple) -> tuple:
    # permutations as image tuples, a then b
    return tuple(b[v] for v in a)


def cyclic_group(n: int) -> GroupTable:
    return GroupTable([[(a + b) % n for b in range(n)] for a in range(n)])


def symmetric_group(n: int) -> GroupTable:
    els = sorted(iter_permutations(range(n)))
    return group_from_elements(els, _perm_mul)


def alternating_group(n: int) -> GroupTable:
    def parity(p):
        inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
        return inv % 2

    els = sorted(p for p in iter_permutations(range(n)) if parity(p) == 0)
    return group_from_elements(els, _perm_mul)


def dihedral_group(n: int) -> GroupTable:
    """Symmetries of the regular n-gon, elements (rotation, flip)."""
    els = [(r, f) for f in (0, 1) for r in range(n)]

    def mult(a, b):
        r1, f1 = a
        r2, f2 = b
        r = (r2 - r1) % n if f2 else (r1 + r2) % n
        return (r, f1 ^ f2)

    return group_from_elements(els, mult)


def quaternion_group() -> GroupTable:
    """The eight quaternions 1, -1, i, -i, j, -j, k, -k."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    base = {
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def split(x):
        return (-1, x[1:]) if x.startswith("-") else (1, x)

    def mult(a, b):
        sa, ua = split(a)
        sb, ub = split(b)
        if ua == "1":
            s, u = sa * sb, ub
        elif ub == "1":
            s, u = sa * sb, ua
        else:
            sc, uc = split(base[(ua, ub)])
            s, u = sa * sb * sc, uc
        return u if s == 1 else ("-" + u if not u.startswith("-") else u[1:])

    return group_from_elements(names, mult)


def find_element(group: GroupTable, order: Optional[int] = None) -> int:
    """Smallest-index element of the given order (or any non-identity)."""
    for x in range(group.size):
        if x == group.identity:
            continue
        if order is None:
            return x
        k, cur = 1, x
        while cur != group.identity:
            cur = group.mul[cur][x]
            k += 1
        if k == order:
            return x
    raise ValueError(f"no element of order {order}")
