"""Finite quandles given by operation tables.

A quandle is a set with a binary operation ◁ such that

  (1) x ◁ x = x for every x,
  (2) every right translation s_y: x -> x ◁ y is a bijection,
  (3) (x ◁ y) ◁ z = (x ◁ z) ◁ (y ◁ z).

Axiom (3) says exactly that each s_y is an endomorphism, so together with
(2) the right translations are automorphisms ("point symmetries").  The
group they generate is the inner automorphism group; the subgroup
generated by the differences s_x s_y^-1 is the displacement group.

Tables are stored row-major: table[x][y] = x ◁ y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import ConstructionError, MalformedTableError
from .perms import PermGroup, Permutation, orbits

AXIOM3_CHUNK = 32  # rows of the n^3 distributivity check done per numpy pass


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of check_quandle_axioms.

    ``axiom`` is 1, 2 or 3 and ``witness`` is the offending (x,), (x, y)
    or (x, y, z) when ok is False.  The first violation in axiom order,
    then lexicographic witness order, is reported.
    """

    ok: bool
    axiom: Optional[int] = None
    witness: Optional[tuple[int, ...]] = None

    def as_dict(self) -> dict:
        return {"ok": self.ok, "axiom": self.axiom, "witness": self.witness}


def check_quandle_axioms(table: Sequence[Sequence[int]]) -> AxiomReport:
    """Check a finite operation table against the three quandle axioms.

    Raises MalformedTableError for a non-square table or out-of-range
    entries.  Otherwise returns an AxiomReport; on failure the witness is
    re-checkable directly against the table.  For axiom 2 the witness
    (x, y) means no z satisfies z ◁ y = x.
    """
    try:
        t = np.asarray(table)
    except ValueError:
        raise MalformedTableError("table rows have unequal lengths") from None
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise MalformedTableError(f"table must be square, got shape {t.shape}")
    n = t.shape[0]
    if n == 0:
        raise MalformedTableError("empty table")
    if not np.issubdtype(t.dtype, np.integer):
        raise MalformedTableError("table entries must be integers")
    if t.min() < 0 or t.max() >= n:
        bad = np.argwhere((t < 0) | (t >= n))[0]
        raise MalformedTableError(
            f"entry out of range at ({bad[0]}, {bad[1]})", witness=(int(bad[0]), int(bad[1]))
        )

    diag = t[np.arange(n), np.arange(n)]
    bad = np.nonzero(diag != np.arange(n))[0]
    if bad.size:
        return AxiomReport(False, 1, (int(bad[0]),))

    for y in range(n):
        col = t[:, y]
        counts = np.bincount(col, minlength=n)
        if (counts != 1).any():
            missing = int(np.nonzero(counts == 0)[0][0])
            return AxiomReport(False, 2, (missing, y))

    # (x ◁ y) ◁ z vs (x ◁ z) ◁ (y ◁ z), in x-major chunks to cap memory
    for x0 in range(0, n, AXIOM3_CHUNK):
        x1 = min(x0 + AXIOM3_CHUNK, n)
        lhs = t[t[x0:x1, :], :]  # [x, y, z] = t[t[x, y], z]
        rhs = t[t[x0:x1, None, :], t[None, :, :]]  # [x, y, z] = t[t[x, z], t[y, z]]
        if not np.array_equal(lhs, rhs):
            w = np.argwhere(lhs != rhs)[0]
            return AxiomReport(False, 3, (int(w[0]) + x0, int(w[1]), int(w[2])))
    return AxiomReport(True)


class FiniteQuandle:
    """A finite quandle on {0, .., n-1} with a validated operation table."""

    backend_id = "finite"

    def __init__(self, table: Sequence[Sequence[int]], validate: bool = True):
        self.table = np.asarray(table, dtype=np.int64)
        if validate:
            report = check_quandle_axioms(self.table)
            if not report.ok:
                raise ConstructionError(
                    f"table violates quandle axiom {report.axiom} at {report.witness}",
                    witness=report.as_dict(),
                )
        self.size = int(self.table.shape[0])
        # inverse operation: inv_table[x][y] = z  <=>  z ◁ y = x
        inv = np.empty_like(self.table)
        rows = np.arange(self.size)
        for y in range(self.size):
            inv[self.table[:, y], y] = rows
        self.inv_table = inv
        self._components: Optional[list[list[int]]] = None

    def op(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def op_inv(self, x: int, y: int) -> int:
        return int(self.inv_table[x, y])

    def elements(self) -> range:
        return range(self.size)

    def symmetry(self, y: int) -> Permutation:
        """The point symmetry s_y as a Permutation (x -> x ◁ y)."""
        return Permutation(tuple(int(v) for v in self.table[:, y]))

    def inner_generators(self) -> list[tuple[str, Permutation]]:
        return [(f"s{y}", self.symmetry(y)) for y in range(self.size)]

    def displacement_generators(self) -> list[tuple[str, Permutation]]:
        """Products s_y s_0^-1 for y > 0; identity products are dropped."""
        s0_inv = self.symmetry(0).inverse()
        gens = []
        for y in range(1, self.size):
            p = self.symmetry(y) * s0_inv
            if not p.is_identity():
                gens.append((f"s{y}*s0^-1", p))
        return gens

    def inner_group(self, bound: Optional[int] = None) -> PermGroup:
        kwargs = {} if bound is None else {"bound": bound}
        return PermGroup(self.inner_generators(), **kwargs)

    def displacement_group(self, bound: Optional[int] = None) -> PermGroup:
        gens = self.displacement_generators()
        if not gens:
            gens = [("id", Permutation.identity(self.size))]
        kwargs = {} if bound is None else {"bound": bound}
        return PermGroup(gens, **kwargs)

    def components(self) -> list[list[int]]:
        """Connected components = orbits of the inner group (equivalently,
        of the displacement group)."""
        if self._components is None:
            self._components = orbits(
                [g for _, g in self.inner_generators()], range(self.size)
            )
        return self._components

    def component_key(self, x: int) -> int:
        for part in self.components():
            if x in part:
                return part[0]
        raise ValueError(f"element {x} out of range")

    def is_automorphism(self, p: Permutation) -> Optional[tuple[int, int]]:
        """None if p preserves ◁, else the first (x, y) where it fails."""
        for x in range(self.size):
            for y in range(self.size):
                if p.act(self.op(x, y)) != self.op(p.act(x), p.act(y)):
                    return (x, y)
        return None

    def key(self, x: int) -> str:
        return str(int(x))

    def parse_key(self, s: str) -> int:
        x = int(s)
        if not 0 <= x < self.size:
            raise ValueError(f"element {x} out of range 0..{self.size - 1}")
        return x

    def __repr__(self):
        return f"FiniteQuandle(size={self.size})"


def symmetry_rewrite(base, steps) -> list[tuple[object, int]]:
    """Express the point symmetry at x = (..(base ◁^e1 a1)..) ◁^en an over
    the symmetries at base, a1, .., an.

    Repeatedly applying s_{u ◁ v} = s_v^-1 s_u s_v (and its inverse-twist
    for ◁^-1) gives

        s_x = s_an^-en .. s_a1^-e1 s_base s_a1^e1 .. s_an^en .

    ``steps`` is a sequence of (a_i, e_i) with e_i = +1 or -1.  The result
    is a list of (symbol, exponent) pairs to be applied left to right; it
    has length 2 * len(steps) + 1.
    """
    if base is None:
        raise ConstructionError("empty quandle word: no base element")
    steps = list(steps)
    for sym, e in steps:
        if e not in (1, -1):
            raise ConstructionError(f"exponent must be +1 or -1, got {e!r}", witness=(sym, e))
    word = [(sym, -e) for sym, e in reversed(steps)]
    word.append((base, 1))
    word.extend(steps)
    return word


def quandle_word_value(backend, base, steps):
    """Evaluate (..(base ◁^e1 a1)..) ◁^en an on any backend with op/op_inv."""
    x = base
    for sym, e in steps:
        x = backend.op(x, sym) if e > 0 else backend.op_inv(x, sym)
    return x


def symmetry_word_automorphism(backend, word):
    """Compose point symmetries s_sym^e, applied left to right, into a
    single automorphism of the backend's representation family."""
    word = list(word)
    if not word:
        raise ValueError("empty symmetry word")
    acc = None
    for sym, e in word:
        aut = backend.symmetry(sym)
        if e < 0:
            aut = aut.inverse()
        acc = aut if acc is None else acc * aut
    return acc
