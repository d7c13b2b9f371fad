"""Quandle families: dihedral, conjugation, Alexander-type, and free.

Each family is a backend object exposing a common surface:

  * ``op(x, y)`` / ``op_inv(x, y)``: the operation and its inverse,
  * ``symmetry(y)``: the point symmetry as an exactly comparable
    automorphism (Permutation, SignedAffine, LatticeAffine, FreeWordAut),
  * ``inner_generators()`` / ``displacement_generators()``: named default
    generating sets for the inner and displacement actions,
  * ``key(x)`` / ``parse_key(s)``: canonical element serialization used by
    graph exports and the command line (integers as decimals, vectors as
    "(a,b)", free elements as "base^word"),
  * ``component_key(x)``: canonical label of the connected component.

Infinite backends also provide ``check_axioms_window(radius)``, which
verifies all three quandle axioms on every triple drawn from a finite
window of elements.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .affine import SignedAffine
from .errors import ConstructionError
from .freewords import FreeQuandleElement, FreeWordAut, fq_normalize, fq_op, parse_fq_key, word_inverse, word_mul
from .groups import GroupTable
from .lattice import (
    IntegerLattice,
    LatticeAffine,
    UnimodularMatrix,
    dis_lattice,
    mat_vec,
    one_minus_inverse,
)
from .quandle import AxiomReport, FiniteQuandle


def _axiom_window_report(backend, elements) -> AxiomReport:
    """Run the three axiom checks over all triples from ``elements``.

    Works on infinite carriers because op results are computed, not
    looked up; bijectivity of s_y is checked as op_inv(op(x, y), y) == x
    together with op(op_inv(x, y), y) == x.
    """
    elements = list(elements)
    for x in elements:
        if backend.op(x, x) != x:
            return AxiomReport(False, 1, (x,))
    for x in elements:
        for y in elements:
            if backend.op_inv(backend.op(x, y), y) != x or backend.op(
                backend.op_inv(x, y), y
            ) != x:
                return AxiomReport(False, 2, (x, y))
    for x in elements:
        for y in elements:
            for z in elements:
                lhs = backend.op(backend.op(x, y), z)
                rhs = backend.op(backend.op(x, z), backend.op(y, z))
                if lhs != rhs:
                    return AxiomReport(False, 3, (x, y, z))
    return AxiomReport(True)


# ---------------------------------------------------------------------------
# dihedral quandles


class DihedralInfinite:
    """The dihedral quandle on all of Z: x ◁ y = 2y - x.

    Point symmetries are the reflections z -> 2y - z; differences of two
    reflections are the even translations.
    """

    backend_id = "dihedral:inf"

    def op(self, x: int, y: int) -> int:
        return 2 * y - x

    # every reflection is an involution, so ◁ is its own inverse
    op_inv = op

    def elements_window(self, radius: int) -> range:
        return range(-radius, radius + 1)

    def symmetry(self, y: int) -> SignedAffine:
        return SignedAffine(-1, 2 * y)

    def inner_generators(self, points: Sequence[int] = (0, 1)) -> list[tuple[str, SignedAffine]]:
        return [(f"s{p}", self.symmetry(p)) for p in points]

    def displacement_generators(self) -> list[tuple[str, SignedAffine]]:
        u = self.symmetry(1) * self.symmetry(0).inverse()
        return [("s1*s0^-1", u)]

    def component_key(self, x: int) -> int:
        return x % 2

    def key(self, x: int) -> str:
        return str(int(x))

    def parse_key(self, s: str) -> int:
        return int(s)

    def check_axioms_window(self, radius: int) -> AxiomReport:
        return _axiom_window_report(self, self.elements_window(radius))

    def __repr__(self):
        return "DihedralInfinite()"


def dihedral_quandle(n) -> "FiniteQuandle | DihedralInfinite":
    """R_n for an integer n >= 2, or the quandle on Z for n in (None, "inf")."""
    if n is None or n == "inf":
        return DihedralInfinite()
    n = int(n)
    if n < 2:
        raise ConstructionError(f"dihedral quandle needs n >= 2, got {n}")
    table = [[(2 * y - x) % n for y in range(n)] for x in range(n)]
    return FiniteQuandle(table, validate=False)


# ---------------------------------------------------------------------------
# conjugation quandles


class ConjugationQuandle(FiniteQuandle):
    """A conjugacy-closed subset of a group under x ◁ y = y^-1 x y.

    Quandle elements are indices into ``subset``; ``group_element(i)``
    returns the underlying group index.
    """

    backend_id = "conjugation"

    def __init__(self, group: GroupTable, subset: Sequence[int]):
        subset = list(dict.fromkeys(int(x) for x in subset))
        for x in subset:
            if not 0 <= x < group.size:
                raise ConstructionError(f"subset element {x} outside group", witness=(x,))
        bad = group.conjugation_closed(subset)
        if bad is not None:
            raise ConstructionError(
                f"subset is not closed under conjugation: {bad[0]} conjugated by {bad[1]}",
                witness=bad,
            )
        pos = {x: i for i, x in enumerate(subset)}
        table = [
            [pos[group.conj(x, y)] for y in subset]
            for x in subset
        ]
        super().__init__(table, validate=False)
        self.group = group
        self.subset = subset

    def group_element(self, i: int) -> int:
        return self.subset[i]


def conjugation_quandle(group: GroupTable, subset: Optional[Sequence[int]] = None) -> ConjugationQuandle:
    """Conjugation quandle on ``subset`` (default: the whole group)."""
    if subset is None:
        subset = range(group.size)
    return ConjugationQuandle(group, subset)


# ---------------------------------------------------------------------------
# Alexander-type quandles on finite groups


class GAlexFiniteQuandle(FiniteQuandle):
    """x ◁ y = sigma(x y^-1) y on a finite group, sigma an automorphism."""

    backend_id = "galex:finite"

    def __init__(self, group: GroupTable, sigma: Sequence[int]):
        sigma = [int(v) for v in sigma]
        if len(sigma) != group.size:
            raise ConstructionError(
                f"sigma has {len(sigma)} entries for a group of size {group.size}"
            )
        bad = group.is_automorphism(sigma)
        if bad is not None:
            raise ConstructionError(
                f"sigma is not a group automorphism, witness {bad}", witness=bad
            )
        mul, inv = group.mul, group.inverse
        table = [
            [mul[sigma[mul[x][inv[y]]]][y] for y in range(group.size)]
            for x in range(group.size)
        ]
        super().__init__(table, validate=False)
        self.group = group
        self.sigma = tuple(sigma)

    def identity_component(self) -> list[int]:
        """The connected component of the group identity, as a sorted list.

        It is always a subgroup; see verify.verify_p_equals_dis for the
        checked statement that right translation by it realizes the
        displacement group.
        """
        for part in self.components():
            if self.group.identity in part:
                return part
        raise AssertionError("identity not found in any component")

    def sigma_is_conjugation_by(self) -> Optional[int]:
        """The g with sigma = (x -> g^-1 x g), if one exists."""
        for g in range(self.group.size):
            if all(self.group.conj(x, g) == self.sigma[x] for x in range(self.group.size)):
                return g
        return None


def galex_finite(group: GroupTable, sigma: Sequence[int]) -> GAlexFiniteQuandle:
    return GAlexFiniteQuandle(group, sigma)


def conjugation_automorphism(group: GroupTable, g: int) -> list[int]:
    """sigma(x) = g^-1 x g as an image list."""
    return [group.conj(x, g) for x in range(group.size)]


# ---------------------------------------------------------------------------
# Alexander-type quandles on Z^n


class GAlexLattice:
    """x ◁ y = t(x - y) + y on Z^n for a unimodular integer matrix t.

    Point symmetries are the affine maps z -> t z + (1 - t) y; differences
    of two symmetries are translations by vectors of (1 - t^-1) Z^n, so
    the displacement group is the integer lattice spanned by the columns
    of 1 - t^-1 and components are its cosets.
    """

    backend_id = "galex:lattice"

    def __init__(self, t: UnimodularMatrix):
        self.t = t
        self.n = t.n
        self._lattice: Optional[IntegerLattice] = None

    def op(self, x: Sequence[int], y: Sequence[int], exponent: int = 1) -> tuple[int, ...]:
        diff = tuple(a - b for a, b in zip(x, y))
        moved = self.t.apply(diff, exponent)
        return tuple(a + b for a, b in zip(moved, y))

    def op_inv(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return self.op(x, y, exponent=-1)

    def symmetry(self, y: Sequence[int]) -> LatticeAffine:
        one_minus_t = tuple(
            tuple((1 if i == j else 0) - self.t.entries[i][j] for j in range(self.n))
            for i in range(self.n)
        )
        return LatticeAffine.of(self.t, 1, mat_vec(one_minus_t, tuple(y)))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.n

    def basis_vector(self, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def inner_generators(self) -> list[tuple[str, LatticeAffine]]:
        gens = [("s0", self.symmetry(self.zero()))]
        for i in range(self.n):
            gens.append((f"se{i + 1}", self.symmetry(self.basis_vector(i))))
        return gens

    def displacement_generators(self) -> list[tuple[str, LatticeAffine]]:
        s0_inv = self.symmetry(self.zero()).inverse()
        gens = []
        for i in range(self.n):
            u = self.symmetry(self.basis_vector(i)) * s0_inv
            if not u.is_identity():
                gens.append((f"se{i + 1}*s0^-1", u))
        return gens

    def displacement_lattice(self) -> IntegerLattice:
        if self._lattice is None:
            self._lattice = dis_lattice(self.t)
        return self._lattice

    def component_key(self, x: Sequence[int]) -> tuple[int, ...]:
        return self.displacement_lattice().reduce(x)

    def key(self, x: Sequence[int]) -> str:
        return "(" + ",".join(str(int(v)) for v in x) + ")"

    def parse_key(self, s: str) -> tuple[int, ...]:
        s = s.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"vector key must look like (a,b), got {s!r}")
        parts = s[1:-1].split(",")
        v = tuple(int(p) for p in parts)
        if len(v) != self.n:
            raise ValueError(f"vector has {len(v)} entries, expected {self.n}")
        return v

    def elements_window(self, radius: int) -> list[tuple[int, ...]]:
        def rec(k):
            if k == 0:
                return [()]
            rest = rec(k - 1)
            return [(v,) + r for v in range(-radius, radius + 1) for r in rest]

        return rec(self.n)

    def check_axioms_window(self, radius: int) -> AxiomReport:
        return _axiom_window_report(self, self.elements_window(radius))

    def __repr__(self):
        return f"GAlexLattice(t={[list(r) for r in self.t.entries]})"


def galex_lattice(t) -> GAlexLattice:
    if not isinstance(t, UnimodularMatrix):
        t = UnimodularMatrix(t)
    return GAlexLattice(t)


# ---------------------------------------------------------------------------
# free quandles


class FreeQuandle:
    """The free quandle on a finite alphabet of at least two letters.

    Elements are conjugates a^w of letters; components are indexed by the
    base letter.  The inner group is generated by the letter symmetries;
    the displacement group is not finitely generated, so no default
    displacement generating set is offered.
    """

    backend_id = "free"

    def __init__(self, alphabet: Sequence[str]):
        letters = list(alphabet)
        if len(letters) != len(set(letters)):
            raise ConstructionError(f"duplicate letters in alphabet {letters}")
        if len(letters) < 2:
            raise ConstructionError("free quandle needs at least two letters")
        for a in letters:
            if not a or any(ch in a for ch in "^*,()! \t"):
                raise ConstructionError(f"bad letter {a!r}")
        self.alphabet = tuple(letters)

    def generator(self, letter: str) -> FreeQuandleElement:
        if letter not in self.alphabet:
            raise ValueError(f"letter {letter!r} not in alphabet {self.alphabet}")
        return FreeQuandleElement(letter, ())

    def op(self, x: FreeQuandleElement, y: FreeQuandleElement) -> FreeQuandleElement:
        return fq_op(x, y, 1)

    def op_inv(self, x: FreeQuandleElement, y: FreeQuandleElement) -> FreeQuandleElement:
        return fq_op(x, y, -1)

    def symmetry(self, y: FreeQuandleElement) -> FreeWordAut:
        return FreeWordAut(word_mul(word_mul(word_inverse(y.tail), ((y.base, 1),)), y.tail))

    def inner_generators(self) -> list[tuple[str, FreeWordAut]]:
        return [(f"s{a}", self.symmetry(self.generator(a))) for a in self.alphabet]

    def component_key(self, x: FreeQuandleElement) -> str:
        return x.base

    def key(self, x: FreeQuandleElement) -> str:
        return x.key()

    def parse_key(self, s: str) -> FreeQuandleElement:
        el = parse_fq_key(s)
        if el.base not in self.alphabet:
            raise ValueError(f"base {el.base!r} not in alphabet {self.alphabet}")
        for sym, _ in el.tail:
            if sym not in self.alphabet:
                raise ValueError(f"letter {sym!r} not in alphabet {self.alphabet}")
        return el

    def elements_window(self, radius: int) -> list[FreeQuandleElement]:
        """All elements a^w with reduced normalized tail of length <= radius."""
        out = []
        for a in self.alphabet:
            level = [FreeQuandleElement(a, ())]
            seen = set(level)
            out.extend(level)
            for _ in range(radius):
                nxt = []
                for el in level:
                    for b in self.alphabet:
                        for e in (1, -1):
                            cand = fq_normalize(a, word_mul(el.tail, ((b, e),)))
                            if cand not in seen:
                                seen.add(cand)
                                nxt.append(cand)
                out.extend(nxt)
                level = nxt
        return out

    def check_axioms_window(self, radius: int) -> AxiomReport:
        return _axiom_window_report(self, self.elements_window(radius))

    def __repr__(self):
        return f"FreeQuandle(alphabet={self.alphabet})"


def free_quandle(alphabet: Sequence[str]) -> FreeQuandle:
    return FreeQuandle(alphabet)
