"""Checked verification of structure theorems on concrete instances.

Every check returns TheoremReport records rather than bare booleans:
statement id, the instance it ran on, a pass flag, and a witness when the
claimed property fails, so a failing run shows exactly which element
breaks which equality.  Nothing here is assumed; even textbook facts are
re-established on the given instance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .families import GAlexFiniteQuandle, conjugation_automorphism, galex_finite
from .groups import GroupTable
from .perms import (
    PermGroup,
    Permutation,
    is_free_action,
    orbits,
    quotient_is_cyclic,
)
from .quandle import FiniteQuandle
from .schreier import (
    SchreierAction,
    build_ball,
    cayley_action,
    displacement_action,
    inner_action,
)


@dataclass(frozen=True)
class TheoremReport:
    statement: str
    instance: str
    passed: bool
    witness: Optional[dict] = None
    details: Optional[dict] = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("failing report needs a witness")

    def to_json_line(self) -> str:
        rec = {
            "statement": self.statement,
            "instance": self.instance,
            "pass": self.passed,
            "witness": self.witness,
            "details": self.details,
        }
        return json.dumps(rec, sort_keys=True, separators=(",", ":"))


def _perm_set(group: PermGroup) -> frozenset:
    return frozenset(group.elements)


def verify_dis_properties(q: FiniteQuandle, instance: str = "") -> list[TheoremReport]:
    """Four structural facts tying the displacement group to the inner one.

    1. the displacement group is normal in the inner group,
    2. the quotient is cyclic,
    3. the displacement group consists exactly of the products
       s_a1^k1 .. s_am^km with k1 + .. + km = 0,
    4. both groups have the same orbits.

    The zero-sum enumeration in (3) runs to word length 2 * |Inn|, enough
    to express any element of a group of that order with sign balancing.
    """
    instance = instance or repr(q)
    inn = q.inner_group()
    dis = q.displacement_group()
    inn_set, dis_set = _perm_set(inn), _perm_set(dis)
    reports = []

    bad = None
    for g in inn.elements:
        for d in dis.elements:
            if g.inverse() * d * g not in dis_set:
                bad = {"conjugator": g.key(), "element": d.key()}
                break
        if bad:
            break
    reports.append(
        TheoremReport(
            "dis-normal-in-inn",
            instance,
            bad is None,
            bad,
            {"inn_order": inn.order, "dis_order": dis.order},
        )
    )

    cyclic, qorder = quotient_is_cyclic(inn, dis)
    reports.append(
        TheoremReport(
            "inn-mod-dis-cyclic",
            instance,
            cyclic,
            None if cyclic else {"quotient_order": qorder},
            {"quotient_order": qorder},
        )
    )

    # breadth-first over words in the s_y^(+-1), tracking exponent sums
    max_len = 2 * inn.order
    symmetries = [q.symmetry(y) for y in range(q.size)]
    identity = Permutation.identity(q.size)
    start = (identity, 0)
    seen = {start}
    frontier = [start]
    zero_sum = {identity}
    for _ in range(max_len):
        nxt = []
        for perm, total in frontier:
            for s in symmetries:
                for step, exp in ((s, 1), (s.inverse(), -1)):
                    t = total + exp
                    if abs(t) > max_len:
                        continue
                    state = (perm * step, t)
                    if state not in seen:
                        seen.add(state)
                        nxt.append(state)
                        if t == 0:
                            zero_sum.add(state[0])
        frontier = nxt
    if zero_sum == dis_set:
        bad = None
    else:
        extra = zero_sum - dis_set
        missing = dis_set - zero_sum
        bad = {
            "zero_sum_not_in_dis": sorted(p.key() for p in extra)[:3],
            "dis_not_zero_sum": sorted(p.key() for p in missing)[:3],
        }
    reports.append(
        TheoremReport(
            "dis-equals-zero-sum-words",
            instance,
            bad is None,
            bad,
            {"word_length_bound": max_len, "zero_sum_count": len(zero_sum)},
        )
    )

    inn_orbits = orbits(inn, range(q.size))
    dis_orbits = orbits(dis, range(q.size))
    same = inn_orbits == dis_orbits
    reports.append(
        TheoremReport(
            "inn-dis-orbits-equal",
            instance,
            same,
            None if same else {"inn_orbits": inn_orbits, "dis_orbits": dis_orbits},
            {"component_count": len(inn_orbits)},
        )
    )
    return reports


def verify_free_transitive_reconstruction(
    q: FiniteQuandle,
    subgroup: Sequence[Permutation],
    ambient: Optional[PermGroup] = None,
    basepoint: int = 0,
    instance: str = "",
) -> TheoremReport:
    """A normal, free, transitive automorphism group G reconstructs the
    quandle: with sigma(g) = s_x0^-1 g s_x0 and f(g) = x0.g, the map f is
    an isomorphism from (G, x ◁ y = sigma(x y^-1) y) onto the quandle.

    Normality is checked inside ``ambient`` (default: the group generated
    by the point symmetries together with G; the report records it).
    A failed hypothesis fails the report with the hypothesis named.
    """
    instance = instance or repr(q)
    statement = "free-transitive-reconstruction"
    subgroup = list(subgroup)
    for p in subgroup:
        bad = q.is_automorphism(p)
        if bad is not None:
            raise ValueError(f"subgroup element {p.key()} is not an automorphism at {bad}")

    if ambient is None:
        ambient = PermGroup(
            q.inner_generators() + [(f"g{i}", p) for i, p in enumerate(subgroup)]
        )
    ambient_desc = f"<point symmetries + {len(subgroup)} supplied>"
    sub_set = frozenset(subgroup)

    for h in ambient.elements:
        for g in subgroup:
            if h.inverse() * g * h not in sub_set:
                return TheoremReport(
                    statement,
                    instance,
                    False,
                    {
                        "failed_hypothesis": "normal-in-ambient",
                        "conjugator": h.key(),
                        "element": g.key(),
                    },
                    {"ambient": ambient_desc},
                )

    points = set(range(q.size))
    image = {g.act(basepoint) for g in subgroup}
    if image != points:
        return TheoremReport(
            statement,
            instance,
            False,
            {
                "failed_hypothesis": "transitive",
                "orbit_of_basepoint": sorted(image),
            },
            {"ambient": ambient_desc},
        )
    if not is_free_action(subgroup, points):
        fix = next(
            (g, p)
            for g in subgroup
            if not g.is_identity()
            for p in points
            if g.act(p) == p
        )
        return TheoremReport(
            statement,
            instance,
            False,
            {"failed_hypothesis": "free", "element": fix[0].key(), "fixed_point": fix[1]},
            {"ambient": ambient_desc},
        )

    elements = sorted(subgroup, key=lambda p: p.images)
    index = {p: i for i, p in enumerate(elements)}
    group = GroupTable(
        [[index[elements[a] * elements[b]] for b in range(len(elements))] for a in range(len(elements))]
    )
    s0 = q.symmetry(basepoint)
    sigma = []
    for p in elements:
        conj = s0.inverse() * p * s0
        if conj not in index:
            return TheoremReport(
                statement,
                instance,
                False,
                {"failed_hypothesis": "normal-under-basepoint-symmetry", "element": p.key()},
                {"ambient": ambient_desc},
            )
        sigma.append(index[conj])
    rebuilt = galex_finite(group, sigma)

    f = [elements[i].act(basepoint) for i in range(len(elements))]
    for a in range(len(elements)):
        for b in range(len(elements)):
            if f[rebuilt.op(a, b)] != q.op(f[a], f[b]):
                return TheoremReport(
                    statement,
                    instance,
                    False,
                    {"isomorphism_fails_at": (a, b)},
                    {"ambient": ambient_desc},
                )
    return TheoremReport(
        statement,
        instance,
        True,
        None,
        {
            "ambient": ambient_desc,
            "group_order": group.size,
            "sigma": sigma,
            "basepoint_map": f,
        },
    )


def verify_p_equals_dis(q: GAlexFiniteQuandle, instance: str = "") -> TheoremReport:
    """On a finite Alexander-type quandle, the connected component P of
    the group identity is a subgroup, right translation by it is an
    injective homomorphism into the symmetric group, its image is exactly
    the displacement group, and every generator s_x s_y^-1 equals right
    translation by 1 ◁ x ◁^-1 y, an element of P."""
    instance = instance or repr(q)
    statement = "identity-component-realizes-displacement"
    group = q.group
    p_elems = q.identity_component()
    p_set = set(p_elems)

    for a in p_elems:
        for b in p_elems:
            if group.mul[a][b] not in p_set:
                return TheoremReport(
                    statement, instance, False, {"not_closed": (a, b)}, None
                )
    if group.identity not in p_set or any(group.inverse[a] not in p_set for a in p_elems):
        return TheoremReport(
            statement, instance, False, {"not_subgroup": sorted(p_elems)}, None
        )

    translations = {a: group.right_translation(a) for a in p_elems}
    for a in p_elems:
        for b in p_elems:
            if translations[a] * translations[b] != translations[group.mul[a][b]]:
                return TheoremReport(
                    statement, instance, False, {"not_homomorphism": (a, b)}, None
                )

    dis_set = _perm_set(q.displacement_group())
    image = set(translations.values())
    if image != dis_set:
        return TheoremReport(
            statement,
            instance,
            False,
            {
                "translation_not_in_dis": sorted(
                    p.key() for p in image - dis_set
                )[:3],
                "dis_not_translation": sorted(p.key() for p in dis_set - image)[:3],
            },
            {"component_size": len(p_elems), "dis_order": len(dis_set)},
        )

    ident = group.identity
    for x in range(q.size):
        for y in range(q.size):
            g = q.op_inv(q.op(ident, x), y)
            if g not in p_set:
                return TheoremReport(
                    statement, instance, False, {"generator_target_outside": (x, y, g)}, None
                )
            if q.symmetry(x) * q.symmetry(y).inverse() != translations[g]:
                return TheoremReport(
                    statement, instance, False, {"generator_mismatch": (x, y, g)}, None
                )

    return TheoremReport(
        statement,
        instance,
        True,
        None,
        {"component_size": len(p_elems), "dis_order": len(dis_set)},
    )


def verify_inner_case_commutator(
    group: GroupTable, g: int, instance: str = ""
) -> TheoremReport:
    """For sigma = conjugation by g, compare the identity component P of
    the resulting quandle with the commutator subgroup of the normal
    closure N of g.

    The report always records the abelian invariants of N and the index
    of the commutator subgroup in N (both finite here).  The containment
    commutator(N) <= P always holds; the reverse containment can fail
    when N is a proper subgroup of the whole group, because conjugation
    can act nontrivially on the abelianization of N.  ``remark_formula``
    flags whether the invariants collapse to the single factor ord(g).
    """
    instance = instance or f"conj-by-{g}"
    statement = "inner-sigma-identity-component-is-commutator"
    quandle = galex_finite(group, conjugation_automorphism(group, g))
    p_elems = set(quandle.identity_component())

    closure = group.normal_closure_of(g)
    commutator = set(group.commutator_of_subgroup(closure))
    invariants = group.abelian_invariants_of_subgroup(closure)
    order_g = _element_order(group, g)
    details = {
        "closure_order": len(closure),
        "commutator_order": len(commutator),
        "abelian_invariants": invariants,
        "commutator_index_in_closure": len(closure) // len(commutator),
        "remark_formula": invariants == ([order_g] if order_g > 1 else []),
        "component_size": len(p_elems),
    }

    missing = commutator - p_elems
    extra = p_elems - commutator
    if missing or extra:
        return TheoremReport(
            statement,
            instance,
            False,
            {
                "commutator_not_in_component": sorted(missing)[:4],
                "component_not_in_commutator": sorted(extra)[:4],
            },
            details,
        )
    return TheoremReport(statement, instance, True, None, details)


def _element_order(group: GroupTable, g: int) -> int:
    k, cur = 1, g
    while cur != group.identity:
        cur = group.mul[cur][g]
        k += 1
    return k


def verify_free_action_isometry(
    backend,
    basepoint,
    radius: int,
    generators=None,
    instance: str = "",
) -> TheoremReport:
    """When the displacement group acts freely on the component of the
    basepoint, g -> basepoint.g is an isometry from the group with the
    word metric of the displacement generators onto the component.

    Compares the Cayley ball of the generators with the Schreier ball of
    the action: the orbit map must be a bijection on vertices that
    preserves basepoint distances and all certified pairwise distances.

    Freeness is established by stabilizer check for finite quandles and
    by the generators being nontrivial translations for affine backends;
    anything else fails the hypothesis.
    """
    instance = instance or repr(backend)
    statement = "free-displacement-action-gives-isometry"
    action = displacement_action(backend, generators)
    gens = list(action.generators)

    if isinstance(backend, FiniteQuandle):
        dis = backend.displacement_group()
        component = next(
            part for part in backend.components() if basepoint in part
        )
        if not is_free_action(dis.elements, component):
            culprit = next(
                (d, p)
                for d in dis.elements
                if not d.is_identity()
                for p in component
                if d.act(p) == p
            )
            return TheoremReport(
                statement,
                instance,
                False,
                {
                    "failed_hypothesis": "free",
                    "element": culprit[0].key(),
                    "fixed_point": culprit[1],
                },
                None,
            )
    else:
        not_translation = [g.name for g in gens if not _is_pure_translation(g.aut)]
        if not_translation:
            return TheoremReport(
                statement,
                instance,
                False,
                {"failed_hypothesis": "free", "non_translations": not_translation},
                None,
            )

    orbit_ball = build_ball(action, basepoint, radius)
    if not gens:
        # trivial displacement group: the orbit must be a single point
        ok = orbit_ball.vertex_count == 1
        return TheoremReport(
            statement,
            instance,
            ok,
            None if ok else {"orbit_not_single_point": orbit_ball.vertices()[:4]},
            {"vertices": orbit_ball.vertex_count, "pairs_checked": 0},
        )
    word_ball = build_ball(
        cayley_action(backend.backend_id, gens), _identity_like(gens), radius
    )

    mapping = {}
    for k, g in word_ball.elements.items():
        img = backend.key(g.act(basepoint))
        if img in mapping.values():
            return TheoremReport(
                statement, instance, False, {"orbit_map_not_injective_at": k}, None
            )
        mapping[k] = img

    if set(mapping.values()) != set(orbit_ball.vertices()):
        return TheoremReport(
            statement,
            instance,
            False,
            {
                "orbit_ball_only": sorted(set(orbit_ball.vertices()) - set(mapping.values()))[:4],
                "word_ball_only": sorted(set(mapping.values()) - set(orbit_ball.vertices()))[:4],
            },
            {"word_ball": word_ball.vertex_count, "orbit_ball": orbit_ball.vertex_count},
        )

    for k, img in mapping.items():
        if word_ball.distances[k] != orbit_ball.distances[img]:
            return TheoremReport(
                statement,
                instance,
                False,
                {
                    "radial_distance_mismatch": k,
                    "word_distance": word_ball.distances[k],
                    "orbit_distance": orbit_ball.distances[img],
                },
                None,
            )

    checked = 0
    keys = list(mapping)
    for i, a in enumerate(keys):
        for b in keys[i + 1 :]:
            dw = word_ball.distance(a, b)
            do = orbit_ball.distance(mapping[a], mapping[b])
            if dw is None or do is None:
                continue
            checked += 1
            if dw != do:
                return TheoremReport(
                    statement,
                    instance,
                    False,
                    {"pair": (a, b), "word_distance": dw, "orbit_distance": do},
                    None,
                )
    return TheoremReport(
        statement,
        instance,
        True,
        None,
        {"vertices": orbit_ball.vertex_count, "pairs_checked": checked},
    )


def _is_pure_translation(aut) -> bool:
    from .affine import SignedAffine
    from .lattice import LatticeAffine

    if isinstance(aut, SignedAffine):
        return aut.sign == 1
    if isinstance(aut, LatticeAffine):
        return aut.is_translation()
    return False


def _identity_like(gens):
    g = gens[0].aut
    return g * g.inverse()


def verify_homogeneous_component_isometry(
    q: FiniteQuandle, automorphism: Permutation, component: Sequence[int], instance: str = ""
) -> TheoremReport:
    """An automorphism f maps a component O isometrically onto f(O) when
    the generating symmetries are conjugated along: the inner metric of
    the full symmetry set satisfies d(x, y) = d(f(x), f(y)).

    Conjugating the point symmetries by f permutes them (f^-1 s_y f is
    the symmetry at f(y)), so both metrics come from the same generating
    family and the check runs on full component graphs.
    """
    instance = instance or repr(q)
    statement = "automorphism-moves-components-isometrically"
    bad = q.is_automorphism(automorphism)
    if bad is not None:
        raise ValueError(f"map is not a quandle automorphism at {bad}")

    action = inner_action(q)
    conjugated = [
        (f"f^-1*{name}*f", automorphism.inverse() * aut * automorphism)
        for name, aut in q.inner_generators()
    ]
    target_action = SchreierAction(f"{q.backend_id}:inner-conjugated", conjugated, q.key)

    component = sorted(component)
    radius = q.size  # any component diameter is below the quandle size
    source_ball = build_ball(action, component[0], radius)
    target_ball = build_ball(target_action, automorphism.act(component[0]), radius)
    missing = [x for x in component if q.key(x) not in source_ball.distances]
    if missing:
        raise ValueError(f"elements {missing} are not in the component of {component[0]}")
    for i, x in enumerate(component):
        for y in component[i + 1 :]:
            dx = source_ball.distance(q.key(x), q.key(y), require_certified=False)
            dy = target_ball.distance(
                q.key(automorphism.act(x)), q.key(automorphism.act(y)), require_certified=False
            )
            if dx != dy:
                return TheoremReport(
                    statement,
                    instance,
                    False,
                    {"pair": (x, y), "source_distance": dx, "target_distance": dy},
                    None,
                )
    return TheoremReport(
        statement,
        instance,
        True,
        None,
        {"component": component, "image": sorted(automorphism.act(x) for x in component)},
    )
