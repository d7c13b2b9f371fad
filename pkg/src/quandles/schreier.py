"""Schreier graphs of group actions, explored as metric balls.

The graph of an action has the acted-on set as vertices and an edge
x -- x.s for every generator s (a generator and its inverse give the same
undirected edge, identified by the generator's name).  Distances in the
graph restricted to a ball can overestimate true distances when geodesics
leave the ball, so pairwise distances come with a certificate:

    d_ball(x, y) + d(x) + d(y) <= 2R + 1

guarantees d_ball(x, y) is the true distance, because any path leaving
the closed radius-R ball already has length >= 2R + 2 - d(x) - d(y).
Distances to the basepoint are always certified.  Both endpoints must
also lie strictly inside the ball (d < R), which keeps certificates
monotone under radius growth.

Ends are estimated from an annulus: the number of connected components of
{v : n < d(v) <= N} that touch the outer frontier d(v) = N.  For graphs
where the annulus structure has stabilized (paths, lattices, trees) this
equals the number of ends.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .errors import BoundExceededError

DEFAULT_VERTEX_BOUND = 1_000_000

Edge = tuple[str, str, str]  # (key_u, key_v, generator name) with key_u <= key_v


@dataclass(frozen=True)
class NamedGenerator:
    name: str
    aut: object

    @property
    def involution(self) -> bool:
        return self.aut == self.aut.inverse()


class GeneratorSet:
    """Named automorphisms, traversed with their formal inverses.

    Generators are sorted by name so traversal order (and therefore every
    exported artifact) is reproducible no matter how the set was built.
    """

    def __init__(self, generators: Iterable):
        named = []
        for i, g in enumerate(generators):
            if isinstance(g, NamedGenerator):
                named.append(g)
            elif isinstance(g, tuple) and len(g) == 2:
                named.append(NamedGenerator(g[0], g[1]))
            else:
                named.append(NamedGenerator(f"g{i}", g))
        names = [g.name for g in named]
        if len(names) != len(set(names)):
            raise ValueError(f"duplicate generator names: {names}")
        self.generators = sorted(named, key=lambda g: g.name)

    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


class SchreierAction:
    """A set acted on by named automorphisms, with key serialization.

    ``apply`` defaults to aut.act(x); pass a different callable to act on
    group elements by right multiplication (Cayley graphs).
    """

    def __init__(
        self,
        backend_id: str,
        generators,
        key: Callable[[object], str],
        apply: Optional[Callable[[object, object], object]] = None,
    ):
        self.backend_id = backend_id
        self.generators = generators if isinstance(generators, GeneratorSet) else GeneratorSet(generators)
        self.key = key
        self.apply = apply if apply is not None else (lambda aut, x: aut.act(x))


def inner_action(backend, generators=None) -> SchreierAction:
    """Action of the inner group on the backend's elements."""
    gens = backend.inner_generators() if generators is None else generators
    return SchreierAction(f"{backend.backend_id}:inner", gens, backend.key)


def displacement_action(backend, generators=None) -> SchreierAction:
    gens = backend.displacement_generators() if generators is None else generators
    return SchreierAction(f"{backend.backend_id}:displacement", gens, backend.key)


def cayley_action(backend_id: str, generators) -> SchreierAction:
    """The group acting on itself by right multiplication; vertices are
    automorphism objects, so the ball at the identity realizes the word
    metric of the generating set."""
    return SchreierAction(
        f"{backend_id}:cayley",
        generators,
        key=lambda g: g.key(),
        apply=lambda aut, g: g * aut,
    )


@dataclass
class LabeledBall:
    """A radius-R ball in a Schreier graph.

    ``distances`` maps vertex keys to basepoint distance in BFS discovery
    order; ``edges`` holds every generator edge between discovered
    vertices, including self-loops, sorted.
    """

    backend_id: str
    basepoint: str
    radius: int
    generator_names: list[str]
    distances: dict[str, int]
    edges: list[Edge]
    elements: dict[str, object] = field(repr=False, default_factory=dict)
    _adjacency: Optional[dict[str, list[str]]] = field(repr=False, default=None)
    _sssp: Optional[dict[str, dict[str, int]]] = field(repr=False, default=None)

    @property
    def vertex_count(self) -> int:
        return len(self.distances)

    def vertices(self) -> list[str]:
        return list(self.distances)

    def sphere_sizes(self) -> list[int]:
        counts = [0] * (self.radius + 1)
        for d in self.distances.values():
            counts[d] += 1
        return counts

    def adjacency(self) -> dict[str, list[str]]:
        """Neighbor lists without self-loops, in deterministic order."""
        if self._adjacency is None:
            adj: dict[str, list[str]] = {k: [] for k in self.distances}
            for u, v, _name in self.edges:
                if u != v:
                    adj[u].append(v)
                    adj[v].append(u)
            self._adjacency = adj
        return self._adjacency

    def distances_from(self, key: str) -> dict[str, int]:
        """BFS distances inside the ball subgraph from one vertex."""
        if key not in self.distances:
            raise KeyError(f"vertex {key!r} not in ball")
        if self._sssp is None:
            self._sssp = {}
        if key not in self._sssp:
            adj = self.adjacency()
            dist = {key: 0}
            frontier = [key]
            while frontier:
                nxt = []
                for u in frontier:
                    for v in adj[u]:
                        if v not in dist:
                            dist[v] = dist[u] + 1
                            nxt.append(v)
                frontier = nxt
            self._sssp[key] = dist
        return self._sssp[key]

    def same_component_in_ball(self, x: str, y: str) -> bool:
        """True when y was reached from x inside the ball; False means
        "not within this radius", not definitive separation."""
        if x not in self.distances or y not in self.distances:
            return False
        return y in self.distances_from(x)

    def distance(self, x: str, y: str, require_certified: bool = True) -> Optional[int]:
        """Distance between two vertices, or None when the ball cannot
        certify it (vertex undiscovered, no path inside the ball, or the
        certificate inequality fails)."""
        if x not in self.distances or y not in self.distances:
            return None
        # distances out of the basepoint are true global distances: the
        # ball was grown by BFS over the full graph
        if x == self.basepoint:
            return self.distances[y]
        if y == self.basepoint:
            return self.distances[x]
        d = self.distances_from(x).get(y)
        if d is None:
            return None
        if not require_certified:
            return d
        dx, dy = self.distances[x], self.distances[y]
        if x != y and (dx >= self.radius or dy >= self.radius):
            return None
        if d + dx + dy > 2 * self.radius + 1:
            return None
        return d

    def certified_pairs(self):
        """Yield (x, y, d) over certified unordered pairs, x < y."""
        keys = self.vertices()
        for i, x in enumerate(keys):
            for y in keys[i + 1 :]:
                d = self.distance(x, y)
                if d is not None:
                    yield x, y, d


def build_ball(
    action: SchreierAction,
    basepoint,
    radius: int,
    max_vertices: int = DEFAULT_VERTEX_BOUND,
) -> LabeledBall:
    """Breadth-first ball of the action at ``basepoint``.

    Vertices appear in BFS order with generator name breaking ties; edges
    cover every generator move between discovered vertices, including
    those between two radius-R vertices.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    moves = []
    for gen in action.generators:
        moves.append((gen.name, gen.aut))
        if not gen.involution:
            moves.append((gen.name, gen.aut.inverse()))

    base_key = action.key(basepoint)
    dist: dict[str, int] = {base_key: 0}
    element: dict[str, object] = {base_key: basepoint}
    frontier = [basepoint]
    for d in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for _name, aut in moves:
                y = action.apply(aut, x)
                ky = action.key(y)
                if ky not in dist:
                    dist[ky] = d
                    element[ky] = y
                    nxt.append(y)
                    if len(dist) > max_vertices:
                        raise BoundExceededError("schreier ball", max_vertices)
        frontier = nxt

    edges = set()
    for kx, x in element.items():
        for name, aut in moves:
            y = action.apply(aut, x)
            ky = action.key(y)
            if ky in dist:
                a, b = (kx, ky) if kx <= ky else (ky, kx)
                edges.add((a, b, name))

    return LabeledBall(
        backend_id=action.backend_id,
        basepoint=base_key,
        radius=radius,
        generator_names=action.generators.names(),
        distances=dist,
        edges=sorted(edges),
        elements=element,
    )


def _components(vertices: Sequence[str], adjacency: dict[str, list[str]]) -> list[list[str]]:
    seen = set()
    comps = []
    for start in vertices:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            u = queue.pop()
            for v in adjacency.get(u, ()):
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        comps.append(comp)
    return comps


def ends_estimate(ball: LabeledBall, inner_radius: int) -> int:
    """Number of components of {v : inner_radius < d(v) <= R} that reach
    the outer frontier d(v) = R.

    With R comfortably larger than inner_radius (the acceptance runs use
    R = 4n) this counts the ends of graphs whose coarse shape has
    stabilized: 1 on a half line, 2 on a line, one per branch on a tree.
    """
    if not 0 <= inner_radius < ball.radius:
        raise ValueError("need 0 <= inner_radius < ball radius")
    annulus = {k for k, d in ball.distances.items() if inner_radius < d <= ball.radius}
    adj = {
        u: [v for v in ball.adjacency()[u] if v in annulus]
        for u in annulus
    }
    count = 0
    for comp in _components(sorted(annulus), adj):
        if any(ball.distances[v] == ball.radius for v in comp):
            count += 1
    return count


def loopless_forest_check(ball: LabeledBall) -> bool:
    """After dropping self-loops, is the ball graph a forest?

    Edge identity is (vertex pair, generator name), so two generators
    connecting the same pair count as a multi-edge and defeat the check,
    while a generator and its inverse never double-count.
    """
    simple = [e for e in ball.edges if e[0] != e[1]]
    comps = _components(ball.vertices(), ball.adjacency())
    return len(simple) == ball.vertex_count - len(comps)


@dataclass(frozen=True)
class ComparisonResult:
    status: str  # "pass" | "fail" | "inconclusive"
    constant: Optional[int] = None
    witness: Optional[dict] = None
    pairs_checked: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def bilipschitz_constant(gens_a, gens_b, max_length: int) -> Optional[int]:
    """Smallest L with every generator of each set a word of length <= L
    in the other; None if some generator is not expressible within
    max_length."""
    from .perms import word_length

    worst = 1
    for one, other in ((gens_a, gens_b), (gens_b, gens_a)):
        for item in one:
            aut = item[1] if isinstance(item, tuple) else item.aut
            n = word_length(list(other), aut, max_length)
            if n is None:
                return None
            worst = max(worst, n)
    return worst


def bilipschitz_compare(
    ball_a: LabeledBall, ball_b: LabeledBall, constant: int
) -> ComparisonResult:
    """Check (1/L) d_a <= d_b <= L d_a over pairs certified in both balls.

    Both balls must share their basepoint; vertices are matched by key,
    so the two balls must also serialize elements identically.
    """
    if ball_a.basepoint != ball_b.basepoint:
        raise ValueError("balls have different basepoints")
    if constant < 1:
        raise ValueError("constant must be >= 1")
    shared = [k for k in ball_a.vertices() if k in ball_b.distances]
    checked = 0
    for i, x in enumerate(shared):
        for y in shared[i + 1 :]:
            da = ball_a.distance(x, y)
            db = ball_b.distance(x, y)
            if da is None or db is None:
                continue
            checked += 1
            if not (da <= constant * db and db <= constant * da):
                return ComparisonResult(
                    "fail",
                    constant,
                    {"x": x, "y": y, "d_a": da, "d_b": db},
                    checked,
                )
    if checked == 0:
        return ComparisonResult("inconclusive", constant, None, 0)
    return ComparisonResult("pass", constant, None, checked)


@dataclass(frozen=True)
class QIWitness:
    """Parameters of a claimed quasi-isometric embedding."""

    lam: float
    k: float

    def __post_init__(self):
        if self.lam < 1 or self.k < 0:
            raise ValueError("need lam >= 1 and k >= 0")


def qi_embedding_check(samples, witness: QIWitness) -> tuple[bool, Optional[tuple]]:
    """Check (1/lam) d1 - k <= d2 <= lam d1 + k on sampled pairs.

    ``samples`` yields (d1, d2) or (d1, d2, tag); returns (True, None) or
    (False, first violating sample)."""
    for sample in samples:
        d1, d2 = sample[0], sample[1]
        if not (d1 / witness.lam - witness.k <= d2 <= witness.lam * d1 + witness.k):
            return False, tuple(sample)
    return True, None


# ---------------------------------------------------------------------------
# serialization


def ball_to_json_lines(ball: LabeledBall) -> str:
    """One JSON record per line: header, vertices in BFS order, sorted
    edges.  Byte-deterministic for identical inputs."""
    records = [
        {
            "type": "header",
            "backend": ball.backend_id,
            "basepoint": ball.basepoint,
            "radius": ball.radius,
            "generators": ball.generator_names,
        }
    ]
    records.extend(
        {"type": "vertex", "key": k, "distance": d} for k, d in ball.distances.items()
    )
    records.extend(
        {"type": "edge", "u": u, "v": v, "label": name} for u, v, name in ball.edges
    )
    return "\n".join(json.dumps(r, sort_keys=True, separators=(",", ":")) for r in records) + "\n"


def ball_from_json_lines(text: str) -> LabeledBall:
    header = None
    distances: dict[str, int] = {}
    edges: list[Edge] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        if rec["type"] == "header":
            header = rec
        elif rec["type"] == "vertex":
            distances[rec["key"]] = rec["distance"]
        elif rec["type"] == "edge":
            edges.append((rec["u"], rec["v"], rec["label"]))
        else:
            raise ValueError(f"unknown record type {rec['type']!r}")
    if header is None:
        raise ValueError("missing header record")
    return LabeledBall(
        backend_id=header["backend"],
        basepoint=header["basepoint"],
        radius=header["radius"],
        generator_names=list(header["generators"]),
        distances=distances,
        edges=sorted(edges),
    )


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def ball_to_dot(ball: LabeledBall) -> str:
    """Undirected DOT graph; vertex labels carry the distance, edge labels
    the generator name.  Deterministic output."""
    lines = ["graph schreier_ball {"]
    lines.append(f"  // backend={ball.backend_id} basepoint={ball.basepoint} radius={ball.radius}")
    for k, d in ball.distances.items():
        lines.append(f"  {_dot_quote(k)} [label={_dot_quote(f'{k} d={d}')}];")
    for u, v, name in ball.edges:
        lines.append(f"  {_dot_quote(u)} -- {_dot_quote(v)} [label={_dot_quote(name)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
