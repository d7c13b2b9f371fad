"""Command-line interface.

Usage: quandles <subcommand> <specfile> [options]

The spec file is JSON describing a quandle:

    {"family": "dihedral", "n": 5}
    {"family": "dihedral", "n": "inf", "action": "displacement"}
    {"family": "finite-table", "table": [[0,0],[1,1]]}
    {"family": "conjugation", "group": "symmetric:3", "subset": [1,2,4]}
    {"family": "galex-finite", "group": "cyclic:3", "sigma": [0,2,1]}
    {"family": "galex-lattice", "t": [[0,-1],[1,0]]}
    {"family": "free", "alphabet": ["a", "b"]}

Optional keys: "action" ("inner", the default, or "displacement") and
"generators", a list of generator expressions like "s:1 s:0^-1" (factors
separated by spaces, each "s:<element key>" with an optional "^-1").
Group tables may be inlined as row-major lists or named: "cyclic:n",
"dihedral:n", "symmetric:n", "alternating:n", "quaternion".

Exit codes: 0 success, 1 a checked property failed (witness printed),
2 bad usage or bad spec, 3 an enumeration cap was exceeded.

All output is line-oriented JSON (or DOT with --dot) and byte-identical
across runs for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BoundExceededError, ConstructionError, MalformedTableError
from .families import (
    ConjugationQuandle,
    DihedralInfinite,
    FreeQuandle,
    GAlexFiniteQuandle,
    GAlexLattice,
    conjugation_quandle,
    dihedral_quandle,
    free_quandle,
    galex_finite,
    galex_lattice,
)
from .groups import (
    GroupTable,
    alternating_group,
    cyclic_group,
    dihedral_group,
    quaternion_group,
    symmetric_group,
)
from .quandle import FiniteQuandle, check_quandle_axioms
from .schreier import (
    SchreierAction,
    ball_to_dot,
    ball_to_json_lines,
    bilipschitz_compare,
    bilipschitz_constant,
    build_ball,
    displacement_action,
    ends_estimate,
    inner_action,
)
from .verify import (
    verify_dis_properties,
    verify_free_action_isometry,
    verify_free_transitive_reconstruction,
    verify_inner_case_commutator,
    verify_p_equals_dis,
)


class SpecError(Exception):
    """A problem with the spec file; carries a stable error code."""

    def __init__(self, code: str, message: str, field: str = ""):
        super().__init__(message)
        self.code = code
        self.field = field

    def as_json(self) -> str:
        return json.dumps(
            {"error": self.code, "field": self.field, "message": str(self)},
            sort_keys=True,
        )


def _emit(record: dict, out=None) -> None:
    (out or sys.stdout).write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")


def load_group(value) -> GroupTable:
    if isinstance(value, list):
        try:
            return GroupTable(value)
        except MalformedTableError as e:
            raise SpecError("malformed-table", str(e), "group")
    if not isinstance(value, str):
        raise SpecError("bad-spec", "group must be a table or a name", "group")
    name, _, arg = value.partition(":")
    try:
        if name == "cyclic":
            return cyclic_group(int(arg))
        if name == "symmetric":
            return symmetric_group(int(arg))
        if name == "alternating":
            return alternating_group(int(arg))
        if name == "dihedral":
            return dihedral_group(int(arg))
        if name == "quaternion":
            return quaternion_group()
    except ValueError as e:
        raise SpecError("bad-spec", f"bad group argument: {e}", "group")
    raise SpecError("unknown-group", f"unknown group name {value!r}", "group")


def _load_raw(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise SpecError("bad-spec", f"cannot read spec file: {e}")
    except json.JSONDecodeError as e:
        raise SpecError("bad-json", f"spec file is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise SpecError("bad-spec", "spec file must hold a JSON object")
    return data


def load_spec(path: str):
    data = _load_raw(path)
    family = data.get("family")
    if family is None:
        raise SpecError("missing-field", "spec needs a \"family\" field", "family")

    try:
        if family == "dihedral":
            if "n" not in data:
                raise SpecError("missing-field", "dihedral spec needs \"n\"", "n")
            backend = dihedral_quandle(data["n"])
        elif family == "finite-table":
            if "table" not in data:
                raise SpecError("missing-field", "finite-table spec needs \"table\"", "table")
            backend = FiniteQuandle(data["table"])
        elif family == "conjugation":
            if "group" not in data:
                raise SpecError("missing-field", "conjugation spec needs \"group\"", "group")
            backend = conjugation_quandle(load_group(data["group"]), data.get("subset"))
        elif family == "galex-finite":
            for fieldname in ("group", "sigma"):
                if fieldname not in data:
                    raise SpecError(
                        "missing-field", f"galex-finite spec needs \"{fieldname}\"", fieldname
                    )
            group = load_group(data["group"])
            sigma = data["sigma"]
            if isinstance(sigma, dict) and "conjugation-by" in sigma:
                g = int(sigma["conjugation-by"])
                sigma = [group.conj(x, g) for x in range(group.size)]
            backend = galex_finite(group, sigma)
        elif family == "galex-lattice":
            if "t" not in data:
                raise SpecError("missing-field", "galex-lattice spec needs \"t\"", "t")
            try:
                backend = galex_lattice(data["t"])
            except ValueError as e:
                raise SpecError("non-unimodular", str(e), "t")
        elif family == "free":
            if "alphabet" not in data:
                raise SpecError("missing-field", "free spec needs \"alphabet\"", "alphabet")
            backend = free_quandle(data["alphabet"])
        else:
            raise SpecError("unknown-family", f"unknown family {family!r}", "family")
    except MalformedTableError as e:
        raise SpecError("malformed-table", str(e))
    except ConstructionError as e:
        raise SpecError("bad-construction", f"{e} (witness {e.witness})")
    return backend, data


def parse_generator_expressions(backend, expressions) -> list[tuple[str, object]]:
    gens = []
    for expr in expressions:
        factors = expr.split()
        if not factors:
            raise SpecError("bad-generator", f"empty generator expression {expr!r}", "generators")
        aut = None
        names = []
        for factor in factors:
            invert = factor.endswith("^-1")
            body = factor[:-3] if invert else factor
            if not body.startswith("s:"):
                raise SpecError(
                    "bad-generator",
                    f"factor {factor!r} must look like s:<key> or s:<key>^-1",
                    "generators",
                )
            try:
                element = backend.parse_key(body[2:])
            except ValueError as e:
                raise SpecError("bad-generator", f"bad element key in {factor!r}: {e}", "generators")
            sym = backend.symmetry(element)
            if invert:
                sym = sym.inverse()
            names.append(f"s{body[2:]}" + ("^-1" if invert else ""))
            aut = sym if aut is None else aut * sym
        gens.append(("*".join(names), aut))
    return gens


def resolve_action(backend, data, args) -> "SchreierAction":
    tag = data.get("action", "inner")
    custom = data.get("generators")
    if getattr(args, "generators", None):
        custom = args.generators
    gens = parse_generator_expressions(backend, custom) if custom else None
    if tag == "inner":
        return inner_action(backend, gens)
    if tag == "displacement":
        if isinstance(backend, FreeQuandle) and gens is None:
            raise SpecError(
                "bad-spec",
                "the displacement group of a free quandle is not finitely generated; "
                "supply explicit generators",
                "action",
            )
        return displacement_action(backend, gens)
    raise SpecError("bad-spec", f"unknown action {tag!r}", "action")


def default_basepoint(backend):
    if isinstance(backend, FiniteQuandle):
        return 0
    if isinstance(backend, DihedralInfinite):
        return 0
    if isinstance(backend, GAlexLattice):
        return backend.zero()
    if isinstance(backend, FreeQuandle):
        return backend.generator(backend.alphabet[0])
    raise SpecError("bad-spec", f"no default basepoint for {backend!r}")


def cmd_axioms(args) -> int:
    data = _load_raw(args.spec)
    if data.get("family") == "finite-table":
        # check the raw table so a broken one yields a witness, not a
        # construction error
        if "table" not in data:
            raise SpecError("missing-field", "finite-table spec needs \"table\"", "table")
        try:
            report = check_quandle_axioms(data["table"])
        except MalformedTableError as e:
            raise SpecError("malformed-table", str(e))
        backend = None
    else:
        backend, data = load_spec(args.spec)
        if isinstance(backend, FiniteQuandle):
            report = check_quandle_axioms(backend.table)
        else:
            report = backend.check_axioms_window(args.window)
    record = report.as_dict()
    if backend is not None and not isinstance(backend, FiniteQuandle):
        record["window"] = args.window
    _emit(record)
    return 0 if report.ok else 1


def cmd_ball(args) -> int:
    backend, data = load_spec(args.spec)
    action = resolve_action(backend, data, args)
    base = backend.parse_key(args.base) if args.base else default_basepoint(backend)
    ball = build_ball(action, base, args.radius, max_vertices=args.max_vertices)
    text = ball_to_dot(ball) if args.dot else ball_to_json_lines(ball)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_dist(args) -> int:
    backend, data = load_spec(args.spec)
    action = resolve_action(backend, data, args)
    src = backend.parse_key(args.src)
    dst = backend.parse_key(args.dst)
    ball = build_ball(action, src, args.radius, max_vertices=args.max_vertices)
    key_src, key_dst = backend.key(src), backend.key(dst)
    d = ball.distance(key_src, key_dst)
    _emit(
        {
            "from": key_src,
            "to": key_dst,
            "radius": args.radius,
            "distance": d,
            "status": "certified" if d is not None else "out-of-ball",
        }
    )
    return 0


def cmd_ends(args) -> int:
    backend, data = load_spec(args.spec)
    action = resolve_action(backend, data, args)
    base = backend.parse_key(args.base) if args.base else default_basepoint(backend)
    if not 0 <= args.inner_radius < args.outer_radius:
        raise SpecError("bad-spec", "need 0 <= inner-radius < outer-radius")
    ball = build_ball(action, base, args.outer_radius, max_vertices=args.max_vertices)
    count = ends_estimate(ball, args.inner_radius)
    _emit(
        {
            "basepoint": ball.basepoint,
            "inner_radius": args.inner_radius,
            "outer_radius": args.outer_radius,
            "ends_estimate": count,
        }
    )
    return 0


def cmd_components(args) -> int:
    backend, data = load_spec(args.spec)
    if isinstance(backend, FiniteQuandle):
        for part in backend.components():
            _emit({"component": backend.key(part[0]), "size": len(part)})
        return 0
    if args.window is None:
        raise SpecError("bad-spec", "infinite families need --window", "window")
    counts: dict[str, int] = {}
    for x in backend.elements_window(args.window):
        key = backend.component_key(x)
        label = backend.key(key) if isinstance(key, tuple) else str(key)
        counts[label] = counts.get(label, 0) + 1
    for label in sorted(counts):
        _emit({"component": label, "count_in_window": counts[label], "window": args.window})
    return 0


def cmd_dis_lattice(args) -> int:
    backend, _data = load_spec(args.spec)
    if not isinstance(backend, GAlexLattice):
        raise SpecError("bad-spec", "dis-lattice needs a galex-lattice spec", "family")
    lat = backend.displacement_lattice()
    _emit(
        {
            "ambient_dim": lat.ambient_dim,
            "rank": lat.rank,
            "basis_columns": [list(c) for c in lat.basis],
            "index_in_ambient": lat.index_in_ambient(),
        }
    )
    return 0


def cmd_compare_gensets(args) -> int:
    backend, data = load_spec(args.spec)
    gens_a = parse_generator_expressions(backend, args.genset_a.split(","))
    gens_b = parse_generator_expressions(backend, args.genset_b.split(","))
    base = backend.parse_key(args.base) if args.base else default_basepoint(backend)
    constant = args.constant
    if constant is None:
        constant = bilipschitz_constant(gens_a, gens_b, args.max_word_length)
        if constant is None:
            raise SpecError(
                "bad-spec",
                f"generating sets are not mutually expressible within word length "
                f"{args.max_word_length}",
            )
    ball_a = build_ball(
        SchreierAction(f"{backend.backend_id}:genset-a", gens_a, backend.key),
        base,
        args.radius,
        max_vertices=args.max_vertices,
    )
    ball_b = build_ball(
        SchreierAction(f"{backend.backend_id}:genset-b", gens_b, backend.key),
        base,
        args.radius,
        max_vertices=args.max_vertices,
    )
    result = bilipschitz_compare(ball_a, ball_b, constant)
    _emit(
        {
            "status": result.status,
            "constant": result.constant,
            "pairs_checked": result.pairs_checked,
            "witness": result.witness,
        }
    )
    return 0 if result.passed else 1


def cmd_growth(args) -> int:
    backend, data = load_spec(args.spec)
    action = resolve_action(backend, data, args)
    base = backend.parse_key(args.base) if args.base else default_basepoint(backend)
    ball = build_ball(action, base, args.radius, max_vertices=args.max_vertices)
    _emit(
        {
            "basepoint": ball.basepoint,
            "radius": args.radius,
            "sphere_sizes": ball.sphere_sizes(),
        }
    )
    return 0


def cmd_verify(args) -> int:
    backend, data = load_spec(args.spec)
    suite = args.suite
    reports = []
    if suite == "dis-properties":
        if not isinstance(backend, FiniteQuandle):
            raise SpecError("bad-spec", "dis-properties runs on finite quandles", "family")
        reports = verify_dis_properties(backend, instance=args.spec)
    elif suite == "p-equals-dis":
        if not isinstance(backend, GAlexFiniteQuandle):
            raise SpecError("bad-spec", "p-equals-dis needs a galex-finite spec", "family")
        reports = [verify_p_equals_dis(backend, instance=args.spec)]
    elif suite == "inner-commutator":
        if not isinstance(backend, GAlexFiniteQuandle):
            raise SpecError("bad-spec", "inner-commutator needs a galex-finite spec", "family")
        g = backend.sigma_is_conjugation_by()
        if g is None:
            raise SpecError("bad-spec", "sigma is not conjugation by any element", "sigma")
        reports = [verify_inner_case_commutator(backend.group, g, instance=args.spec)]
    elif suite == "reconstruction":
        if not isinstance(backend, FiniteQuandle):
            raise SpecError("bad-spec", "reconstruction runs on finite quandles", "family")
        dis = backend.displacement_group()
        reports = [
            verify_free_transitive_reconstruction(
                backend, list(dis.elements), instance=args.spec
            )
        ]
    elif suite == "free-action-isometry":
        if isinstance(backend, FreeQuandle):
            raise SpecError("bad-spec", "suite not available for free quandles", "family")
        reports = [
            verify_free_action_isometry(
                backend, default_basepoint(backend), args.radius, instance=args.spec
            )
        ]
    else:
        raise SpecError("bad-spec", f"unknown suite {suite!r}", "suite")
    ok = True
    for rep in reports:
        sys.stdout.write(rep.to_json_line() + "\n")
        ok = ok and rep.passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandles", description="metric and group-theoretic invariants of quandles"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("spec", help="path to a JSON quandle spec")
        p.add_argument("--max-vertices", type=int, default=1_000_000)
        p.set_defaults(fn=fn)
        return p

    p = add("axioms", cmd_axioms, help="check the quandle axioms")
    p.add_argument("--window", type=int, default=3, help="element window for infinite families")

    p = add("ball", cmd_ball, help="emit a Schreier ball as JSON lines or DOT")
    p.add_argument("--base", help="basepoint key (family default if omitted)")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--generators", nargs="*", help="override generator expressions")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true", help="JSON lines (the default)")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")

    p = add("dist", cmd_dist, help="certified distance between two elements")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--generators", nargs="*")

    p = add("ends", cmd_ends, help="estimate the number of ends")
    p.add_argument("--base", help="basepoint key")
    p.add_argument("--inner-radius", type=int, required=True)
    p.add_argument("--outer-radius", type=int, required=True)
    p.add_argument("--generators", nargs="*")

    p = add("components", cmd_components, help="connected components")
    p.add_argument("--window", type=int, help="window radius for infinite families")

    add("dis-lattice", cmd_dis_lattice, help="displacement translation lattice")

    p = add("compare-gensets", cmd_compare_gensets, help="bi-Lipschitz comparison of two generating sets")
    p.add_argument("--genset-a", required=True, help="comma-separated generator expressions")
    p.add_argument("--genset-b", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--base")
    p.add_argument("--constant", type=int, help="skip the word-length computation")
    p.add_argument("--max-word-length", type=int, default=10)

    p = add("growth", cmd_growth, help="sphere sizes out to a radius")
    p.add_argument("--base")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--generators", nargs="*")

    p = add("verify", cmd_verify, help="run a theorem-checking suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--radius", type=int, default=10, help="ball radius for metric suites")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SpecError as e:
        sys.stderr.write(e.as_json() + "\n")
        return 2
    except BoundExceededError as e:
        sys.stderr.write(json.dumps({"error": "bound-exceeded", "message": str(e)}) + "\n")
        return 3
    except (ConstructionError, ValueError) as e:
        sys.stderr.write(json.dumps({"error": "bad-input", "message": str(e)}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
