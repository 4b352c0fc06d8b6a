"""Command-line front end.

Instances are JSON files of either form:

    {"parts": [["a1","a2"],["b1","b2"]], "edges": [["a1","b1"], ...]}
    {"points": [[[1,1],[1,1],[1,1]], [[1,1],[1,1],[2,1]], ...]}

Exit codes: 0 ok, 1 internal consistency failure (a verify check failed or an
invariant broke), 2 unparsable input, 3 size guard violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .clutters import Clutter, VertexTable, d_partite_complement, from_point_configuration, minimal_vertex_covers
from .errors import DEFAULT_MAX_VERTICES, ConsistencyError, SizeGuardError
from .hochster import betti_table, linear_strand_betti
from .ideals import alexander_dual, edge_ideal, squarefree_colon
from .linalg import Field, QQ, homology_dims
from .linearity import complement_linearity_agrees, is_linear
from .lyubeznik import lyubeznik_last_column
from .simplicial import chain_complex, part_deficient_complex, strand_support_pair
from .strand import first_linear_strand, verify_support

__all__ = ["InstanceFormatError", "load_instance", "dump_instance", "run_verification", "main"]


class InstanceFormatError(ValueError):
    pass


def load_instance(path: str) -> Clutter:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise InstanceFormatError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise InstanceFormatError(f"{path} is not valid JSON: {e}") from None
    return instance_from_dict(data)


def instance_from_dict(data: object) -> Clutter:
    if not isinstance(data, dict):
        raise InstanceFormatError("instance must be a JSON object")
    has_parts = "parts" in data or "edges" in data
    has_points = "points" in data
    if has_parts and has_points:
        raise InstanceFormatError("give either parts+edges or points, not both")
    if has_points:
        points = data["points"]
        if not isinstance(points, list) or not points:
            raise InstanceFormatError("points must be a nonempty list of rows")
        try:
            return from_point_configuration(points)
        except ValueError as e:
            raise InstanceFormatError(str(e)) from None
    if not ("parts" in data and "edges" in data):
        raise InstanceFormatError("instance needs both parts and edges (or points)")
    parts, edges = data["parts"], data["edges"]
    if not isinstance(parts, list) or not all(isinstance(p, list) for p in parts):
        raise InstanceFormatError("parts must be a list of lists of names")
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise InstanceFormatError("edges must be a list of lists of names")
    names: list[str] = []
    part_ids: list[int] = []
    for i, p in enumerate(parts):
        if not p:
            raise InstanceFormatError(f"part {i} is empty")
        for name in p:
            if not isinstance(name, str):
                raise InstanceFormatError("vertex names must be strings")
            names.append(name)
            part_ids.append(i)
    try:
        table = VertexTable(tuple(names), tuple(part_ids))
        return Clutter(table, tuple(table.resolve(e) for e in edges))
    except ValueError as e:
        raise InstanceFormatError(str(e)) from None


def dump_instance(c: Clutter) -> dict:
    if c.vertices.parts is None:
        raise ValueError("only partitioned clutters are serialized")
    t = c.vertices
    return {
        "parts": [[t.names[v] for v in t.part_members(i)] for i in range(t.d)],
        "edges": [sorted((t.names[v] for v in e), key=lambda nm: t.index(nm)) for e in c.edges],
    }


def _name_sets(c: Clutter, sets) -> list[list[str]]:
    return [[c.vertices.names[v] for v in sorted(s)] for s in sets]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def run_verification(c: Clutter, f: Field = QQ, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[Check]:
    """The instance-level cross-check suite: squares vanish, the strand sits
    on its relative pair, ranks match the Betti oracle, the part-deficient
    subcomplex is a sphere, linkage matches the brute-force colon, and the
    linearity verdict agrees with the complement's."""
    checks: list[Check] = []
    pair = strand_support_pair(c, max_vertices=max_vertices)
    strand = None
    try:
        strand = first_linear_strand(c, max_vertices=max_vertices)
        checks.append(Check("differentials-compose-to-zero", True))
    except ConsistencyError as e:
        checks.append(Check("differentials-compose-to-zero", False, str(e)))

    if strand is not None:
        report = verify_support(strand, pair)
        checks.append(
            Check("strand-matches-relative-pair", report.ok, "; ".join(report.mismatches[:3]))
        )

        if c.edges:
            graded, multigraded = linear_strand_betti(edge_ideal(c), f, max_vertices=max_vertices)
            ranks = {i: r for i, r in enumerate(strand.ranks())}
            expected_multi = {
                (i, a): 1 for i, level in enumerate(strand.levels) for a in level
            }
            ok = graded == {i: r for i, r in ranks.items() if r} and multigraded == expected_multi
            detail = "" if ok else f"oracle {graded}, strand {ranks}"
            checks.append(Check("strand-ranks-match-oracle", ok, detail))
        else:
            checks.append(Check("strand-ranks-match-oracle", True, "no edges, nothing to compare"))

    y = part_deficient_complex(c.vertices)
    hy = homology_dims(chain_complex(y, reduced=True), f)
    d = c.vertices.d
    sphere_degree = d - 2
    ok = all(v == (1 if k == sphere_degree else 0) for k, v in hy.items())
    checks.append(
        Check(
            "part-deficient-subcomplex-is-sphere",
            ok,
            f"reduced homology {hy}" if not ok else f"rank 1 in degree {sphere_degree}",
        )
    )

    if c.n <= 12:
        parts = c.part_sets()
        covers_c = minimal_vertex_covers(c)
        covers_comp = minimal_vertex_covers(d_partite_complement(c))
        first = squarefree_colon(parts, covers_c, c.n) == covers_comp
        second = squarefree_colon(parts, covers_comp, c.n) == covers_c
        checks.append(
            Check(
                "linkage-matches-colon",
                first and second,
                "" if first and second else "colon of the cover ideal differs from the complement's covers",
            )
        )
    else:
        checks.append(Check("linkage-matches-colon", True, f"skipped (n = {c.n} > 12)"))

    checks.append(Check("complement-linearity-agreement", complement_linearity_agrees(c)))
    return checks


def _field_arg(text: str) -> Field:
    if text == "q":
        return QQ
    if text.startswith("fp:"):
        try:
            return Field(int(text[3:]))
        except ValueError as e:
            raise argparse.ArgumentTypeError(str(e)) from None
    raise argparse.ArgumentTypeError("field must be q or fp:<prime>")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("instance", help="path to a JSON instance file")
    common.add_argument("--field", type=_field_arg, default=QQ, help="q (default) or fp:<prime>")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p = argparse.ArgumentParser(prog="linstrand", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("dual", parents=[common], help="generators of the Alexander dual (cover ideal)")
    sub.add_parser("complement", parents=[common], help="the d-partite complement, as an instance")
    sub.add_parser("covers", parents=[common], help="minimal vertex covers")
    betti = sub.add_parser("betti", parents=[common], help="graded Betti numbers of the edge ideal")
    betti.add_argument("--degree-cap", type=int, default=None, help="only multidegrees up to this size")
    strand = sub.add_parser("strand", parents=[common], help="first linear strand of the edge ideal")
    strand.add_argument("--matrices", action="store_true", help="also print bases and differential entries")
    sub.add_parser("lyubeznik", parents=[common], help="last Lyubeznik column of the cover ideal's quotient")
    sub.add_parser("linear", parents=[common], help="linear-resolution verdict with certificate")
    sub.add_parser("verify", parents=[common], help="run the instance cross-check suite")
    return p


def _emit(payload: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        c = load_instance(args.instance)
        return _dispatch(args, c)
    except SizeGuardError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except InstanceFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ConsistencyError as e:
        print(f"internal consistency failure: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args, c: Clutter) -> int:
    fmt = args.format
    mv = args.max_vertices
    if args.command == "covers":
        covers = _name_sets(c, minimal_vertex_covers(c))
        _emit({"covers": covers}, [f"{len(covers)} minimal vertex covers:"] + ["  {" + ",".join(s) + "}" for s in covers], fmt)
        return 0
    if args.command == "dual":
        dual = alexander_dual(edge_ideal(c))
        gens = _name_sets(c, dual.generators)
        _emit({"generators": gens}, [f"{len(gens)} generators of the Alexander dual:"] + ["  {" + ",".join(s) + "}" for s in gens], fmt)
        return 0
    if args.command == "complement":
        comp = d_partite_complement(c)
        payload = dump_instance(comp)
        lines = [f"{len(comp.edges)} complement edges:"] + ["  {" + ",".join(e) + "}" for e in payload["edges"]]
        _emit(payload, lines, fmt)
        return 0
    if args.command == "betti":
        table = betti_table(edge_ideal(c), args.field, degree_cap=args.degree_cap, max_vertices=mv)
        triples = sorted((i, j, v) for (i, j), v in table.graded.items())
        lines = ["graded Betti numbers beta_{i,j}:"]
        lines += [f"  i={i} j={j}: {v}" for i, j, v in triples]
        lines.append(f"linear: {'yes' if table.is_linear() else 'no'}")
        _emit({"betti": [list(t) for t in triples], "min_degree": table.min_degree}, lines, fmt)
        return 0
    if args.command == "strand":
        s = first_linear_strand(c, max_vertices=mv)
        payload: dict = {"ranks": list(s.ranks())}
        lines = ["strand ranks: " + (" ".join(str(r) for r in s.ranks()) if s.ranks() else "(empty)")]
        if args.matrices:
            payload["levels"] = [_name_sets(c, level) for level in s.levels]
            payload["differentials"] = [
                [[e.row, e.col, e.sign, c.vertices.names[e.vertex]] for e in diff]
                for diff in s.differentials
            ]
            for i, level in enumerate(s.levels):
                lines.append(f"level {i}: " + " ".join(c.vertices.label(a) for a in level))
            for i in range(1, s.length()):
                lines.append(f"differential {i}:")
                lines += [
                    f"  e[{e.col}] -> {'+' if e.sign > 0 else '-'}{c.vertices.names[e.vertex]} e[{e.row}]"
                    for e in s.differentials[i]
                ]
        _emit(payload, lines, fmt)
        return 0
    if args.command == "lyubeznik":
        col = lyubeznik_last_column(c, args.field, max_vertices=mv)
        payload = {"lyubeznik_column": list(col.values), "n": col.n, "d": col.d}
        lines = [
            f"last Lyubeznik column (p = 0..{col.n - col.d}): " + " ".join(str(v) for v in col.values)
        ]
        _emit(payload, lines, fmt)
        return 0
    if args.command == "linear":
        verdict = is_linear(c)
        cert = None
        lines = [f"linear: {'yes' if verdict.linear else 'no'}"]
        if verdict.certificate is not None:
            w = verdict.certificate
            cert = {
                "first": sorted(c.vertices.names[v] for v in w.first),
                "second": sorted(c.vertices.names[v] for v in w.second),
                "parts": list(w.parts),
                "side": w.side,
            }
            lines.append(
                f"certificate: restrict to {c.vertices.label(w.first)} u {c.vertices.label(w.second)}, "
                f"take the {w.side}, project onto parts {list(w.parts)}"
            )
        _emit({"verdict": verdict.linear, "certificate": cert}, lines, fmt)
        return 0
    if args.command == "verify":
        checks = run_verification(c, args.field, max_vertices=mv)
        payload = {
            "ok": all(ch.ok for ch in checks),
            "checks": [{"name": ch.name, "ok": ch.ok, "detail": ch.detail} for ch in checks],
        }
        lines = [
            f"{'ok  ' if ch.ok else 'FAIL'} {ch.name}" + (f" ({ch.detail})" if ch.detail else "")
            for ch in checks
        ]
        lines.append("all checks passed" if payload["ok"] else "some checks FAILED")
        _emit(payload, lines, fmt)
        return 0 if payload["ok"] else 1
    raise AssertionError(f"unhandled command {args.command}")
