"""Command-line front end: ``ellipcp cp|sphere|oracle|cell|euler``.

Exit codes:
    0  success
    2  parse error (bad representation / subgroup / argument syntax)
    3  precondition violated (zero representation, trivial summand, ...)
    4  oracle mismatch (an intersection number disagrees with enumeration)
    5  oracle guard exceeded (argument too large to enumerate)
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import algmodel, lattice
from .divisor import (
    CohDims,
    Divisor,
    FixedPointError,
    coh_dims,
    divisor_of_rep,
    intersection_matrix,
    is_ample,
    self_intersection,
)
from .ellcoh import (
    POINT,
    STRUCTURE_SHEAF,
    GradedDims,
    LesTable,
    cp_divisor,
    d_invariant,
    ec_cp_from_table,
    ec_t2_sphere,
    les_table,
)
from .reps import ParseError, format_circle_rep, parse_circle_rep, parse_torus_rep

SCHEMA = "ellipcp/1"

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_ORACLE_MISMATCH = 4
EXIT_GUARD = 5

ORACLE_MAX_DET = 12
ORACLE_MAX_N = 100
VERIFY_MAX_DET = 30


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class Report:
    """Everything computed for one ``cp`` or ``sphere`` run."""

    command: str
    input: str
    divisor: Divisor
    intersection_matrix: list[list[int]]
    self_intersection: int
    ample: bool
    coh_minus: CohDims
    coh_structure: CohDims
    value: GradedDims
    les: LesTable | None = None
    unreduced: GradedDims | None = None
    reduced: GradedDims | None = None
    d_invariant: int | None = None
    oracle: list[dict[str, Any]] | None = field(default=None)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "schema": SCHEMA,
            "command": self.command,
            "input": self.input,
            "divisor": self.divisor.to_json(),
            "intersection_matrix": self.intersection_matrix,
            "self_intersection": self.self_intersection,
            "ample": self.ample,
            "coh_minus": list(self.coh_minus),
            "coh_structure": list(self.coh_structure),
            "value": list(self.value),
        }
        if self.les is not None:
            out["les"] = self.les.to_json()
            out["unreduced"] = list(self.unreduced)
            out["point"] = list(POINT)
            out["reduced"] = list(self.reduced)
            out["d_invariant"] = self.d_invariant
        if self.oracle is not None:
            out["oracle"] = self.oracle
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Report:
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        les = data.get("les")
        return cls(
            command=data["command"],
            input=data["input"],
            divisor=Divisor.from_json(data["divisor"]),
            intersection_matrix=data["intersection_matrix"],
            self_intersection=data["self_intersection"],
            ample=data["ample"],
            coh_minus=CohDims(*data["coh_minus"]),
            coh_structure=CohDims(*data["coh_structure"]),
            value=GradedDims(*data["value"]),
            les=LesTable.from_json(les) if les is not None else None,
            unreduced=GradedDims(*data["unreduced"]) if "unreduced" in data else None,
            reduced=GradedDims(*data["reduced"]) if "reduced" in data else None,
            d_invariant=data.get("d_invariant"),
            oracle=data.get("oracle"),
        )


def verify_intersections(d: Divisor) -> list[dict[str, Any]]:
    """Recount every pairwise C_v . C_w by enumeration; CliError(4) on mismatch."""
    results = []
    dirs = d.directions()
    for i, v in enumerate(dirs):
        for w in dirs[i + 1 :]:
            det = abs(lattice.det2(v, w))
            if det > VERIFY_MAX_DET:
                raise CliError(
                    f"|det({tuple(v)},{tuple(w)})| = {det} exceeds the enumeration guard {VERIFY_MAX_DET}",
                    EXIT_GUARD,
                )
            count = lattice.intersection_count_oracle(v, w)
            entry = {"v": list(v), "w": list(w), "count": count, "det2": det * det}
            results.append(entry)
            if count != det * det:
                raise CliError(f"oracle mismatch: {entry}", EXIT_ORACLE_MISMATCH)
    return results


def build_cp_report(text: str, verify: bool = False) -> Report:
    try:
        v = parse_circle_rep(text)
    except ParseError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    if not v:
        raise CliError("CP(V) needs a nonzero representation V", EXIT_PRECONDITION)
    d = cp_divisor(v)
    table = les_table(v)
    unreduced = ec_cp_from_table(table, reduced=False)
    reduced = ec_cp_from_table(table, reduced=True)
    return Report(
        command="cp",
        input=format_circle_rep(v),
        divisor=d,
        intersection_matrix=intersection_matrix(d),
        self_intersection=self_intersection(d),
        ample=is_ample(d),
        coh_minus=table.source,
        coh_structure=table.target,
        value=reduced,
        les=table,
        unreduced=unreduced,
        reduced=reduced,
        d_invariant=d_invariant(v),
        oracle=verify_intersections(d) if verify else None,
    )


def build_sphere_report(text: str, verify: bool = False) -> Report:
    try:
        w = parse_torus_rep(text)
    except ParseError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    try:
        d = divisor_of_rep(w)
    except FixedPointError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    return Report(
        command="sphere",
        input=str(w),
        divisor=d,
        intersection_matrix=intersection_matrix(d),
        self_intersection=self_intersection(d),
        ample=is_ample(d),
        coh_minus=coh_dims(d, "minus"),
        coh_structure=coh_dims(STRUCTURE_SHEAF, "plus"),
        value=ec_t2_sphere(w),
        oracle=verify_intersections(d) if verify else None,
    )


def _bold(text: str) -> str:
    mode = os.environ.get("ELLIPCP_COLOR", "auto")
    if mode == "auto" and sys.stdout.isatty():
        return f"\033[1m{text}\033[0m"
    return text


def _dims_line(prefix: str, g: GradedDims) -> str:
    return f"{prefix}: k even -> C^{g.even}, k odd -> C^{g.odd}"


def render_text(r: Report, unreduced: bool = False) -> str:
    lines = []
    ample = "ample" if r.ample else "not ample"
    if r.command == "cp":
        lines.append(f"V = {r.input}")
        lines.append(
            f"D = {r.divisor}; D.D = {r.self_intersection}; d = {r.d_invariant}; {ample}; "
            f"H*(O(-D)) = {tuple(r.coh_minus)}"
        )
        if unreduced:
            lines.append(_bold(_dims_line("EC_T^k(CP(V)_+)", r.unreduced)))
            lines.append(f"reduced = unreduced - {tuple(POINT)} = {tuple(r.reduced)}")
        else:
            lines.append(_bold(_dims_line("EC_T^k(CP(V))", r.reduced)))
    else:
        lines.append(f"W = {r.input}")
        lines.append(
            f"D = {r.divisor}; D.D = {r.self_intersection}; {ample}; "
            f"H*(O(-D)) = {tuple(r.coh_minus)}"
        )
        lines.append(_bold(_dims_line("EC_T2^k(S^W)", r.value)))
    if r.oracle is not None:
        checks = ", ".join(f"{tuple(e['v'])}.{tuple(e['w'])}={e['count']}" for e in r.oracle)
        lines.append(f"oracle OK ({len(r.oracle)} pairs{': ' + checks if checks else ''})")
    return "\n".join(lines)


def _int_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise CliError(f"expected an integer pair like 2,1, got {text!r}", EXIT_PARSE) from exc
    return a, b


def parse_subgroup(text: str) -> lattice.FiniteSubgroup:
    """``trivial``, ``N,cyclic``, ``N,torsion`` or generators ``a/n,b/n;...``."""
    text = text.strip()
    if text == "trivial":
        return lattice.FiniteSubgroup.trivial()
    head, _, kind = text.partition(",")
    if kind in ("cyclic", "torsion"):
        try:
            n = int(head)
        except ValueError as exc:
            raise CliError(f"bad subgroup order in {text!r}", EXIT_PARSE) from exc
        if n < 1:
            raise CliError(f"subgroup order must be positive in {text!r}", EXIT_PARSE)
        if n > ORACLE_MAX_N:
            raise CliError(f"order {n} exceeds guard {ORACLE_MAX_N}", EXIT_GUARD)
        return lattice.FiniteSubgroup.cyclic(n) if kind == "cyclic" else lattice.FiniteSubgroup.torsion(n)
    gens = []
    for piece in text.split(";"):
        try:
            x, y = (Fraction(s.strip()) for s in piece.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise CliError(f"bad generator {piece!r} in {text!r}", EXIT_PARSE) from exc
        gens.append((x, y))
    return lattice.subgroup_from_generators(gens)


def run_oracle(args) -> tuple[str, dict]:
    if args.what == "intersect":
        if len(args.args) != 2:
            raise CliError("oracle intersect needs two directions, e.g. 2,1 0,1", EXIT_PARSE)
        v, w = (_int_pair(a) for a in args.args)
        det = lattice.det2(v, w)
        if det == 0:
            raise CliError(f"directions {v} and {w} are parallel", EXIT_PRECONDITION)
        if abs(det) > ORACLE_MAX_DET:
            raise CliError(f"|det| = {abs(det)} exceeds guard {ORACLE_MAX_DET}", EXIT_GUARD)
        count = lattice.intersection_count_oracle(v, w)
        data = {"v": list(v), "w": list(w), "count": count, "det2": det * det}
        text = f"C{v} . C{w}: enumerated {count}, det^2 = {det * det}"
        return text, data
    if args.what == "torsion":
        if len(args.args) != 1:
            raise CliError("oracle torsion needs one integer n", EXIT_PARSE)
        try:
            n = int(args.args[0])
        except ValueError as exc:
            raise CliError(f"bad integer {args.args[0]!r}", EXIT_PARSE) from exc
        if n < 1:
            raise CliError("n must be >= 1", EXIT_PRECONDITION)
        if n > ORACLE_MAX_N:
            raise CliError(f"n = {n} exceeds guard {ORACLE_MAX_N}", EXIT_GUARD)
        total = len(lattice.torsion_points(n))
        exact = lattice.exact_order_count(n)
        data = {"n": n, "torsion": total, "exact": exact, "jordan_totient": lattice.jordan_totient2(n)}
        text = f"|E[{n}]| = {total}, exact order {n}: {exact} (J_2({n}) = {data['jordan_totient']})"
        return text, data
    if args.what == "subgroups":
        if len(args.args) != 1:
            raise CliError("oracle subgroups needs one subgroup, e.g. 12,cyclic", EXIT_PARSE)
        f = parse_subgroup(args.args[0])
        if f.order() > ORACLE_MAX_N:
            raise CliError(f"order {f.order()} exceeds guard {ORACLE_MAX_N}", EXIT_GUARD)
        subs = algmodel.enumerate_subgroups(f)
        data = {"subgroup": str(f), "order": f.order(), "count": len(subs), "cyclic": f.is_cyclic()}
        text = f"{f} (order {f.order()}): {len(subs)} subgroups"
        if f.is_cyclic():
            ndiv = sum(1 for k in range(1, f.order() + 1) if f.order() % k == 0)
            data["divisor_count"] = ndiv
            text += f"; cyclic, divisor count {ndiv}"
        return text, data
    raise CliError(f"unknown oracle {args.what!r}", EXIT_PARSE)


def _table_json(t: algmodel.CellModelTable) -> dict:
    return {
        "top": str(t.top),
        "codim1": [{"v": list(v), "value": str(x)} for v, x in t.codim1.items()],
        "bottom": [
            {"subgroup": str(f), "value": str(x), "dim_deg1": x.dim(1), "dim_deg2": x.dim(2)}
            for f, x in t.bottom.items()
        ],
    }


def run_cell(args) -> tuple[str, dict]:
    if args.kind == "codim1":
        v = _int_pair(args.arg)
        if v == (0, 0):
            raise CliError("direction must be nonzero", EXIT_PARSE)
        family = [parse_subgroup(s) for s in (args.family or ["trivial"])]
        try:
            table = algmodel.cell_model_codim1(v, family)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARSE) from exc
        lines = [f"T^2/H_{v}+ :", "  at T^2: 0"]
        lines += [f"  at H_{tuple(d)}: {x}" for d, x in table.codim1.items()]
        lines += [f"  at {f}: {x}" for f, x in table.bottom.items()]
    else:
        f = parse_subgroup(args.arg)
        if f.order() > ORACLE_MAX_N:
            raise CliError(f"order {f.order()} exceeds guard {ORACLE_MAX_N}", EXIT_GUARD)
        table = algmodel.cell_model_finite(f)
        lines = [f"T^2/F+ for F = {f}:", "  at connected subgroups: 0"]
        lines += [f"  at the trivial subgroup: {x}" for x in table.bottom.values()]
    return "\n".join(lines), _table_json(table)


def run_euler(args) -> tuple[str, dict]:
    try:
        w_plus = parse_torus_rep(args.rep)
        w_minus = parse_torus_rep(args.minus) if args.minus else parse_torus_rep("0")
    except ParseError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    f = parse_subgroup(args.subgroup)
    split = algmodel.decompose(f)
    num, den = algmodel.euler_class_virtual(w_plus, w_minus, f)
    data = {
        "subgroup": str(f),
        "splitting": {
            "A": list(split.a_dir),
            "n_A": split.n_a,
            "B": list(split.b_dir),
            "n_B": split.n_b,
        },
        "numerator": str(num),
        "denominator": str(den),
    }
    text = (
        f"F = {f} = ker z_{tuple(split.a_dir)}^{split.n_a} n ker z_{tuple(split.b_dir)}^{split.n_b}\n"
        f"e(V)_F = ({num}) / ({den})"
    )
    return text, data


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellipcp",
        description="Rational equivariant elliptic cohomology of CP(V) and representation spheres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("cp", help="EC_T^*(CP(V)) for a circle representation, e.g. 'eps+4z'")
    p.add_argument("rep")
    p.add_argument("--unreduced", action="store_true", help="report CP(V)_+ and the point correction")
    p.add_argument("--verify", action="store_true", help="recount intersection numbers by enumeration")
    common(p)

    p = sub.add_parser("sphere", help="EC_T2^*(S^W), e.g. 'x^0y^1 + 4x^1y^1'")
    p.add_argument("rep")
    p.add_argument("--verify", action="store_true")
    common(p)

    p = sub.add_parser("oracle", help="brute-force enumeration checks")
    p.add_argument("what", choices=["intersect", "torsion", "subgroups"])
    p.add_argument("args", nargs="*")
    common(p)

    p = sub.add_parser("cell", help="algebraic models of natural cells")
    p.add_argument("kind", choices=["codim1", "finite"])
    p.add_argument("arg", help="direction lam,mu (codim1) or a finite subgroup (finite)")
    p.add_argument("--family", action="append", help="finite subgroup to evaluate at (repeatable)")
    common(p)

    p = sub.add_parser("euler", help="Euler class of W (or W - W') at a finite subgroup")
    p.add_argument("rep")
    p.add_argument("--minus", help="virtual part subtracted from rep")
    p.add_argument("--subgroup", default="trivial")
    common(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in ("cp", "sphere"):
            build = build_cp_report if args.command == "cp" else build_sphere_report
            report = build(args.rep, verify=args.verify)
            if args.json:
                text = json.dumps(report.to_json(), indent=2)
            else:
                text = render_text(report, unreduced=getattr(args, "unreduced", False))
        else:
            runner = {"oracle": run_oracle, "cell": run_cell, "euler": run_euler}[args.command]
            text, data = runner(args)
            if args.json:
                text = json.dumps({"schema": SCHEMA, "command": args.command, **data}, indent=2)
    except CliError as exc:
        print(f"ellipcp: error: {exc}", file=sys.stderr)
        return exc.code
    print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
