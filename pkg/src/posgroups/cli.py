"""Command line interface.

    posgroups [--format json|csv|pretty] [--budget N] check GROUP
    posgroups table FAMILY
    posgroups witness N
    posgroups scan --max N
    posgroups probe --bound N

Exit codes: 0 success (POS / table match), 1 non-POS or table mismatch,
2 bad arguments, 3 enumeration budget or range cap exceeded, 4 construction
hypothesis violated.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Callable

from . import constructions, feasibility, symmetric
from .groups import (
    DEFAULT_BUDGET,
    AlternatingGroup,
    BudgetExceeded,
    Cyclic,
    FiniteGroup,
    SymmetricGroup,
    close_generators,
    make_metacyclic,
    make_twisted,
)
from .spectra import OrderSpectrum, order_spectrum, pos_verdict

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET, EXIT_HYPOTHESIS = 0, 1, 2, 3, 4


class SpecError(ValueError):
    """Group or family spec that does not parse."""


def _ints(text: str, count: int | None, spec: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise SpecError(f"expected comma-separated integers in {spec!r}") from None
    if count is not None and len(values) != count:
        raise SpecError(f"{spec!r} needs {count} integer parameters")
    return values


def parse_group_spec(spec: str, budget: int = DEFAULT_BUDGET) -> Callable[[], tuple[FiniteGroup, OrderSpectrum | None]]:
    """Turn a group spec into a zero-argument builder.

    The builder returns the group and, for families with a closed-form
    table, the predicted spectrum. Parsing is separate from building so that
    syntax errors and hypothesis violations map to different exit codes.
    """
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "c6c7":
        if rest:
            raise SpecError("c6c7 takes no parameters")
        return constructions.build_c6_c7
    if kind == "perm":
        degree, _, gens = rest.partition(":")
        try:
            degree_n = int(degree)
        except ValueError:
            raise SpecError(f"bad degree in {spec!r}") from None
        gen_list = [_ints(g, degree_n, spec) for g in gens.split(";") if g.strip()]
        return lambda: (close_generators(degree_n, gen_list, budget), None)
    if not rest:
        raise SpecError(f"missing parameters in {spec!r}")
    builders: dict[str, tuple[int, Callable[..., Any]]] = {
        "cyclic": (1, lambda n: (Cyclic(n), None)),
        "twisted": (3, lambda m, n, z: (make_twisted(m, n, z), None)),
        "metacyclic": (3, lambda m, n, r: (make_metacyclic(m, n, r), None)),
        "thm32": (3, constructions.build_theorem32),
        "remark5": (2, constructions.build_remark_p5),
        "c2am21": (1, lambda a: (constructions.build_c2a_m21(a), None)),
        "sn": (1, lambda n: (SymmetricGroup(n), None)),
        "an": (1, lambda n: (AlternatingGroup(n), None)),
    }
    if kind not in builders:
        raise SpecError(f"unknown group kind {kind!r}")
    arity, build = builders[kind]
    args = _ints(rest, arity, spec)
    return lambda: build(*args)


def _spectrum_json(spectrum: OrderSpectrum) -> list[dict[str, Any]]:
    return [{"order": d, "count": str(c)} for d, c in spectrum]


def _document(kind: str, **payload: Any) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, **payload}


def _spectrum_for(group: FiniteGroup, budget: int) -> tuple[OrderSpectrum, str]:
    if isinstance(group, (SymmetricGroup, AlternatingGroup)) and group.cardinality > budget:
        restrict = "all" if isinstance(group, SymmetricGroup) else "even"
        return symmetric.symmetric_spectrum(group.degree, restrict), "partition"
    return order_spectrum(group, budget), "enumeration"


def cmd_check(spec: str, budget: int) -> tuple[dict[str, Any], int]:
    builder = parse_group_spec(spec, budget)
    group, _ = builder()
    spectrum, method = _spectrum_for(group, budget)
    report = pos_verdict(spectrum, group.cardinality, spec)
    doc = _document(
        "pos-report",
        group=spec,
        order=str(group.cardinality),
        method=method,
        spectrum=_spectrum_json(spectrum),
        is_pos=report.is_pos,
        violations=[{"order": d, "count": str(c)} for d, c in report.violations],
    )
    return doc, EXIT_OK if report.is_pos else EXIT_FALSE


def cmd_table(spec: str, budget: int) -> tuple[dict[str, Any], int]:
    kind = spec.partition(":")[0].strip().lower()
    if kind not in ("thm32", "remark5", "c6c7"):
        raise SpecError(f"table needs a thm32, remark5 or c6c7 family, got {spec!r}")
    group, predicted = parse_group_spec(spec, budget)()
    enumerated = None
    if group.cardinality <= budget:
        enumerated = order_spectrum(group, budget)
    match = None if enumerated is None else enumerated == predicted
    doc = _document(
        "table-comparison",
        family=spec,
        order=str(group.cardinality),
        predicted=_spectrum_json(predicted),
        enumerated=None if enumerated is None else _spectrum_json(enumerated),
        enumeration_skipped=enumerated is None,
        match=match,
    )
    return doc, EXIT_FALSE if match is False else EXIT_OK


def cmd_witness(n: int) -> tuple[dict[str, Any], int]:
    if n < 3:
        raise SpecError(f"witness needs n >= 3, got {n}")
    w = symmetric.an_pos_witness(n)
    doc = _document(
        "witness",
        n=w.n,
        decomposition_target=w.decomposition_target,
        primes=list(w.primes),
        witness_order=str(w.witness_order),
        witness_count=str(w.witness_count),
        group_order=str(w.group_order),
        divides=w.divides,
    )
    return doc, EXIT_OK


def _report_json(r: feasibility.FeasibilityReport) -> dict[str, Any]:
    return {
        "n": r.n,
        "feasible": r.feasible,
        "realized_by": r.realized_by,
        "failed_rules": r.failed_rules,
        "checks": [{"rule": c.rule, "passed": c.passed, "detail": c.detail} for c in r.checks],
    }


def cmd_scan(maximum: int) -> tuple[dict[str, Any], int]:
    if maximum < 1:
        raise SpecError(f"--max must be positive, got {maximum}")
    reports = feasibility.scan(1, maximum)
    return _document("feasibility", max=maximum, records=[_report_json(r) for r in reports]), EXIT_OK


def cmd_probe(bound: int) -> tuple[dict[str, Any], int]:
    if bound < 1:
        raise SpecError(f"--bound must be positive, got {bound}")
    return _document("probe", bound=bound, candidates=feasibility.conjecture_probe(bound)), EXIT_OK


# rendering

def _csv(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_csv(doc: dict[str, Any]) -> str:
    kind = doc["kind"]
    if kind == "pos-report":
        return _csv(["order", "count"], [[e["order"], e["count"]] for e in doc["spectrum"]])
    if kind == "table-comparison":
        enumerated = {e["order"]: e["count"] for e in doc["enumerated"] or []}
        predicted = {e["order"]: e["count"] for e in doc["predicted"]}
        orders = sorted(set(enumerated) | set(predicted))
        return _csv(
            ["order", "predicted", "enumerated"],
            [[d, predicted.get(d, ""), enumerated.get(d, "")] for d in orders],
        )
    if kind == "witness":
        keys = ["n", "decomposition_target", "primes", "witness_order", "witness_count", "group_order", "divides"]
        row = [" ".join(map(str, doc[k])) if k == "primes" else doc[k] for k in keys]
        row = [str(v).lower() if isinstance(v, bool) else v for v in row]
        return _csv(keys, [row])
    if kind == "feasibility":
        return _csv(
            ["n", "feasible", "realized_by", "failed_rules"],
            [
                [r["n"], str(r["feasible"]).lower(), r["realized_by"] or "", " ".join(r["failed_rules"])]
                for r in doc["records"]
            ],
        )
    if kind == "probe":
        return _csv(["n"], [[n] for n in doc["candidates"]])
    raise ValueError(f"no CSV renderer for {kind!r}")


def render_pretty(doc: dict[str, Any]) -> str:
    kind = doc["kind"]
    lines = []
    if kind == "pos-report":
        lines.append(f"{doc['group']}  |G| = {doc['order']}  ({doc['method']})")
        lines += [f"  order {e['order']:>6}  count {e['count']}" for e in doc["spectrum"]]
        verdict = "POS" if doc["is_pos"] else "not POS"
        lines.append(f"verdict: {verdict}")
        for v in doc["violations"]:
            lines.append(f"  {v['count']} elements of order {v['order']} do not divide {doc['order']}")
    elif kind == "table-comparison":
        lines.append(f"{doc['family']}  |G| = {doc['order']}")
        enumerated = {e["order"]: e["count"] for e in doc["enumerated"] or []}
        for e in doc["predicted"]:
            lines.append(f"  order {e['order']:>8}  predicted {e['count']:>10}  enumerated {enumerated.get(e['order'], '-'):>10}")
        lines.append("match: " + ("skipped" if doc["match"] is None else str(doc["match"]).lower()))
    elif kind == "witness":
        lines.append(
            f"A_{doc['n']}: {doc['decomposition_target']} = {' + '.join(map(str, doc['primes']))}; "
            f"{doc['witness_count']} elements of order {doc['witness_order']}; "
            f"|A_{doc['n']}| = {doc['group_order']}; divides: {str(doc['divides']).lower()}"
        )
    elif kind == "feasibility":
        for r in doc["records"]:
            lines.append(f"{r['n']:>8}  {r['realized_by'] or '(not excluded)'}")
    elif kind == "probe":
        lines.append(f"candidates up to {doc['bound']}: {doc['candidates'] or 'none'}")
    return "\n".join(lines) + "\n"


def render(doc: dict[str, Any], fmt: str) -> str:
    if fmt == "csv":
        return render_csv(doc)
    if fmt == "pretty":
        return render_pretty(doc)
    return json.dumps(doc, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="max elements to enumerate")
    common.add_argument(
        "--seed-free", action="store_true", default=argparse.SUPPRESS,
        help="reserved; nothing here is random",
    )

    parser = argparse.ArgumentParser(prog="posgroups", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="order spectrum and POS verdict of a group")
    p.add_argument("group")
    p = sub.add_parser("table", parents=[common], help="predicted vs enumerated spectrum")
    p.add_argument("family")
    p = sub.add_parser("witness", parents=[common], help="non-POS witness for A_n")
    p.add_argument("n", type=int)
    p = sub.add_parser("scan", parents=[common], help="feasible POS-group orders up to --max")
    p.add_argument("--max", type=int, required=True, dest="maximum")
    p = sub.add_parser("probe", parents=[common], help="candidate counterexample orders for the order-42 conjecture")
    p.add_argument("--bound", type=int, default=10**6)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "json")
    budget = getattr(args, "budget", DEFAULT_BUDGET)
    if budget < 1:
        print("error: --budget must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "check":
            doc, code = cmd_check(args.group, budget)
        elif args.command == "table":
            doc, code = cmd_table(args.family, budget)
        elif args.command == "witness":
            doc, code = cmd_witness(args.n)
        elif args.command == "scan":
            doc, code = cmd_scan(args.maximum)
        else:
            doc, code = cmd_probe(args.bound)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    out.write(render(doc, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
