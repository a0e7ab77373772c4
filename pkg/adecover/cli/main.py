from __future__ import annotations

import argparse
import logging
import sys
import tomllib
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

from pydantic import ValidationError

from ..chisini.fiber import Uniqueness, evaluate_pair, fiber_intersections
from ..chisini.mcanonical import (
    chisini_criterion,
    iota_estimate,
    mcanonical_invariants,
    scan_mcanonical,
)
from ..config.general_config import GeneralConfig
from ..config.monodromy_config import MonodromyConfig
from ..config.report_config import ReportConfig
from ..config.resolve_config import ResolveConfig
from ..config.settings import OutputFormat
from ..core.ade import supported_types
from ..core.errors import BoundViolated, ComputationError, InputError
from ..cover.pipeline import run_germ_pipeline, run_pipeline
from ..cover.canonical import defect_closed_form
from ..cover.tables import expected_grouped_cycle
from ..invariants.profile import CoveringProfile
from ..invariants.plucker import plucker_dual_degree
from ..invariants.report import invariant_report
from ..local_models.identities import (
    pleat_normal_form_check,
    verify_f3_identity,
    verify_f6_identity,
)
from ..local_models.monodromy import CoveringTag, enumerate_cusp_monodromies
from ..logger import logger, set_level
from ..resolution.germ import CurveGerm
from ..resolution.resolve import normal_crossings_certificate, resolve
from .report import Report, emit, jsonable
from .schema import (
    GermDocument,
    MCanonicalDocument,
    MonodromyDocument,
    PairDocument,
    ProfileDocument,
    ScanDocument,
    load_document,
)

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2
EXIT_COMPUTATION = 3

Handler = Callable[[argparse.Namespace], tuple[Report, int]]


class _WarningCollector(logging.Handler):
    """コマンド実行中の WARNING 以上のログをレポートに載せる。"""

    def __init__(self) -> None:
        super().__init__(level=logging.WARNING)
        self.messages: list[str] = []

    def emit(self, record: logging.LogRecord) -> None:
        self.messages.append(record.getMessage())


def _germ_flags(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "type": " ".join(args.germ) if args.germ else None,
        "polynomial": args.polynomial,
        "extra_blowups": args.extra_blowups,
    }


def cmd_resolve(args: argparse.Namespace) -> tuple[Report, int]:
    doc = load_document(GermDocument, args.file, args.set, _germ_flags(args))
    germ = doc.germ()
    extra = doc.extra_blowups
    if extra is None:
        extra = ResolveConfig.extra_blowups

    record = resolve(germ, extra_blowups=extra)
    results = record.to_dict()
    results["certificate"] = normal_crossings_certificate(record)
    if extra:
        pipeline = run_germ_pipeline(germ, expected=doc.ade_type())
        results["type"] = str(pipeline.minimal.ade_type)
        results["delta"] = pipeline.delta

    return (
        Report(
            command="resolve",
            inputs=jsonable(doc.model_dump(exclude_none=True)),
            results=jsonable(results),
        ),
        EXIT_OK,
    )


def cmd_cycle(args: argparse.Namespace) -> tuple[Report, int]:
    doc = load_document(GermDocument, args.file, args.set, _germ_flags(args))
    expected = doc.ade_type()
    pipeline = run_germ_pipeline(doc.germ(), expected=expected)

    verdicts = {"formula_vs_solver": "agree"}
    code = EXIT_OK
    if expected is not None:
        table = expected_grouped_cycle(expected)
        matched = pipeline.grouped_multiset == table
        verdicts["table"] = "match" if matched else "mismatch"
        if not matched:
            code = EXIT_COMPUTATION

    return (
        Report(
            command="cycle",
            inputs=jsonable(doc.model_dump(exclude_none=True)),
            results=jsonable(pipeline.to_dict()),
            verdicts=verdicts,
        ),
        code,
    )


def cmd_invariants(args: argparse.Namespace) -> tuple[Report, int]:
    doc = load_document(ProfileDocument, args.file, args.set)
    rep = invariant_report(doc.to_profile())

    verdicts = {
        "degree_bounds": "within" if rep.bounds.within else "violated",
        "noether": "holds" if rep.noether else "fails",
    }
    if rep.bounds.equality:
        verdicts["bound_equality"] = "attained"

    return (
        Report(
            command="invariants",
            inputs=jsonable(doc.model_dump()),
            results=jsonable(rep.to_dict()),
            verdicts=verdicts,
        ),
        EXIT_OK if rep.bounds.within else EXIT_VERDICT,
    )


def cmd_chisini(args: argparse.Namespace) -> tuple[Report, int]:
    doc = load_document(PairDocument, args.file, args.set)
    pair = evaluate_pair(doc.to_classification())

    positive = all(r.positivity.holds for r in pair.reports)
    verdicts = {
        "uniqueness": str(pair.verdict),
        "positivity": "holds" if positive else "fails",
    }
    code = EXIT_OK if pair.verdict == Uniqueness.UNIQUE and positive else EXIT_VERDICT
    return (
        Report(
            command="chisini",
            inputs=jsonable(doc.model_dump()),
            results=jsonable(pair.to_dict()),
            verdicts=verdicts,
        ),
        code,
    )


def cmd_mcanonical(args: argparse.Namespace) -> tuple[Report, int]:
    flags = {"m": args.m, "k": args.k, "e": args.e}
    doc = load_document(MCanonicalDocument, args.file, args.set, flags)
    query = doc.validated()

    result = chisini_criterion(query.m, query.k, query.e)
    results: dict[str, Any] = {
        "invariants": mcanonical_invariants(query.m, query.k).to_dict(),
        "iota_estimate": iota_estimate(query.m, query.k, query.e),
        "criterion": result.to_dict(),
    }
    verdicts = {"criterion": str(result.verdict)}
    if result.verdict_e is not None:
        verdicts["criterion_with_e"] = str(result.verdict_e)

    return (
        Report(
            command="mcanonical",
            inputs=jsonable(doc.model_dump(exclude_none=True)),
            results=jsonable(results),
            verdicts=verdicts,
        ),
        EXIT_OK if result.holds else EXIT_VERDICT,
    )


def cmd_monodromy(args: argparse.Namespace) -> tuple[Report, int]:
    flags = {"N": args.N, "cap": args.cap, "shuffle_seed": args.shuffle_seed}
    doc = load_document(MonodromyDocument, args.file, args.set, flags)
    classes = enumerate_cusp_monodromies(
        doc.N, shuffle_seed=doc.shuffle_seed, cap=doc.cap
    )

    unexpected = [c for c in classes if c.tag == CoveringTag.UNEXPECTED]
    return (
        Report(
            command="monodromy",
            inputs=jsonable(doc.model_dump(exclude_none=True)),
            results=jsonable(
                {"count": len(classes), "classes": [c.to_dict() for c in classes]}
            ),
            verdicts={"classification": "unexpected" if unexpected else "ok"},
        ),
        EXIT_COMPUTATION if unexpected else EXIT_OK,
    )


def cmd_scan(args: argparse.Namespace) -> tuple[Report, int]:
    flags = {"m_max": args.m_max, "k_max": args.k_max, "e": args.e}
    doc = load_document(ScanDocument, args.file, args.set, flags)
    cells = scan_mcanonical(range(1, doc.m_max + 1), range(1, doc.k_max + 1), doc.e)

    fails = [f"{c.m},{c.k}" for c in cells if not c.holds]
    return (
        Report(
            command="scan",
            inputs=jsonable(doc.model_dump(exclude_none=True)),
            results=jsonable(
                {"cells": [c.to_dict() for c in cells], "failing": fails}
            ),
            verdicts={"scan": "all hold" if not fails else "some fail"},
        ),
        EXIT_VERDICT if fails else EXIT_OK,
    )


def _selftest_checks() -> list[tuple[str, bool]]:
    checks: list[tuple[str, bool]] = []
    types = supported_types(ReportConfig.selftest_max_a, ReportConfig.selftest_max_d)
    for t in types:
        result = run_pipeline(t)
        table = expected_grouped_cycle(t)
        checks.append((f"cycle {t}", result.grouped_multiset == table))
        checks.append((f"delta {t}", result.delta == defect_closed_form(t)))

    cusp = resolve(CurveGerm.from_text("y**2 - x**3"), extra_blowups=True)
    checks.append(
        (
            "cusp resolution",
            cusp.alphas == (2, 3, 6) and cusp.self_ints == (-3, -2, -1),
        )
    )

    cubic = invariant_report(CoveringProfile(N=3, d=6, c_p=6))
    numbers = (cubic.chern.k2, cubic.chern.e, cubic.chern.chi, cubic.g)
    cubic_ok = numbers == (3, 9, 1, 4) and cubic.bounds.equality
    checks.append(("cubic surface", cubic_ok))

    checks.append(("f3 identity", verify_f3_identity()["remainder"] == "0"))
    checks.append(("f6 identity", verify_f6_identity()["remainder"] == "0"))
    for k in (1, 2, 3):
        record = pleat_normal_form_check(k)
        checks.append((f"pleat k={k}", record["determinant"] == record["discriminant"]))

    nodal, cuspidal = plucker_dual_degree(3, 0, 0), plucker_dual_degree(3, 0, 1)
    checks.append(("plucker cubics", (nodal, cuspidal) == (4, 3)))

    inv = mcanonical_invariants(5, 1)
    fiber = fiber_intersections(inv.d_bar, inv.p_a, 9, inv.N)
    checks.append(("fiber product 5,1", fiber == (503, 5879, 9) and inv.t == 256))

    rhs = chisini_criterion(3, 1).rhs
    checks.append(("m-canonical 3,1", rhs == Fraction(173, 3)))
    boundary = chisini_criterion(2, 3).holds and not chisini_criterion(2, 2).holds
    checks.append(("m-canonical m=2 boundary", boundary))
    boundary = chisini_criterion(1, 10).holds and not chisini_criterion(1, 9).holds
    checks.append(("m-canonical m=1 boundary", boundary))
    grid = scan_mcanonical(range(3, 7), range(1, ReportConfig.selftest_max_k + 1))
    checks.append(("m-canonical m>=3 grid", all(r.holds for r in grid)))

    want = {2: [CoveringTag.F2], 3: [CoveringTag.F3], 6: [CoveringTag.F6]}
    for n in range(2, MonodromyConfig.cap + 1):
        tags = [c.tag for c in enumerate_cusp_monodromies(n)]
        checks.append((f"monodromy N={n}", tags == want.get(n, [])))

    return checks


def cmd_selftest(args: argparse.Namespace) -> tuple[Report, int]:
    checks = _selftest_checks()
    failed = [name for name, ok in checks if not ok]
    return (
        Report(
            command="selftest",
            results={"checks": {name: ok for name, ok in checks}, "failed": failed},
            verdicts={"selftest": "pass" if not failed else "fail"},
        ),
        EXIT_COMPUTATION if failed else EXIT_OK,
    )


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    p.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=default,
        help="output format (human or machine)",
    )
    p.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        type=str.upper,
        default=default,
    )


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--file", "-f", help="TOML input document")
    p.add_argument(
        "--set",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override a document value (repeatable)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=GeneralConfig.project_name,
        description="A-D-E double covers, covering invariants and Chisini checks",
    )
    parser.add_argument("--version", action="version", version=GeneralConfig.version)
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Handler, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        _add_common(p, suppress=True)
        _add_input(p)
        p.set_defaults(handler=handler)
        return p

    for name, handler, help in (
        ("resolve", cmd_resolve, "embedded resolution of a germ"),
        ("cycle", cmd_cycle, "canonical cycle and defect of a germ"),
    ):
        p = add(name, handler, help)
        p.add_argument("germ", nargs="*", help='ade type such as "A 2" or E8')
        p.add_argument("--polynomial", help="germ polynomial in x, y")
        p.add_argument(
            "--with-extra-blowups",
            dest="extra_blowups",
            action=argparse.BooleanOptionalAction,
            default=None,
        )

    add("invariants", cmd_invariants, "invariants of a covering profile")
    add("chisini", cmd_chisini, "fiber-product check for a pair of coverings")

    p = add("mcanonical", cmd_mcanonical, "criterion for m-canonical projections")
    p.add_argument("m", type=int, nargs="?")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("e", type=int, nargs="?")

    p = add("monodromy", cmd_monodromy, "cusp monodromy enumeration")
    p.add_argument("N", type=int, nargs="?")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--shuffle-seed", type=int, default=None)

    p = add("scan", cmd_scan, "grid of the m-canonical criterion")
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--e", type=int, default=None)

    add("selftest", cmd_selftest, "run the built-in fixture suite")
    return parser


def _run(handler: Handler, args: argparse.Namespace) -> tuple[Report, int]:
    try:
        return handler(args)
    except BoundViolated as e:
        logger.error(f"bound violated: {e}")
        return Report(command=args.command, verdicts={"error": str(e)}), EXIT_VERDICT
    except (InputError, ValidationError, tomllib.TOMLDecodeError, OSError) as e:
        logger.error(f"invalid input: {e}")
        return Report(command=args.command, verdicts={"error": str(e)}), EXIT_INPUT
    except ComputationError as e:
        logger.error(f"computation failed: {e}")
        return (
            Report(command=args.command, verdicts={"error": str(e)}),
            EXIT_COMPUTATION,
        )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = logger.level
    if args.log_level is not None:
        set_level(args.log_level)
    fmt = OutputFormat(args.format) if args.format else ReportConfig.output_format

    collector = _WarningCollector()
    logger.addHandler(collector)
    try:
        report, code = _run(args.handler, args)
    finally:
        logger.removeHandler(collector)
        logger.setLevel(level)

    if collector.messages:
        report = report.model_copy(
            update={"warnings": [*report.warnings, *collector.messages]}
        )

    sys.stdout.write(emit(report, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
