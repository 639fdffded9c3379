"""Subcommand handlers: each returns the JSON payload and renders it with --pretty"""
import logging
from typing import Callable, Dict, Optional

from diagrams import DiagramToolkit
from display_manager import DisplayManager
from errors import VerificationFailure
from invariants import (
    count_markings, invariant_coeff, invariant_result, resolve_pairing, run_lemma_suite,
    star_invariant, tilde_identity_check, verify_star, verify_universal, welschinger_specialization,
    blowup_cardinality_check,
)
from polygon import PolygonToolkit, blow_up_corner, load_polygon
from series import SMOOTH_VARIABLES, format_poly, poly_to_json, singular_variables, universal_P, universal_Q
from qpoly import SymLaurent
from run_logger import RunLogger

logger = logging.getLogger(__name__)


class CommandContext:
    """Shared state of one CLI invocation"""

    def __init__(self, args, display: Optional[DisplayManager] = None, run_logger: Optional[RunLogger] = None):
        self.args = args
        self.run_logger = run_logger
        self.budget = args.budget
        self.threads = args.threads
        self.display = display
        self._polygon: Optional[PolygonToolkit] = None
        # set before a VerificationFailure so the report is still printed
        self.payload: Optional[Dict] = None

    @property
    def polygon(self) -> PolygonToolkit:
        if self._polygon is None:
            self._polygon = PolygonToolkit(load_polygon(self.args.polygon))
            if self.run_logger:
                data = self._polygon.data
                self.run_logger.log_polygon(
                    data.vertices, {"a": data.a, "y": data.y, "chi": data.chi, "interior": data.interior}
                )
        return self._polygon


def cmd_info(ctx: CommandContext) -> Dict:
    payload = ctx.polygon.data.model_dump(mode="json")
    if ctx.display:
        ctx.display.show_polygon(payload)
    return payload


def cmd_diagrams(ctx: CommandContext) -> Dict:
    data = ctx.polygon.data
    classes = DiagramToolkit(data, ctx.budget).classes(ctx.args.max_codegree)
    rows = []
    for c in classes:
        row = c.to_json()
        if ctx.args.markings:
            row["markings"] = count_markings(c)
        rows.append(row)
    if ctx.run_logger:
        engine = "ExhaustiveEnumerator" if ctx.args.max_codegree is None else "FloorSweep"
        ctx.run_logger.log_enumeration(engine, len(rows), ctx.args.max_codegree)
    if ctx.display:
        ctx.display.show_diagrams(rows)
    return {"polygon": data.vertices, "max_codegree": ctx.args.max_codegree, "count": len(rows), "classes": rows}


def cmd_invariant(ctx: CommandContext) -> Dict:
    data, args = ctx.polygon.data, ctx.args
    if args.coeff is not None:
        S = resolve_pairing(data, args.s, args.pairing)
        value = invariant_coeff(data, args.s, args.coeff, S, ctx.budget, ctx.threads)
        if ctx.display:
            ctx.display.show_report(f"<G>_{args.coeff}", {"s": args.s, "pairing": S.to_json(), "coefficient": value})
        return {"polygon": data.vertices, "s": args.s, "pairing": S.to_json(), "i": args.coeff, "coefficient": value}

    result = invariant_result(data, args.s, args.pairing, ctx.budget, ctx.threads)
    if ctx.display:
        G = SymLaurent.from_json(result.G)
        ctx.display.show_polynomial(f"G(s={args.s})", G.pretty(), footer=f"degree {result.degree}")
    return result.model_dump(mode="json")


def cmd_star(ctx: CommandContext) -> Dict:
    data, args = ctx.polygon.data, ctx.args
    S = resolve_pairing(data, args.s, args.pairing)
    star = star_invariant(data, args.s, S, budget=ctx.budget, threads=ctx.threads)
    if ctx.display:
        ctx.display.show_polynomial(f"G*(s={args.s})", star.pretty())
    return {"polygon": data.vertices, "s": args.s, "pairing": S.to_json(), "G_star": star.to_json()}


def cmd_tilde(ctx: CommandContext) -> Dict:
    report = tilde_identity_check(ctx.polygon.data, ctx.args.s, budget=ctx.budget, threads=ctx.threads)
    if ctx.display:
        ctx.display.show_report("tilde identity", report.model_dump(), ok=report.equal)
    ctx.payload = report.model_dump(mode="json")
    if not report.equal:
        raise VerificationFailure(f"tilde identity fails at s={ctx.args.s}")
    return report.model_dump(mode="json")


def cmd_universal(ctx: CommandContext) -> Dict:
    i = ctx.args.i
    if ctx.args.singular:
        family, variables, polys = "Q", singular_variables(i), universal_Q(i)
    else:
        family, variables, polys = "P", SMOOTH_VARIABLES, universal_P(i)
    entries = [
        {"i": k, "formula": format_poly(p), "display": f"{family}_{k} = {format_poly(p)}", "terms": poly_to_json(p)}
        for k, p in enumerate(polys)
    ]
    if ctx.display:
        ctx.display.show_formulas(f"{family}_0 .. {family}_{i}", [e["display"] for e in entries])
    return {"family": family, "variables": list(variables), "polynomials": entries}


def cmd_verify(ctx: CommandContext) -> Dict:
    data, args = ctx.polygon.data, ctx.args
    report = verify_universal(data, args.s, args.i, ctx.budget, ctx.threads)
    payload = report.model_dump(mode="json")
    payload["consistent"] = report.consistent
    if ctx.run_logger:
        ctx.run_logger.log_verification(
            f"<G>_{args.i} s={args.s}", report.universal, report.enumerated, report.hypotheses_hold
        )
    if args.star:
        star = verify_star(data, args.s, ctx.budget, ctx.threads)
        payload["star"] = star.model_dump(mode="json")
    if ctx.display:
        ctx.display.show_report(f"<G>_{args.i} against {report.polynomial}_{args.i}", payload, ok=report.consistent)
    ctx.payload = payload
    if not report.consistent or (args.star and not payload["star"]["equal"]):
        raise VerificationFailure(
            f"<G>_{args.i} = {report.enumerated} differs from {report.polynomial}_{args.i} = {report.universal}"
            if not report.consistent else "G* differs from the denominator-free universal series"
        )
    return payload


def cmd_lemmas(ctx: CommandContext) -> Dict:
    results = [r.model_dump(mode="json") for r in run_lemma_suite(ctx.args.max_i)]
    if ctx.display:
        ctx.display.show_lemmas(results)
    payload = {"results": results, "passed": all(r["passed"] for r in results)}
    ctx.payload = payload
    if not payload["passed"]:
        failed = [r["name"] for r in results if not r["passed"]]
        raise VerificationFailure(f"property suites failed: {', '.join(failed)}")
    return payload


def cmd_blowup(ctx: CommandContext) -> Dict:
    args = ctx.args
    polygon = ctx.polygon.polygon
    blown = blow_up_corner(polygon, args.b, args.m)
    payload = {"original": polygon.to_json(), "blown_up": blown.to_json(), "b": args.b, "m": args.m}
    if args.i is not None:
        report = blowup_cardinality_check(polygon, args.b, args.m, args.i, ctx.budget)
        payload["cardinality"] = report.model_dump(mode="json")
    if ctx.display:
        ctx.display.show_report("corner cut", payload, ok=payload.get("cardinality", {}).get("equal", True))
    return payload


def cmd_welschinger(ctx: CommandContext) -> Dict:
    data, s = ctx.polygon.data, ctx.args.s
    complex_count, real_count = welschinger_specialization(data, s, budget=ctx.budget, threads=ctx.threads)
    payload = {"polygon": data.vertices, "s": s, "q=1": complex_count, "q=-1": real_count}
    if ctx.display:
        ctx.display.show_report(f"specializations (s={s})", payload)
    return payload


COMMANDS: Dict[str, Callable[[CommandContext], Dict]] = {
    "info": cmd_info,
    "diagrams": cmd_diagrams,
    "invariant": cmd_invariant,
    "star": cmd_star,
    "tilde": cmd_tilde,
    "universal": cmd_universal,
    "verify": cmd_verify,
    "lemmas": cmd_lemmas,
    "blowup": cmd_blowup,
    "welschinger": cmd_welschinger,
}
