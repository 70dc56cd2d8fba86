"""Command-line front end.

Every subcommand builds its poset, runs its checks and prints a report; the
exit status is 0 exactly when every check passed.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import config
from .errors import ParamRange, PosetError, QuiverError
from .fq import PrimeField
from .intervals import (
    Interval,
    alternating_chains,
    alternating_count_identity,
    alternating_even_width,
    alternating_width,
    antichain_alternating,
    antichain_alternating_even,
    antichain_linear,
    antichain_zigzag,
    chain_decomposition_alternating,
    chain_decomposition_alternating_even,
    chain_decomposition_zigzag,
    chains_linear,
    interval_poset,
    zigzag_width,
)
from .pointed import enumerate_pointed_subreps, pointed_star_sperner, star_indecomposable, verify_chain_product_iso
from .poset import (
    ChainDecomposition,
    FinitePoset,
    chain_product,
    check_grading,
    dilworth_width,
    hasse_dot,
    is_sperner,
    max_level,
    poset_to_json,
    scd_chain_product,
    verify_antichain,
    verify_chain_decomposition,
    verify_scd,
)
from .quiver import PathOrientation, StarShape, path_quiver, sources_and_sinks
from .stanley import (
    commutator_diagonal,
    down_matrix,
    level_ranks,
    stanley_certificate,
    up_matrix,
    verify_commutator,
    verify_positivity_argument,
)
from .subrep import check_cover_is_simple_quotient, flag_label, subrep_poset

SCHEMA = 1
MAX_INTERVAL_N = 12


@dataclass
class Verdict:
    check: str
    passed: bool
    witness: Any = None


@dataclass
class RunReport:
    command: list[str]
    verdicts: list[Verdict] = field(default_factory=list)
    facts: dict[str, Any] = field(default_factory=dict)
    timings: dict[str, float] | None = None

    def check(self, name: str, passed: bool, witness: Any = None) -> bool:
        self.verdicts.append(Verdict(name, bool(passed), None if passed else witness))
        return passed

    def expect_equal(self, name: str, got: Any, expected: Any) -> bool:
        return self.check(name, got == expected, {"expected": expected, "got": got})

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA,
            "command": self.command,
            "facts": self.facts,
            "verdicts": [{"check": v.check, "pass": v.passed, "witness": v.witness} for v in self.verdicts],
            "ok": self.ok,
        }
        if self.timings is not None:
            out["timings"] = self.timings
        return out

    def render(self) -> str:
        lines = ["$ quiversperner " + " ".join(self.command)]
        for key, value in self.facts.items():
            lines.append(f"  {key}: {value}")
        for v in self.verdicts:
            tail = "" if v.passed else f"  witness={json.dumps(v.witness, sort_keys=True)}"
            lines.append(f"{'PASS' if v.passed else 'FAIL'} {v.check}{tail}")
        if self.timings is not None:
            for key, value in self.timings.items():
                lines.append(f"  time[{key}]: {value:.3f}s")
        lines.append(f"RESULT: {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"


# -- shared checks ----------------------------------------------------------------

def _labels(p: FinitePoset, idx) -> list[str]:
    return sorted((str(p.elements[i]) for i in idx), key=_interval_sort_key)


def _interval_sort_key(s: str):
    nums = s.strip("[]").split(",")
    try:
        a, b = int(nums[0]), int(nums[-1])
        return (b - a, a, s)
    except ValueError:
        return (0, 0, s)


def _width_checks(report: RunReport, p: FinitePoset, expected: int | None, antichain=None, decomposition=None):
    res = dilworth_width(p)
    report.facts["elements"] = len(p)
    report.facts["width"] = res.width
    report.check("dilworth witness is an antichain", verify_antichain(p, [p.elements[i] for i in res.witness]))
    report.check("dilworth cover is a chain decomposition", verify_chain_decomposition(p, res.cover))
    if expected is not None:
        report.expect_equal("width matches closed form", res.width, expected)
    if antichain is not None:
        members = sorted(antichain)
        report.check("closed-form set is an antichain", verify_antichain(p, members), [str(x) for x in members])
        report.expect_equal("closed-form antichain is maximum", len(members), res.width)
    if decomposition is not None:
        report.check("closed-form chains form a decomposition", verify_chain_decomposition(p, decomposition))
        report.expect_equal("closed-form chain count equals width", len(decomposition), res.width)
        if antichain is not None:
            tops = sorted(str(p.elements[t]) for t in decomposition.tops())
            report.expect_equal(
                "each antichain member tops exactly one chain", tops, sorted(str(x) for x in antichain)
            )
    return res


def _orientation_from_args(args) -> tuple[PathOrientation, str, int | None]:
    n = args.n
    if n < 1 or n > args.max_n:
        raise ParamRange(f"--n must lie in 1..{args.max_n}")
    if args.orient is not None:
        return PathOrientation(args.orient), "custom", None
    if args.zigzag is not None:
        return PathOrientation.zigzag(n, args.zigzag), "zigzag", args.zigzag
    if args.alternating:
        return PathOrientation.alternating(n), "alternating", None
    return PathOrientation.linear(n), "linear", None


def _closed_form(n: int, preset: str, s: int | None):
    """Closed-form (expected width, antichain, decomposition) for a preset orientation, if any."""
    if preset == "linear":
        return n, antichain_linear(n), ("chains", chains_linear(n))
    if preset == "zigzag":
        return zigzag_width(n, s), antichain_zigzag(n, s), ("indices", chain_decomposition_zigzag(n, s))
    if preset == "alternating" and n >= 3 and n % 2 == 1:
        m = (n - 1) // 2
        return alternating_width(m), antichain_alternating(m), ("indices", chain_decomposition_alternating(m))
    if preset == "alternating" and n >= 4 and n % 2 == 0:
        m = n // 2
        return alternating_even_width(m), antichain_alternating_even(m), None
    return None, None, None


def _emit(args, p: FinitePoset, highlight, label=str, name="poset") -> None:
    fmt = getattr(args, "emit", None) or getattr(args, "format", None)
    if not fmt:
        return
    if fmt == "dot":
        text = hasse_dot(p, highlight, label=label, name=name)
    else:
        text = json.dumps(poset_to_json(p, label), sort_keys=True) + "\n"
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------

def cmd_interval(args, report: RunReport) -> None:
    orient, preset, s = _orientation_from_args(args)
    q = path_quiver(args.n, orient)
    ip = interval_poset(q)
    p = ip.poset
    sources, sinks = sources_and_sinks(q)
    report.facts.update(orientation=str(orient) or "-", preset=preset, sources=sorted(sources), sinks=sorted(sinks))
    expected, antichain, decomp = _closed_form(args.n, preset, s)
    if decomp is not None:
        decomp = ip.decomposition(decomp[1]) if decomp[0] == "chains" else decomp[1]
    res = _width_checks(report, p, expected, antichain, decomp)
    report.facts["antichain"] = _labels(p, res.witness)
    if args.emit:
        mode = args.highlight
        if mode == "closed-form" and antichain is not None:
            mark = antichain
        elif mode in ("closed-form", "dilworth"):
            mark = [p.elements[i] for i in res.witness]
        else:
            mark = []
        _emit(args, p, mark, name=f"A{args.n} {orient}")


def cmd_subrep(args, report: RunReport) -> None:
    sp = subrep_poset(args.a, args.q, max_elements=args.max_elements)
    p = sp.poset
    report.facts.update(a=args.a, q=args.q, level_sizes=p.level_sizes())
    ok, witness = check_grading(p)
    report.check("total dimension is a grading", ok, [str(x) for x in witness or ()])
    report.check("covers have one-dimensional quotients", check_cover_is_simple_quotient(sp))
    level, size = max_level(p)
    res = _width_checks(report, p, size)
    report.facts["max_level"] = level
    if args.emit:
        mark = [p.elements[i] for i in range(len(p)) if p.grading[i] == args.a]
        _emit(args, p, mark, label=flag_label, name=f"subrep P1^{args.a} over F{args.q}")


def cmd_stanley(args, report: RunReport) -> None:
    sp = subrep_poset(args.a, args.q, max_elements=args.max_elements)
    p = sp.poset
    a = args.a
    report.facts.update(a=a, q=args.q, level_sizes=p.level_sizes())
    ranks = []
    for i, size, ru, rd in level_ranks(p):
        ranks.append({"level": i, "size": size, "rank_U": ru, "rank_D": rd})
        diag = sorted(set(commutator_diagonal(sp, i)))
        report.facts[f"commutator_diagonal[{i}]"] = diag
        report.check(f"commutator identity at level {i}", verify_commutator(a, args.q, i, sp))
        if i < a:
            report.expect_equal(f"U_{i} injective", ru, size)
        if i > a:
            report.expect_equal(f"D_{i} injective", rd, size)
    report.facts["ranks"] = ranks
    report.check("diagonal positivity below and above the middle", verify_positivity_argument(a, args.q, sp))
    cert = stanley_certificate(p, a)
    report.check(f"Stanley certificate for level {a}", cert)
    report.expect_equal("width equals middle level", dilworth_width(p).width, p.level_sizes()[a])
    if args.dump_matrix is not None:
        i = args.dump_matrix
        report.facts[f"U_{i}"] = up_matrix(p, i).to_json()
        report.facts[f"D_{i}"] = down_matrix(p, i).to_json()


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise ParamRange(f"expected comma-separated integers, got {text!r}") from None


def cmd_pointed_star(args, report: RunReport) -> None:
    rays = _parse_ints(args.rays)
    role = "sink" if args.sink_center else "source"
    shape = StarShape(rays, role)
    p = enumerate_pointed_subreps(star_indecomposable(shape))
    report.facts.update(rays=list(rays), center=role, elements=len(p), level_sizes=p.level_sizes())
    checks = {c.strip() for c in args.check.split(",") if c.strip()}
    if role == "sink":
        # exploratory: report what we measure, assert nothing
        sperner, level = is_sperner(p)
        report.facts.update(width=dilworth_width(p).width, sperner=sperner, sperner_level=level)
        return
    if "iso" in checks and shape.r >= 2:
        report.check("P_X minus top is isomorphic to the chain product", verify_chain_product_iso(shape))
    sperner, width = pointed_star_sperner(shape)
    report.facts["width"] = width
    if "sperner" in checks:
        report.check("subrepresentation poset is Sperner", sperner)
        report.check("agrees with direct Sperner test", is_sperner(p)[0] == sperner)
    if "width" in checks:
        expected = 1 if shape.r < 2 else max_level(chain_product(rays))[1]
        report.expect_equal("width equals chain-product width", width, expected)


def cmd_chain_product(args, report: RunReport) -> None:
    ks = _parse_ints(args.k)
    p = chain_product(ks, max_elements=args.max_elements)
    scd = scd_chain_product(ks, max_elements=args.max_elements)
    level, size = max_level(p)
    report.facts.update(k=list(ks), elements=len(p), level_sizes=p.level_sizes(), chains=len(scd))
    report.check("hook-peeling decomposition is symmetric", verify_scd(p, scd))
    report.expect_equal("chain count equals largest level", len(scd), size)
    if len(p) <= args.dilworth_limit:
        report.expect_equal("chain count equals Dilworth width", dilworth_width(p).width, len(scd))
    if args.emit:
        _emit(args, p, [p.elements[i] for i in range(len(p)) if p.grading[i] == level], label=_tuple_label)


def _tuple_label(t) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def cmd_verify(args, report: RunReport) -> None:
    thm = args.theorem
    if thm == "linear":
        args.orient, args.zigzag, args.alternating = None, None, False
        _need(args, "n")
        cmd_interval(args, report)
    elif thm == "zigzag":
        _need(args, "n", "s")
        if not 1 <= args.s <= args.n:
            raise ParamRange("--s must lie in 1..n")
        args.orient, args.zigzag, args.alternating = None, args.s, False
        cmd_interval(args, report)
        report.facts["chains"] = len(chain_decomposition_zigzag(args.n, args.s))
    elif thm == "alternating":
        _need(args, "m")
        m = args.m
        args.n = 2 * m + 1
        args.orient, args.zigzag, args.alternating = None, None, True
        cmd_interval(args, report)
        lhs, rhs = alternating_count_identity(m)
        report.expect_equal("element count identity", rhs, lhs)
        report.facts["chains"] = len(alternating_chains(m))
    elif thm == "alternating_even":
        _need(args, "m")
        m = args.m
        n = 2 * m
        if n > args.max_n:
            raise ParamRange(f"2m must be at most {args.max_n}")
        ip = interval_poset(path_quiver(n, PathOrientation.alternating(n)))
        p = ip.poset
        expected = alternating_even_width(m)
        antichain = None
        if m >= 2:
            antichain = antichain_alternating_even(m)
        else:
            report.check("closed-form antichain is defined", False, {"m": m, "reason": "needs m >= 2"})
        _width_checks(report, p, expected, antichain)
        report.check(
            "truncated chains form a decomposition",
            verify_chain_decomposition(p, chain_decomposition_alternating_even(m)),
        )
    elif thm == "a2_sperner":
        _need(args, "q", "a")
        PrimeField(args.q)
        cmd_subrep(args, report)
        cmd_stanley(args, report)
    elif thm == "pointed_star":
        _need(args, "rays")
        args.check, args.sink_center = "iso,sperner,width", False
        cmd_pointed_star(args, report)
    elif thm == "chain_product":
        _need(args, "k")
        cmd_chain_product(args, report)


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n, None) is None]
    if missing:
        what = getattr(args, "theorem", None) or getattr(args, "kind", None) or args.command
        raise ParamRange(f"{what} needs {' '.join(missing)}")


def cmd_emit(args, report: RunReport) -> None:
    args.emit = args.format
    if args.kind == "interval":
        _need(args, "n")
        cmd_interval(args, report)
    elif args.kind == "subrep":
        _need(args, "q", "a")
        cmd_subrep(args, report)
    elif args.kind == "chain-product":
        _need(args, "k")
        cmd_chain_product(args, report)
    elif args.kind == "pointed-star":
        _need(args, "rays")
        rays = _parse_ints(args.rays)
        shape = StarShape(rays, "sink" if args.sink_center else "source")
        p = enumerate_pointed_subreps(star_indecomposable(shape))
        report.facts.update(rays=list(rays), elements=len(p))
        _emit(args, p, [])


# -- argument parsing ------------------------------------------------------------

def _add_interval_args(sp: argparse.ArgumentParser, required_n: bool = True) -> None:
    sp.add_argument("--n", type=int, required=required_n, help="number of vertices")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--orient", help="edge directions, e.g. '<<>>>'; '<' is the arrow (i+1)->i")
    group.add_argument("--linear", action="store_true", help="sink at 1, source at n (default)")
    group.add_argument("--zigzag", type=int, metavar="S", help="unique source at vertex S")
    group.add_argument("--alternating", action="store_true", help="alternating, sink at vertex 1")
    sp.add_argument("--highlight", choices=["closed-form", "dilworth", "none"], default="closed-form")
    sp.add_argument("--max-n", type=int, default=MAX_INTERVAL_N)


def _add_output(sp: argparse.ArgumentParser, flag: str = "--emit") -> None:
    sp.add_argument(flag, choices=["dot", "json"], default=None)
    sp.add_argument("-o", "--output", help="write the emitted graph here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings (not byte-stable)")
    common.add_argument("--max-elements", type=int, default=None, help=f"element cap (env {config.ENV_VAR})")

    parser = argparse.ArgumentParser(prog="quiversperner", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("interval", parents=[common], help="monomorphism poset of a type-A quiver")
    _add_interval_args(sp)
    _add_output(sp)
    sp.set_defaults(func=cmd_interval)

    sp = sub.add_parser("subrep", parents=[common], help="subrepresentation poset of P_1^a over F_q")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    _add_output(sp)
    sp.set_defaults(func=cmd_subrep)

    sp = sub.add_parser("stanley", parents=[common], help="up/down operators and the Sperner certificate")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--dump-matrix", type=int, metavar="I", help="include U_I and D_I as exact matrices")
    sp.set_defaults(func=cmd_stanley)

    sp = sub.add_parser("pointed-star", parents=[common], help="pointed-set star representations")
    sp.add_argument("--rays", required=True, help="ray lengths, e.g. 2,3")
    sp.add_argument("--check", default="iso,sperner,width")
    sp.add_argument("--sink-center", action="store_true", help="exploratory: center is a sink; nothing asserted")
    sp.set_defaults(func=cmd_pointed_star)

    sp = sub.add_parser("chain-product", parents=[common], help="chain products and symmetric chains")
    sp.add_argument("--k", required=True, help="chain lengths, e.g. 2,3")
    sp.add_argument("--dilworth-limit", type=int, default=2000, help="skip the matching cross-check above this size")
    _add_output(sp)
    sp.set_defaults(func=cmd_chain_product)

    sp = sub.add_parser("verify", parents=[common], help="check one of the closed-form results end to end")
    sp.add_argument(
        "theorem",
        choices=["linear", "zigzag", "alternating", "alternating_even", "a2_sperner", "pointed_star", "chain_product"],
    )
    sp.add_argument("--n", type=int)
    sp.add_argument("--s", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--rays")
    sp.add_argument("--k")
    sp.add_argument("--highlight", default="none")
    sp.add_argument("--max-n", type=int, default=MAX_INTERVAL_N)
    sp.add_argument("--dilworth-limit", type=int, default=2000)
    sp.set_defaults(func=cmd_verify, emit=None, dump_matrix=None)

    sp = sub.add_parser("emit", parents=[common], help="write a Hasse diagram (DOT) or poset JSON")
    sp.add_argument("kind", choices=["interval", "subrep", "chain-product", "pointed-star"])
    _add_interval_args(sp, required_n=False)
    sp.add_argument("--q", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--k")
    sp.add_argument("--rays")
    sp.add_argument("--sink-center", action="store_true")
    sp.add_argument("--dilworth-limit", type=int, default=2000)
    sp.add_argument("--format", choices=["dot", "json"], default="dot")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_emit)
    return parser


def run(argv: list[str], out=None) -> tuple[int, RunReport]:
    """Parse ``argv``, run the subcommand, write the report; returns ``(exit_code, report)``."""
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    report = RunReport(list(argv))
    started = time.perf_counter()
    try:
        args.func(args, report)
    except (ParamRange, QuiverError, PosetError, ValueError) as exc:
        report.check("parameters accepted", False, f"{type(exc).__name__}: {exc}")
    if args.timings:
        report.timings = {"total": time.perf_counter() - started}
    # emitted graphs go to stdout only when no file was requested; keep the report on stderr then
    stream = out
    if getattr(args, "emit", None) and not getattr(args, "output", None):
        stream = sys.stderr
    if args.json:
        stream.write(json.dumps(report.to_json(), sort_keys=True) + "\n")
    else:
        stream.write(report.render())
    return (0 if report.ok else 1), report


def main(argv: list[str] | None = None) -> int:
    code, _ = run(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
