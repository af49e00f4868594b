"""Command-line front end.

Every subcommand prints one JSON object on stdout (sorted keys, canonical
polynomial text) with ``"schema": 1``.  Exit codes: 0 computed, 1 usage or
parse error, 2 resource bound exceeded, 3 degenerate-input convention
applied.  Errors are reported as JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, fields
from typing import Sequence

from . import __version__
from .errors import (
    CharPError,
    DegenerateInput,
    DegenerateInputWarning,
    ParseError,
    ResourceBoundExceeded,
)
from .fsing import (
    colon_frobenius_experiment,
    cyclic_fpurity_spot_check,
    fedder_check,
    tight_closure_verify,
    tight_witness_search,
)
from .groebner import (
    Ideal,
    colon_ideal,
    ideal_intersect,
    ideal_member,
    lift_to_ambient,
    quotient_colon,
    quotient_member,
)
from .invariants import (
    CyclicAction,
    generates_up_to,
    hilbert_burnside,
    hilbert_linear,
    is_invariant,
    orbit_sum_basis,
)
from .perfection import Found, frobenius_closure_member, perf_arith, perf_colon, perf_gcd
from .polyarith import RingCtx, monomial_str
from .textio import RingDescriptor, format_perf, parse_ideal, parse_perf, parse_poly

SCHEMA = 1

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_DEGENERATE = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    max_degree: int = 600
    max_level: int = 6
    closure_bound: int = 2
    witness_degree_cap: int = 20
    seed: int = 0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            lowest = 0 if f.name == "seed" else 1
            if not isinstance(value, int) or value < lowest:
                raise ParseError(f"{f.name} must be an integer >= {lowest}, got {value!r}")


class UsageError(CharPError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(payload: dict, stream) -> None:
    stream.write(json.dumps(payload, sort_keys=True) + "\n")


class _Session:
    """Resolved flags + config for a single invocation."""

    def __init__(self, args: argparse.Namespace, config: dict):
        self.args = args
        self.config = config
        cfg = {}
        for f in fields(RunConfig):
            v = getattr(args, f.name, None)
            if v is None:
                v = config.get(f.name, f.default)
            cfg[f.name] = v
        self.run = RunConfig(**cfg)
        self.degenerate = False
        ring_text = self.opt("ring")
        if ring_text is None:
            raise UsageError("--ring is required")
        self.desc = RingDescriptor.parse(
            ring_text, order=self.opt("order") or "grevlex", modulus=self.opt("modulus")
        )
        self.ctx: RingCtx = self.desc.to_ctx(self.run.max_degree)

    def opt(self, name: str, default=None):
        v = getattr(self.args, name, None)
        if v is None:
            v = self.config.get(name, default)
        return v

    def need(self, name: str) -> str:
        v = self.opt(name)
        if v is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")
        return v

    def poly(self, name: str):
        return parse_poly(self.need(name), self.ctx)

    def ideal(self, name: str = "ideal") -> Ideal:
        return parse_ideal(self.need(name), self.ctx)

    def perf(self, name: str):
        return parse_perf(self.need(name), self.ctx)


# -- subcommands --------------------------------------------------------------


def _cmd_fedder(s: _Session) -> dict:
    res = fedder_check(s.ctx, s.opt("method") or "auto")
    return {
        "f_pure": res.f_pure,
        "witness_monomial": None if res.witness is None else monomial_str(res.witness, s.ctx.vars),
        "coefficient": res.coefficient,
        "method": res.method,
    }


def _cmd_perf_gcd(s: _Session) -> dict:
    return {"gcd": format_perf(perf_gcd(s.perf("a"), s.perf("b"), s.run.max_level))}


def _cmd_perf_colon(s: _Session) -> dict:
    a, b = s.perf("a"), s.perf("b")
    s.degenerate = b.is_zero()
    return {"generator": format_perf(perf_colon(a, b, s.run.max_level))}


def _cmd_perf_eq(s: _Session) -> dict:
    a, b = s.perf("a"), s.perf("b")
    return {"equal": a == b, "a": format_perf(a), "b": format_perf(b)}


def _cmd_perf_arith(s: _Session) -> dict:
    op = s.opt("op") or "add"
    return {"result": format_perf(perf_arith(s.perf("a"), s.perf("b"), op, s.run.max_level))}


def _closure_payload(res) -> dict:
    if isinstance(res, Found):
        return {"verdict": "Found", "e": res.e}
    return {"verdict": "NotFoundUpTo", "bound": res.bound}


def _cmd_fclosure(s: _Session) -> dict:
    E = s.run.closure_bound if s.opt("bound") is None else int(s.opt("bound"))
    res = frobenius_closure_member(s.poly("f"), s.ideal(), s.ctx, E)
    return _closure_payload(res)


def _cmd_tclose_verify(s: _Session) -> dict:
    E = s.run.closure_bound if s.opt("bound") is None else int(s.opt("bound"))
    ev = tight_closure_verify(s.poly("c"), s.poly("f"), s.ideal(), s.ctx, E)
    return {"evidence": ev.to_dict()}


def _cmd_tclose_search(s: _Session) -> dict:
    E = s.run.closure_bound if s.opt("bound") is None else int(s.opt("bound"))
    D = s.run.witness_degree_cap if s.opt("degree_cap") is None else int(s.opt("degree_cap"))
    ev = tight_witness_search(s.poly("f"), s.ideal(), s.ctx, E, D)
    return {"evidence": ev.to_dict(), "candidates_tried": ev.candidates_tried, "degree_cap": D}


def _cmd_colon(s: _Session) -> dict:
    I, f = s.ideal(), s.poly("f")
    s.degenerate = f.is_zero()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateInputWarning)
        J = quotient_colon(I, f, s.ctx) if s.ctx.modulus is not None else colon_ideal(I, f)
    return {"generators": [str(g) for g in J.gens], "basis": [str(g) for g in J.gb]}


def _cmd_intersect(s: _Session) -> dict:
    I, J = s.ideal(), s.ideal("ideal2")
    if s.ctx.modulus is not None:
        I, J = lift_to_ambient(I, s.ctx), lift_to_ambient(J, s.ctx)
    K = ideal_intersect(I, J)
    return {"generators": [str(g) for g in K.gens], "basis": [str(g) for g in K.gb]}


def _cmd_member(s: _Session) -> dict:
    I, f = s.ideal(), s.poly("f")
    ok = quotient_member(f, I, s.ctx) if s.ctx.modulus is not None else ideal_member(f, I)
    return {"member": ok}


def _cmd_gb(s: _Session) -> dict:
    I = s.ideal()
    if s.ctx.modulus is not None:
        I = lift_to_ambient(I, s.ctx)
    return {"basis": [str(g) for g in I.gb]}


def _action(s: _Session) -> CyclicAction:
    return CyclicAction.shift(s.ctx.ambient)


def _cmd_inv_hilbert(s: _Session) -> dict:
    act, d = _action(s), int(s.need("degree"))
    return {
        "degree": d,
        "burnside": hilbert_burnside(act, d),
        "linear": hilbert_linear(act, d),
        "orbits": len(orbit_sum_basis(act, d)),
    }


def _cmd_inv_orbits(s: _Session) -> dict:
    d = int(s.need("degree"))
    return {"degree": d, "orbit_sums": [str(f) for f in orbit_sum_basis(_action(s), d)]}


def _cmd_inv_check(s: _Session) -> dict:
    return {"invariant": is_invariant(s.poly("f"), _action(s))}


def _cmd_inv_generates(s: _Session) -> dict:
    text = s.opt("gens") or ""
    gens = [parse_poly(t, s.ctx) for t in text.split(",") if t.strip()]
    return generates_up_to(_action(s), gens, int(s.need("degree"))).to_dict()


def _cmd_remark(s: _Session) -> dict:
    rep = colon_frobenius_experiment(
        s.ctx,
        trials=int(s.opt("trials", 100)),
        seed=s.run.seed,
        e=int(s.opt("e", 1)),
        max_degree=int(s.opt("poly_degree", 2 if s.opt("exhaustive") else 3)),
        exhaustive=bool(s.opt("exhaustive")),
    )
    return rep.to_dict()


def _cmd_cyclic_spot(s: _Session) -> dict:
    E = s.run.closure_bound if s.opt("bound") is None else int(s.opt("bound"))
    ideals = [parse_ideal(t, s.ctx) for t in s.need("ideals").split(";")]
    rep = cyclic_fpurity_spot_check(s.ctx, ideals, E, int(s.opt("monomial_degree", 3)))
    return rep.to_dict()


COMMANDS = {
    "fedder": (_cmd_fedder, "Fedder's F-purity criterion for the hypersurface"),
    "perf-gcd": (_cmd_perf_gcd, "gcd in the perfection"),
    "perf-colon": (_cmd_perf_colon, "generator of (a : b) in the perfection"),
    "perf-eq": (_cmd_perf_eq, "equality of perfection elements"),
    "perf-arith": (_cmd_perf_arith, "add/sub/mul in the perfection"),
    "fclosure": (_cmd_fclosure, "bounded Frobenius-closure membership"),
    "tclose-verify": (_cmd_tclose_verify, "verify a tight-closure witness"),
    "tclose-search": (_cmd_tclose_search, "search for a tight-closure witness"),
    "colon": (_cmd_colon, "colon ideal (I : f)"),
    "intersect": (_cmd_intersect, "intersection of two ideals"),
    "member": (_cmd_member, "ideal membership"),
    "gb": (_cmd_gb, "reduced Groebner basis"),
    "inv-hilbert": (_cmd_inv_hilbert, "dimension of degree-d invariants, three ways"),
    "inv-orbits": (_cmd_inv_orbits, "orbit-sum basis in degree d"),
    "inv-check": (_cmd_inv_check, "invariance under the cyclic shift"),
    "inv-generates": (_cmd_inv_generates, "check candidate generators degreewise"),
    "remark-experiment": (_cmd_remark, "(f:g)^[q] versus (f^q:g^q)"),
    "cyclic-spot": (_cmd_cyclic_spot, "spot check of cyclic F-purity"),
}

# flags understood by each subcommand, beyond the common ones
_FLAGS = {
    "fedder": [("--method", {"choices": ["auto", "expansion", "multinomial"]})],
    "perf-gcd": [("--a", {}), ("--b", {})],
    "perf-colon": [("--a", {}), ("--b", {})],
    "perf-eq": [("--a", {}), ("--b", {})],
    "perf-arith": [("--a", {}), ("--b", {}), ("--op", {"choices": ["add", "sub", "mul"]})],
    "fclosure": [("--ideal", {}), ("--f", {}), ("--bound", {"type": int})],
    "tclose-verify": [("--ideal", {}), ("--f", {}), ("--c", {}), ("--bound", {"type": int})],
    "tclose-search": [
        ("--ideal", {}),
        ("--f", {}),
        ("--bound", {"type": int}),
        ("--degree-cap", {"type": int}),
    ],
    "colon": [("--ideal", {}), ("--f", {})],
    "intersect": [("--ideal", {}), ("--ideal2", {})],
    "member": [("--ideal", {}), ("--f", {})],
    "gb": [("--ideal", {})],
    "inv-hilbert": [("--degree", {"type": int})],
    "inv-orbits": [("--degree", {"type": int})],
    "inv-check": [("--f", {})],
    "inv-generates": [("--gens", {}), ("--degree", {"type": int})],
    "remark-experiment": [
        ("--trials", {"type": int}),
        ("--e", {"type": int}),
        ("--poly-degree", {"type": int}),
        ("--exhaustive", {"action": "store_true", "default": None}),
    ],
    "cyclic-spot": [
        ("--ideals", {"help": "ideals separated by ';', generators by ','"}),
        ("--bound", {"type": int}),
        ("--monomial-degree", {"type": int}),
    ],
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--ring", help='e.g. "GF(11)[x,y,z,u,v]", optionally with "/(F)"')
    common.add_argument("--modulus", help="hypersurface equation F")
    common.add_argument("--order", choices=["grevlex", "lex"])
    common.add_argument("--max-degree", type=int)
    common.add_argument("--max-level", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--config", help="JSON file of flag values; flags win")
    parser = _Parser(prog="charp", description="Prime-characteristic commutative algebra toolkit")
    parser.add_argument("--version", action="version", version=f"charp {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text)
        for flag, kw in _FLAGS.get(name, []):
            sp.add_argument(flag, **kw)
    return parser


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    return {k.replace("-", "_"): v for k, v in data.items()}


def run_command(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as exc:  # --help / --version
            return int(exc.code or 0)
        if not args.command:
            raise UsageError("a subcommand is required")
        session = _Session(args, _load_config(args.config))
        payload = COMMANDS[args.command][0](session)
    except ResourceBoundExceeded as exc:
        _emit({"schema": SCHEMA, "error": {"kind": "resource", "message": str(exc)}}, stderr)
        return EXIT_RESOURCE
    except DegenerateInput as exc:
        _emit(
            {"schema": SCHEMA, "error": {"kind": "degenerate", "message": str(exc)}, "degenerate": True},
            stderr,
        )
        return EXIT_DEGENERATE
    except ParseError as exc:
        _emit(
            {"schema": SCHEMA, "error": {"kind": "parse", "message": str(exc), "position": exc.position}},
            stderr,
        )
        return EXIT_USAGE
    except (CharPError, ValueError, ZeroDivisionError) as exc:
        _emit({"schema": SCHEMA, "error": {"kind": "usage", "message": str(exc)}}, stderr)
        return EXIT_USAGE
    payload.update(
        {
            "schema": SCHEMA,
            "operation": args.command,
            "ring": session.desc.to_dict(),
            "degenerate": session.degenerate,
        }
    )
    _emit(payload, stdout)
    return EXIT_DEGENERATE if session.degenerate else EXIT_OK


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
