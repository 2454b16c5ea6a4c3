"""Command-line front end.

Surface literals have the form ``K:g[,n[,b]]`` where ``K`` is ``N``
(non-orientable) or ``S`` (orientable), for example ``N:6`` or ``S:0,3,0``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
Errors are reported on stderr as one JSON object per line with keys
``code``, ``message`` and, when known, ``location``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import __version__
from .criterion import CriterionError, Mode, check_criterion, conclude
from .enumerator import ENV_MAX_ORDER, default_max_order, enumerate_all, enumerate_signatures
from .fixtures import load_shipped_fixture
from .groups import (
    GroupError,
    cyclic,
    dihedral,
    from_permutations,
    from_spec,
    lambda_bounds,
    lambda_exact,
    split_generators,
)
from .orbifolds import ef_cf, orbifold_euler, underlying_surface, vcd_weyl
from .sigio import (
    ActionFileError,
    SignatureError,
    SignatureSyntaxError,
    SignatureValueError,
    ingest_actions,
    parse_signature,
    render_signature,
)
from .surfaces import Kind, Surface, euler_characteristic, known_dimension_bounds, vcd_mcg
from .verifiers import run_lemma_suite

_SURFACE = re.compile(r"^\s*([NS])\s*:\s*(\d+)(?:\s*,\s*(\d+))?(?:\s*,\s*(\d+))?\s*$")


class CliError(Exception):
    def __init__(self, code: str, message: str, location: Any = None) -> None:
        super().__init__(message)
        self.code = code
        self.message = message
        self.location = location

    def to_json(self) -> dict:
        out = {"code": self.code, "message": self.message}
        if self.location is not None:
            out["location"] = self.location
        return out


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        _emit_error(CliError("usage", message))
        sys.exit(2)


def parse_surface(text: str) -> Surface:
    m = _SURFACE.match(text)
    if not m:
        raise CliError("surface", f"bad surface literal {text!r}; expected K:g[,n[,b]]")
    kind, g, n, b = m.groups()
    try:
        return Surface(Kind(kind), int(g), int(n or 0), int(b or 0))
    except ValueError as exc:
        raise CliError("surface", str(exc)) from None


def _emit_error(err: CliError) -> None:
    print(json.dumps(err.to_json(), sort_keys=True), file=sys.stderr)


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(f"not serializable: {type(obj).__name__}")


def _output(args: argparse.Namespace, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2, default=_jsonable))
        return
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, list):
            print(f"{key}:")
            for item in value:
                print(f"  {_plain(item)}")
        else:
            print(f"{key}: {_plain(value)}")


def _plain(value: Any) -> str:
    if isinstance(value, dict):
        return "  ".join(f"{k}={_plain(v)}" for k, v in sorted(value.items()))
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _progress(args: argparse.Namespace, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _surface_from(args: argparse.Namespace) -> Surface:
    if args.surface is not None:
        if args.kind is not None or args.genus is not None:
            raise CliError("usage", "give either a surface literal or --kind/--genus, not both")
        return parse_surface(args.surface)
    if args.kind is None or args.genus is None:
        raise CliError("usage", "--kind and --genus are required without a surface literal")
    try:
        return Surface(Kind(args.kind), args.genus, args.punctures, args.boundary)
    except ValueError as exc:
        raise CliError("surface", str(exc)) from None


def _signature(text: str):
    try:
        return parse_signature(text)
    except SignatureSyntaxError as exc:
        raise CliError("signature-syntax", exc.message, {"offset": exc.offset}) from None
    except SignatureValueError as exc:
        loc = {"field": exc.field}
        if exc.offset is not None:
            loc["offset"] = exc.offset
        raise CliError("signature-value", exc.message, loc) from None
    except SignatureError as exc:
        raise CliError("signature", str(exc)) from None


def cmd_vcd(args: argparse.Namespace) -> dict:
    s = _surface_from(args)
    bounds = known_dimension_bounds(s)
    return {
        "surface": str(s),
        "vcd": vcd_mcg(s),
        "bounds": {"lower": bounds.lower, "upper": bounds.upper, "equal": bounds.equal},
    }


def cmd_chi(args: argparse.Namespace) -> dict:
    s = _surface_from(args)
    return {"surface": str(s), "chi": euler_characteristic(s)}


def cmd_sig(args: argparse.Namespace) -> dict:
    sig = _signature(args.signature)
    sums = ef_cf(sig)
    return {
        "signature": render_signature(sig),
        "e_F": sig.e_F,
        "c_F": sig.c_F,
        "b_m": sig.b_m,
        "b_c": sig.b_c,
        "E_F": sums.E_F,
        "C_F": sums.C_F,
        "chi_orb": orbifold_euler(sig),
    }


def cmd_weyl(args: argparse.Namespace) -> dict:
    sig = _signature(args.signature)
    return {
        "signature": render_signature(sig),
        "underlying_surface": str(underlying_surface(sig)),
        "vcd_weyl": vcd_weyl(sig),
    }


def cmd_lambda(args: argparse.Namespace) -> dict:
    cap = args.cap
    if args.cyclic is not None:
        group = cyclic(args.cyclic, cap)
    elif args.dihedral is not None:
        group = dihedral(args.dihedral, cap)
    elif args.perm is not None:
        if args.degree is None:
            raise CliError("usage", "--perm needs --degree")
        group = from_permutations(split_generators(args.perm), args.degree, cap)
    else:
        group = from_spec(args.product, cap)
    n = group.order
    lam = lambda_exact(group, cap)
    b = lambda_bounds(n)
    return {
        "group": group.name,
        "order": n,
        "lambda": lam,
        "omega": b.omega,
        "log2_floor": b.log2,
        "half": b.half,
        "bounds_hold": lam <= b.omega and 2**lam <= n and lam <= b.half,
    }


def _max_order(args: argparse.Namespace, g: int) -> int:
    return args.max_order if args.max_order is not None else default_max_order(g)


def cmd_enumerate(args: argparse.Namespace) -> dict:
    g = args.genus
    if g < 3:
        raise CliError("value", f"source genus must be at least 3, got {g}")
    if args.order is not None:
        _progress(args, f"enumerating g={g} order={args.order}")
        pairs = [(args.order, s) for s in enumerate_signatures(g, args.order)]
    else:
        bound = _max_order(args, g)
        _progress(args, f"enumerating g={g} up to order {bound}")
        pairs = enumerate_all(g, bound)
    return {
        "g": g,
        "count": len(pairs),
        "signatures": [{"order": o, "signature": render_signature(s)} for o, s in pairs],
    }


def cmd_criterion(args: argparse.Namespace) -> dict:
    g = args.genus
    if g < 3:
        raise CliError("criterion", f"criterion needs g >= 3, got {g}")
    if args.fixture or args.actions is not None:
        rows = load_shipped_fixture() if args.fixture else ingest_actions(args.actions)
        report = check_criterion(g, Mode.DATABASE, rows)
    else:
        bound = _max_order(args, g)
        _progress(args, f"checking g={g} over RH-compatible signatures up to order {bound}")
        report = check_criterion(g, Mode.PURE_RH, max_order=bound)
    out = report.to_json()
    if not args.json:
        c = conclude(g, report)
        out["cd_bracket"] = f"[{c.cd_bounds[0]}, {c.cd_bounds[1]}]"
    return out


def cmd_verify(args: argparse.Namespace) -> dict:
    checks = run_lemma_suite()
    return {"passed": all(c.passed for c in checks), "checks": [c.to_json() for c in checks]}


def _add_surface_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("surface", nargs="?", help="surface literal such as N:6,0,0")
    p.add_argument("--kind", choices=["N", "S"])
    p.add_argument("--genus", type=int)
    p.add_argument("--punctures", type=int, default=0)
    p.add_argument("--boundary", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit key-sorted JSON")
    common.add_argument("--quiet", action="store_true", help="suppress progress on stderr")

    parser = _Parser(prog="mcgdim", description="Dimensions of surface mapping class groups.")
    parser.add_argument("--version", action="version", version=f"mcgdim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("vcd", parents=[common], help="vcd and known dimension bracket")
    _add_surface_args(p)
    p.set_defaults(func=cmd_vcd)

    p = sub.add_parser("chi", parents=[common], help="Euler characteristic of a surface")
    _add_surface_args(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("sig", help="signature tools")
    sig_sub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = sig_sub.add_parser("parse", parents=[common], help="canonical form and derived data")
    q.add_argument("signature")
    q.set_defaults(func=cmd_sig)

    p = sub.add_parser("weyl", parents=[common], help="vcd of the Weyl group for a quotient")
    p.add_argument("signature")
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("lambda", parents=[common], help="length of a finite group")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--cyclic", type=int, metavar="N")
    src.add_argument("--dihedral", type=int, metavar="N", help="dihedral group of order 2N")
    src.add_argument("--perm", metavar="GENS", help='generators such as "(1 2 3);(1 2)"')
    src.add_argument("--product", metavar="SPEC", help="for example C2xD4 or S3xC2")
    p.add_argument("--degree", type=int)
    p.add_argument("--cap", type=int, default=400)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("enumerate", parents=[common], help="RH-compatible quotient signatures")
    p.add_argument("--genus", type=int, required=True)
    lim = p.add_mutually_exclusive_group()
    lim.add_argument("--order", type=int)
    lim.add_argument("--max-order", type=int, help=f"default 84(g-2) or ${ENV_MAX_ORDER}")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("criterion", parents=[common], help="check the dimension criterion")
    p.add_argument("--genus", type=int, required=True)
    data = p.add_mutually_exclusive_group()
    data.add_argument("--actions", metavar="FILE", help="action table (TSV) for Database mode")
    data.add_argument("--fixture", action="store_true", help="use the bundled action table")
    p.add_argument("--max-order", type=int, help=f"default 84(g-2) or ${ENV_MAX_ORDER}")
    p.set_defaults(func=cmd_criterion)

    p = sub.add_parser("verify", help="exhaustive lemma checks")
    v_sub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = v_sub.add_parser("lemmas", parents=[common])
    q.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except CliError as err:
        _emit_error(err)
        return 2 if err.code == "usage" else 1
    except ActionFileError as err:
        first_line = err.diagnostics[0][0] if err.diagnostics else None
        _emit_error(CliError("action-file", str(err), {"line": first_line}))
        return 1
    except OSError as err:
        _emit_error(CliError("io", str(err), {"path": err.filename}))
        return 1
    except GroupError as err:
        _emit_error(CliError("group", str(err)))
        return 1
    except CriterionError as err:
        _emit_error(CliError("criterion", str(err)))
        return 1
    except ValueError as err:
        _emit_error(CliError("value", str(err)))
        return 1
    _output(args, payload)
    if args.func is cmd_verify and not payload["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
