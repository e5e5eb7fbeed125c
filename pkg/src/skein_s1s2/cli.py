"""Command-line front end: ``skein-s1s2 <group> <command> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import annulus, combinatorics, handleslide, hecke, relative
from .diagrams import DiagramError, evaluate_any
from .elements import AnnulusElement, RelativeElement, format_monomial, format_relative_key, parse_annulus_element, parse_relative_element
from .scalars import ParseError, find_separating_n, format_scalar, parse_laurent

DEFAULT_LIMITS = {"max_partition_size": 5, "max_hecke_strands": 6, "max_relation_size": 6}


class UsageError(Exception):
    pass


def load_limits() -> dict:
    """Size limits, optionally overridden by the JSON file named in SKEIN_S1S2_CONFIG."""
    limits = dict(DEFAULT_LIMITS)
    path = os.environ.get("SKEIN_S1S2_CONFIG")
    if path:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        limits.update({k: int(v) for k, v in data.get("limits", data).items() if k in DEFAULT_LIMITS})
    return limits


def _check(value: int, name: str, limits: dict):
    if value > limits[name]:
        raise ValueError(f"{value} exceeds the configured limit {name} = {limits[name]}")


def _element_json(e) -> dict:
    fmt = format_monomial if isinstance(e, AnnulusElement) else format_relative_key
    return {fmt(k): format_scalar(e.terms[k]) for k in e.sorted_keys()}


def _read_text(value: str) -> str:
    p = Path(value)
    return p.read_text(encoding="utf-8") if p.is_file() else value


# -- commands ---------------------------------------------------------------


def cmd_hecke_reduce(args, limits):
    _check(args.n, "max_hecke_strands", limits)
    h = hecke.word_to_basis(args.n, hecke.parse_braid_word(args.word))
    text = hecke.format_hecke(h)
    return text, {"n": args.n, "word": args.word, "element": text}


def cmd_young_idempotent(args, limits):
    lam = combinatorics.parse_partition(args.partition)
    _check(lam.size, "max_partition_size", limits)
    y = hecke.young_idempotent(lam)
    text = hecke.format_hecke(y)
    data = {"partition": str(lam), "element": text}
    if args.check:
        ok = hecke.mul(y, y) == y
        text += f"\nidempotent: {'ok' if ok else 'FAILED'}"
        data["idempotent"] = ok
        if not ok:
            raise ArithmeticError("y * y != y")
    return text, data


def cmd_closure(args, limits):
    if args.partition is not None:
        lam = combinatorics.parse_partition(args.partition)
        _check(lam.size, "max_partition_size", limits)
        h = hecke.young_idempotent(lam)
    else:
        if args.n is None:
            raise UsageError("--word needs --n")
        _check(args.n, "max_hecke_strands", limits)
        h = hecke.word_to_basis(args.n, hecke.parse_braid_word(args.word))
    e = annulus.closure(h, args.orient)
    return str(e), {"element": _element_json(e)}


def cmd_diagram_eval(args, limits):
    from .textio import load_diagram

    text = Path(args.file).read_text(encoding="utf-8")
    e = evaluate_any(load_diagram(text), args.salt)
    return str(e), {"element": _element_json(e)}


def _relative_input(args) -> RelativeElement:
    if args.file:
        from .textio import load_diagram

        d = load_diagram(Path(args.file).read_text(encoding="utf-8"))
        e = evaluate_any(d)
        if not isinstance(e, RelativeElement):
            raise DiagramError("the diagram has no endpoints A, B")
        return e
    if args.element is None:
        raise UsageError("give --element or --file")
    return parse_relative_element(args.element)


def cmd_relative_convert(args, limits):
    e = _relative_input(args)
    alt = relative.convert_type2_to_alt(e)
    lines = [f"{handleslide.generator_kind(k)}:{format_relative_key(k)} {format_scalar(alt.terms[k])}" for k in alt.sorted_keys()]
    return "\n".join(lines) if lines else "0", {"alternative": {format_relative_key(k): format_scalar(c) for k, c in alt.terms.items()}}


def cmd_relative_wire(args, limits):
    e = _relative_input(args)
    w = relative.wire_into_annulus(e, args.turns)
    return str(w), {"turns": args.turns, "element": _element_json(w)}


def cmd_relative_cap(args, limits):
    e = _relative_input(args)
    short, long_ = relative.cap_short(e), relative.cap_long(e)
    text = f"short: {short}\nlong: {long_}"
    return text, {"short": _element_json(short), "long": _element_json(long_)}


def cmd_s1s2_relations(args, limits):
    _check(args.size + args.slack + 1, "max_relation_size", limits)
    sys_ = handleslide.build_system(args.winding, args.size, args.slack)
    q = sys_.quotient_rank()
    _, q2, stable = handleslide.stability(args.winding, args.size, args.slack)
    lines = [sys_.dump(), f"span_dim = {q['span_dim']}", f"rank = {q['rank']}", f"quotient_dim = {q['quotient_dim']}",
             f"stable_under_slack_plus_1 = {str(stable).lower()}"]
    data = {
        "winding": args.winding,
        "size_N": args.size,
        "slack": args.slack,
        "generators": [format_relative_key(k) for k in sys_.generators],
        "rows": [_element_json(r) for r in sys_.rows],
        **q,
        "stable": stable,
    }
    return "\n".join(lines), data


def cmd_s1s2_invariant(args, limits):
    _check(args.size + args.slack, "max_relation_size", limits)
    text = _read_text(args.element)
    try:
        from .textio import load_diagram

        a = evaluate_any(load_diagram(text))
    except ParseError:
        a = parse_annulus_element(text.strip())
    if not isinstance(a, AnnulusElement):
        raise DiagramError("the invariant needs a closed diagram")
    sys_ = handleslide.build_system(0, args.size, args.slack)
    r = handleslide.reduce_to_phi(a, sys_)
    if r.resolved:
        return f"{format_scalar(r.value)} * phi", {"resolved": True, "value": format_scalar(r.value)}
    return f"did not resolve at size {args.size}, slack {args.slack}; residue: {r.residue}", {
        "resolved": False,
        "residue": _element_json(r.residue),
    }


def cmd_count(args, limits):
    if args.n < 0:
        raise ValueError("n must be non-negative")
    value = combinatorics.extreme_cell_count_e(args.n) if args.which == "e" else combinatorics.partition_count(args.n)
    return str(value), {args.which: value, "n": args.n}


def cmd_scalar_separate(args, limits):
    p = parse_laurent(args.poly)
    n = find_separating_n(p)
    return str(n), {"poly": args.poly, "n": n}


# -- parser -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skein-s1s2", description="Homflypt skein computations in the solid torus and S^1 x S^2.")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    groups = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    g = groups.add_parser("hecke").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = g.add_parser("reduce", help="expand a braid word over positive permutation braids")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--word", required=True)
    c.set_defaults(func=cmd_hecke_reduce)

    g = groups.add_parser("young").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = g.add_parser("idempotent", help="the Young idempotent y_lambda")
    c.add_argument("--partition", required=True)
    c.add_argument("--check", action="store_true")
    c.set_defaults(func=cmd_young_idempotent)

    c = groups.add_parser("closure", help="close a Hecke element in the solid torus")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--partition")
    src.add_argument("--word")
    c.add_argument("--n", type=int)
    c.add_argument("--orient", choices=annulus.ORIENTATIONS, default="clockwise")
    c.set_defaults(func=cmd_closure)

    g = groups.add_parser("diagram").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = g.add_parser("eval", help="evaluate a diagram file")
    c.add_argument("--file", required=True)
    c.add_argument("--salt", type=int)
    c.set_defaults(func=cmd_diagram_eval)

    g = groups.add_parser("relative").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, func, extra in (
        ("convert", cmd_relative_convert, None),
        ("wire", cmd_relative_wire, "turns"),
        ("cap", cmd_relative_cap, None),
    ):
        c = g.add_parser(name)
        c.add_argument("--element")
        c.add_argument("--file")
        if extra:
            c.add_argument("--turns", type=int, default=1)
        c.set_defaults(func=func)

    g = groups.add_parser("s1s2").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = g.add_parser("relations", help="handle-slide relation system and quotient dimension")
    c.add_argument("--winding", type=int, required=True)
    c.add_argument("--size", type=int, required=True)
    c.add_argument("--slack", type=int, default=0)
    c.set_defaults(func=cmd_s1s2_relations)
    c = g.add_parser("invariant", help="reduce a winding-0 element to a multiple of phi")
    c.add_argument("--element", required=True, help="element text, or a file with an element or a diagram")
    c.add_argument("--size", type=int, default=2)
    c.add_argument("--slack", type=int, default=1)
    c.set_defaults(func=cmd_s1s2_invariant)

    c = groups.add_parser("count", help="e(n) or p(n)")
    c.add_argument("which", choices=("e", "p"))
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(func=cmd_count)

    g = groups.add_parser("scalar").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    c = g.add_parser("separate-n", help="least n separating the collapsed exponents")
    c.add_argument("--poly", required=True)
    c.set_defaults(func=cmd_scalar_separate)
    return p


DOMAIN_ERRORS = (ValueError, ArithmeticError, DiagramError, ParseError, OSError, handleslide.RelationError)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, data = args.func(args, load_limits())
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
