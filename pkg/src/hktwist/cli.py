"""Command-line front end.

Subcommands mirror the library: ``threshold``/``poly``/``gamma-p``/
``cone-test`` work on a pairing family (built-in preset or @file JSON),
``square`` exposes the Hilbert-square intersection calculus, and
``derive-k3-3`` replays the Riemann-Roch derivation of the Hilbert-cube
constants.  Every command supports ``--json`` (schema "1") and ``--digits``
for decimal display precision; all underlying arithmetic stays exact.

Exit codes: 0 success, 1 domain error (unknown family, bad family file,
out-of-range q), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import hilbert_square as hs
from . import notes, riemann_roch, threshold
from .algebraic import AlgebraicReal, isolate_real_roots
from .exact import UniPoly, format_rational, parse_rational
from .family import HKFamily, PRESET_NAMES, preset

SCHEMA = "1"


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _digits_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("digits must be at least 1")
    return value


def load_family(selector: str) -> HKFamily:
    """A preset name (case-insensitive) or @path to a pairing-table JSON file."""
    if selector.startswith("@"):
        path = selector[1:]
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValueError(f"family file {path!r} is not valid JSON: {exc}")
        try:
            return HKFamily.from_json(data)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"family file {path!r} is missing field {exc}")
    return preset(selector)


def _root_json(value: AlgebraicReal | None, digits: int):
    return None if value is None else value.to_json(digits)


def _describe_constant(value: AlgebraicReal | None, poly: UniPoly, digits: int, var: str = "t") -> str:
    if value is None:
        return f"C = none ({poly.render(var)} has no real roots; every q > 0 passes)"
    if value.is_rational:
        return (
            f"C = {format_rational(value.rational_value())} exactly "
            f"(largest root of {poly.render(var)})"
        )
    return f"C = {value.decimal(digits)} (largest root of {poly.render(var)})"


def _family_header(family: HKFamily) -> list[str]:
    return [f"family: {family.name} (n = {family.n}, dimension {family.dimension})"]


def _threshold_notes(family: HKFamily) -> list[str]:
    out = [notes.NOTE_EXACT, notes.NOTE_OMEGA_POWERS]
    if family.name == "K3_3":
        out.append(notes.NOTE_CUBE_DECIMAL)
    return out


def _cmd_threshold(args) -> tuple[dict, list[str]]:
    family = load_family(args.family)
    poly, constant = threshold.threshold_result(family)
    pairings = family.segre_pairings()
    used_notes = _threshold_notes(family)
    lines = _family_header(family)
    lines.append(
        "segre pairings (d_0 .. d_2n by omega-power): "
        + ", ".join(format_rational(d) for d in pairings)
    )
    lines.append(f"p(t) = {poly.render()}")
    lines.append(_describe_constant(constant, poly, args.digits))
    lines += [f"note: {n}" for n in used_notes]
    payload = {
        "schema": SCHEMA,
        "command": "threshold",
        "family": {"name": family.name, "n": family.n},
        "segre_pairings": [format_rational(d) for d in pairings],
        "polynomial": poly.to_json(),
        "constant": _root_json(constant, args.digits),
        "rational": (
            format_rational(constant.rational_value())
            if constant is not None and constant.is_rational
            else None
        ),
        "notes": used_notes,
    }
    return payload, lines


def _cmd_poly(args) -> tuple[dict, list[str]]:
    family = load_family(args.family)
    poly = threshold.build_threshold_poly(family)
    pairings = family.segre_pairings()
    used_notes = _threshold_notes(family)
    lines = _family_header(family)
    lines.append(
        "segre pairings (d_0 .. d_2n by omega-power): "
        + ", ".join(format_rational(d) for d in pairings)
    )
    lines.append(f"p(t) = {poly.render()}")
    lines += [f"note: {n}" for n in used_notes]
    payload = {
        "schema": SCHEMA,
        "command": "poly",
        "family": {"name": family.name, "n": family.n},
        "segre_pairings": [format_rational(d) for d in pairings],
        "polynomial": poly.to_json(),
        "notes": used_notes,
    }
    return payload, lines


def _cmd_gamma_p(args) -> tuple[dict, list[str]]:
    family = load_family(args.family)
    gamma = threshold.gamma_p(family, args.q)
    used_notes = _threshold_notes(family)
    lines = _family_header(family)
    lines.append(f"q(omega) = {format_rational(args.q)}")
    if gamma.is_rational:
        lines.append(
            f"gamma_p = {format_rational(gamma.rational_value())} exactly "
            f"(root of {gamma.poly.render('s')})"
        )
    else:
        lines.append(
            f"gamma_p = {gamma.decimal(args.digits)} (root of {gamma.poly.render('s')})"
        )
    lines += [f"note: {n}" for n in used_notes]
    payload = {
        "schema": SCHEMA,
        "command": "gamma-p",
        "family": {"name": family.name, "n": family.n},
        "q": format_rational(args.q),
        "gamma_p": gamma.to_json(args.digits),
        "rational": (
            format_rational(gamma.rational_value()) if gamma.is_rational else None
        ),
        "notes": used_notes,
    }
    return payload, lines


def _cmd_cone_test(args) -> tuple[dict, list[str]]:
    family = load_family(args.family)
    nef = not args.not_nef
    member = threshold.pseff_cone_member(family, args.a, args.q_delta, nef)
    used_notes = _threshold_notes(family)
    lines = _family_header(family)
    lines.append(
        f"candidate: a = {format_rational(args.a)}, "
        f"q(delta) = {format_rational(args.q_delta)}, "
        f"delta nef: {'yes' if nef else 'no'}"
    )
    lines.append(f"pseff-cone member: {'yes' if member else 'no'}")
    lines += [f"note: {n}" for n in used_notes]
    payload = {
        "schema": SCHEMA,
        "command": "cone-test",
        "family": {"name": family.name, "n": family.n},
        "a": format_rational(args.a),
        "q_delta": format_rational(args.q_delta),
        "delta_nef": nef,
        "member": member,
        "notes": used_notes,
    }
    return payload, lines


def _cmd_square_table(args) -> tuple[dict, list[str]]:
    minimal = hs.minimal_table()
    derived = hs.pushforward_rows()
    chern = hs.square_chern_table()
    used_notes = [notes.NOTE_EXACT]
    width = max(len(label) for label, _ in minimal + derived)
    lines = ["minimal weight-4 table (a = q(alpha)):"]
    lines += [f"  {label.ljust(width)} = {poly.render('a')}" for label, poly in minimal]
    lines.append("pushforward pairings on P (derived from the table):")
    lines += [f"  {label.ljust(width)} = {poly.render('a')}" for label, poly in derived]
    lines.append("characteristic classes of X:")
    lines.append(f"  s2 = {chern['s2']}")
    lines.append(f"  s2^2 = {format_rational(chern['s2^2'])}")
    lines.append(f"  c4 = {format_rational(chern['c4'])}")
    lines.append(f"  s4 = s2^2 - c4 = {format_rational(chern['s4'])}")
    lines += [f"note: {n}" for n in used_notes]
    payload = {
        "schema": SCHEMA,
        "command": "square table",
        "minimal": {label: poly.to_json() for label, poly in minimal},
        "pushforward": {label: poly.to_json() for label, poly in derived},
        "chern": {
            "s2": str(chern["s2"]),
            "s2^2": format_rational(chern["s2^2"]),
            "c4": format_rational(chern["c4"]),
            "s4": format_rational(chern["s4"]),
        },
        "notes": used_notes,
    }
    return payload, lines


def _cmd_square_z(args) -> tuple[dict, list[str]]:
    poly = hs.z_pairing()
    roots = isolate_real_roots(poly)
    top = roots[-1]
    used_notes = [notes.NOTE_EXACT, notes.NOTE_Z_PAIRING]
    lines = [f"z-pairing(a) = {poly.render('a')}"]
    lines.append(
        f"largest root: a = {top.decimal(args.digits)} (root of {top.poly.render('a')})"
    )
    value = None
    if args.alpha_sq is not None:
        value = poly(args.alpha_sq)
        lines.append(
            f"z-pairing({format_rational(args.alpha_sq)}) = {format_rational(value)}"
        )
    lines += [f"note: {n}" for n in used_notes]
    payload = {
        "schema": SCHEMA,
        "command": "square z-pairing",
        "polynomial": poly.to_json(),
        "largest_root": top.to_json(args.digits),
        "at": (
            None
            if value is None
            else {"a": format_rational(args.alpha_sq), "value": format_rational(value)}
        ),
        "notes": used_notes,
    }
    return payload, lines


def _cmd_square_kahler(args) -> tuple[dict, list[str]]:
    labels = ("omega^4", "omega^3*E", "omega^2*sbar", "omega*l")
    polys = hs.kahler_criterion()
    values, positive = hs.kahler_criterion(args.alpha_sq)
    used_notes = [notes.NOTE_EXACT]
    lines = [f"test class omega = alpha - delta at a = {format_rational(args.alpha_sq)}:"]
    for label, poly, value in zip(labels, polys, values):
        lines.append(f"  {label.ljust(12)} = {poly.render('a').ljust(16)} -> {format_rational(value)}")
    lines.append(f"all positive: {'yes' if positive else 'no'} (holds exactly when a > 2)")
    lines += [f"note: {n}" for n in used_notes]
    payload = {
        "schema": SCHEMA,
        "command": "square kahler",
        "a": format_rational(args.alpha_sq),
        "polynomials": {label: poly.to_json() for label, poly in zip(labels, polys)},
        "values": {label: format_rational(v) for label, v in zip(labels, values)},
        "positive": positive,
        "notes": used_notes,
    }
    return payload, lines


def _cmd_derive(args) -> tuple[dict, list[str]]:
    trace = riemann_roch.derivation_trace()
    matches = riemann_roch.rr_match()
    nieper = riemann_roch.nieper_match()
    constants = riemann_roch.derive_constants()
    triple = riemann_roch.cube_chern_numbers()
    used_notes = [
        notes.NOTE_EXACT,
        notes.NOTE_SQRT_TODD,
        notes.NOTE_CHI_K3,
        notes.NOTE_NIEPER_CONVENTION,
    ]
    lines = list(trace)
    lines += [f"note: {n}" for n in used_notes]
    payload = {
        "schema": SCHEMA,
        "command": "derive-k3-3",
        "constants": {
            ("1" if m.is_unit else str(m)): format_rational(v)
            for m, v in constants.items()
        },
        "equation1": [format_rational(x) for x in matches["equation1"]],
        "equation2": [format_rational(x) for x in nieper["equation2"]],
        "lambda": format_rational(nieper["lambda"]),
        "sqrt_todd_c2sq": format_rational(nieper["sqrt_td_c2sq"]),
        "r6": format_rational(nieper["r6"]),
        "todd_constant": format_rational(riemann_roch.CUBE_CHI_O),
        "weight6": {
            "c2^3": format_rational(triple[0]),
            "c2*c4": format_rational(triple[1]),
            "c6": format_rational(triple[2]),
        },
        "trace": trace,
        "notes": used_notes,
    }
    return payload, lines


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit a JSON document instead of text"
    )
    common.add_argument(
        "--digits",
        type=_digits_arg,
        default=6,
        help="significant digits for decimal display (default 6)",
    )
    family_opt = argparse.ArgumentParser(add_help=False)
    family_opt.add_argument(
        "--family",
        required=True,
        help=f"preset name ({', '.join(PRESET_NAMES)}, case-insensitive) "
        "or @path to a pairing-table JSON file",
    )

    parser = argparse.ArgumentParser(
        prog="hktwist",
        description="Exact positivity thresholds for twisted tangent sheaves "
        "on Hyperkahler families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "threshold",
        parents=[common, family_opt],
        help="threshold polynomial and its largest real root C",
    )
    p.set_defaults(handler=_cmd_threshold)

    p = sub.add_parser(
        "poly",
        parents=[common, family_opt],
        help="threshold polynomial only",
    )
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser(
        "gamma-p",
        parents=[common, family_opt],
        help="pseudoeffectivity threshold gamma_p = sqrt(C / q)",
    )
    p.add_argument("--q", type=_rational_arg, required=True, help="q(omega) > 0")
    p.set_defaults(handler=_cmd_gamma_p)

    p = sub.add_parser(
        "cone-test",
        parents=[common, family_opt],
        help="membership of a*zeta + delta-part in the pseff cone",
    )
    p.add_argument("--a", type=_rational_arg, required=True, help="zeta coefficient")
    p.add_argument(
        "--q-delta", type=_rational_arg, required=True, help="Beauville square of delta"
    )
    p.add_argument(
        "--not-nef",
        action="store_true",
        help="declare the delta part not nef (membership then fails)",
    )
    p.set_defaults(handler=_cmd_cone_test)

    p = sub.add_parser(
        "square",
        help="intersection calculus on the Hilbert square of a K3",
    )
    square_sub = p.add_subparsers(dest="square_command", required=True)

    q = square_sub.add_parser(
        "table", parents=[common], help="minimal weight-4 table and derived pairings"
    )
    q.set_defaults(handler=_cmd_square_table)

    q = square_sub.add_parser(
        "z-pairing",
        parents=[common],
        help="pairing of (zeta + pi*(alpha - delta))^5 with the incidence divisor",
    )
    q.add_argument(
        "--alpha-sq", type=_rational_arg, help="evaluate at a = q(alpha)"
    )
    q.set_defaults(handler=_cmd_square_z)

    q = square_sub.add_parser(
        "kahler", parents=[common], help="four-value positivity test at a = q(alpha)"
    )
    q.add_argument("--alpha-sq", type=_rational_arg, required=True)
    q.set_defaults(handler=_cmd_square_kahler)

    p = sub.add_parser(
        "derive-k3-3",
        parents=[common],
        help="re-derive the Hilbert-cube pairing constants from Riemann-Roch",
    )
    p.set_defaults(handler=_cmd_derive)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, lines = args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
