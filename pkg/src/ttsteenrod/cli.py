"""Command-line front end.

Every subcommand prints canonical text (or JSON with ``--json``).  Exit
status is 0 on success, 1 on domain errors (a JSON error object goes to
stderr) and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence

import jsonschema

from .algebra import AlgebraError, Ideal, Poly, TensorPoly
from .coaction import (canonical_generators, coaction_poly, coaction_table, invariants_subring,
                       is_invariant, sharp, star)
from .ext import (DEFAULT_MAX_HOMOLOGICAL, DEFAULT_MAX_INTERNAL, ExtRing, d_limit_ring,
                  ext_of_elementary, make_truncation, restriction)
from .groebner import radical_member
from .parse import format_ideal, parse_poly, parse_poly_list
from .steenrod import (QuotientHopf, conjugate_poly, coproduct, is_elementary, make_A, make_D,
                       make_E, parse_profile, profile_admissible)
from .support import (KoszulObject, enumerate_monomial_invariant_primes, invariant_primes,
                      spc_map_res, support_of_ideal, thick_subset, to_csv, to_dot, vinv_subset)

COMMANDS = ("profile-check", "coproduct", "conjugate", "coaction", "sharp", "star", "invariant",
            "radical-member", "vinv", "thick", "enum-primes", "invariants-subring", "restrict")

_NAMED = re.compile(r"^\s*(A|D|E\((\d+)\))\s*$")


class UsageError(Exception):
    pass


def resolve_quotient(text: str) -> QuotientHopf:
    """A profile string, or one of the names ``A``, ``D``, ``E(m)``."""
    m = _NAMED.match(text)
    if m:
        if m.group(1) == "A":
            return make_A()
        if m.group(1) == "D":
            return make_D()
        return make_E(int(m.group(2)))
    return QuotientHopf(parse_profile(text))


# -- argument parsing -------------------------------------------------------

def _ring_args(p: argparse.ArgumentParser, default_ring: str = "d-limit"):
    p.add_argument("--ring", choices=("d-limit", "elementary"), default=default_ring)
    p.add_argument("--profile", default="E(0)",
                   help="quotient for elementary rings: profile string or A, D, E(m)")
    p.add_argument("--max-t", type=int, default=3)
    p.add_argument("--max-internal", type=int, default=DEFAULT_MAX_INTERNAL)
    p.add_argument("--max-homological", type=int, default=DEFAULT_MAX_HOMOLOGICAL)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ttsteenrod",
                                     description="Invariant ideals and supports over the dual "
                                                 "Steenrod algebra.")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile-check", help="admissibility of a profile function")
    p.add_argument("--profile", required=True)

    p = sub.add_parser("coproduct", help="Milnor coproduct of a xi-polynomial")
    p.add_argument("expr")
    p.add_argument("--profile", help="reduce both factors into this quotient")

    p = sub.add_parser("conjugate", help="antipode of a xi-polynomial")
    p.add_argument("expr")

    p = sub.add_parser("coaction", help="coaction of a ring element")
    _ring_args(p)
    p.add_argument("expr")

    for name, desc in (("sharp", "smallest invariant ideal containing I"),
                       ("star", "largest invariant ideal inside I (truncated)"),
                       ("invariant", "invariance test with witness")):
        p = sub.add_parser(name, help=desc)
        _ring_args(p)
        p.add_argument("ideal", help="comma-separated generators")

    p = sub.add_parser("radical-member", help="whether some power of f lies in I")
    _ring_args(p)
    p.add_argument("--ideal", required=True)
    p.add_argument("expr")

    for name in ("vinv", "thick"):
        p = sub.add_parser(name, help="support inclusion" if name == "vinv"
                           else "thick tensor-ideal inclusion of Koszul objects")
        _ring_args(p)
        p.add_argument("--x", required=True)
        p.add_argument("--y", required=True)
        p.add_argument("--plain", action="store_true",
                       help="plain supports V(I) instead of V^inv(I)")

    p = sub.add_parser("enum-primes", help="monomial invariant primes")
    _ring_args(p)
    p.add_argument("--all", action="store_true", help="list every subset, not only the primes")
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--csv", metavar="FILE")

    p = sub.add_parser("invariants-subring", help="coaction fixed points per bidegree")
    _ring_args(p, default_ring="elementary")

    p = sub.add_parser("restrict", help="restriction to an elementary quotient, or preimage")
    _ring_args(p, default_ring="d-limit")
    p.add_argument("--preimage", action="store_true",
                   help="treat the input as an ideal of the elementary ring and pull it back")
    p.add_argument("ideal")

    p = sub.add_parser("job", help="run a JSON job file")
    p.add_argument("file")
    return parser


def _ring(args) -> ExtRing:
    tr = make_truncation(args.max_t, args.max_internal, args.max_homological)
    if args.ring == "d-limit":
        return d_limit_ring(tr)
    return ext_of_elementary(resolve_quotient(args.profile), tr)


def _ideal(ring: ExtRing, text: str) -> Ideal:
    return Ideal(ring.presentation, tuple(parse_poly_list(text, ring.presentation)))


def _bool(b: bool) -> str:
    return "true" if b else "false"


# -- subcommands --------------------------------------------------------------
# Each returns (text, json-able payload).

def cmd_profile_check(args):
    q = parse_profile(args.profile)
    ok = profile_admissible(q, 8)
    payload = {"profile": str(q), "admissible": ok}
    text = f"admissible: {_bool(ok)}"
    if ok:
        payload["elementary"] = is_elementary(QuotientHopf(q))
    return text, payload


def cmd_coproduct(args):
    p = parse_poly(args.expr, context="steenrod")
    quotient = resolve_quotient(args.profile) if args.profile else None
    if quotient is not None:
        p = quotient.reduce(p)
    out = coproduct(p, quotient)
    return str(out), {"input": str(p), "coproduct": str(out)}


def cmd_conjugate(args):
    p = parse_poly(args.expr, context="steenrod")
    out = conjugate_poly(p)
    return str(out), {"input": str(p), "conjugate": str(out)}


def cmd_coaction(args):
    ring = _ring(args)
    p = parse_poly(args.expr, ring.presentation)
    out = coaction_poly(p, coaction_table(ring))
    return str(out), {"ring": ring.descriptor(), "input": str(p), "coaction": str(out)}


def _ideal_result(ring, name, I):
    gens = canonical_generators(I)
    return format_ideal(gens), {"ring": ring.descriptor(), name: [str(g) for g in gens]}


def cmd_sharp(args):
    ring = _ring(args)
    return _ideal_result(ring, "sharp", sharp(_ideal(ring, args.ideal), coaction_table(ring)))


def cmd_star(args):
    ring = _ring(args)
    I = _ideal(ring, args.ideal)
    return _ideal_result(ring, "star", star(I, coaction_table(ring), ring.truncation))


def cmd_invariant(args):
    ring = _ring(args)
    rep = is_invariant(_ideal(ring, args.ideal), coaction_table(ring))
    payload = {"ring": ring.descriptor(), "invariant": rep.is_invariant}
    lines = [f"invariant: {_bool(rep.is_invariant)}"]
    if rep.witness is not None:
        g, left, comp = rep.witness
        lines.append(f"witness: {g} | {left} (x) {comp}")
        payload["witness"] = {"generator": str(g), "left": str(left), "component": str(comp)}
    return "\n".join(lines), payload


def cmd_radical_member(args):
    ring = _ring(args)
    I = _ideal(ring, args.ideal)
    f = parse_poly(args.expr, ring.presentation)
    ok = radical_member(f, I)
    return f"member: {_bool(ok)}", {"ring": ring.descriptor(), "member": ok}


def cmd_vinv(args):
    ring = _ring(args)
    inv = not args.plain
    S = support_of_ideal(ring, _ideal(ring, args.x), inv)
    T = support_of_ideal(ring, _ideal(ring, args.y), inv)
    ok = vinv_subset(S, T)
    return f"subset: {_bool(ok)}", {"ring": ring.descriptor(), "subset": ok}


def cmd_thick(args):
    ring = _ring(args)
    pres = ring.presentation
    X = KoszulObject(ring, tuple(parse_poly_list(args.x, pres)), not args.plain)
    Y = KoszulObject(ring, tuple(parse_poly_list(args.y, pres)), not args.plain)
    ok = thick_subset(X, Y)
    return f"subset: {_bool(ok)}", {"ring": ring.descriptor(), "subset": ok}


def cmd_enum_primes(args):
    ring = _ring(args)
    records = enumerate_monomial_invariant_primes(ring, coaction_table(ring))
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(records))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(to_csv(records))
    shown = records if args.all else invariant_primes(records)
    lines = []
    for r in shown:
        if args.all:
            lines.append(f"{r.label()} prime={_bool(r.is_prime)} "
                         f"invariant={_bool(r.is_invariant)}")
        else:
            lines.append(r.label())
    lines.append(f"count: {len(shown)}")
    payload = {"ring": ring.descriptor(), "records": [
        {"variables": [str(g) for g in sorted(r.variables)], "is_prime": r.is_prime,
         "is_invariant": r.is_invariant} for r in shown]}
    return "\n".join(lines), payload


def cmd_invariants_subring(args):
    ring = _ring(args)
    table = coaction_table(ring)
    basis = invariants_subring(table, ring.truncation)
    lines, payload = [], {}
    for d, polys in basis.items():
        if polys:
            lines.append(f"{d}: " + ", ".join(str(p) for p in polys))
            payload[f"{d.homological},{d.internal}"] = [str(p) for p in polys]
    return "\n".join(lines), {"ring": ring.descriptor(), "basis": payload}


def cmd_restrict(args):
    tr = make_truncation(args.max_t, args.max_internal, args.max_homological)
    q = resolve_quotient(args.profile)
    dring = d_limit_ring(tr)
    target = ext_of_elementary(q, tr)
    if args.preimage:
        I = _ideal(target, args.ideal)
        return _ideal_result(dring, "preimage", spc_map_res(I, dring, target))
    res = restriction(dring, q)
    images = [res(p) for p in parse_poly_list(args.ideal, dring.presentation)]
    text = ", ".join(str(p) for p in images)
    return text, {"quotient": str(q), "images": [str(p) for p in images]}


HANDLERS = {
    "profile-check": cmd_profile_check, "coproduct": cmd_coproduct, "conjugate": cmd_conjugate,
    "coaction": cmd_coaction, "sharp": cmd_sharp, "star": cmd_star, "invariant": cmd_invariant,
    "radical-member": cmd_radical_member, "vinv": cmd_vinv, "thick": cmd_thick,
    "enum-primes": cmd_enum_primes, "invariants-subring": cmd_invariants_subring,
    "restrict": cmd_restrict,
}


# -- job files ------------------------------------------------------------------

_STRING_LIST = {"type": "array", "items": {"type": "string"}}

JOB_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["command"],
    "properties": {
        "command": {"enum": list(COMMANDS)},
        "ring": {
            "type": "object",
            "additionalProperties": False,
            "required": ["flavor", "max_t"],
            "properties": {
                "flavor": {"enum": ["d-limit", "elementary"]},
                "max_t": {"type": "integer", "minimum": 1},
                "profile": {"type": "string"},
            },
        },
        "truncation": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "max_internal": {"type": "integer", "minimum": 1},
                "max_homological": {"type": "integer", "minimum": 1},
            },
        },
        "arguments": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "expression": {"type": "string"},
                "ideal": _STRING_LIST,
                "x": _STRING_LIST,
                "y": _STRING_LIST,
                "profile": {"type": "string"},
                "plain": {"type": "boolean"},
                "all": {"type": "boolean"},
                "preimage": {"type": "boolean"},
            },
        },
    },
}

_RING_COMMANDS = set(COMMANDS) - {"profile-check", "coproduct", "conjugate"}


def job_to_argv(job: dict) -> List[str]:
    """Translate a validated job into the equivalent command line."""
    jsonschema.validate(job, JOB_SCHEMA)
    cmd = job["command"]
    argv = [cmd]
    ring = job.get("ring")
    tr = job.get("truncation", {})
    args = job.get("arguments", {})
    if cmd in _RING_COMMANDS:
        if ring is not None:
            argv += ["--ring", ring["flavor"], "--max-t", str(ring["max_t"])]
            if "profile" in ring:
                argv += ["--profile", ring["profile"]]
        if "max_internal" in tr:
            argv += ["--max-internal", str(tr["max_internal"])]
        if "max_homological" in tr:
            argv += ["--max-homological", str(tr["max_homological"])]
    elif ring is not None or tr:
        raise UsageError(f"{cmd} takes no ring or truncation")
    if "profile" in args:
        argv += ["--profile", args["profile"]]
    for flag in ("plain", "all", "preimage"):
        if args.get(flag):
            argv.append(f"--{flag}")
    for key in ("x", "y"):
        if key in args:
            argv += [f"--{key}", ",".join(args[key])]
    if "ideal" in args:
        joined = ",".join(args["ideal"])
        argv += ["--ideal", joined] if cmd == "radical-member" else [joined]
    if "expression" in args:
        argv.append(args["expression"])
    return argv


# -- entry point ------------------------------------------------------------------

def _emit_error(exc: Exception, code: int) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)},
                                sort_keys=True) + "\n")
    return code


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = args.json
    if args.command == "job":
        try:
            with open(args.file) as fh:
                job = json.load(fh)
            sub_argv = job_to_argv(job)
        except (OSError, json.JSONDecodeError, jsonschema.ValidationError, UsageError) as exc:
            return _emit_error(exc, 2)
        try:
            args = parser.parse_args((["--json"] if as_json else []) + sub_argv)
        except SystemExit as exc:
            return int(exc.code or 0)
    try:
        text, payload = HANDLERS[args.command](args)
    except AlgebraError as exc:
        return _emit_error(exc, 1)
    except OSError as exc:
        return _emit_error(exc, 1)
    if as_json:
        out.write(json.dumps({"command": args.command, "result": payload}, sort_keys=True) + "\n")
    elif text:
        out.write(text + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
