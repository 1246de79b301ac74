"""
Command line front end.

    cmspace validate POINT.json
    cmspace act WORD.json POINT.json
    cmspace conj POINT1.json POINT2.json
    cmspace nilpotent N
    cmspace replay [--n-max N]

Exit status: 0 for a positive verdict, 1 for a semantic negative, 2 for
unreadable or malformed input.
"""

import argparse
import json
import sys

from .automorphisms import Word, ZeroScaling, act
from .conjugacy import are_conjugate
from .linalg import DimensionError
from .points import CMPoint, RankConditionViolated, nilpotent_points, nilpotent_vector
from .poly import rational_str
from .replay import run_all


class InputError(Exception):
    pass


def _emit(doc):
    json.dump(doc, sys.stdout)
    sys.stdout.write("\n")


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise InputError("%s: %s" % (path, err)) from err


def _load_point(path):
    """Parse a point file; rank/shape failures propagate, the rest is InputError."""
    data = _load_json(path)
    try:
        return CMPoint.from_json(data)
    except (RankConditionViolated, DimensionError):
        raise
    except (ValueError, TypeError, KeyError) as err:
        raise InputError("%s: %s" % (path, err)) from err


def _load_word(path):
    data = _load_json(path)
    try:
        return Word.from_json(data)
    except ZeroScaling:
        raise
    except (ValueError, TypeError, KeyError) as err:
        raise InputError("%s: %s" % (path, err)) from err


def _rejection(err):
    name = "DimensionMismatch" if isinstance(err, DimensionError) else type(err).__name__
    return {"valid": False, "reason": name, "message": str(err)}


def cmd_validate(args):
    try:
        P = _load_point(args.point)
    except (RankConditionViolated, DimensionError) as err:
        _emit(_rejection(err))
        return 1
    _emit({"valid": True, "n": P.n})
    return 0


def cmd_act(args):
    try:
        w = _load_word(args.word)
    except ZeroScaling as err:
        _emit({"error": "ZeroScaling", "message": str(err)})
        return 1
    try:
        P = _load_point(args.point)
    except (RankConditionViolated, DimensionError) as err:
        _emit(_rejection(err))
        return 1
    _emit(act(w, P).to_json())
    return 0


def cmd_conj(args):
    try:
        P = _load_point(args.point1)
        Q = _load_point(args.point2)
    except (RankConditionViolated, DimensionError) as err:
        _emit(_rejection(err))
        return 1
    if P.n != Q.n:
        _emit({"conjugate": False, "witness": None, "reason": "SizeMismatch"})
        return 1
    v = are_conjugate(P, Q)
    _emit(v.to_json())
    return 0 if v.conjugate else 1


def cmd_nilpotent(args):
    n = args.n
    if n < 2:
        _emit({"error": "n must be at least 2"})
        return 1
    out = []
    for r, P in enumerate(nilpotent_points(n), start=1):
        doc = {"r": r, "a": [rational_str(x) for x in nilpotent_vector(n, r)]}
        doc.update(P.to_json())
        out.append(doc)
    _emit(out)
    return 0


def cmd_replay(args):
    reports = run_all(args.n_max)
    _emit([r.to_json() for r in reports])
    return 0 if all(r.passed for r in reports) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cmspace",
        description="Exact computations in Calogero-Moser spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the rank-one condition")
    p.add_argument("point")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("act", help="apply an automorphism word to a point")
    p.add_argument("word")
    p.add_argument("point")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("conj", help="decide simultaneous conjugacy")
    p.add_argument("point1")
    p.add_argument("point2")
    p.set_defaults(func=cmd_conj)

    p = sub.add_parser("nilpotent", help="list the points (X(a), Y0) with X nilpotent")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_nilpotent)

    p = sub.add_parser("replay", help="replay the proof computations")
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(func=cmd_replay)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "replay" and args.n_max < 2:
        parser.error("--n-max must be at least 2")
    try:
        return args.func(args)
    except InputError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
