"""Command line entry point: ``python -m arulayout <command> ...``.

Exit codes: 0 success or a positive answer, 1 a negative answer, 2 invalid
input, 3 internal error.  Machine output is one JSON document on stdout.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import io
from .classify import aru_class, find_windmill, is_one_sided, is_sliceable
from .dualgraph import dual
from .enumeration import DEFAULT_CAP, census
from .errors import InternalVerificationError, InvalidInputError, LayoutError
from .realize import brick_witness, strong_realizability, windmill_witness
from .recognize import recognize_dual
from .render import RenderOptions, render_svg, segment_indices

OK, NO, BAD_INPUT, INTERNAL = 0, 1, 2, 3


def _emit(data) -> None:
    sys.stdout.write(io.dumps(data) + "\n")


def _windmill_json(w) -> dict:
    return {
        "center": w.center,
        "chirality": w.chirality,
        "arms": [io.segment_to_json(s) for s in w.arms],
    }


def cmd_classify(args) -> int:
    layout = io.layout_from_json(io.load_json(args.layout))
    sliceable = is_sliceable(layout)
    one_sided, bad = is_one_sided(layout)
    if not sliceable:
        w = find_windmill(layout)
        evidence = {"windmill": _windmill_json(w)} if w else None
    elif not one_sided:
        evidence = {"segment": io.segment_to_json(bad[0])}
    else:
        evidence = None
    _emit(
        {
            "sliceable": sliceable,
            "one_sided": one_sided,
            "aru_class": aru_class(layout).value,
            "witness_segment_or_windmill": evidence,
        }
    )
    return OK


def _random_assignment(layout, seed: int) -> dict:
    rng = random.Random(seed)
    return {r: Fraction(rng.randint(1, 12), rng.randint(1, 12)) for r in layout.ids}


def cmd_realize(args) -> int:
    layout = io.layout_from_json(io.load_json(args.layout))
    if args.assignment:
        alpha = io.assignment_from_json(io.load_json(args.assignment))
    else:
        alpha = _random_assignment(layout, args.seed)
    missing = set(layout.ids) - set(alpha)
    if missing:
        raise InvalidInputError(f"no ratio for {sorted(missing)}")
    if not is_sliceable(layout):
        raise InvalidInputError("realize needs a sliceable layout")
    rep = strong_realizability(layout, alpha, args.mode)
    if args.output:
        Path(args.output).write_text(io.dumps(io.layout_to_json(rep.layout)) + "\n")
    _emit(
        {
            "mode": rep.mode,
            "equivalent": rep.equivalent,
            "generic": rep.generic,
            "gained": [io.contact_to_json(c) for c in rep.gained],
            "lost": [io.contact_to_json(c) for c in rep.lost],
            "assignment": io.assignment_to_json(alpha)["ratios"],
            "layout": io.layout_to_json(rep.layout),
        }
    )
    return OK if rep.equivalent else NO


def cmd_recognize(args) -> int:
    data = io.load_json(args.graph)
    if isinstance(data, dict) and "rects" in data:
        g = dual(io.layout_from_json(data))
    else:
        g = io.graph_from_json(data)
    found = recognize_dual(g)
    if found is None:
        _emit({"realizable": False})
        return NO
    out = {
        "realizable": True,
        "layout": io.layout_to_json(found.layout),
        "vertex_map": {str(v): r for v, r in found.vertex_map.items()},
        "corner_rects": list(found.corner_rects),
    }
    if args.output:
        Path(args.output).write_text(io.dumps(out["layout"]) + "\n")
    _emit(out)
    return OK


def cmd_witness(args) -> int:
    layout = io.layout_from_json(io.load_json(args.layout))
    if not is_sliceable(layout):
        kind, ratios = "windmill", windmill_witness(layout)
    else:
        kind, ratios = "brick", brick_witness(layout)
    if ratios is None:
        _emit({"kind": None, "ratios": None})
        return NO
    _emit({"kind": kind, "ratios": io.assignment_to_json(ratios)["ratios"]})
    return OK


def cmd_census(args) -> int:
    ns = range(1, args.n + 1) if args.all else [args.n]
    rows = [census(n, cap=args.cap).to_json() for n in ns]
    if args.all:
        for row in rows:
            sys.stdout.write(json.dumps(row) + "\n")
    else:
        _emit(rows[0])
    return OK


def cmd_render(args) -> int:
    layout = io.layout_from_json(io.load_json(args.layout))
    highlight: set = set(args.highlight or ())
    if args.windmill:
        w = find_windmill(layout)
        if w is not None:
            highlight |= segment_indices(layout, w.arms)
    if args.bad_segments:
        highlight |= segment_indices(layout, is_one_sided(layout)[1])
    svg = render_svg(layout, RenderOptions(args.width, not args.no_labels, frozenset(highlight), args.palette))
    if args.output:
        Path(args.output).write_text(svg)
    else:
        sys.stdout.write(svg)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arulayout", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="sliceable / one-sided / ARU class of a layout")
    s.add_argument("layout")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("realize", help="realize an aspect ratio assignment on a sliceable layout")
    s.add_argument("layout")
    s.add_argument("assignment", nargs="?", help="assignment JSON; random ratios if omitted")
    s.add_argument("--mode", choices=("strong", "weak"), default="strong")
    s.add_argument("-o", "--output", help="write the realized layout here")
    s.add_argument("--seed", type=int, default=0, help="seed for the random assignment")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("recognize", help="find a one-sided sliceable layout with the given dual")
    s.add_argument("graph", help="graph JSON (a layout JSON is replaced by its dual)")
    s.add_argument("-o", "--output", help="write the layout here")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("witness", help="an assignment that no equivalent layout realizes")
    s.add_argument("layout")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("census", help="count sliceable and one-sided sliceable layouts")
    s.add_argument("n", type=int)
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.add_argument("--all", action="store_true", help="one JSON line for every n up to N")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("render", help="draw a layout as SVG")
    s.add_argument("layout")
    s.add_argument("-o", "--output")
    s.add_argument("--width", type=int, default=400)
    s.add_argument("--palette", default="pastel")
    s.add_argument("--no-labels", action="store_true")
    s.add_argument("--highlight", nargs="*", help="rect ids to outline")
    s.add_argument("--windmill", action="store_true", help="stroke the arms of a windmill")
    s.add_argument("--bad-segments", action="store_true", help="stroke segments that are no rect's side")
    s.set_defaults(func=cmd_render)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalVerificationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL
    except (LayoutError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return BAD_INPUT
    except Exception as exc:  # anything else is our bug
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INTERNAL


def main() -> None:
    sys.exit(run())
