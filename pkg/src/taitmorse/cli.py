"""Command-line front end: ``taitmorse <command> --input <name|path|->``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .checks import run_checks
from .diagram_io import BUILTIN_NAMES, builtin_diagram, parse_pd, serialize_pd
from .dimers_trees import (
    count_matchings_bruteforce,
    count_matchings_fkt,
    enumerate_matchings,
)
from .errors import (
    CapExceeded,
    ColoringError,
    InvariantError,
    MapError,
    PdError,
    RestrictionError,
)
from .morse import (
    Complex2,
    cell_name,
    complex_from_diagram,
    face_poset,
    knot_from_complex,
    matching_to_morse,
)
from .planar_map import map_from_json
from .tait_overlay import NEGATIVE, POSITIVE, balance, star_candidates

COMMANDS = ("parse", "build", "count", "enumerate", "morse", "knot-from-complex", "check")
INPUT_ERRORS = (PdError, MapError, ColoringError, RestrictionError, CapExceeded,
                OSError, json.JSONDecodeError, KeyError, ValueError)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="taitmorse",
        description="Knot diagrams, balanced overlaid Tait graphs, dimers and "
                    "discrete Morse functions on the sphere.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", "-i", default="-",
                   help=f"builtin name ({', '.join(BUILTIN_NAMES)}), file path, or - for stdin")
    p.add_argument("--star", type=int, default=0, help="index into the star candidates")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--method", choices=("enumerate", "fkt", "bruteforce"), default="fkt")
    p.add_argument("--color-swap", action="store_true",
                   help="call the other checkerboard class black")
    p.add_argument("--sign-flip", action="store_true",
                   help="negate all crossing signs")
    return p


def _read(source: str, stdin) -> str:
    if source == "-":
        return stdin.read()
    if source in BUILTIN_NAMES:
        return serialize_pd(builtin_diagram(source))
    return Path(source).read_text(encoding="utf-8")


def _load(text: str, args):
    """Return ``(code or None, complex)`` for a PD string or a map JSON."""
    if text.lstrip().startswith("{"):
        return None, Complex2(map_from_json(text))
    code = parse_pd(text)
    return code, complex_from_diagram(code, args.color_swap)


def _star(d: Complex2, index: int):
    cands = star_candidates(face_poset(d))
    if not 0 <= index < len(cands):
        raise RestrictionError(f"star index {index} out of range 0..{len(cands) - 1}")
    return cands[index]


def _emit(out, obj):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args, _read(args.input, stdin), out)
    except InvariantError as exc:
        err.write(f"internal invariant violated: {exc}\n")
        return 2
    except INPUT_ERRORS as exc:
        err.write(f"invalid input: {exc}\n")
        return 1


def _dispatch(args, text, out) -> int:
    cmd = args.command
    if cmd == "parse":
        code = parse_pd(text)
        if args.format == "json":
            _emit(out, {"pd": serialize_pd(code), "crossings": [list(q) for q in code.crossings]})
        else:
            out.write(serialize_pd(code) + "\n")
        return 0

    if cmd == "knot-from-complex":
        d = Complex2(map_from_json(text))
        sign = NEGATIVE if args.sign_flip else POSITIVE
        code = knot_from_complex(d, (sign,) * d.map.edge_count)
        if args.format == "json":
            _emit(out, {"pd": serialize_pd(code)})
        else:
            out.write(serialize_pd(code) + "\n")
        return 0

    if cmd == "check":
        code = parse_pd(text)
        failed = 0
        for name, ok, detail in run_checks(code, args.color_swap):
            failed += not ok
            line = f"{'PASS' if ok else 'FAIL'} {name}"
            out.write(line + (f": {detail}" if detail else "") + "\n")
        return 2 if failed else 0

    _, d = _load(text, args)
    s = _star(d, args.star)
    bg = balance(face_poset(d), s)

    if cmd == "build":
        if args.format == "json":
            _emit(out, {"overlay": bg.overlay.to_json(), "balanced": bg.to_json()})
        elif args.format == "dot":
            out.write(bg.overlay.to_dot(star=s) + "\n" + bg.to_dot() + "\n")
        else:
            v, e, f = bg.overlay.counts()
            out.write(f"overlay: {v} vertices, {e} edges, {f} faces\n")
            out.write(f"balanced: {len(bg.blacks)} black, {len(bg.whites)} white, "
                      f"{len(bg.edge_ids)} edges, star v0={s.v0} f0={s.f0}\n")
        return 0

    if cmd == "count":
        if args.method == "enumerate":
            n = len(enumerate_matchings(bg))
        elif args.method == "bruteforce":
            n = count_matchings_bruteforce(bg)
        else:
            n = count_matchings_fkt(bg)
        if args.format == "json":
            _emit(out, {"count": str(n), "method": args.method})
        else:
            out.write(f"{n}\n")
        return 0

    if cmd == "enumerate":
        for m in enumerate_matchings(bg, args.limit):
            pairs = [list(p) for p in m.pairs(bg)]
            if args.format == "json":
                _emit(out, pairs)
            else:
                out.write(" ".join(f"{b}-{w}" for b, w, _ in pairs) + "\n")
        return 0

    # morse
    for k, m in enumerate(enumerate_matchings(bg, args.limit)):
        pairing, f = matching_to_morse(d, s, m, bg)
        if args.format == "json":
            _emit(out, f.to_json())
        elif args.format == "dot":
            out.write(pairing.to_dot(name=f"morse{k}") + "\n")
        else:
            out.write(" ".join(f"{cell_name(c)}={f.values[c]}" for c in d.cells) + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
