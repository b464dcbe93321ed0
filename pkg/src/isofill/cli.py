"""Command line entry points.

Every artifact starts with a ``# isofill <command> key=value ...`` line
recording the configuration, so a run can be replayed from its output.
Exit codes: 0 success, 1 failure or infeasibility (a certificate or
report is still written), 2 unreadable input.
"""
from __future__ import annotations

import argparse
import os
import random
import sys

from .complex_core import (ParseError, count_triangles,
                           fmt_atom, parse_complex, parse_filling, parse_loop,
                           serialize_complex, serialize_filling, validate_filling)

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


class InputError(Exception):
    """Unreadable or malformed input; maps to exit status 2."""


def threads() -> int:
    """Worker cap from ISOFILL_THREADS (default 1)."""
    raw = os.environ.get("ISOFILL_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"ISOFILL_THREADS must be an integer, got {raw!r}") from None
    if n < 1:
        raise InputError("ISOFILL_THREADS must be at least 1")
    return n


def _surface(text: str):
    try:
        g, p = (int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"--surface wants g,p, got {text!r}") from None
    return g, p


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _header(args, keys) -> str:
    vals = " ".join(f"{k}={getattr(args, k)}" for k in keys)
    return f"# isofill {args.command} {vals} threads={threads()}\n"


def _emit(args, text: str) -> None:
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _weights(toks) -> tuple:
    try:
        return tuple(int(t) for t in toks)
    except ValueError:
        raise InputError(f"bad weight in {' '.join(toks)!r}") from None


# multicurve loops --------------------------------------------------------------

def serialize_multicurve_loop(loop) -> str:
    T = loop.T
    rows = ["multicurve-loop v1", f"surface {T.genus} {T.punctures}"]
    rows += ["curve " + " ".join(map(str, C.weights)) for C in loop.curves]
    return "\n".join(rows) + "\n"


def parse_multicurve_loop(text: str):
    from .surface import Lamination, LaminationError, new_surface
    from .tightener import LoopError, MultiCurveLoop
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or rows[0] != ["multicurve-loop", "v1"]:
        raise InputError("missing header 'multicurve-loop v1'")
    T, curves = None, []
    for r in rows[1:]:
        if r[0] == "surface" and len(r) == 3:
            T = new_surface(*_weights(r[1:]))
        elif r[0] == "curve" and T is not None:
            try:
                curves.append(Lamination(T, _weights(r[1:])))
            except (ValueError, LaminationError) as exc:
                raise InputError(str(exc)) from exc
        else:
            raise InputError(f"bad record: {' '.join(r)}")
    try:
        return MultiCurveLoop(curves)
    except LoopError as exc:
        raise InputError(str(exc)) from exc


# commands -----------------------------------------------------------------------

def _square_source(text: str):
    if text.lstrip().startswith("square-loop") or "\nsquare-loop" in text:
        from .hex_certifier import parse_square_loop
        try:
            return parse_square_loop(text)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    return None


def cmd_fill(args) -> int:
    from .filler_search import certify_infeasible_within, minimal_fill
    text = _read(args.complex)
    spec = _square_source(text)
    if spec is not None:
        K = spec.oracle(args.window)
        loop = spec.loop
    else:
        try:
            K, _, _ = parse_complex(text)
        except ParseError as exc:
            raise InputError(str(exc)) from exc
    if args.loop:
        try:
            loop = parse_loop(_read(args.loop))
        except ParseError as exc:
            raise InputError(str(exc)) from exc
    elif spec is None:
        raise InputError("--loop is required unless the complex is a square-loop file")
    head = _header(args, ("complex", "loop", "budget", "window"))
    try:
        res = minimal_fill(loop, K, args.budget)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if res.found:
        tag = "exact" if res.exact else "upper-bound-only"
        _emit(args, head + f"# triangles {res.count} {tag} nodes {res.nodes}\n"
              + serialize_filling(res.disc, res.fmap))
        return EXIT_OK
    if not K.exhaustive:
        _emit(args, head + "exhausted-budget v1\n"
              f"budget {args.budget}\nwindow {args.window}\n"
              "certified no  # candidate enumeration is partial\n")
        return EXIT_FAIL
    cert = certify_infeasible_within(loop, K, args.budget)
    rows = ["infeasible-certificate v1", serialize_loop_line(cert.loop),
            f"budget {cert.budget}", f"lower-bound {cert.lower_bound}",
            f"nodes {cert.nodes}", f"replay {'ok' if cert.replay() else 'mismatch'}"]
    for key in sorted(cert.table, key=lambda k: (len(k), [fmt_atom(v) for v in k])):
        kind, v = cert.table[key]
        rows.append(f"entry {kind} {v} " + " ".join(fmt_atom(x) for x in key))
    _emit(args, head + "\n".join(rows) + "\n")
    return EXIT_FAIL


def serialize_loop_line(vs) -> str:
    return "loop " + " ".join(fmt_atom(v) for v in vs)


def cmd_certify(args) -> int:
    from .hex_certifier import HexError, certify
    spec = _square_source(_read(args.spec))
    if spec is None:
        raise InputError("--spec must be a square-loop file")
    try:
        P, f = parse_filling(_read(args.filling))
    except ParseError as exc:
        raise InputError(str(exc)) from exc
    head = _header(args, ("filling", "spec"))
    try:
        cert = certify(P, f, spec)
    except HexError as exc:
        _emit(args, head + f"gale-failure\nreason {exc}\n")
        return EXIT_FAIL
    _emit(args, head + cert.to_text())
    return EXIT_OK if cert.holds else EXIT_FAIL


def cmd_tighten(args) -> int:
    from .surface import new_surface
    from .tightener import LoopError, check_annulus, random_loop, tighten_loop
    g, p = _surface(args.surface)
    T = new_surface(g, p)
    if args.loop:
        loop = parse_multicurve_loop(_read(args.loop))
        if (loop.T.genus, loop.T.punctures) != (g, p):
            raise InputError("loop file is on a different surface")
    else:
        loop = random_loop(T, args.length, random.Random(args.seed))
    head = _header(args, ("surface", "loop", "seed", "length"))
    try:
        res = tighten_loop(loop)
    except LoopError as exc:
        _emit(args, head + f"tighten-failure\nreason {exc}\n")
        return EXIT_FAIL
    A = res.annulus
    rows = ["tighten-report v1", f"surface {g} {p}"]
    rows += ["start " + fmt_atom(w) for w in res.start]
    rows += ["input " + fmt_atom(C.weights) for C in loop.curves]
    rows.append("sweep " + " ".join(map(str, res.log)))
    rows.append(f"tightenings {res.tightenings}")
    rows += ["loop " + fmt_atom(C.weights) for C in res.loop.curves]
    rows.append(f"status {res.status}")
    if res.shortcut is not None:
        sc = res.shortcut
        rows.append(f"shortcut {sc.variant} {sc.j % len(loop)} "
                    + " ".join(fmt_atom(w.weights) for w in sc.witness))
    rows.append("annulus-outer " + " ".join(map(str, A.outer)))
    rows.append("annulus-inner " + " ".join(map(str, A.inner)))
    rows += ["annulus-triangle " + " ".join(map(str, t)) for t in A.triangles]
    rows += [f"annulus-map {v} {fmt_atom(A.images[v])}" for v in sorted(A.images)]
    ok = res.verified and check_annulus(res) and A.size <= 2 * len(loop)
    rows.append(f"annulus-size {A.size} <= {2 * len(loop)}")
    rows.append(f"verified {'yes' if ok else 'no'}")
    _emit(args, head + "\n".join(rows) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def _metric(text: str, embedding: str | None):
    from .cat0 import MetricFlagComplex
    try:
        K, shapes, coords = parse_complex(text)
        if embedding:
            _, _, more = parse_complex("flag-complex v1\n" + "\n".join(
                ln for ln in embedding.splitlines() if ln.split()[:1] == ["coord"]))
            coords.update(more)
    except ParseError as exc:
        raise InputError(str(exc)) from exc
    missing = [v for v in K.vertices() if v not in coords]
    if missing:
        raise InputError(f"no coordinate for vertex {missing[0]}")
    try:
        return MetricFlagComplex(K, coords, [tuple(s) for s in shapes])
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_cat0(args) -> int:
    from .cat0 import (ClaimFailure, ThickFailure, check_bounded, check_thick,
                       planar_oracle, quadratic_fill)
    K = _metric(_read(args.complex), _read(args.embedding) if args.embedding else None)
    try:
        loop = parse_loop(_read(args.loop))
    except ParseError as exc:
        raise InputError(str(exc)) from exc
    head = _header(args, ("complex", "embedding", "loop"))
    try:
        thick = check_thick(K)
        bounded = check_bounded(K, thick.eps / 2)
        O = planar_oracle(K)
    except ThickFailure as exc:
        _emit(args, head + f"thick-failure\nreason {exc}\nwitness {exc.witness}\n")
        return EXIT_FAIL
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    try:
        P, f, rep = quadratic_fill(K, O, loop, thick, bounded)
    except ClaimFailure as exc:
        _emit(args, head + f"claim-failure\nreason {exc}\nwitness {exc.witness}\n")
        return EXIT_FAIL
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    ok = bool(validate_filling(P, f, loop, K.complex))
    notes = [f"# eps {thick.eps}", f"# D {bounded.D}"]
    if rep is not None:
        ok = ok and rep.check()
        notes += [f"# N {rep.N}", f"# cells {' '.join(map(str, rep.cell_counts))}",
                  f"# collar {rep.collar_count}",
                  f"# triangles {rep.total} <= bound {rep.bound}"]
    else:
        notes.append(f"# triangles {count_triangles(P)}")
    notes.append(f"# valid {'yes' if ok else 'no'}")
    _emit(args, head + "\n".join(notes) + "\n" + serialize_filling(P, f))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gen_surface(args) -> int:
    from .surface import from_path, new_surface, random_arc, random_curve
    from .surface.lamination import serialize_lamination
    from .tightener import random_loop
    g, p = _surface(args.surface)
    try:
        T = new_surface(g, p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    rng = random.Random(args.seed)
    head = _header(args, ("surface", "seed", "kind", "length"))
    if args.kind == "loop":
        body = serialize_multicurve_loop(random_loop(T, args.length, rng))
    else:
        make = random_curve if args.kind == "curve" else random_arc
        body = serialize_lamination(from_path(T, make(T, rng)))
    _emit(args, head + body)
    return EXIT_OK


def cmd_gen_suspension(args) -> int:
    from .cat0 import suspension_complex
    if args.M < 1:
        raise InputError("--M must be at least 1")
    S = suspension_complex(args.M)
    text = serialize_complex(S.complex, S.triangles, S.coords)
    _emit(args, _header(args, ("M",)) + text)
    return EXIT_OK


def cmd_gen_square_loop(args) -> int:
    from .hex_certifier import HexError, build_square_loop
    g, p = _surface(args.surface)
    try:
        spec = build_square_loop(g, p, args.k)
    except HexError as exc:
        raise InputError(str(exc)) from exc
    _emit(args, _header(args, ("surface", "k")) + spec.to_text())
    return EXIT_OK


# argument parsing -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="isofill", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--out", "-o", default=None, help="output file (default stdout)")
        return sp

    sp = cmd("fill", cmd_fill, "least-triangle disc filling of a loop")
    sp.add_argument("--complex", required=True, help="flag-complex or square-loop file")
    sp.add_argument("--loop", default=None)
    sp.add_argument("--budget", type=int, required=True)
    sp.add_argument("--window", type=int, default=4, help="arc window for surface complexes")

    sp = cmd("certify", cmd_certify, "lower-bound certificate for a square filling")
    sp.add_argument("--filling", required=True)
    sp.add_argument("--spec", required=True, help="square-loop file")

    sp = cmd("tighten", cmd_tighten, "run the tightening procedure on a loop")
    sp.add_argument("--surface", required=True, help="g,p")
    sp.add_argument("--loop", default=None, help="multicurve-loop file (else random)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--length", type=int, default=5, choices=(5, 6))

    sp = cmd("cat0", cmd_cat0, "quadratic filling in a planar CAT(0) complex")
    sp.add_argument("--complex", required=True)
    sp.add_argument("--embedding", default=None, help="file of coord records")
    sp.add_argument("--loop", required=True)

    sp = cmd("gen-surface", cmd_gen_surface, "seeded random curve, arc or loop")
    sp.add_argument("--surface", required=True, help="g,p")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--kind", choices=("curve", "arc", "loop"), default="curve")
    sp.add_argument("--length", type=int, default=5)

    sp = cmd("gen-suspension", cmd_gen_suspension, "suspension complex of a line")
    sp.add_argument("--M", type=int, required=True)

    sp = cmd("gen-square-loop", cmd_gen_square_loop, "square loop of arcs with twist k")
    sp.add_argument("--surface", required=True, help="g,p")
    sp.add_argument("--k", type=int, required=True)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        threads()
        return args.func(args)
    except InputError as exc:
        print(f"isofill: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
