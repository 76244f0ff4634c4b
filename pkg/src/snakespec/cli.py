"""Command-line front end: ``snakespec VERB INPUT [options]``.

INPUT is a direction word over R/U (use ``""`` for a single tile), ``-`` to
read graph JSON from stdin, or the path of a graph JSON file.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from typing import Callable, Optional

from . import contfrac as cfm
from .graph import (
    PlaneGraph,
    blacken,
    blacken_checked,
    boundaries,
    build_snake,
    classify_turns,
    neighbour_counts,
    rotate,
    same_edges,
)
from .matchings import (
    count_matchings,
    count_via_contfrac,
    count_via_determinant,
    legal_rotations,
    rotation_bijection_check,
)
from .polynomials import (
    IntPoly,
    charpoly_exact,
    closed_form_H,
    closed_form_L,
    closed_form_staircase,
    tridiag_charpoly,
)
from .weighting import (
    adjacency_matrix,
    face_report,
    gauge,
    gram_blocks,
    gram_matrix,
    oriented_adjacency,
    verify_kasteleyn,
    weighting_for,
)


class UsageError(Exception):
    pass


class Mismatch(Exception):
    pass


# ---------------------------------------------------------------------------
# Input handling
# ---------------------------------------------------------------------------


def load_graph(source: str, stdin=None) -> PlaneGraph:
    if source == "-":
        text = (stdin or sys.stdin).read()
        return PlaneGraph.loads(text)
    if source.endswith(".json") or os.path.sep in source:
        with open(source, encoding="utf-8") as fh:
            return PlaneGraph.loads(fh.read())
    return build_snake(source)


def recognise_family(word: Optional[str]) -> Optional[tuple[str, tuple[int, ...]]]:
    """Match a word to ``H_n``, an L-shape or ``S_{m,3}`` (up to reflection)."""
    if word is None:
        return None
    w = word if word[:1] != "U" else word.translate(str.maketrans("RU", "UR"))
    if "U" not in w:
        return ("H", (len(w) + 1,))
    m = re.fullmatch(r"(R+)(U+)", w)
    if m:
        return ("L", (len(m.group(1)) + 1, len(m.group(2)) + 1))
    if re.fullmatch(r"(RRUU)*(RR)?", w):
        return ("S3", (len(w) // 2,))
    return None


def closed_form_for(word: Optional[str]) -> IntPoly:
    fam = recognise_family(word)
    if fam is None:
        raise UsageError("closed forms exist only for H_n, L-shaped snakes and staircases S_{m,3}")
    kind, args = fam
    if kind == "H":
        return closed_form_H(*args)
    if kind == "L":
        return closed_form_L(*args)
    return closed_form_staircase(*args)


def black_turn_graph(g: PlaneGraph) -> PlaneGraph:
    """``g`` itself when its turns are black (or absent), else ``black(g)``."""
    if classify_turns(g).turn_colour in ("black", "none"):
        return g
    return blacken(g)


def poly_out(p: IntPoly, fmt: str):
    return {"text": p.to_text(), "coeffs": p.to_json()} if fmt == "json" else p.to_text()


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------


def cmd_build(g: PlaneGraph, args) -> object:
    if args.format == "json":
        return g.to_json()
    if args.format == "dot":
        return g.to_dot()
    rep = classify_turns(g)
    return "\n".join(
        [
            f"word: {g.word if g.word is not None else '(graph)'}",
            f"tiles: {g.n_tiles}",
            f"vertices: {g.n_vertices}",
            f"edges: {len(g.edges)}",
            f"turn colour: {rep.turn_colour}",
        ]
    )


def cmd_turns(g: PlaneGraph, args) -> object:
    rep = classify_turns(g)
    if args.format == "json":
        return rep.to_json()
    lines = [f"turn colour: {rep.turn_colour}", f"turning tiles: {list(rep.turning_tiles)}"]
    for v, a in rep.turns:
        lines.append(f"vertex {v} {g.coords[v]}: {a}-turn, {g.colour(v)}")
    return "\n".join(lines)


def cmd_boundary(g: PlaneGraph, args) -> object:
    b = boundaries(g)
    if args.format == "json":
        return b.to_json()
    fmt_path = lambda p: " ".join(f"{v}{'*' if g.black[v] else ''}" for v in p)  # noqa: E731
    return "\n".join(
        [
            f"upper: {fmt_path(b.upper)}",
            f"lower: {fmt_path(b.lower)}",
            f"start edge: {b.start_edge}",
            f"end edge: {b.end_edge}",
            f"internal edges: {sorted(b.internal_edges)}",
            "(* marks black vertices)",
        ]
    )


def cmd_weight(g: PlaneGraph, args) -> object:
    w = weighting_for(g, args.kind)
    ok = verify_kasteleyn(g, w)
    if args.format == "dot":
        return g.to_dot(dict(w.items()))
    if args.format == "json":
        return {"weights": w.to_json(), "kasteleyn": ok}
    lines = [f"{e}: {s:+d}" for e, s in w.items()]
    for name, k, neg, good in face_report(g, w):
        lines.append(f"{name}: {k}-gon, {neg} negative, {'ok' if good else 'FAIL'}")
    lines.append(f"kasteleyn: {ok}")
    if not ok:
        raise Mismatch("\n".join(lines))
    return "\n".join(lines)


def charpoly_by(method: str, g: PlaneGraph, side: Optional[str]) -> IntPoly:
    if method == "closed-form":
        if side is not None or g.generalised:
            raise UsageError("closed forms give the full char poly of a grid snake; drop --side")
        return closed_form_for(g.word)
    h = black_turn_graph(g)
    sides = [side] if side else ["upper", "lower"]
    if method == "contfrac":
        p = IntPoly([1])
        for s in sides:
            p = p * cfm.charpoly_from_boundary(neighbour_counts(h, s))
        return p
    blocks = gram_blocks(h, weighting_for(h))
    if method == "recursion":
        p = IntPoly([1])
        for s in sides:
            p = p * tridiag_charpoly(blocks.diagonal(s))
        return p
    if method == "exact":
        if side is None:
            return charpoly_exact(gram_matrix(h, weighting_for(h)))
        return charpoly_exact(blocks.B1 if side == "upper" else blocks.B2)
    raise UsageError(f"unknown method {method!r}")


def cmd_charpoly(g: PlaneGraph, args) -> object:
    if g is not black_turn_graph(g):
        print("note: turns are not monochromatic; computing on black(G)", file=sys.stderr)
    if args.method == "all":
        methods = ["recursion", "contfrac", "exact"]
        if args.side is None and not g.generalised and recognise_family(g.word):
            methods.insert(1, "closed-form")
    else:
        methods = [args.method]
    results = {m: charpoly_by(m, g, args.side) for m in methods}
    if len(set(results.values())) != 1:
        raise Mismatch("\n".join(f"{m}: {p}" for m, p in results.items()))
    p = next(iter(results.values()))
    return poly_out(p, args.format)


def cmd_matchings(g: PlaneGraph, args) -> object:
    counters: dict[str, Callable[[PlaneGraph], int]] = {
        "enumerate": count_matchings,
        "det": count_via_determinant,
        "contfrac": count_via_contfrac,
    }
    methods = list(counters) if args.method == "all" else [args.method]
    counts = {m: counters[m](g) for m in methods}
    if len(set(counts.values())) != 1:
        raise Mismatch(" ".join(f"{m}={c}" for m, c in counts.items()))
    value = next(iter(counts.values()))
    if args.format == "json":
        return {"count": str(value), "methods": {m: str(c) for m, c in counts.items()}}
    return str(value)


def cmd_blacken(g: PlaneGraph, args) -> object:
    bg = blacken_checked(g)
    if args.format == "json":
        return bg.to_json()
    if args.format == "dot":
        return bg.to_dot()
    rep = classify_turns(bg)
    return "\n".join(
        [
            f"rotated: {bg.generalised}",
            f"turn colour: {rep.turn_colour}",
            f"upper e: {neighbour_counts(bg, 'upper')}",
            f"lower e: {neighbour_counts(bg, 'lower')}",
        ]
    )


def cmd_contfrac(source: str, g: Optional[PlaneGraph], args) -> object:
    if g is None:
        cf = cfm.CFrac.parse(source)
        if cf.kind == "positive":
            other = cfm.pos_to_neg(cfm.normalize_even(cf))
        else:
            other = cfm.neg_to_pos(cf)
        v = cf.value()
        if args.format == "json":
            return {"input": cf.to_json(), "value": str(v), "converted": other.to_json()}
        return f"{cf} = {other} = {v}"
    bg = blacken(g)
    a = cfm.sign_sequence(g, args.side)
    data = {}
    for s in ("upper", "lower"):
        c = cfm.boundary_contfrac(neighbour_counts(bg, s))
        data[s] = (c, c.value())
    if args.format == "json":
        return {
            "sign_sequence": a.to_json(),
            "sign_sequence_value": str(a.value()),
            **{s: {"terms": c.to_json(), "value": str(v)} for s, (c, v) in data.items()},
        }
    lines = [f"sign sequence: {a} = {a.value()}"]
    for s, (c, v) in data.items():
        lines.append(f"{s}: {c} = {v}")
    return "\n".join(lines)


def run_checks(g: PlaneGraph, seed: int) -> list[tuple[str, bool, str]]:
    rng = random.Random(seed)
    checks: list[tuple[str, bool, str]] = []

    def check(name: str, fn: Callable[[], object]):
        try:
            res = fn()
            ok = res is not False
            detail = "" if isinstance(res, bool) or res is None else str(res)
        except Exception as exc:  # a failing check is a report, not a crash
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        checks.append((name, ok, detail))

    check("embedding", lambda: g.validate())
    M = count_matchings(g)
    kinds = ["generic"] if g.generalised else ["snake", "generic"]
    for kind in kinds:
        w = weighting_for(g, kind)
        check(f"kasteleyn ({kind})", lambda w=w: verify_kasteleyn(g, w))
        check(f"|det B| = M ({kind})", lambda kind=kind: count_via_determinant(g, kind) == M)

        def det_a(w=w):
            return abs(adjacency_matrix(g, w).det()) == M * M and oriented_adjacency(g, w).det() == M * M

        check(f"|det A| = det(oriented) = M^2 ({kind})", det_a)

    def squares():
        w = weighting_for(g, "generic")
        return charpoly_exact(adjacency_matrix(g, w)) == charpoly_exact(gram_matrix(g, w)).substitute_square()

    check("charpoly(A)(t) = charpoly(BB^T)(t^2)", squares)

    def gauge_orbit():
        w = weighting_for(g, "generic")
        ref = charpoly_exact(adjacency_matrix(g, w))
        for _ in range(10):
            for v in rng.sample(range(g.n_vertices), rng.randint(1, g.n_vertices)):
                w = gauge(w, g, v)
            if not verify_kasteleyn(g, w) or charpoly_exact(adjacency_matrix(g, w)) != ref:
                return False
        return True

    check("gauge orbit", gauge_orbit)
    if not g.generalised:
        check("continued fraction count = M", lambda: count_via_contfrac(g) == M)
        check("sign sequence numerator = M", lambda: cfm.sign_sequence(g).convergents()[-1].p == M)
        check("black(G) independent of order", lambda: same_edges(blacken(g), blacken(g, "reverse")))
        check("M(black(G)) = M", lambda: count_matchings(blacken(g)) == M)

    def rotations():
        ts = legal_rotations(g)
        for t in ts:
            rotation_bijection_check(g, t)
            if not same_edges(rotate(rotate(g, t), t), g):
                return False
        return f"{len(ts)} legal rotations"

    check("rotation bijection", rotations)

    h = black_turn_graph(g)

    def methods_agree():
        polys = {m: charpoly_by(m, h, None) for m in ("recursion", "contfrac", "exact")}
        if recognise_family(g.word) and not g.generalised:
            polys["closed-form"] = charpoly_by("closed-form", g, None)
        return len(set(polys.values())) == 1

    check("char poly methods agree", methods_agree)
    return checks


def cmd_verify(g: PlaneGraph, args) -> object:
    checks = run_checks(g, args.seed)
    failed = [c for c in checks if not c[1]]
    if args.format == "json":
        out = {"checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in checks], "ok": not failed}
        text = json.dumps(out, indent=2, sort_keys=True)
    else:
        text = "\n".join(f"{'PASS' if ok else 'FAIL'} {n}" + (f" ({d})" if d else "") for n, ok, d in checks)
    if failed:
        raise Mismatch(text)
    return text


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="snakespec", description="Snake graph spectra and matchings.")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name: str, help_text: str, formats=("text", "json")):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("input", help='direction word over R/U ("" for one tile), "-" for JSON on stdin, or a JSON file')
        sp.add_argument("--format", choices=formats, default="text")
        return sp

    add("build", "build a snake graph", ("text", "json", "dot"))
    add("turns", "list turns and turning tiles")
    add("boundary", "upper and lower boundary paths")
    sp = add("weight", "Kasteleyn weighting", ("text", "json", "dot"))
    sp.add_argument("--kind", choices=["auto", "snake", "generic"], default="auto")
    sp = add("charpoly", "char poly of B B^T (or of one boundary block)")
    sp.add_argument("--method", choices=["recursion", "closed-form", "contfrac", "exact", "all"], default="recursion")
    sp.add_argument("--side", choices=["upper", "lower"], default=None)
    sp = add("matchings", "count perfect matchings")
    sp.add_argument("--method", choices=["enumerate", "det", "contfrac", "all"], default="all")
    add("blacken", "rotate until all turns are black", ("text", "json", "dot"))
    sp = add("contfrac", "continued fractions of a graph, or convert a literal like [2,2,1,1]")
    sp.add_argument("--side", choices=["upper", "lower"], default=None)
    sp = add("verify", "run the invariant suite on one graph")
    sp.add_argument("--seed", type=int, default=0)
    return p


def render(result: object) -> str:
    if isinstance(result, (dict, list)):
        return json.dumps(result, indent=2, sort_keys=True)
    return str(result).rstrip("\n")


def main(argv=None, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.verb == "contfrac" and args.input.lstrip().startswith("["):
            out = cmd_contfrac(args.input, None, args)
        else:
            g = load_graph(args.input, stdin)
            handler = {
                "build": cmd_build,
                "turns": cmd_turns,
                "boundary": cmd_boundary,
                "weight": cmd_weight,
                "charpoly": cmd_charpoly,
                "matchings": cmd_matchings,
                "blacken": cmd_blacken,
                "verify": cmd_verify,
            }.get(args.verb)
            out = cmd_contfrac(args.input, g, args) if handler is None else handler(g, args)
    except Mismatch as exc:
        print(str(exc), file=stdout)
        print("snakespec: verification mismatch", file=stderr)
        return 1
    except (UsageError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"snakespec: error: {exc}", file=stderr)
        return 2
    print(render(out), file=stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
