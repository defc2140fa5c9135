"""Command line interface: ``selfdual <verb> ...``.

Exit codes: 0 on success, 1 on domain errors (typed one-line message on
stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import hashlib
import logging
import sys
from pathlib import Path
from typing import Sequence

from selfdual import io
from selfdual.algorithms import algorithm2, algorithm3_oracle, iter_algorithm1, self_dual_family
from selfdual.embedding import PlaneGraph, dual
from selfdual.errors import GraphError
from selfdual.radial import QuadGraph, as_quad, primal, radial
from selfdual.seeds import seed_by_name
from selfdual.splitting import PPosition, edge_split, p_move
from selfdual.verification import check_bounds, is_polyhedral, is_self_dual, largest_Sn, satisfies_Sn


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read(path: str) -> PlaneGraph | QuadGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return io.loads(text)


def _plain(g: PlaneGraph | QuadGraph) -> PlaneGraph:
    return g.graph if isinstance(g, QuadGraph) else g


def _emit(out, g) -> None:
    out.write(io.dumps(g) + "\n")


def _code_name(code: bytes) -> str:
    name = code.hex()
    if len(name) > 200:
        name = hashlib.sha256(code).hexdigest()
    return name


# ---------------------------------------------------------------------------
# verbs


def cmd_seed(args, out) -> None:
    try:
        g = seed_by_name(args.name)
    except ValueError as e:
        raise _Usage(str(e)) from None
    _emit(out, g)


def cmd_construct(args, out) -> None:
    if args.family == "hn":
        if args.max is None:
            raise _Usage("construct hn needs --max")
        states = list(iter_algorithm1(args.max))
        graphs = [s.graph for s in states[1:]]
        for g in graphs if args.trace else graphs[-1:]:
            _emit(out, g)
    elif args.family == "selfdual":
        if args.tuple is None:
            raise _Usage("construct selfdual needs --tuple")
        hook = (lambda g, t: _emit(out, g)) if args.trace else None
        _emit(out, algorithm2(args.tuple, on_split=hook))
    else:
        if args.n is None:
            raise _Usage("construct gn needs --n")
        lo = 3 if args.trace else args.n
        for n in range(lo, args.n + 1):
            _emit(out, algorithm3_oracle(n) if args.oracle else self_dual_family(n))


def cmd_split(args, out) -> None:
    g = _plain(_read(args.file))
    names = args.triple.split(",")
    if len(names) != 3:
        raise _Usage("--triple needs three vertices u1,u2,u3")
    t = tuple(g.vertex_by_label(x.strip()) for x in names)
    new, _ = edge_split(g, t)
    _emit(out, new)


def cmd_pmove(args, out) -> None:
    g = _read(args.file)
    r = g if isinstance(g, QuadGraph) else as_quad(g)
    if len(args.edge) != 2:
        raise _Usage("--edge needs two vertices b,B")
    _emit(out, p_move(r, PPosition(args.edge[0], args.edge[1], args.quad1)))


def cmd_radial(args, out) -> None:
    _emit(out, radial(_plain(_read(args.file))))


def cmd_primal(args, out) -> None:
    _emit(out, primal(_plain(_read(args.file)), args.part))


def cmd_dual(args, out) -> None:
    _emit(out, dual(_plain(_read(args.file))))


def cmd_verify(args, out) -> None:
    g = _plain(_read(args.file))
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = set(checks) - {"sn", "selfdual", "polyhedral", "bounds"}
    if unknown:
        raise _Usage(f"unknown checks: {', '.join(sorted(unknown))}")
    poly = is_polyhedral(g)
    n = args.n if args.n is not None else max(largest_Sn(g), 3)
    rows: list[tuple[str, str, str]] = []
    for check in checks:
        if check == "polyhedral":
            rows.append(("polyhedral", "pass" if poly else "fail", f"p={g.p} q={g.q}"))
        elif not poly:
            rows.append((check, "n/a", "input is not polyhedral"))
        elif check == "sn":
            rows.append(("sn", "pass" if satisfies_Sn(g, n) else "fail", f"n={n}"))
        elif check == "selfdual":
            rows.append(("selfdual", "pass" if is_self_dual(g) else "fail", f"q={g.q} 2p-2={2 * g.p - 2}"))
        else:
            rows.extend((r.check, r.status, r.detail) for r in check_bounds(g, n))
    for row in rows:
        out.write("\t".join(row) + "\n")


def cmd_enumerate(args, out) -> None:
    from selfdual.enumeration import REFERENCE_TOTALS, count_selfdual, iter_closure

    if args.max_q < 6:
        raise _Usage("--max-q must be >= 6")
    emit = Path(args.emit_members) if args.emit_members else None
    if emit:
        emit.mkdir(parents=True, exist_ok=True)
    header = ["q", "closure_selfdual", "reference_total"] + (["closure_size"] if args.with_sizes else [])
    out.write("\t".join(header) + "\n")
    for level in iter_closure(args.max_q):
        ref = REFERENCE_TOTALS.get(level.size_g)
        row = [str(level.size_g), str(count_selfdual(level)), "n/a" if ref is None else str(ref)]
        if args.with_sizes:
            row.append(str(len(level)))
        out.write("\t".join(row) + "\n")
        out.flush()
        if emit:
            for code, m in level.members.items():
                io.write_graph(emit / f"{_code_name(code)}.json", m.quad)


def cmd_export(args, out) -> None:
    g = _read(args.file)
    if args.format == "dot":
        out.write(io.to_dot(g, with_faces=args.faces))
    else:
        _emit(out, g)


# ---------------------------------------------------------------------------


class _Usage(Exception):
    pass


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selfdual", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("seed", help="emit a named starting graph")
    p.add_argument("name", help="tetrahedron | wheel:<p> | pdw:<2p> | h5")
    p.set_defaults(func=cmd_seed)

    p = sub.add_parser("construct", help="run one of the constructions")
    p.add_argument("family", choices=["hn", "selfdual", "gn"])
    p.add_argument("--max", type=int, help="largest n for hn")
    p.add_argument("--tuple", type=_int_list, help="entries t_i >= 4 for selfdual")
    p.add_argument("--n", type=int, help="n for gn")
    p.add_argument("--oracle", action="store_true", help="gn via the direct edge-list construction")
    p.add_argument("--trace", action="store_true", help="emit every intermediate graph")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("split", help="edge splitting")
    p.add_argument("file")
    p.add_argument("--triple", required=True, help="u1,u2,u3 as ids or labels")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("pmove", help="P move on a quadrangulation")
    p.add_argument("file")
    p.add_argument("--edge", type=_int_list, required=True, help="b,B")
    p.add_argument("--quad1", type=int, required=True, help="face index of quad-1")
    p.set_defaults(func=cmd_pmove)

    p = sub.add_parser("radial", help="vertex-face graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_radial)

    p = sub.add_parser("primal", help="graph spanned by one class of a quadrangulation")
    p.add_argument("file")
    p.add_argument("--part", type=int, choices=[0, 1], default=0)
    p.set_defaults(func=cmd_primal)

    p = sub.add_parser("dual", help="dual graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("verify", help="TSV report of property checks")
    p.add_argument("file")
    p.add_argument("--n", type=int)
    p.add_argument("--checks", default="sn,selfdual,polyhedral,bounds")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="closure of the cube under P, with self-dual counts")
    p.add_argument("--max-q", type=int, required=True)
    p.add_argument("--emit-members", metavar="DIR")
    p.add_argument("--with-sizes", action="store_true", help="append the closure size column")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export", help="re-emit a graph as JSON or DOT")
    p.add_argument("file")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--faces", action="store_true", help="append face walks as DOT comments")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=err, format="%(message)s")
    try:
        args.func(args, out)
    except _Usage as e:
        err.write(f"usage error: {e}\n")
        return 2
    except GraphError as e:
        err.write(f"{type(e).__name__}: {e}\n")
        return 1
    except (OSError, ValueError, KeyError, TypeError) as e:
        # unreadable or malformed input files
        err.write(f"InputError: {type(e).__name__}: {e}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
