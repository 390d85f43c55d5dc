"""Command-line front end: ``unbent <command> GRAPH [options]``.

GRAPH is a ``plane4 v1`` file, a fixture name (``K4``, ``cube``, ``F3``, ...),
``random`` (a random plane 4-graph, see ``--seed``/``--n``) or
``random-cubic`` (a random triconnected cubic plane graph on ``--n`` vertices).

Exit codes: 0 ok, 1 validation failure, 2 strategy not applicable,
3 size guard exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import approx, collections as coll, cubic, graphcore, oracle
from .drawing import render_svg, validate_drawing
from .graphcore import PlaneGraph, PlaneGraphError
from .ortho import OrthogonalRepresentation, min_bend_representation

OK, INVALID, INAPPLICABLE, GUARD = 0, 1, 2, 3
STRATEGIES = ("schnyder", "forests", "approx3", "cubic", "oracle")
MANIFEST = "collection.txt"

log = logging.getLogger("unbent")


class StrategyInapplicable(Exception):
    pass


@dataclass
class RunReport:
    graph: str
    strategy: str
    size: int
    total_bends: int
    drawing_bends: list[int]
    straight_counts: list[int]
    elapsed: float = 0.0
    files: list[str] = field(default_factory=list)
    extra: list[tuple[str, object]] = field(default_factory=list)

    @classmethod
    def of(cls, name: str, strategy: str, c: coll.UnbentCollection) -> "RunReport":
        """Numbers are recomputed from the collection itself."""
        per = [sum(len(b) for b in r.bends) for r in c.representations]
        cov = [sum(1 for i in c.coverage.values() if i == k) for k in range(c.size)]
        return cls(name, strategy, c.size, sum(per), per, cov)

    def lines(self) -> list[str]:
        out = [
            f"graph {self.graph}",
            f"strategy {self.strategy}",
            f"size {self.size}",
            f"total_bends {self.total_bends}",
            "drawing_bends " + " ".join(map(str, self.drawing_bends)),
            "straight_witnessed " + " ".join(map(str, self.straight_counts)),
        ]
        out += [f"{k} {v}" for k, v in self.extra]
        out += [f"file {p}" for p in self.files]
        return out


# --- input ------------------------------------------------------------------------


def load_graph(source: str, seed: int = 0, n: int = 12) -> PlaneGraph:
    fx = graphcore.fixtures()
    if source in fx:
        return fx[source]
    if source == "random":
        return graphcore.random_plane_4graph(seed, n)
    if source == "random-cubic":
        if n < 4 or n % 2:
            raise PlaneGraphError("random-cubic needs an even --n >= 4")
        return graphcore.random_cubic_triconnected(seed, n // 2 + 2)
    path = Path(source)
    if not path.exists():
        raise PlaneGraphError(f"no such file or fixture: {source}")
    return graphcore.parse(path.read_text())


def _name(g: PlaneGraph, source: str) -> str:
    return g.name or Path(source).stem


# --- collections and files ----------------------------------------------------------


def build_collection(g: PlaneGraph, strategy: str, k_max: int = 3) -> coll.UnbentCollection:
    if strategy == "schnyder":
        return coll.schnyder_collection(g)
    if strategy == "forests":
        for k in (1, 2, 3):
            part = coll.forest_partition(g.n, g.edges, k)
            if part is not None:
                return coll.collection_from_forests(g, part)
        raise StrategyInapplicable("no partition into three forests")  # pragma: no cover - planar graphs have one
    if strategy == "approx3":
        return approx.approx3_collection(g)
    if strategy == "cubic":
        try:
            return cubic.cubic_collection(g)
        except (cubic.NotCubic, cubic.NotTriconnected) as exc:
            raise StrategyInapplicable(str(exc)) from exc
    if strategy == "oracle":
        res = oracle.exact_tbn(g, k_max)
        if res.witness is None:
            raise StrategyInapplicable(f"no collection with at most {k_max} drawings")
        return res.witness
    raise StrategyInapplicable(f"unknown strategy {strategy!r}")


def write_collection(c: coll.UnbentCollection, out: Path, name: str) -> list[str]:
    """SVG per drawing, the graph file and a manifest; returns the paths written."""
    out.mkdir(parents=True, exist_ok=True)
    g = c.graph
    files = []
    (out / "graph.plane4").write_text(graphcore.serialize(g))
    lines = ["collection v1", "graph graph.plane4", f"size {c.size}"]
    for i, (r, d) in enumerate(zip(c.representations, c.drawings)):
        straight = [e for e in range(g.m) if not r.bends[e]]
        svg = out / f"drawing-{i + 1}.svg"
        svg.write_text(render_svg(d, straight, title=f"{name} drawing {i + 1}"))
        files.append(str(svg))
        lines.append(f"drawing {i + 1} svg {svg.name} bends {sum(len(b) for b in r.bends)}")
        lines.append(f"angles {i + 1} " + " ".join(map(str, r.angles)))
        lines.append(f"bends {i + 1} " + " ".join(b or "-" for b in r.bends))
    for i in range(c.size):
        es = sorted(e for e, k in c.coverage.items() if k == i)
        lines.append(f"straight {i + 1} " + " ".join(map(str, es)))
    (out / MANIFEST).write_text("\n".join(lines) + "\n")
    files += [str(out / "graph.plane4"), str(out / MANIFEST)]
    return files


def read_collection(path: Path, draw: bool = True) -> coll.UnbentCollection:
    """Rebuild a collection from a manifest (or its directory)."""
    if path.is_dir():
        path = path / MANIFEST
    text = path.read_text().splitlines()
    if not text or text[0].strip() != "collection v1":
        raise ValueError(f"{path}: expected header 'collection v1'")
    g = None
    angles: dict[int, tuple[int, ...]] = {}
    bends: dict[int, tuple[str, ...]] = {}
    cov: dict[int, int] = {}
    size = 0
    for lineno, line in enumerate(text[1:], 2):
        f = line.split()
        if not f:
            continue
        try:
            if f[0] == "graph":
                g = graphcore.parse((path.parent / f[1]).read_text())
            elif f[0] == "size":
                size = int(f[1])
            elif f[0] == "angles":
                angles[int(f[1]) - 1] = tuple(int(x) for x in f[2:])
            elif f[0] == "bends":
                bends[int(f[1]) - 1] = tuple("" if x == "-" else x for x in f[2:])
            elif f[0] == "straight":
                for e in f[2:]:
                    cov[int(e)] = int(f[1]) - 1
            elif f[0] != "drawing":
                raise ValueError(f"unknown key {f[0]!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
    if g is None or sorted(angles) != list(range(size)) or sorted(bends) != list(range(size)):
        raise ValueError(f"{path}: incomplete manifest")
    reps = [OrthogonalRepresentation(g, angles[i], bends[i]) for i in range(size)]
    return coll.make_collection(g, reps, cov, draw)


# --- commands -----------------------------------------------------------------------


def cmd_validate(args) -> int:
    g = load_graph(args.graph, args.seed, args.n)
    _emit(args, [f"graph {_name(g, args.graph)}", f"n {g.n}", f"m {g.m}", f"faces {len(g.faces)}", "valid yes"])
    return OK


def cmd_collection(args) -> int:
    g = load_graph(args.graph, args.seed, args.n)
    name = _name(g, args.graph)
    t0 = time.perf_counter()
    c = build_collection(g, args.strategy, args.k_max)
    c.verify()
    rep = RunReport.of(name, args.strategy, c)
    rep.elapsed = time.perf_counter() - t0
    if args.out:
        rep.files = write_collection(c, Path(args.out), name)
        read_collection(Path(args.out)).verify()
    log.info("elapsed %.3f s", rep.elapsed)
    _emit(args, rep.lines())
    return OK


def cmd_cubic(args) -> int:
    g = load_graph(args.graph, args.seed, args.n)
    name = _name(g, args.graph)
    try:
        acc = cubic.q_account(g)
        pl = cubic.place_dummies(g)
    except (cubic.NotCubic, cubic.NotTriconnected) as exc:
        raise StrategyInapplicable(str(exc)) from exc
    c = cubic.cubic_collection(g, placement=pl)
    c.verify()
    rep = RunReport.of(name, "cubic", c)
    rep.extra = [(k, v) for k, v in acc.table()] + [("dummies", pl.total), ("placement", pl.method)]
    if args.out:
        rep.files = write_collection(c, Path(args.out), name)
        (Path(args.out) / "placement.txt").write_text(pl.serialize())
        rep.files.append(str(Path(args.out) / "placement.txt"))
    _emit(args, rep.lines())
    return OK


def cmd_stats(args) -> int:
    g = load_graph(args.graph, args.seed, args.n)
    n, m = g.n, g.m
    lines = [
        f"graph {_name(g, args.graph)}",
        f"n {n}",
        f"m {m}",
        "face_degrees " + " ".join(str(f.degree) for f in g.faces),
        f"external_degree {g.faces[g.external_face].degree}",
        f"density m<=2n-2 {'yes' if m <= 2 * n - 2 else 'no'}",
        f"density m=2n-1 {'yes' if m == 2 * n - 1 else 'no'}",
        f"density m=2n {'yes' if m == 2 * n else 'no'}",
        f"min_bends {min_bend_representation(g).total_bends}",
    ]
    cond = coll.counterexample_condition(g)
    lines.append(f"condition ({cond}) holds, un = 3" if cond else "condition none")
    try:
        cubic.check_cubic_triconnected(g)
    except (cubic.NotCubic, cubic.NotTriconnected):
        pass
    else:
        lines += [f"{k} {v}" for k, v in cubic.q_account(g).table()]
    _emit(args, lines)
    return OK


def cmd_oracle(args) -> int:
    g = load_graph(args.graph, args.seed, args.n)
    un = oracle.exact_un(g, args.k_max)
    tbn = oracle.exact_tbn(g, args.k_max)
    lines = [
        f"graph {_name(g, args.graph)}",
        f"k_max {args.k_max}",
        f"un {un.value if un.value is not None else 'none'}",
        f"tbn {tbn.value if tbn.value is not None else 'none'}",
        f"un_search {un.search_space}",
        f"tbn_search {tbn.search_space}",
    ]
    if tbn.witness is not None:
        lines.append("tbn_drawing_bends " + " ".join(map(str, tbn.witness.bends_per_drawing())))
        if args.out:
            lines += [f"file {p}" for p in write_collection(tbn.witness, Path(args.out), _name(g, args.graph))]
    _emit(args, lines)
    return OK


def cmd_validate_collection(args) -> int:
    c = read_collection(Path(args.manifest))
    c.verify()
    for d, r in zip(c.drawings, c.representations):
        validate_drawing(d, r)
    _emit(args, [f"size {c.size}", f"total_bends {c.total_bends}", "valid yes"])
    return OK


def _emit(args, lines: Sequence[str]) -> None:
    if not args.quiet:
        print("\n".join(lines))


# --- entry point ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unbent", description="Unbent collections of orthogonal drawings.")
    p.add_argument("--quiet", action="store_true", help="print nothing; use the exit code")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("graph", help="plane4 file, fixture name, 'random' or 'random-cubic'")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--n", type=int, default=12)
        s.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
        return s

    graph_cmd("validate", "parse and validate a plane graph").set_defaults(func=cmd_validate)
    s = graph_cmd("collection", "build, verify and draw an unbent collection")
    s.add_argument("--strategy", choices=STRATEGIES, default="schnyder")
    s.add_argument("--out", help="directory for SVGs and the manifest")
    s.add_argument("--k-max", type=int, default=3, help="largest collection the oracle considers")
    s.set_defaults(func=cmd_collection)
    s = graph_cmd("cubic", "optimal two-drawing collection of a triconnected cubic graph")
    s.add_argument("--out")
    s.set_defaults(func=cmd_cubic)
    graph_cmd("stats", "sizes, density conditions and cubic accounting").set_defaults(func=cmd_stats)
    s = graph_cmd("oracle", "exact un and tbn by exhaustive search")
    s.add_argument("--k-max", type=int, default=3)
    s.add_argument("--out")
    s.set_defaults(func=cmd_oracle)
    s = sub.add_parser("validate-collection", help="re-check a written collection")
    s.add_argument("manifest", help="manifest file or output directory")
    s.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_validate_collection)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except StrategyInapplicable as exc:
        print(f"error: strategy not applicable: {exc}", file=sys.stderr)
        return INAPPLICABLE
    except (coll.TooLarge, coll.DensityTooHigh) as exc:
        print(f"error: size guard: {exc}", file=sys.stderr)
        return GUARD
    except (PlaneGraphError, coll.CoverageError, ValueError, AssertionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
