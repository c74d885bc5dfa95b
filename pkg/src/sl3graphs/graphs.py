"""Windowed generation of the action multigraphs for all thirteen graph families.

Each family is an infinite directed multigraph on lattice offsets (orbit representatives
for the Whittaker families).  Edges follow exact case tables; a window materializes the
finite subgraph induced on a box, dropping edges whose target leaves the box.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, NamedTuple

from .categories import CategoryId, Functor
from .errors import EmptyWindowError, InvalidVertexError
from .weights import CosetClass, third_orbit

IntPair = tuple[int, int]
Move = IntPair | str
LONG = "long"  # label for the wall-translation edges that are not unit translations

F_MOVES: tuple[IntPair, ...] = ((1, 0), (0, -1), (-1, 1))
G_MOVES: tuple[IntPair, ...] = ((0, 1), (1, -1), (-1, 0))

_DUAL = {
    CategoryId.N1: CategoryId.N2,
    CategoryId.N2: CategoryId.N1,
    CategoryId.N3: CategoryId.N3,
    CategoryId.M2: CategoryId.M4,
    CategoryId.M4: CategoryId.M2,
    CategoryId.M6: CategoryId.M6,
}

# Families whose graph has no doubled arrows; for these the G-graph is the reversed
# F-graph and the underlying category is semi-simple.
SEMISIMPLE = frozenset({
    CategoryId.REGULAR, CategoryId.M1, CategoryId.M3, CategoryId.M5,
    CategoryId.GENERIC_K, CategoryId.WHITTAKER1, CategoryId.WHITTAKER2,
})

_THIRD_CLASS = {
    CategoryId.WHITTAKER1: CosetClass.THIRD_ONE,
    CategoryId.WHITTAKER2: CosetClass.THIRD_TWO,
}


def whittaker_orbit(cat: CategoryId, v: IntPair) -> frozenset[IntPair]:
    return third_orbit(v, _THIRD_CLASS[cat])


def canonical_rep(cat: CategoryId, v: IntPair) -> IntPair:
    """Lexicographically least offset in the 3-element orbit of v."""
    return min(whittaker_orbit(cat, v))


def vertex_set(cat: CategoryId) -> Callable[[IntPair], bool]:
    """Membership predicate for the family's vertex set."""
    if cat is CategoryId.REGULAR:
        return lambda v: v[0] >= 0 and v[1] >= 0
    if cat is CategoryId.N1:
        return lambda v: v[0] <= -1 and v[1] >= 0
    if cat is CategoryId.N2:
        return lambda v: v[0] >= 0 and v[1] <= -1
    if cat is CategoryId.N3:
        return lambda v: v[0] <= -1 and v[1] <= -1
    if cat is CategoryId.M1:
        return lambda v: v[0] >= 0
    if cat is CategoryId.M2:
        return lambda v: v[0] <= -1
    if cat is CategoryId.M3:
        return lambda v: v[1] >= 0
    if cat is CategoryId.M4:
        return lambda v: v[1] <= -1
    if cat is CategoryId.M5:
        return lambda v: v[0] + v[1] >= 0
    if cat is CategoryId.M6:
        return lambda v: v[0] + v[1] <= -1
    if cat is CategoryId.GENERIC_K:
        return lambda v: True
    return lambda v: canonical_rep(cat, v) == v


def _require(cat: CategoryId, v: IntPair) -> None:
    if not vertex_set(cat)(v):
        raise InvalidVertexError(f"{v} is not a vertex of {cat.value}")


def _unit(targets: Iterable[tuple[IntPair, int]], src: IntPair) -> list[tuple[IntPair, int, Move]]:
    return [(t, m, (t[0] - src[0], t[1] - src[1])) for t, m in targets]


def _all_three(p: int, q: int) -> list[tuple[IntPair, int, Move]]:
    return [((p + dx, q + dy), 1, (dx, dy)) for dx, dy in F_MOVES]


def _out_f_regular(p: int, q: int):
    out = [((p + 1, q), 1, (1, 0))]
    if q >= 1:
        out.append(((p, q - 1), 1, (0, -1)))
    if p >= 1:
        out.append(((p - 1, q + 1), 1, (-1, 1)))
    return out


def _out_f_n1(p: int, q: int):
    if p == -1 and q == 0:
        return [((-2, 1), 1, (-1, 1))]
    if p == -1:
        return _unit([((-1, q - 1), 1), ((-2, q + 1), 1)], (p, q))
    if p == -2 and q == 0:
        return _unit([((-1, 0), 1), ((-3, 1), 1)], (p, q))
    if p == -2:
        return _unit([((-1, q), 2), ((-2, q - 1), 1), ((-3, q + 1), 1)], (p, q))
    if p == -3 and q == 0:
        return [((-4, 1), 1, (-1, 1)), ((-2, 0), 2, (1, 0)), ((-1, 1), 1, LONG)]
    if q == 0:  # p <= -4
        return [((p - 1, 1), 1, (-1, 1)), ((p + 1, 0), 1, (1, 0)), ((-1, -p - 2), 1, LONG)]
    if p + q == -2:
        return _unit([((p, q - 1), 1), ((p - 1, q + 1), 1)], (p, q))
    if p + q == -3:
        return _unit([((p + 1, q), 2), ((p, q - 1), 1), ((p - 1, q + 1), 1)], (p, q))
    return _all_three(p, q)


def _out_f_n2(p: int, q: int):
    if q == -1:
        return _unit([((p + 1, -1), 1), ((p, -2), 1)], (p, q))
    if q == -2 and p == 0:
        return [((0, -3), 1, (0, -1))]
    if q == -2:
        return _unit([((p + 1, -2), 1), ((p, -3), 1), ((p - 1, -1), 2)], (p, q))
    if p == 0 and q == -3:
        return [((1, -3), 2, (1, 0)), ((0, -4), 1, (0, -1)), ((0, -1), 1, LONG)]
    if p == 0:  # q <= -4
        return [((1, q), 1, (1, 0)), ((0, q - 1), 1, (0, -1)), ((-q - 3, -1), 1, LONG)]
    if p + q == -2:
        return _unit([((p, q - 1), 1), ((p - 1, q + 1), 1)], (p, q))
    if p + q == -3:
        return _unit([((p + 1, q), 2), ((p, q - 1), 1), ((p - 1, q + 1), 1)], (p, q))
    return _all_three(p, q)


def _out_f_n3(p: int, q: int):
    if (p, q) == (-1, -1):
        return [((-1, -2), 1, (0, -1))]
    if (p, q) == (-2, -1):
        return _unit([((-1, -1), 3), ((-2, -2), 1)], (p, q))
    if q == -1:
        return _unit([((p + 1, -1), 1), ((p, -2), 1)], (p, q))
    if (p, q) == (-1, -2):
        return _unit([((-2, -1), 2), ((-1, -3), 1)], (p, q))
    if p == -1:
        return _unit([((-1, q - 1), 1), ((-2, q + 1), 1)], (p, q))
    if (p, q) == (-2, -2):
        return _unit([((-1, -2), 2), ((-3, -1), 2), ((-2, -3), 1)], (p, q))
    if p == -2:
        return _unit([((-1, q), 2), ((-2, q - 1), 1), ((-3, q + 1), 1)], (p, q))
    if q == -2:
        return _unit([((p + 1, -2), 1), ((p, -3), 1), ((p - 1, -1), 2)], (p, q))
    return _all_three(p, q)


def _out_f_m1(p: int, q: int):
    if p == 0:
        return _unit([((1, q), 1), ((0, q - 1), 1)], (p, q))
    return _all_three(p, q)


def _out_f_m2(p: int, q: int):
    if p == -1:
        return _unit([((-1, q - 1), 1), ((-2, q + 1), 1)], (p, q))
    if p == -2:
        return _unit([((-1, q), 2), ((-2, q - 1), 1), ((-3, q + 1), 1)], (p, q))
    return _all_three(p, q)


def _out_f_m3(p: int, q: int):
    if q == 0:
        return _unit([((p + 1, 0), 1), ((p - 1, 1), 1)], (p, q))
    return _all_three(p, q)


def _out_f_m4(p: int, q: int):
    if q == -1:
        return _unit([((p + 1, -1), 1), ((p, -2), 1)], (p, q))
    if q == -2:
        return _unit([((p - 1, -1), 2), ((p + 1, -2), 1), ((p, -3), 1)], (p, q))
    return _all_three(p, q)


def _out_f_m5(p: int, q: int):
    if p + q == 0:
        return _unit([((p + 1, q), 1), ((p - 1, q + 1), 1)], (p, q))
    return _all_three(p, q)


def _out_f_m6(p: int, q: int):
    if p + q == -1:
        return _unit([((p, q - 1), 1), ((p - 1, q + 1), 1)], (p, q))
    if p + q == -2:
        return _unit([((p + 1, q), 2), ((p, q - 1), 1), ((p - 1, q + 1), 1)], (p, q))
    return _all_three(p, q)


_F_TABLE = {
    CategoryId.REGULAR: _out_f_regular,
    CategoryId.N1: _out_f_n1,
    CategoryId.N2: _out_f_n2,
    CategoryId.N3: _out_f_n3,
    CategoryId.M1: _out_f_m1,
    CategoryId.M2: _out_f_m2,
    CategoryId.M3: _out_f_m3,
    CategoryId.M4: _out_f_m4,
    CategoryId.M5: _out_f_m5,
    CategoryId.M6: _out_f_m6,
    CategoryId.GENERIC_K: lambda p, q: _all_three(p, q),
}


def out_edges_f(cat: CategoryId, v: IntPair) -> list[tuple[IntPair, int, Move]]:
    """Out-edges of v in the family's F-graph, as (target, multiplicity, move)."""
    _require(cat, v)
    if cat in _THIRD_CLASS:
        out = []
        for dx, dy in F_MOVES:
            out.append((canonical_rep(cat, (v[0] + dx, v[1] + dy)), 1, (dx, dy)))
        return out
    return _F_TABLE[cat](*v)


def _swap_edges(edges: list[tuple[IntPair, int, Move]]) -> list[tuple[IntPair, int, Move]]:
    out = []
    for t, m, move in edges:
        mv = move if move == LONG else (move[1], move[0])
        out.append(((t[1], t[0]), m, mv))
    return out


def _neg(move: Move) -> Move:
    return move if move == LONG else (-move[0], -move[1])


def out_edges_g(cat: CategoryId, v: IntPair) -> list[tuple[IntPair, int, Move]]:
    """Out-edges of v in the G-graph.

    Doubled-arrow families use the diagram-automorphism duality (swap of coordinates
    against the dual family); the semi-simple families use the graph transpose.
    """
    _require(cat, v)
    if cat in _DUAL:
        return _swap_edges(out_edges_f(_DUAL[cat], (v[1], v[0])))
    return [(u, m, _neg(move)) for u, m, move in in_edges_f(cat, v)]


def _long_in_sources(cat: CategoryId, v: IntPair) -> list[IntPair]:
    p, q = v
    if cat is CategoryId.N1 and p == -1 and q >= 1:
        return [(-q - 2, 0)]
    if cat is CategoryId.N2 and q == -1 and p >= 0:
        return [(0, -p - 3)]
    return []


def in_edges_f(cat: CategoryId, v: IntPair) -> list[tuple[IntPair, int, Move]]:
    """Edges u -> v of the F-graph, as (source, multiplicity, move)."""
    _require(cat, v)
    inside = vertex_set(cat)
    if cat in _THIRD_CLASS:
        cands = {canonical_rep(cat, (w[0] - dx, w[1] - dy))
                 for w in whittaker_orbit(cat, v) for dx, dy in F_MOVES}
    else:
        cands = {(v[0] - dx, v[1] - dy) for dx, dy in F_MOVES}
        cands.update(_long_in_sources(cat, v))
    out = []
    for u in sorted(cands):
        if not inside(u):
            continue
        for t, m, move in out_edges_f(cat, u):
            if t == v:
                out.append((u, m, move))
    return out


def in_edges_g(cat: CategoryId, v: IntPair) -> list[tuple[IntPair, int, Move]]:
    """Edges u -> v of the G-graph."""
    _require(cat, v)
    if cat in _DUAL:
        return _swap_edges(in_edges_f(_DUAL[cat], (v[1], v[0])))
    # G is the reversed F-graph, so G-in-edges of v are the F-out-edges of v.
    return [(t, m, _neg(move)) for t, m, move in out_edges_f(cat, v)]


def out_edges(cat: CategoryId, functor: Functor, v: IntPair):
    return out_edges_f(cat, v) if functor is Functor.F else out_edges_g(cat, v)


def in_edges(cat: CategoryId, functor: Functor, v: IntPair):
    return in_edges_f(cat, v) if functor is Functor.F else in_edges_g(cat, v)


class Box(NamedTuple):
    """Inclusive offset bounds [pmin, pmax] x [qmin, qmax]."""

    pmin: int
    pmax: int
    qmin: int
    qmax: int

    def __contains__(self, v) -> bool:
        return self.pmin <= v[0] <= self.pmax and self.qmin <= v[1] <= self.qmax

    def shrink(self, margin: int) -> "Box":
        return Box(self.pmin + margin, self.pmax - margin, self.qmin + margin, self.qmax - margin)


class Edge(NamedTuple):
    src: IntPair
    dst: IntPair
    mult: int
    move: Move


def _move_key(move: Move):
    return (1, (0, 0)) if move == LONG else (0, move)


@dataclass(frozen=True)
class ActionGraph:
    """A windowed action multigraph; vertices are row-major ordered, edges sorted."""

    category: CategoryId
    functor: Functor
    window: Box
    vertices: tuple[IntPair, ...]
    edges: tuple[Edge, ...]

    @cached_property
    def vertex_index(self) -> dict[IntPair, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _out(self) -> dict[IntPair, list[Edge]]:
        out: dict[IntPair, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        return out

    @cached_property
    def _in(self) -> dict[IntPair, list[Edge]]:
        inn: dict[IntPair, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inn[e.dst].append(e)
        return inn

    def out_edges(self, v: IntPair) -> list[Edge]:
        return self._out[v]

    def in_edges(self, v: IntPair) -> list[Edge]:
        return self._in[v]

    def out_multiplicity(self, v: IntPair) -> int:
        return sum(e.mult for e in self._out[v])

    def in_multiplicity(self, v: IntPair) -> int:
        return sum(e.mult for e in self._in[v])

    def with_edges(self, edges: Iterable[Edge]) -> "ActionGraph":
        """Copy with a replaced edge list (used by mutation tests)."""
        new = sorted(edges, key=lambda e: (e.src, e.dst, _move_key(e.move)))
        return ActionGraph(self.category, self.functor, self.window,
                           self.vertices, tuple(new))

    def to_dot(self) -> str:
        """DOT text; parallel edges are repeated and also carry a mult attribute."""
        orb = self.category in _THIRD_CLASS
        lab = (lambda v: f"orb({v[0]},{v[1]})") if orb else (lambda v: f"{v[0]},{v[1]}")
        lines = [f'digraph "{self.category.value}_{self.functor.value}" {{']
        for v in self.vertices:
            lines.append(f'  "{lab(v)}";')
        for e in self.edges:
            mv = "long" if e.move == LONG else f"({e.move[0]},{e.move[1]})"
            for _ in range(e.mult):
                lines.append(f'  "{lab(e.src)}" -> "{lab(e.dst)}" [mult={e.mult}, move="{mv}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        from .eigvec import pf_value

        idx = self.vertex_index
        obj = {
            "category": self.category.value,
            "functor": self.functor.value,
            "window": {"pmin": self.window.pmin, "pmax": self.window.pmax,
                       "qmin": self.window.qmin, "qmax": self.window.qmax},
            "vertices": [
                {"id": i, "off": [v[0], v[1]], "eig": pf_value(self.category, v)}
                for i, v in enumerate(self.vertices)
            ],
            "edges": [
                {"from": idx[e.src], "to": idx[e.dst], "mult": e.mult,
                 "move": "long" if e.move == LONG else [e.move[0], e.move[1]]}
                for e in self.edges
            ],
        }
        return json.dumps(obj, indent=2) + "\n"

    def to_csv(self) -> str:
        lines = ["from_p,from_q,to_p,to_q,mult,move"]
        for e in self.edges:
            mv = "long" if e.move == LONG else f"{e.move[0]}:{e.move[1]}"
            lines.append(f"{e.src[0]},{e.src[1]},{e.dst[0]},{e.dst[1]},{e.mult},{mv}")
        return "\n".join(lines) + "\n"


def graph_from_json(text: str) -> ActionGraph:
    obj = json.loads(text)
    w = obj["window"]
    verts = tuple((int(p), int(q)) for p, q in (v["off"] for v in obj["vertices"]))
    edges = tuple(
        Edge(verts[e["from"]], verts[e["to"]], int(e["mult"]),
             LONG if e["move"] == "long" else (int(e["move"][0]), int(e["move"][1])))
        for e in obj["edges"]
    )
    return ActionGraph(CategoryId(obj["category"]), Functor(obj["functor"]),
                       Box(w["pmin"], w["pmax"], w["qmin"], w["qmax"]), verts, edges)


def generate(cat: CategoryId, functor: Functor, box: Box) -> ActionGraph:
    """Window of the family's graph: vertices in the box, edges staying inside it."""
    if box.pmin > box.pmax or box.qmin > box.qmax:
        raise EmptyWindowError(f"malformed box {box}")
    inside = vertex_set(cat)
    verts = [(p, q) for p in range(box.pmin, box.pmax + 1)
             for q in range(box.qmin, box.qmax + 1) if inside((p, q))]
    if not verts:
        raise EmptyWindowError(f"no {cat.value} vertices in {box}")
    vset = set(verts)
    edges = []
    for v in verts:
        for t, m, move in out_edges(cat, functor, v):
            if t in vset:
                edges.append(Edge(v, t, m, move))
    edges.sort(key=lambda e: (e.src, e.dst, _move_key(e.move)))
    return ActionGraph(cat, functor, box, tuple(verts), tuple(edges))


def interior(graph: ActionGraph, depth: int = 1) -> set[IntPair]:
    """Vertices whose F/G out- and in-neighborhoods up to the given depth stay inside."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    cat = graph.category
    current = set(graph.vertices)
    for _ in range(depth):
        nxt = set()
        for v in current:
            nbrs = [t for t, _, _ in out_edges_f(cat, v)]
            nbrs += [t for t, _, _ in out_edges_g(cat, v)]
            nbrs += [u for u, _, _ in in_edges_f(cat, v)]
            nbrs += [u for u, _, _ in in_edges_g(cat, v)]
            if all(u in current for u in nbrs):
                nxt.add(v)
        current = nxt
    return current


def out_complete(graph: ActionGraph) -> set[IntPair]:
    """Vertices all of whose rule-level out-edges have targets inside the window."""
    cat, functor = graph.category, graph.functor
    vset = set(graph.vertices)
    return {v for v in graph.vertices
            if all(t in vset for t, _, _ in out_edges(cat, functor, v))}
