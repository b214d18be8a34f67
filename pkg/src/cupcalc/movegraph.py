"""Local moves between maximal diagrams, the arrow graph and its cells.

Eight local rewrites act on pairs of arcs (all other arcs untouched,
and a rewrite only fires when both sides are legal diagrams):

====  ===============================  ===============================
kind  before                           after
====  ===============================  ===============================
I     cups (i,j),(k,l) side by side    cup (i,l) over cup (j,k)
II    cup (i,l) over cup (j,k)         dotted cups (i,j),(k,l)
III   dotted (i,j), plain (k,l)        dotted (i,l) over plain (j,k)
IV    dotted (i,l) over plain (j,k)    plain (i,j), dotted (k,l)
I'    cup (i,j), ray k                 ray i, cup (j,k)
II'   ray i, cup (j,k)                 dotted cup (i,j), dotted ray k
III'  dotted cup (i,j), ray k          dotted ray i, cup (j,k)
IV'   dotted ray i, cup (j,k)          plain cup (i,j), dotted ray k
====  ===============================  ===============================

Arrows a -> b generate a partial order on the maximal diagrams of each
dot parity; the undirected graph is connected per parity.  Each diagram
also carries a forest on its cups (edges from reverse unprimed moves,
pointing towards deeper nesting) whose roots are the outer cups; the
forest indexes an affine cell decomposition.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Tuple

from .diagrams import (
    Cup,
    CupDiagram,
    InvalidDiagramError,
    Ray,
    encode,
    maximal_diagrams,
    validate,
)
from .errors import InternalCheckError

UNPRIMED = ("I", "II", "III", "IV")
PRIMED = ("I'", "II'", "III'", "IV'")


class Move(NamedTuple):
    kind: str
    positions: tuple  # 3 or 4 vertices, ascending


class NoFiniteDistanceError(ValueError):
    pass


def _cup_pair_sources(c1: Cup, c2: Cup):
    """Rewrites whose *before* side matches the cup pair (c1 left of c2)."""
    if c1.right < c2.left:  # side by side
        pos = (c1.left, c1.right, c2.left, c2.right)
        if not c1.dotted and not c2.dotted:
            yield "I", pos, [Cup(pos[0], pos[3]), Cup(pos[1], pos[2])]
        if c1.dotted and not c2.dotted:
            yield "III", pos, [Cup(pos[0], pos[3], True), Cup(pos[1], pos[2])]
    elif c2.right < c1.right:  # c2 nested inside c1
        pos = (c1.left, c2.left, c2.right, c1.right)
        if not c1.dotted and not c2.dotted:
            yield "II", pos, [Cup(pos[0], pos[1], True), Cup(pos[2], pos[3], True)]
        if c1.dotted and not c2.dotted:
            yield "IV", pos, [Cup(pos[0], pos[1]), Cup(pos[2], pos[3], True)]


def _cup_ray_sources(c: Cup, r: Ray):
    if r.at > c.right:  # ray to the right of the cup
        pos = (c.left, c.right, r.at)
        if not c.dotted and not r.dotted:
            yield "I'", pos, [Ray(pos[0]), Cup(pos[1], pos[2])]
        if c.dotted and not r.dotted:
            yield "III'", pos, [Ray(pos[0], True), Cup(pos[1], pos[2])]
    elif r.at < c.left:  # ray to the left of the cup
        pos = (r.at, c.left, c.right)
        if not r.dotted and not c.dotted:
            yield "II'", pos, [Cup(pos[0], pos[1], True), Ray(pos[2], True)]
        if r.dotted and not c.dotted:
            yield "IV'", pos, [Cup(pos[0], pos[1]), Ray(pos[2], True)]


def _cup_pair_targets(c1: Cup, c2: Cup):
    """Rewrites whose *after* side matches the cup pair (c1 left of c2)."""
    if c1.right < c2.left:
        pos = (c1.left, c1.right, c2.left, c2.right)
        if c1.dotted and c2.dotted:
            yield "II", pos, [Cup(pos[0], pos[3]), Cup(pos[1], pos[2])]
        if not c1.dotted and c2.dotted:
            yield "IV", pos, [Cup(pos[0], pos[3], True), Cup(pos[1], pos[2])]
    elif c2.right < c1.right:
        pos = (c1.left, c2.left, c2.right, c1.right)
        if not c1.dotted and not c2.dotted:
            yield "I", pos, [Cup(pos[0], pos[1]), Cup(pos[2], pos[3])]
        if c1.dotted and not c2.dotted:
            yield "III", pos, [Cup(pos[0], pos[1], True), Cup(pos[2], pos[3])]


def _cup_ray_targets(c: Cup, r: Ray):
    if r.at < c.left:
        pos = (r.at, c.left, c.right)
        if not r.dotted and not c.dotted:
            yield "I'", pos, [Cup(pos[0], pos[1]), Ray(pos[2])]
        if r.dotted and not c.dotted:
            yield "III'", pos, [Cup(pos[0], pos[1], True), Ray(pos[2])]
    elif r.at > c.right:
        pos = (c.left, c.right, r.at)
        if c.dotted and r.dotted:
            yield "II'", pos, [Ray(pos[0]), Cup(pos[1], pos[2])]
        if not c.dotted and r.dotted:
            yield "IV'", pos, [Ray(pos[0], True), Cup(pos[1], pos[2])]


def _rewire(d: CupDiagram, remove, add) -> Optional[CupDiagram]:
    removed = set(remove)
    cups = [c for c in d.cups if c not in removed] + [a for a in add if isinstance(a, Cup)]
    rays = [r for r in d.rays if r not in removed] + [a for a in add if isinstance(a, Ray)]
    try:
        return validate(d.k, cups, rays)
    except InvalidDiagramError:
        return None


def _matches(d: CupDiagram, pair_gen, cup_ray_gen):
    for c1, c2 in itertools.combinations(d.cups, 2):
        a, b = sorted((c1, c2), key=lambda c: c.left)
        for kind, pos, new_arcs in pair_gen(a, b):
            other = _rewire(d, (a, b), new_arcs)
            if other is not None:
                yield other, Move(kind, pos)
    for c in d.cups:
        for r in d.rays:
            for kind, pos, new_arcs in cup_ray_gen(c, r):
                other = _rewire(d, (c, r), new_arcs)
                if other is not None:
                    yield other, Move(kind, pos)


def successors(a: CupDiagram) -> List[Tuple[CupDiagram, Move]]:
    """All diagrams one arrow a -> b away."""
    out = list(_matches(a, _cup_pair_sources, _cup_ray_sources))
    out.sort(key=lambda t: (encode(t[0]), t[1].kind))
    return out


def predecessors(a: CupDiagram) -> List[Tuple[CupDiagram, Move]]:
    """All diagrams b with an arrow b -> a."""
    out = list(_matches(a, _cup_pair_targets, _cup_ray_targets))
    out.sort(key=lambda t: (encode(t[0]), t[1].kind))
    return out


# ---------------------------------------------------------------------------
# The arrow graph per parity


@dataclass(frozen=True)
class MoveGraph:
    k: int
    parity: str
    nodes: tuple                 # canonical encoding order
    arrows: tuple                # (source index, target index, Move)

    def index(self, d: CupDiagram) -> int:
        return self._index_map()[encode(d)]

    def _index_map(self) -> dict:
        return {encode(n): i for i, n in enumerate(self.nodes)}

    def undirected_adjacency(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in self.nodes]
        for i, j, _ in self.arrows:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def directed_adjacency(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in self.nodes]
        for i, j, _ in self.arrows:
            adj[i].append(j)
        return adj

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        adj = self.undirected_adjacency()
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.nodes)

    def to_dot(self) -> str:
        lines = ["digraph moves {"]
        for n in self.nodes:
            lines.append(f'  "{encode(n)}";')
        for i, j, move in self.arrows:
            lines.append(
                f'  "{encode(self.nodes[i])}" -> "{encode(self.nodes[j])}"'
                f' [label="{move.kind}"];'
            )
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def move_graph(k: int, parity: str) -> MoveGraph:
    nodes = maximal_diagrams(k, parity)
    index = {encode(n): i for i, n in enumerate(nodes)}
    arrows = []
    for i, a in enumerate(nodes):
        for b, move in successors(a):
            j = index.get(encode(b))
            if j is None:
                raise InternalCheckError(
                    f"move left the maximal diagram set: {encode(a)} -> {encode(b)}"
                )
            arrows.append((i, j, move))
    graph = MoveGraph(k, parity, nodes, tuple(arrows))
    if not graph.is_connected():
        raise InternalCheckError(f"move graph ({k}, {parity}) is not connected")
    return graph


@lru_cache(maxsize=None)
def _distance_table(k: int, parity: str) -> tuple:
    graph = move_graph(k, parity)
    adj = graph.undirected_adjacency()
    n = len(graph.nodes)
    table = []
    for src in range(n):
        dist = [None] * n
        dist[src] = 0
        queue = [src]
        while queue:
            nxt = []
            for u in queue:
                for w in adj[u]:
                    if dist[w] is None:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            queue = nxt
        table.append(tuple(dist))
    return tuple(table)


def distance(a: CupDiagram, b: CupDiagram):
    """Undirected arrow distance; math.inf across parities."""
    if a.k != b.k:
        raise ValueError("diagrams must share the vertex count")
    if a.dot_parity != b.dot_parity:
        return math.inf
    graph = move_graph(a.k, a.dot_parity)
    d = _distance_table(a.k, a.dot_parity)[graph.index(a)][graph.index(b)]
    if d is None:  # unreachable: per-parity graphs are connected
        return math.inf
    return d


@lru_cache(maxsize=None)
def _reachability(k: int, parity: str) -> tuple:
    """reach[i] = frozenset of nodes reachable from i along arrows."""
    graph = move_graph(k, parity)
    adj = graph.directed_adjacency()
    reach = []
    for src in range(len(graph.nodes)):
        seen = {src}
        stack = [src]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        reach.append(frozenset(seen))
    return tuple(reach)


def total_order(k: int, parity: str, tie_break: str = "lex") -> tuple:
    """Reachability order refined to a total order.

    Topological sort with sources last: a comes before b whenever a
    reaches b along arrows.  Ties are broken by canonical encoding
    (``tie_break="revlex"`` reverses the tie-break; any refinement is
    equally valid and nothing computed downstream may depend on it).
    """
    graph = move_graph(k, parity)
    n = len(graph.nodes)
    out_edges = graph.directed_adjacency()
    indeg = [0] * n
    preds: List[List[int]] = [[] for _ in range(n)]
    for i, js in enumerate(out_edges):
        for j in set(js):
            preds[j].append(i)
    indeg = [len(set(out_edges[i])) for i in range(n)]
    # Kahn: repeatedly take nodes with no unprocessed out-arrows, so that
    # arrow sources end up later; reverse at the end to put them first.
    sign = 1 if tie_break == "lex" else -1
    keyed = lambda i: encode(graph.nodes[i])
    heap = []
    remaining = indeg[:]
    for i in range(n):
        if remaining[i] == 0:
            heapq.heappush(heap, (_hkey(keyed(i), sign), i))
    order = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        for p in set(preds[i]):
            remaining[p] -= 1
            if remaining[p] == 0:
                heapq.heappush(heap, (_hkey(keyed(p), sign), p))
    if len(order) != n:
        raise InternalCheckError("arrow relation is not acyclic")
    order.reverse()
    return tuple(graph.nodes[i] for i in order)


def _hkey(s: str, sign: int):
    return s if sign == 1 else tuple(-ord(ch) for ch in s)


def geodesic_meet(a: CupDiagram, b: CupDiagram) -> CupDiagram:
    """Some c below both a and b with d(a,b) = d(a,c) + d(c,b)."""
    if a.dot_parity != b.dot_parity or a.k != b.k:
        raise NoFiniteDistanceError("no finite-distance chain between the diagrams")
    graph = move_graph(a.k, a.dot_parity)
    table = _distance_table(a.k, a.dot_parity)
    reach = _reachability(a.k, a.dot_parity)
    ia, ib = graph.index(a), graph.index(b)
    dab = table[ia][ib]
    for ic in sorted(range(len(graph.nodes)), key=lambda i: encode(graph.nodes[i])):
        if table[ia][ic] + table[ic][ib] != dab:
            continue
        if ia in reach[ic] and ib in reach[ic]:
            return graph.nodes[ic]
    raise InternalCheckError("no geodesic meet exists")  # pragma: no cover


# ---------------------------------------------------------------------------
# Nesting, the cup forest and the cell census


class NestingCensus(NamedTuple):
    degrees: tuple        # ((cup, nesting degree), ...) in cup order
    outer: tuple          # cups of nesting degree 0
    special: tuple        # outer cups created by reverse primed moves

    def degree_of(self, cup: Cup) -> int:
        for c, d in self.degrees:
            if c == cup:
                return d
        raise KeyError(cup)


def _peel_levels(cups) -> dict:
    levels: dict = {}
    remaining = set(cups)
    level = 0
    while remaining:
        outer_now = [
            c
            for c in remaining
            if not any(o.left < c.left and c.right < o.right for o in remaining)
            and not any(o.dotted and o.left > c.right for o in remaining)
        ]
        if not outer_now:
            raise InternalCheckError("nesting peel stalled")  # pragma: no cover
        for c in outer_now:
            levels[c] = level
        remaining.difference_update(outer_now)
        level += 1
    return levels


def _special_cups(a: CupDiagram) -> tuple:
    special = set()
    for b, move in predecessors(a):
        if move.kind in PRIMED:
            new_cup = next(c for c in a.cups if c not in b.cups)
            special.add(new_cup)
    return tuple(sorted(special, key=lambda c: c.left))


def nesting_census(a: CupDiagram) -> NestingCensus:
    levels = _peel_levels(a.cups)
    degrees = tuple((c, levels[c]) for c in a.cups)
    outer = tuple(c for c in a.cups if levels[c] == 0)
    special = _special_cups(a)
    if not set(special) <= set(outer):
        raise InternalCheckError("special cup outside the outer cups")
    return NestingCensus(degrees, outer, special)


@dataclass(frozen=True)
class CupForest:
    base: CupDiagram
    vertices: tuple             # the cups
    edges: tuple                # (shallower cup, deeper cup)
    roots: tuple                # outer cups
    special_roots: tuple

    @property
    def n_roots(self) -> int:
        return len(self.roots)

    @property
    def n_edges(self) -> int:
        return len(self.edges)


_MOVE_TARGET_CUPS = {
    "I": lambda p: ((p[0], p[3]), (p[1], p[2])),
    "II": lambda p: ((p[0], p[1]), (p[2], p[3])),
    "III": lambda p: ((p[0], p[3]), (p[1], p[2])),
    "IV": lambda p: ((p[0], p[1]), (p[2], p[3])),
}


def cup_forest(a: CupDiagram) -> CupForest:
    """Forest on the cups of a maximal diagram.

    An edge joins the two cups rewired by some reverse unprimed move and
    points at the more deeply nested one; roots are the outer cups, and
    the ones a reverse primed move can create are marked special.
    """
    census = nesting_census(a)
    levels = dict(census.degrees)
    by_span = {(c.left, c.right): c for c in a.cups}
    edges = set()
    for b, move in predecessors(a):
        if move.kind not in UNPRIMED:
            continue
        span1, span2 = _MOVE_TARGET_CUPS[move.kind](move.positions)
        c1, c2 = by_span[span1], by_span[span2]
        if levels[c2] > levels[c1]:
            edges.add((c1, c2))
        elif levels[c1] > levels[c2]:
            edges.add((c2, c1))
    incoming: dict = {c: 0 for c in a.cups}
    for _, tgt in edges:
        incoming[tgt] += 1
    roots = census.outer
    for c in a.cups:
        expected = 0 if c in roots else 1
        if incoming[c] != expected:
            raise InternalCheckError(
                f"cup {c} of {encode(a)} has {incoming[c]} incoming forest edges"
            )
    return CupForest(
        a,
        a.cups,
        tuple(sorted(edges, key=lambda e: (e[0].left, e[1].left))),
        roots,
        census.special,
    )


def cell_census(a: CupDiagram) -> tuple:
    """Real dimensions of the affine cells of the diagram, descending.

    Cells are indexed by subsets J of roots-plus-edges and have real
    dimension 2(#cups - |J|).
    """
    n = a.n_cups
    dims = []
    for size in range(n + 1):
        dims.extend([2 * (n - size)] * math.comb(n, size))
    return tuple(sorted(dims, reverse=True))


def _boundary_sets(a: CupDiagram):
    forest = cup_forest(a)
    items = [("root", r) for r in forest.roots] + [("edge", e) for e in forest.edges]
    odd = a.k % 2 == 1
    special = set(forest.special_roots)
    for subset in itertools.chain.from_iterable(
        itertools.combinations(items, n) for n in range(len(items) + 1)
    ):
        in_boundary = any(
            kind == "edge" or (odd and kind == "root" and payload in special)
            for kind, payload in subset
        )
        yield len(subset), in_boundary


def boundary_census(a: CupDiagram) -> tuple:
    """Dimensions of the cells lying in earlier diagrams' subspaces."""
    n = a.n_cups
    dims = [2 * (n - size) for size, inside in _boundary_sets(a) if inside]
    return tuple(sorted(dims, reverse=True))


def free_cell_count(a: CupDiagram) -> int:
    """Cells of the diagram meeting no earlier diagram."""
    return sum(1 for _, inside in _boundary_sets(a) if not inside)
