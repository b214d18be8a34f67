"""Weights, oriented diagrams, degrees and component decompositions.

A *weight* is a word of length k over up/down, written ``^``/``v`` with
vertex 1 leftmost.  A weight orients a cup (or cap) diagram when every
arc sees an allowed label pair:

* undotted cup or cap: opposite symbols at its endpoints,
* dotted cup or cap: equal symbols,
* undotted ray: down,  dotted ray: up.

Gluing a cap diagram on top of a cup diagram produces a circle diagram
whose connected components are circles (closed) and lines (ending in
rays).  An arc is *clockwise* when, read left to right, it carries
``(up, down)`` if undotted or ``(down, down)`` if dotted; the degree of
an oriented diagram counts its clockwise cups and caps.  A circle is
anticlockwise exactly when its rightmost label is up.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Tuple, Union

from .diagrams import CapDiagram, Cup, CupDiagram, Ray, validate

UP = "^"
DOWN = "v"


class OrientationError(ValueError):
    """Base class for orientation failures."""


class InconsistentOrientationError(OrientationError):
    pass


@dataclass(frozen=True, order=False)
class Weight:
    text: str

    def __post_init__(self):
        bad = set(self.text) - {UP, DOWN}
        if bad:
            raise OrientationError(f"weight symbols must be '{UP}' or '{DOWN}', got {bad}")

    @property
    def k(self) -> int:
        return len(self.text)

    def __len__(self) -> int:
        return len(self.text)

    def __getitem__(self, vertex: int) -> str:
        """Symbol at a 1-based vertex."""
        return self.text[vertex - 1]

    def sort_key(self) -> tuple:
        # canonical order: down before up
        return tuple(0 if s == DOWN else 1 for s in self.text)

    def flip(self, vertices: Iterable[int]) -> "Weight":
        chars = list(self.text)
        for v in vertices:
            chars[v - 1] = UP if chars[v - 1] == DOWN else DOWN
        return Weight("".join(chars))

    def __str__(self) -> str:
        return self.text


def is_oriented(weight: Weight, diagram: Union[CupDiagram, CapDiagram]) -> bool:
    if len(weight) != diagram.k:
        return False
    for c in diagram.cups:
        a, b = weight[c.left], weight[c.right]
        if c.dotted and a != b:
            return False
        if not c.dotted and a == b:
            return False
    for r in diagram.rays:
        if weight[r.at] != (UP if r.dotted else DOWN):
            return False
    return True


def half_degree(weight: Weight, diagram: Union[CupDiagram, CapDiagram]) -> int:
    """Number of clockwise arcs of one oriented cup or cap diagram."""
    if not is_oriented(weight, diagram):
        raise InconsistentOrientationError(
            f"{weight} does not orient {diagram.encode()}"
        )
    deg = 0
    for c in diagram.cups:
        pair = (weight[c.left], weight[c.right])
        if c.dotted:
            deg += pair == (DOWN, DOWN)
        else:
            deg += pair == (UP, DOWN)
    return deg


def orientations_of_cup(c: CupDiagram) -> List[Weight]:
    """All weights orienting c, in canonical order; there are 2^#cups."""
    slots = [None] * c.k
    for r in c.rays:
        slots[r.at - 1] = UP if r.dotted else DOWN
    choices = []
    for cup in c.cups:
        if cup.dotted:
            choices.append(((UP, UP), (DOWN, DOWN)))
        else:
            choices.append(((DOWN, UP), (UP, DOWN)))
    weights = []
    for combo in itertools.product(*choices):
        filled = slots[:]
        for cup, (a, b) in zip(c.cups, combo):
            filled[cup.left - 1] = a
            filled[cup.right - 1] = b
        weights.append(Weight("".join(filled)))
    weights.sort(key=Weight.sort_key)
    return weights


# ---------------------------------------------------------------------------
# Component decomposition of a glued cap/cup pair


class ComponentClass(NamedTuple):
    vertices: tuple           # sorted
    kind: str                 # "circle" | "line"
    mx: int                   # maximal vertex
    signs: Optional[tuple]    # sign_to_max per vertex, aligned with `vertices`;
                              # None when the class has no consistent sign
    parity_consistent: bool


@dataclass(frozen=True)
class ComponentDecomposition:
    k: int
    classes: tuple

    def class_of(self, v: int) -> ComponentClass:
        for cl in self.classes:
            if v in cl.vertices:
                return cl
        raise KeyError(v)

    def mx(self, v: int) -> int:
        return self.class_of(v).mx

    def sign_to_max(self, v: int) -> int:
        cl = self.class_of(v)
        if cl.signs is None:
            raise InconsistentOrientationError(
                f"sign to maximum is ill-defined on component {cl.vertices}"
            )
        return cl.signs[cl.vertices.index(v)]

    def epsilon(self, i: int, j: int) -> int:
        """(-1)^(number of undotted cups on any path i..j); 0 across classes."""
        ci = self.class_of(i)
        if j not in ci.vertices:
            return 0
        return self.sign_to_max(i) * self.sign_to_max(j)

    @property
    def circles(self) -> tuple:
        return tuple(cl for cl in self.classes if cl.kind == "circle")

    @property
    def lines(self) -> tuple:
        return tuple(cl for cl in self.classes if cl.kind == "line")


def decompose(cap: CapDiagram, cup: CupDiagram) -> ComponentDecomposition:
    """Connected components of the glued diagram cap over cup.

    Components are computed by union-find over the cup edges of both
    halves.  For each class the sign of a vertex relative to the class
    maximum records the parity of undotted cups along a connecting path;
    consistency over every edge is checked so that path-independence is
    certified for circles (an inconsistent circle admits no orientation).
    """
    if cap.k != cup.k:
        raise OrientationError("cap and cup must have the same vertex count")
    k = cup.k
    parent = list(range(k + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    edges = [(c.left, c.right, c.dotted) for c in cap.cups] + [
        (c.left, c.right, c.dotted) for c in cup.cups
    ]
    for a, b, _ in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    members: dict = {}
    for v in range(1, k + 1):
        members.setdefault(find(v), []).append(v)

    cap_cupped = {v for c in cap.cups for v in (c.left, c.right)}
    cup_cupped = {v for c in cup.cups for v in (c.left, c.right)}

    adjacency: dict = {v: [] for v in range(1, k + 1)}
    for a, b, dotted in edges:
        flip = -1 if not dotted else 1
        adjacency[a].append((b, flip))
        adjacency[b].append((a, flip))

    classes = []
    for verts in members.values():
        verts = tuple(sorted(verts))
        mx = verts[-1]
        kind = (
            "circle"
            if all(v in cap_cupped and v in cup_cupped for v in verts)
            else "line"
        )
        sign = {mx: 1}
        queue = [mx]
        consistent = True
        while queue:
            u = queue.pop()
            for w, flip in adjacency[u]:
                expected = sign[u] * flip
                if w in sign:
                    if sign[w] != expected:
                        consistent = False
                else:
                    sign[w] = expected
                    queue.append(w)
        signs = tuple(sign[v] for v in verts) if consistent else None
        classes.append(ComponentClass(verts, kind, mx, signs, consistent))
    classes.sort(key=lambda cl: cl.vertices[0])
    return ComponentDecomposition(k, tuple(classes))


@dataclass(frozen=True)
class OrientedCircleDiagram:
    cap: CapDiagram
    weight: Weight
    cup: CupDiagram
    degree: int
    decomposition: ComponentDecomposition
    circle_classes: tuple  # ((mx, "clockwise"|"anticlockwise"), ...)

    def circle_class(self, mx: int) -> str:
        for m, cls in self.circle_classes:
            if m == mx:
                return cls
        raise KeyError(mx)


def diagram_degree(cap: CapDiagram, weight: Weight, cup: CupDiagram) -> int:
    return half_degree(weight, cap) + half_degree(weight, cup)


def orient_circle_diagram(cap: CapDiagram, cup: CupDiagram) -> List[OrientedCircleDiagram]:
    """All orientations of the glued diagram, canonically ordered.

    Empty when some component is contradictory; otherwise there are
    exactly 2^#circles orientations (two per circle, at most one per
    line).
    """
    dec = decompose(cap, cup)
    forced: dict = {}
    for half in (cap, cup):
        for r in half.rays:
            val = UP if r.dotted else DOWN
            if forced.get(r.at, val) != val:
                return []
            forced[r.at] = val

    circle_maxes = []
    fixed_value: dict = {}  # mx -> symbol, for lines
    for cl in dec.classes:
        if not cl.parity_consistent:
            return []
        if cl.kind == "circle":
            circle_maxes.append(cl.mx)
            continue
        candidates = set()
        for v in cl.vertices:
            if v in forced:
                implied = forced[v] if dec.sign_to_max(v) == 1 else _flip(forced[v])
                candidates.add(implied)
        if len(candidates) != 1:
            return []
        fixed_value[cl.mx] = candidates.pop()

    results = []
    for combo in itertools.product((UP, DOWN), repeat=len(circle_maxes)):
        value = dict(fixed_value)
        for mx, sym in zip(circle_maxes, combo):
            value[mx] = sym
        chars = [None] * cup.k
        for cl in dec.classes:
            base = value[cl.mx]
            for v, s in zip(cl.vertices, cl.signs):
                chars[v - 1] = base if s == 1 else _flip(base)
        w = Weight("".join(chars))
        circle_classes = tuple(
            (mx, "anticlockwise" if value[mx] == UP else "clockwise")
            for mx in sorted(circle_maxes)
        )
        results.append(
            OrientedCircleDiagram(
                cap, w, cup, diagram_degree(cap, w, cup), dec, circle_classes
            )
        )
    results.sort(key=lambda o: o.weight.sort_key())
    return results


def _flip(sym: str) -> str:
    return UP if sym == DOWN else DOWN


def is_orientable(cap: CapDiagram, cup: CupDiagram) -> bool:
    return bool(orient_circle_diagram(cap, cup))


def min_degree_element(a: CupDiagram, b: CupDiagram):
    """The unique minimal-degree orientation of (a* b) and its degree, or None.

    The minimum is attained when every circle is anticlockwise.
    """
    oriented = orient_circle_diagram(a.star(), b)
    if not oriented:
        return None
    best = min(oriented, key=lambda o: o.degree)
    if sum(1 for o in oriented if o.degree == best.degree) != 1:
        from .errors import InternalCheckError

        raise InternalCheckError(
            f"minimal degree not unique for {a.encode()} / {b.encode()}"
        )
    return best, best.degree


def cup_of_weight(weight: Weight) -> CupDiagram:
    """The unique diagram oriented by the weight with degree zero.

    Downs are matched to later ups as undotted cups (parenthesis
    matching); leftover ups pair consecutively into dotted cups, an odd
    one out becoming a dotted ray; leftover downs become undotted rays.
    """
    open_downs: list = []
    spare_ups: list = []
    cups = []
    for v in range(1, len(weight) + 1):
        if weight[v] == DOWN:
            open_downs.append(v)
        elif open_downs:
            cups.append(Cup(open_downs.pop(), v, False))
        else:
            spare_ups.append(v)
    rays = [Ray(v, False) for v in open_downs]
    for i in range(0, len(spare_ups) - 1, 2):
        cups.append(Cup(spare_ups[i], spare_ups[i + 1], True))
    if len(spare_ups) % 2 == 1:
        rays.append(Ray(spare_ups[-1], True))
    return validate(len(weight), cups, rays)


def degree_zero_weight(c: CupDiagram) -> Weight:
    """Inverse of cup_of_weight on valid diagrams."""
    chars = [None] * c.k
    for cup in c.cups:
        if cup.dotted:
            chars[cup.left - 1] = UP
            chars[cup.right - 1] = UP
        else:
            chars[cup.left - 1] = DOWN
            chars[cup.right - 1] = UP
    for r in c.rays:
        chars[r.at - 1] = UP if r.dotted else DOWN
    return Weight("".join(chars))
