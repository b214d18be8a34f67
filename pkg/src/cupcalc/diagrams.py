"""Decorated cup diagrams on a horizontal row of k vertices.

A diagram consists of *cups* (arcs joining two vertices) and *rays*
(arcs running from a vertex down to the bottom edge of the picture).
Arcs may not cross and no ray may start underneath a cup.  Any arc may
carry a single dot, provided the dot can be reached from the left edge
of the picture without crossing the diagram.  For crossingless diagrams
this left-accessibility is equivalent to three checkable conditions:

* a dotted cup is not nested inside any other cup,
* a dotted cup has no ray anywhere to its left,
* a dotted ray is the leftmost ray.

Vertices are numbered 1..k from the left.  Every diagram has a unique
canonical text encoding, ``k: arc;arc;...`` with arcs sorted by leftmost
vertex, e.g. ``4: c*(1,4);c(2,3)`` (the ``*`` marks a dot).  The same
grammar doubles as the input DSL, which is whitespace-insensitive.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional, Union


class DiagramError(ValueError):
    """Base class for diagram construction and parsing failures."""


class Violation(NamedTuple):
    code: str
    arcs: tuple


class InvalidDiagramError(DiagramError):
    """Raised by :func:`validate`; carries every violated rule."""

    def __init__(self, violations: Iterable[Violation]):
        self.violations = tuple(violations)
        summary = "; ".join(f"{v.code} {list(v.arcs)}" for v in self.violations)
        super().__init__(f"illegal diagram: {summary}")

    def codes(self) -> set:
        return {v.code for v in self.violations}


class DiagramSyntaxError(DiagramError):
    def __init__(self, text: str, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(
            f"syntax error at position {position}: expected {expected} "
            f"in {text!r}"
        )


class Cup(NamedTuple):
    left: int
    right: int
    dotted: bool = False


class Ray(NamedTuple):
    at: int
    dotted: bool = False


Arc = Union[Cup, Ray]


@dataclass(frozen=True)
class CupDiagram:
    k: int
    cups: tuple
    rays: tuple

    @property
    def n_cups(self) -> int:
        return len(self.cups)

    @property
    def dot_count(self) -> int:
        return sum(c.dotted for c in self.cups) + sum(r.dotted for r in self.rays)

    @property
    def dot_parity(self) -> str:
        return "even" if self.dot_count % 2 == 0 else "odd"

    def arcs(self) -> Iterator[Arc]:
        """All arcs sorted by leftmost vertex."""
        return iter(sorted(self.cups + self.rays, key=_arc_key))

    def cup_through(self, v: int) -> Optional[Cup]:
        for c in self.cups:
            if v in (c.left, c.right):
                return c
        return None

    def ray_at(self, v: int) -> Optional[Ray]:
        for r in self.rays:
            if r.at == v:
                return r
        return None

    def star(self) -> "CapDiagram":
        """The cap diagram obtained by reflecting in the horizontal axis."""
        return CapDiagram(self.k, self.cups, self.rays)

    def encode(self) -> str:
        return encode(self)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "cups": [
                {"from": c.left, "to": c.right, "dotted": c.dotted}
                for c in self.cups
            ],
            "rays": [{"at": r.at, "dotted": r.dotted} for r in self.rays],
        }

    def __str__(self) -> str:
        return self.encode()


@dataclass(frozen=True)
class CapDiagram:
    """Mirror image of a cup diagram; same data, drawn upwards."""

    k: int
    cups: tuple
    rays: tuple

    def star(self) -> CupDiagram:
        return CupDiagram(self.k, self.cups, self.rays)

    def encode(self) -> str:
        return encode(self.star())

    def __str__(self) -> str:
        return self.encode()


def _arc_key(arc: Arc) -> int:
    return arc.left if isinstance(arc, Cup) else arc.at


def validate(k: int, cups: Iterable, rays: Iterable) -> CupDiagram:
    """Build a diagram, reporting every violated rule at once.

    ``cups`` entries are ``(left, right)`` or ``(left, right, dotted)``;
    ``rays`` entries are ``at`` or ``(at, dotted)``.
    """
    if not isinstance(k, int) or k < 1:
        raise DiagramError(f"vertex count must be a positive integer, got {k!r}")
    cup_list = []
    for c in cups:
        if isinstance(c, Cup):
            cup_list.append(c)
        else:
            parts = tuple(c)
            cup_list.append(Cup(parts[0], parts[1], bool(parts[2]) if len(parts) > 2 else False))
    ray_list = []
    for r in rays:
        if isinstance(r, Ray):
            ray_list.append(r)
        elif isinstance(r, int):
            ray_list.append(Ray(r, False))
        else:
            parts = tuple(r)
            ray_list.append(Ray(parts[0], bool(parts[1]) if len(parts) > 1 else False))

    violations = []
    for c in cup_list:
        if not (1 <= c.left <= k and 1 <= c.right <= k):
            violations.append(Violation("VertexOutOfRange", (c,)))
        elif c.left >= c.right:
            violations.append(Violation("BadEndpoints", (c,)))
    for r in ray_list:
        if not (1 <= r.at <= k):
            violations.append(Violation("VertexOutOfRange", (r,)))

    used: dict = {}
    for c in cup_list:
        for v in (c.left, c.right):
            used.setdefault(v, []).append(c)
    for r in ray_list:
        used.setdefault(r.at, []).append(r)
    for v in range(1, k + 1):
        owners = used.get(v, [])
        if not owners:
            violations.append(Violation("VertexUnused", (v,)))
        elif len(owners) > 1:
            violations.append(Violation("VertexReused", tuple(owners)))
    # a cup using the same vertex twice is caught by BadEndpoints above

    for c1, c2 in itertools.combinations(cup_list, 2):
        a, b = sorted((c1, c2), key=lambda c: c.left)
        if a.left < b.left < a.right < b.right:
            violations.append(Violation("Crossing", (a, b)))
    for r in ray_list:
        for c in cup_list:
            if c.left < r.at < c.right:
                violations.append(Violation("RayUnderCup", (r, c)))

    leftmost_ray = min((r.at for r in ray_list), default=None)
    for c in cup_list:
        if not c.dotted:
            continue
        nested = any(o.left < c.left and c.right < o.right for o in cup_list)
        blocked = leftmost_ray is not None and leftmost_ray < c.left
        if nested or blocked:
            violations.append(Violation("DotInaccessible", (c,)))
    for r in ray_list:
        if r.dotted and leftmost_ray is not None and r.at != leftmost_ray:
            violations.append(Violation("DotInaccessible", (r,)))

    if violations:
        raise InvalidDiagramError(violations)
    return CupDiagram(
        k,
        tuple(sorted(cup_list, key=lambda c: c.left)),
        tuple(sorted(ray_list, key=lambda r: r.at)),
    )


def encode(d: Union[CupDiagram, CapDiagram]) -> str:
    parts = []
    for arc in sorted(d.cups + d.rays, key=_arc_key):
        star = "*" if arc.dotted else ""
        if isinstance(arc, Cup):
            parts.append(f"c{star}({arc.left},{arc.right})")
        else:
            parts.append(f"r{star}({arc.at})")
    return f"{d.k}: " + ";".join(parts)


_TOKEN = re.compile(r"\d+|[cr:;,()*]")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DiagramSyntaxError(text, pos, "integer, 'c', 'r' or punctuation")
        tokens.append((m.group(), pos))
        pos = m.end()
    return tokens


def parse_dsl(text: str) -> CupDiagram:
    """Parse ``k: c*(i,j);r(n);...`` into a validated diagram."""
    tokens = _tokenize(text)
    idx = 0

    def peek():
        return tokens[idx][0] if idx < len(tokens) else None

    def pos():
        return tokens[idx][1] if idx < len(tokens) else len(text)

    def expect(what, pred):
        nonlocal idx
        tok = peek()
        if tok is None or not pred(tok):
            raise DiagramSyntaxError(text, pos(), what)
        idx += 1
        return tok

    k = int(expect("integer", str.isdigit))
    expect("':'", lambda t: t == ":")
    cups, rays = [], []
    while True:
        kind = expect("arc ('c' or 'r')", lambda t: t in ("c", "r"))
        dotted = False
        if peek() == "*":
            idx += 1
            dotted = True
        expect("'('", lambda t: t == "(")
        first = int(expect("integer", str.isdigit))
        if kind == "c":
            expect("','", lambda t: t == ",")
            second = int(expect("integer", str.isdigit))
            expect("')'", lambda t: t == ")")
            cups.append(Cup(first, second, dotted))
        else:
            expect("')'", lambda t: t == ")")
            rays.append(Ray(first, dotted))
        if peek() is None:
            break
        expect("';'", lambda t: t == ";")
    return validate(k, cups, rays)


def from_json(data: Union[str, dict]) -> CupDiagram:
    obj = json.loads(data) if isinstance(data, str) else data
    cups = [(c["from"], c["to"], c["dotted"]) for c in obj.get("cups", [])]
    rays = [(r["at"], r["dotted"]) for r in obj.get("rays", [])]
    return validate(obj["k"], cups, rays)


def _render_ascii(d: CupDiagram) -> str:
    width = 2 * d.k - 1
    arc_row = [" "] * width
    dot_row = [" "] * width
    has_dot = False
    for c in d.cups:
        arc_row[2 * (c.left - 1)] = "("
        arc_row[2 * (c.right - 1)] = ")"
        if c.dotted:
            dot_row[(c.left + c.right) - 2] = "*"
            has_dot = True
    for r in d.rays:
        arc_row[2 * (r.at - 1)] = "|"
        if r.dotted:
            dot_row[2 * (r.at - 1)] = "*"
            has_dot = True
    lines = ["".join(arc_row).rstrip()]
    if has_dot:
        lines.append("".join(dot_row).rstrip())
    return "\n".join(lines)


def _render_tikz(d: CupDiagram) -> str:
    lines = [
        r"\documentclass[tikz]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}[thick]",
    ]
    for v in range(1, d.k + 1):
        lines.append(rf"\node[above] at ({v},0) {{\tiny ${v}$}};")
    for c in d.cups:
        depth = 0.25 * (c.right - c.left + 1)
        lines.append(
            rf"\draw ({c.left},0) .. controls +(0,{-depth}) and +(0,{-depth}) "
            rf".. ({c.right},0);"
        )
        if c.dotted:
            lines.append(
                rf"\fill ({(c.left + c.right) / 2},{-0.75 * depth}) circle (2.5pt);"
            )
    for r in d.rays:
        lines.append(rf"\draw ({r.at},0) -- ({r.at},-1.5);")
        if r.dotted:
            lines.append(rf"\fill ({r.at},-0.75) circle (2.5pt);")
    lines.append(r"\end{tikzpicture}")
    lines.append(r"\end{document}")
    return "\n".join(lines)


def render(d: CupDiagram, fmt: str) -> str:
    if fmt == "ascii":
        return _render_ascii(d)
    if fmt == "tikz":
        return _render_tikz(d)
    if fmt == "json":
        return json.dumps(d.to_json_dict())
    raise DiagramError(f"unknown render format {fmt!r}")


# ---------------------------------------------------------------------------
# Enumeration


def _matchings(lo: int, hi: int, rays_ok: bool):
    """All crossingless cup/ray structures on vertices lo..hi.

    Rays are forbidden inside a cup, hence the flag is dropped when we
    recurse under one.
    """
    if lo > hi:
        yield (), ()
        return
    if rays_ok:
        for cups, rays in _matchings(lo + 1, hi, True):
            yield cups, (lo,) + rays
    for m in range(lo + 1, hi + 1, 2):
        for inner, _ in _matchings(lo + 1, m - 1, False):
            for outer, outer_rays in _matchings(m + 1, hi, rays_ok):
                yield ((lo, m),) + inner + outer, outer_rays


def _dottable(cup_pairs, ray_positions):
    """Arcs of an undecorated structure that may legally carry a dot."""
    arcs = []
    leftmost_ray = min(ray_positions, default=None)
    for (l, r) in cup_pairs:
        nested = any(a < l and r < b for (a, b) in cup_pairs)
        if not nested and (leftmost_ray is None or l < leftmost_ray):
            arcs.append(("cup", (l, r)))
    if leftmost_ray is not None:
        arcs.append(("ray", leftmost_ray))
    return arcs


@dataclass(frozen=True)
class DiagramSet:
    k: int
    cup_filter: Union[int, str]
    dot_filter: str
    members: tuple

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


_DOT_FILTERS = ("all", "even", "odd", "none")


def enumerate_diagrams(k: int, cups: Union[int, str] = "max", dots: str = "all") -> DiagramSet:
    """All legal diagrams on k vertices, in canonical encoding order.

    ``cups`` is an exact cup count, ``"max"`` (= floor(k/2)) or ``"any"``;
    ``dots`` filters by dot count: ``"all"``, ``"even"``, ``"odd"`` or
    ``"none"`` (undecorated only).
    """
    if not isinstance(k, int) or k < 1:
        raise DiagramError(f"vertex count must be a positive integer, got {k!r}")
    if dots not in _DOT_FILTERS:
        raise DiagramError(f"dot filter must be one of {_DOT_FILTERS}, got {dots!r}")
    if cups == "max":
        target = k // 2
    elif cups == "any":
        target = None
    else:
        target = int(cups)

    members = []
    for cup_pairs, ray_positions in _matchings(1, k, True):
        if target is not None and len(cup_pairs) != target:
            continue
        dottable = _dottable(cup_pairs, ray_positions)
        for n_dots in range(len(dottable) + 1):
            if dots == "none" and n_dots > 0:
                break
            if dots == "even" and n_dots % 2 == 1:
                continue
            if dots == "odd" and n_dots % 2 == 0:
                continue
            for chosen in itertools.combinations(dottable, n_dots):
                chosen_set = set(chosen)
                cup_arcs = [
                    (l, r, ("cup", (l, r)) in chosen_set) for (l, r) in cup_pairs
                ]
                ray_arcs = [
                    (at, ("ray", at) in chosen_set) for at in ray_positions
                ]
                members.append(validate(k, cup_arcs, ray_arcs))
    members.sort(key=encode)
    return DiagramSet(k, cups, dots, tuple(members))


@lru_cache(maxsize=None)
def maximal_diagrams(k: int, parity: str = "all") -> tuple:
    """Diagrams with the maximal number floor(k/2) of cups, canonically ordered."""
    dots = {"all": "all", "even": "even", "odd": "odd"}[parity]
    return enumerate_diagrams(k, "max", dots).members


def dot_parity_involution(d: CupDiagram) -> CupDiagram:
    """Toggle the dot on the arc through vertex 1 (a dot-parity flip)."""
    cups = [Cup(c.left, c.right, not c.dotted if c.left == 1 else c.dotted) for c in d.cups]
    rays = [Ray(r.at, not r.dotted if r.at == 1 else r.dotted) for r in d.rays]
    return validate(d.k, cups, rays)
