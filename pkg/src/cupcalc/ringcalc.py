"""Exact quotient-ring calculus for diagram components and intersections.

Everything happens inside the ambient ring R(k) = Q[x_1..x_k]/(x_i^2),
whose basis is the squarefree monomials x_I, I a subset of {1..k}; a
monomial x_I sits in cohomological degree 2|I|.  A diagram a presents a
quotient of R(k) by the ideal generated by

* x_i + x_j for each undotted cup (i,j),
* x_i - x_j for each dotted cup (i,j),
* x_i for each ray,

and a pair (a, b) whose glued diagram is orientable presents a further
quotient: on each circle x_i is identified with eps(i, mx) x_mx (mx the
class maximum, eps the undotted-cup path sign) and every line variable
dies.  These rewrite rules are confluent, so each quotient has the
squarefree monomials in the surviving representatives as a basis and
the restriction maps are computed by re-reducing lifted monomials.

The centre of the whole configuration is the equalizer of the
restriction maps: tuples of component-ring elements agreeing on every
pairwise intersection.  It is computed degree by degree as an exact
kernel, with a deterministic echelon basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import linalg
from .diagrams import CupDiagram, encode
from .errors import InternalCheckError
from .movegraph import total_order
from .orientation import (
    OrientedCircleDiagram,
    Weight,
    decompose,
    min_degree_element,
    orient_circle_diagram,
)


class NotOrientableError(ValueError):
    pass


class SquarefreeElement:
    """Exact-rational combination of squarefree monomials x_I."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Optional[Dict[frozenset, Fraction]] = None):
        self.k = k
        self.terms: Dict[frozenset, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    self.terms[frozenset(mono)] = coeff

    @classmethod
    def unit(cls, k: int) -> "SquarefreeElement":
        return cls(k, {frozenset(): Fraction(1)})

    @classmethod
    def variable(cls, k: int, i: int) -> "SquarefreeElement":
        return cls(k, {frozenset((i,)): Fraction(1)})

    @classmethod
    def monomial(cls, k: int, subset) -> "SquarefreeElement":
        return cls(k, {frozenset(subset): Fraction(1)})

    def __add__(self, other: "SquarefreeElement") -> "SquarefreeElement":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return SquarefreeElement(self.k, out)

    def __neg__(self) -> "SquarefreeElement":
        return SquarefreeElement(self.k, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SquarefreeElement") -> "SquarefreeElement":
        return self + (-other)

    def scale(self, scalar) -> "SquarefreeElement":
        scalar = Fraction(scalar)
        return SquarefreeElement(self.k, {m: c * scalar for m, c in self.terms.items()})

    def __mul__(self, other: "SquarefreeElement") -> "SquarefreeElement":
        out: Dict[frozenset, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1 & m2:
                    continue  # repeated variable squares to zero
                mono = m1 | m2
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return SquarefreeElement(self.k, out)

    def homogeneous_part(self, size: int) -> "SquarefreeElement":
        return SquarefreeElement(
            self.k, {m: c for m, c in self.terms.items() if len(m) == size}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SquarefreeElement)
            and self.k == other.k
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, key=lambda m: (len(m), sorted(m))):
            coeff = self.terms[mono]
            name = "1" if not mono else "*".join(f"x{i}" for i in sorted(mono))
            bits.append(f"{coeff}*{name}")
        return " + ".join(bits)


def monomial_key(mono: frozenset) -> tuple:
    return (len(mono), tuple(sorted(mono)))


class QuotientPresentation:
    """Quotient of R(k) by a variable rewrite system.

    ``rules`` sends a variable index to ``None`` (the variable dies) or
    to ``(sign, representative)``; unmentioned variables survive as
    their own representative.
    """

    def __init__(self, k: int, rules: Dict[int, Optional[Tuple[int, int]]]):
        self.k = k
        self.rules = dict(rules)
        kept = [i for i in range(1, k + 1) if i not in rules]
        self.kept = tuple(sorted(kept))

    @property
    def dimension(self) -> int:
        return 2 ** len(self.kept)

    def basis(self) -> List[frozenset]:
        out = [frozenset()]
        for i in self.kept:
            out.extend([mono | {i} for mono in out])
        return sorted(out, key=monomial_key)

    def reduce_monomial(self, mono) -> Optional[Tuple[int, frozenset]]:
        """Rewrite x_mono to sign * x_image, or None when it dies."""
        sign = 1
        image = set()
        for i in mono:
            rule = self.rules.get(i, (1, i))
            if rule is None:
                return None
            s, rep = rule
            if rep in image:
                return None  # x_rep squared
            sign *= s
            image.add(rep)
        return sign, frozenset(image)

    def reduce(self, element: SquarefreeElement) -> SquarefreeElement:
        out: Dict[frozenset, Fraction] = {}
        for mono, coeff in element.terms.items():
            reduced = self.reduce_monomial(mono)
            if reduced is None:
                continue
            sign, image = reduced
            out[image] = out.get(image, Fraction(0)) + sign * coeff
        return SquarefreeElement(element.k, out)


def component_quotient(a: CupDiagram) -> QuotientPresentation:
    """Presentation of the ring attached to a single diagram.

    Left cup endpoints rewrite to (minus, for undotted cups) the right
    endpoint; ray variables die; dimension 2^#cups.
    """
    rules: Dict[int, Optional[Tuple[int, int]]] = {}
    for c in a.cups:
        rules[c.left] = (1 if c.dotted else -1, c.right)
    for r in a.rays:
        rules[r.at] = None
    return QuotientPresentation(a.k, rules)


def intersection_quotient(a: CupDiagram, b: CupDiagram) -> Optional[QuotientPresentation]:
    """Presentation of the pairwise-intersection ring, or None if empty.

    Circle classes keep their maximal vertex, every other circle vertex
    rewrites to it with the path sign; line classes die entirely.
    """
    if not orient_circle_diagram(a.star(), b):
        return None
    dec = decompose(a.star(), b)
    rules: Dict[int, Optional[Tuple[int, int]]] = {}
    for cl in dec.classes:
        if cl.kind == "circle":
            for v, s in zip(cl.vertices, cl.signs):
                if v != cl.mx:
                    rules[v] = (s, cl.mx)
        else:
            for v in cl.vertices:
                rules[v] = None
    return QuotientPresentation(a.k, rules)


@dataclass
class LinearMap:
    domain: list      # basis monomials (frozensets)
    codomain: list
    matrix: list      # matrix[row][col]; columns are images of domain basis vectors

    def column(self, j: int) -> list:
        return [self.matrix[i][j] for i in range(len(self.codomain))]

    def apply(self, coords: list) -> list:
        return [
            sum((self.matrix[i][j] * coords[j] for j in range(len(self.domain))), Fraction(0))
            for i in range(len(self.codomain))
        ]

    def rank(self) -> int:
        rows = []
        for i, row in enumerate(self.matrix):
            rows.append({j: Fraction(v) for j, v in enumerate(row) if v})
        return linalg.rank(rows)

    def is_surjective(self) -> bool:
        return self.rank() == len(self.codomain)


def _map_between(source: QuotientPresentation, target: QuotientPresentation) -> LinearMap:
    domain = source.basis()
    codomain = target.basis()
    index = {m: i for i, m in enumerate(codomain)}
    matrix = [[Fraction(0)] * len(domain) for _ in codomain]
    for j, mono in enumerate(domain):
        reduced = target.reduce_monomial(mono)
        if reduced is None:
            continue
        sign, image = reduced
        matrix[index[image]][j] = Fraction(sign)
    return LinearMap(domain, codomain, matrix)


def restriction_maps(a: CupDiagram, b: CupDiagram) -> Tuple[LinearMap, LinearMap]:
    """The two restriction maps from the component rings of a and b
    into their intersection ring."""
    target = intersection_quotient(a, b)
    if target is None:
        raise NotOrientableError(
            f"{encode(a)} and {encode(b)} have empty intersection"
        )
    return (
        _map_between(component_quotient(a), target),
        _map_between(component_quotient(b), target),
    )


# ---------------------------------------------------------------------------
# The centre as an equalizer


@dataclass
class CentreBasis:
    k: int
    parity: str
    diagrams: tuple
    graded_dims: dict     # monomial degree -> dimension
    basis: dict           # monomial degree -> list of vectors; a vector maps
                          # (diagram encoding, sorted monomial tuple) -> Fraction

    @property
    def dimension(self) -> int:
        return sum(self.graded_dims.values())

    def graded_dims_cohomological(self) -> dict:
        return {2 * d: n for d, n in self.graded_dims.items()}


def centre(k: int, parity: str, tie_break: str = "lex") -> CentreBasis:
    """Graded equalizer of all pairwise restriction maps on one parity.

    Tuples (z_a) over the maximal diagrams of the parity such that the
    two restrictions of z_a and z_b agree on every orientable pair.
    Computed per degree by exact elimination; the ``tie_break`` knob
    only reorders the unknowns and must not change any dimension.
    """
    diagrams = total_order(k, parity, tie_break)
    quotients = [component_quotient(a) for a in diagrams]
    var_index: Dict[Tuple[int, frozenset], int] = {}
    vars_by_degree: Dict[int, List[Tuple[int, frozenset]]] = {}
    for ai, q in enumerate(quotients):
        for mono in q.basis():
            vars_by_degree.setdefault(len(mono), []).append((ai, mono))
    for degree in vars_by_degree:
        for pos, key in enumerate(vars_by_degree[degree]):
            var_index[key] = pos

    rows_by_degree: Dict[int, List[Dict[int, Fraction]]] = {d: [] for d in vars_by_degree}
    for ai in range(len(diagrams)):
        for bi in range(ai + 1, len(diagrams)):
            target = intersection_quotient(diagrams[ai], diagrams[bi])
            if target is None:
                continue
            constraint: Dict[frozenset, Dict[int, Fraction]] = {}
            for side, qi in ((1, ai), (-1, bi)):
                for mono in quotients[qi].basis():
                    reduced = target.reduce_monomial(mono)
                    if reduced is None:
                        continue
                    sign, image = reduced
                    row = constraint.setdefault(image, {})
                    col = var_index[(qi, mono)]
                    row[col] = row.get(col, Fraction(0)) + side * sign
            for image, row in constraint.items():
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows_by_degree[len(image)].append(row)

    graded_dims = {}
    basis = {}
    for degree in sorted(vars_by_degree):
        variables = vars_by_degree[degree]
        kernel = linalg.kernel_basis(rows_by_degree[degree], len(variables))
        graded_dims[degree] = len(kernel)
        vectors = []
        for vec in kernel:
            named = {}
            for col, coeff in sorted(vec.items()):
                ai, mono = variables[col]
                named[(encode(diagrams[ai]), tuple(sorted(mono)))] = coeff
            vectors.append(named)
        basis[degree] = vectors
    return CentreBasis(k, parity, diagrams, graded_dims, basis)


# ---------------------------------------------------------------------------
# Dictionary between quotient bases and oriented diagrams


@dataclass
class BasisDictionary:
    a: CupDiagram
    b: CupDiagram
    entries: list          # (monomial frozenset, OrientedCircleDiagram), monomial order
    transport_signs: dict  # vertex -> eps(vertex, class maximum); 0 on lines

    def orientation_of(self, mono: frozenset) -> OrientedCircleDiagram:
        for m, oriented in self.entries:
            if m == mono:
                return oriented
        raise KeyError(mono)

    def monomial_of(self, weight: Weight) -> frozenset:
        for m, oriented in self.entries:
            if oriented.weight == weight:
                return m
        raise KeyError(weight)


def diagram_basis_dictionary(a: CupDiagram, b: CupDiagram) -> BasisDictionary:
    """Pair each intersection-ring basis monomial with an orientation.

    The monomial over a set S of circle maxima corresponds to the
    orientation turning exactly those circles clockwise; the empty
    monomial is the all-anticlockwise orientation of minimal degree.
    """
    oriented = orient_circle_diagram(a.star(), b)
    if not oriented:
        raise NotOrientableError(
            f"{encode(a)} and {encode(b)} have empty intersection"
        )
    target = intersection_quotient(a, b)
    by_clockwise = {}
    for o in oriented:
        clockwise = frozenset(mx for mx, cls in o.circle_classes if cls == "clockwise")
        by_clockwise[clockwise] = o
    entries = []
    for mono in target.basis():
        o = by_clockwise[mono]
        expected = min(x.degree for x in oriented) + 2 * len(mono)
        if o.degree != expected:
            raise InternalCheckError(
                f"degree of orientation {o.weight} is {o.degree}, expected {expected}"
            )
        entries.append((mono, o))
    dec = decompose(a.star(), b)
    signs = {}
    for v in range(1, a.k + 1):
        cl = dec.class_of(v)
        signs[v] = dec.sign_to_max(v) if cl.kind == "circle" else 0
    return BasisDictionary(a, b, entries, signs)


@dataclass
class GammaMap:
    source: CupDiagram
    other: CupDiagram
    degree_shift: int
    mapping: dict  # source weight -> (sign, target weight) or None


def gamma_maps(a: CupDiagram, b: CupDiagram) -> Tuple[GammaMap, GammaMap]:
    """Module maps on oriented-diagram bases obtained by transporting the
    restriction maps through the basis dictionaries."""
    target = intersection_quotient(a, b)
    if target is None:
        raise NotOrientableError(
            f"{encode(a)} and {encode(b)} have empty intersection"
        )
    dict_ab = diagram_basis_dictionary(a, b)
    shift = min_degree_element(a, b)[1]
    out = []
    for source in (a, b):
        dict_src = diagram_basis_dictionary(source, source)
        mapping = {}
        for mono, oriented in dict_src.entries:
            reduced = target.reduce_monomial(mono)
            if reduced is None:
                mapping[oriented.weight] = None
            else:
                sign, image = reduced
                mapping[oriented.weight] = (sign, dict_ab.orientation_of(image).weight)
        out.append(GammaMap(source, b if source is a else a, shift, mapping))
    return out[0], out[1]
