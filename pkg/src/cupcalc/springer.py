"""Presentation rings, fixed-point tables and graded dimension counts.

The cohomology of one connected component of the fibre configuration is
presented as a quotient of Q[x_1..x_k]/(x_i^2): for odd k all monomials
x_I with |I| >= (k+1)/2 die; for even k the monomials with |I| > k/2
die and x_I is identified with its complementary monomial when
|I| = k/2.  Either way the quotient has dimension 2^(k-1), with an
explicit monomial basis.  The equivariant deformation replaces x_i^2
with t^2 (and, for odd k, inserts a factor t into the identification);
its dimension is 2^(k-1) for every value of t.

Fixed points of the torus action on component intersections are
labelled by the weights orienting the glued diagram, giving the square
intersection table of a parity, and summing q^degree over all oriented
diagrams yields the graded dimension of the diagram algebra spanned by
them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

from . import linalg
from .diagrams import CupDiagram, enumerate_diagrams, maximal_diagrams
from .errors import InternalCheckError
from .movegraph import distance
from .orientation import DOWN, UP, Weight, decompose, orient_circle_diagram


class MalformedIndexSetError(ValueError):
    pass


class UnequalRowShapeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Presentation rings


@dataclass(frozen=True)
class PresentationRing:
    k: int
    basis: tuple          # monomials as frozensets, by (size, lex)
    graded_dims: tuple    # graded_dims[d] = number of basis monomials of size d
    relation_rank: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def graded_dims_cohomological(self) -> dict:
        return {2 * d: n for d, n in enumerate(self.graded_dims) if n}


def _subsets(universe: List[int]):
    n = len(universe)
    for mask in range(1 << n):
        yield frozenset(universe[i] for i in range(n) if mask >> i & 1)


def _mono_index(k: int):
    monos = sorted(_subsets(list(range(1, k + 1))), key=lambda m: (len(m), sorted(m)))
    return monos, {m: i for i, m in enumerate(monos)}


def presentation_relations(k: int) -> List[Dict[int, Fraction]]:
    """Spanning set of the presentation ideal inside the 2^k-dim ambient ring."""
    monos, index = _mono_index(k)
    rows = []
    if k % 2 == 1:
        for m in monos:
            if len(m) >= (k + 1) // 2:
                rows.append({index[m]: Fraction(1)})
    else:
        full = frozenset(range(1, k + 1))
        for m in monos:
            if len(m) > k // 2:
                rows.append({index[m]: Fraction(1)})
            elif len(m) == k // 2 and k in m:
                rows.append({index[m]: Fraction(1), index[full - m]: Fraction(-1)})
    return rows


def presentation_basis(k: int) -> List[frozenset]:
    basis = []
    for m in sorted(_subsets(list(range(1, k + 1))), key=lambda m: (len(m), sorted(m))):
        if k % 2 == 1:
            if len(m) <= (k - 1) // 2:
                basis.append(m)
        else:
            if len(m) < k // 2 or (len(m) == k // 2 and k in m):
                basis.append(m)
    return basis


def presentation_ring(k: int) -> PresentationRing:
    """The 2^(k-1)-dimensional presentation ring with its monomial basis.

    The claimed basis is certified by elimination: the relation span and
    the basis span are complementary inside the ambient ring.
    """
    if k < 1:
        raise ValueError("k must be positive")
    monos, index = _mono_index(k)
    relations = presentation_relations(k)
    rank = linalg.rank(relations)
    basis = presentation_basis(k)
    if rank + len(basis) != 2 ** k:
        raise InternalCheckError(
            f"relation rank {rank} and basis size {len(basis)} do not fill 2^{k}"
        )
    combined = relations + [{index[m]: Fraction(1)} for m in basis]
    if linalg.rank(combined) != 2 ** k:
        raise InternalCheckError("claimed basis is not a complement of the relations")
    dims = [0] * (k + 1)
    for m in basis:
        dims[len(m)] += 1
    if len(basis) != 2 ** (k - 1):
        raise InternalCheckError("presentation dimension is not 2^(k-1)")
    return PresentationRing(k, tuple(basis), tuple(dims), rank)


def equivariant_specialization(k: int, t) -> int:
    """Dimension of the deformed presentation ring at a rational value t.

    In the algebra with x_i^2 = t^2 the defining relations pair each
    half-size monomial with its complement, so every spanned relation
    has at most two terms and the quotient dimension is computed exactly
    by a weighted union-find over the 2^k squarefree monomials.
    """
    t = Fraction(t)
    n = 1 << k
    full = n - 1
    generators = []  # (mask I, power adjustment for the complementary side)
    if k % 2 == 0:
        seen = set()
        for mask in range(n):
            if bin(mask).count("1") == k // 2 and mask not in seen:
                comp = full ^ mask
                seen.add(comp)
                generators.append((mask, 0))
    else:
        for mask in range(n):
            if bin(mask).count("1") == (k + 1) // 2:
                generators.append((mask, 1))

    uf = linalg.ScaledUnionFind(n)
    for mask_i, extra in generators:
        comp = full ^ mask_i
        for m in range(n):
            c1 = t ** (2 * bin(m & mask_i).count("1"))
            c2 = t ** (2 * bin(m & comp).count("1") + extra)
            a, b = m ^ mask_i, m ^ comp
            if c1 and c2:
                uf.relate(a, b, c2 / c1)
            elif c1:
                uf.kill(a)
            elif c2:
                uf.kill(b)
    return uf.live_class_count()


# ---------------------------------------------------------------------------
# Weights versus signed index sets


def _check_index_set(indices, k: Optional[int] = None) -> Tuple[int, frozenset]:
    iset = frozenset(indices)
    if not iset or any(not isinstance(i, int) or i == 0 for i in iset):
        raise MalformedIndexSetError(f"index set must contain signed nonzero integers: {sorted(iset)}")
    size = max(abs(i) for i in iset)
    if k is not None:
        size = k
    for i in range(1, size + 1):
        if (i in iset) == (-i in iset):
            raise MalformedIndexSetError(
                f"index set must contain exactly one of +-{i}: {sorted(iset)}"
            )
    if len(iset) != size:
        raise MalformedIndexSetError(f"index set has stray entries: {sorted(iset)}")
    return size, iset


def weight_of_index_set(indices, convention: str = "stable") -> Weight:
    """Decode a signed index set into a weight.

    ``"stable"``: up at i when +i is present; ``"fixed_point"``: up at i
    when -i is present.  The conventions differ by negating the set.
    """
    k, iset = _check_index_set(indices)
    chars = []
    for i in range(1, k + 1):
        present = i in iset
        if convention == "stable":
            chars.append(UP if present else DOWN)
        elif convention == "fixed_point":
            chars.append(DOWN if present else UP)
        else:
            raise ValueError(f"unknown convention {convention!r}")
    return Weight("".join(chars))


def index_set_of_weight(weight: Weight, convention: str = "stable") -> frozenset:
    out = set()
    for i in range(1, len(weight) + 1):
        up = weight[i] == UP
        if convention == "stable":
            out.add(i if up else -i)
        elif convention == "fixed_point":
            out.add(-i if up else i)
        else:
            raise ValueError(f"unknown convention {convention!r}")
    return frozenset(out)


# ---------------------------------------------------------------------------
# Fixed-point tables and graded dimensions


@dataclass(frozen=True)
class FixedPointTable:
    k: int
    parity: str
    diagrams: tuple
    entries: tuple  # entries[i][j] = tuple of Weight

    def entry(self, i: int, j: int) -> tuple:
        return self.entries[i][j]

    def total_count(self) -> int:
        return sum(len(cell) for row in self.entries for cell in row)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "parity": self.parity,
            "diagrams": [d.encode() for d in self.diagrams],
            "table": [
                [[str(w) for w in cell] for cell in row] for row in self.entries
            ],
        }


def fixed_point_table(k: int, parity: str, shape: Optional[Tuple[int, int]] = None) -> FixedPointTable:
    """Square table of torus-fixed points on pairwise intersections.

    Only the equal-row case is meaningful; a ``shape`` other than (k, k)
    is refused rather than extrapolated.
    """
    if shape is not None and tuple(shape) != (k, k):
        raise UnequalRowShapeError(
            f"fixed-point tables require equal rows, got shape {tuple(shape)}"
        )
    diagrams = maximal_diagrams(k, parity)
    entries = []
    for a in diagrams:
        row = []
        for b in diagrams:
            oriented = orient_circle_diagram(a.star(), b)
            row.append(tuple(o.weight for o in oriented))
        entries.append(tuple(row))
    return FixedPointTable(k, parity, diagrams, tuple(entries))


class GradedDimension(NamedTuple):
    coefficients: dict  # q-exponent -> coefficient
    total: int          # value at q = 1


def arc_algebra_graded_dimension(k: int) -> GradedDimension:
    """Graded dimension of the span of all oriented glued diagrams.

    Sums q^degree over every orientation of every same-parity ordered
    pair of maximal diagrams.
    """
    coeffs: Dict[int, int] = {}
    for parity in ("even", "odd"):
        diagrams = maximal_diagrams(k, parity)
        for a in diagrams:
            for b in diagrams:
                for o in orient_circle_diagram(a.star(), b):
                    coeffs[o.degree] = coeffs.get(o.degree, 0) + 1
    return GradedDimension(dict(sorted(coeffs.items())), sum(coeffs.values()))


def arc_algebra_graded_dimension_closed_form(k: int) -> GradedDimension:
    """The same polynomial via q^d(a,b) (1+q^2)^circles per orientable pair,
    with d(a,b) taken from the move graph."""
    coeffs: Dict[int, int] = {}
    for parity in ("even", "odd"):
        diagrams = maximal_diagrams(k, parity)
        for a in diagrams:
            for b in diagrams:
                if not orient_circle_diagram(a.star(), b):
                    continue
                circles = len(decompose(a.star(), b).circles)
                d = distance(a, b)
                for flipped in range(circles + 1):
                    coeffs[d + 2 * flipped] = (
                        coeffs.get(d + 2 * flipped, 0) + math.comb(circles, flipped)
                    )
    return GradedDimension(dict(sorted(coeffs.items())), sum(coeffs.values()))


def filtration_census(k: int) -> List[Tuple[int, int]]:
    """Number of legal diagrams on k vertices with j cups, j = 0..floor(k/2).

    The level counts always total 2^k.
    """
    census = [
        (j, len(enumerate_diagrams(k, cups=j, dots="all")))
        for j in range(k // 2 + 1)
    ]
    if sum(c for _, c in census) != 2 ** k:
        raise InternalCheckError(f"filtration census of k={k} does not total 2^{k}")
    return census
