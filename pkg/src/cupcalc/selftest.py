"""Cross-module identity suites runnable from the command line.

Each suite re-derives a structural law of the calculus on every size up
to ``k_max`` and reports one line.  The suites deliberately pit
independent code paths against each other (brute-force recounts,
closed-form counts, the two degree computations, the two admissibility
tests, and so on).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Tuple

from . import diagrams, linalg, movegraph, orientation, ringcalc, springer, tableaux


@dataclass
class SuiteResult:
    name: str
    ok: bool
    detail: str


@dataclass
class SelfTestReport:
    k_max: int
    seed: int
    suites: List[SuiteResult]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def to_json_dict(self) -> dict:
        return {
            "k_max": self.k_max,
            "seed": self.seed,
            "ok": self.ok,
            "suites": [
                {"name": s.name, "ok": s.ok, "detail": s.detail} for s in self.suites
            ],
        }


def _suite_diagram_counts(k_max, rng):
    for k in range(2, k_max + 1):
        diags = diagrams.maximal_diagrams(k)
        if k % 2 == 0 and len(diags) != math.comb(k, k // 2):
            return False, f"maximal count at k={k} is {len(diags)}"
        even = diagrams.maximal_diagrams(k, "even")
        odd = diagrams.maximal_diagrams(k, "odd")
        if len(even) != len(odd):
            return False, f"parity halves differ at k={k}"
        flipped = {diagrams.encode(diagrams.dot_parity_involution(d)) for d in even}
        if flipped != {diagrams.encode(d) for d in odd}:
            return False, f"dot involution is not a parity bijection at k={k}"
        if k % 2 == 0:
            catalan = math.comb(k, k // 2) // (k // 2 + 1)
            plain = diagrams.enumerate_diagrams(k, "max", "none")
            if len(plain) != catalan:
                return False, f"undecorated maximal count at k={k} is {len(plain)}"
    return True, f"counts and dot involution checked for k<=.{k_max}".replace(".", "")


def _suite_encoding(k_max, rng):
    for k in range(1, k_max + 1):
        seen = {}
        for d in diagrams.enumerate_diagrams(k, "any", "all"):
            text = diagrams.encode(d)
            if text in seen:
                return False, f"encoding collision at k={k}: {text}"
            seen[text] = d
            if diagrams.parse_dsl(text) != d:
                return False, f"round trip failed for {text}"
            if diagrams.from_json(diagrams.render(d, "json")) != d:
                return False, f"json round trip failed for {text}"
    return True, f"encode/parse/json bijective for all diagrams, k<={k_max}"


def _suite_orientation_counts(k_max, rng):
    for k in range(2, min(k_max, 6) + 1):
        for c in diagrams.maximal_diagrams(k):
            weights = orientation.orientations_of_cup(c)
            if len(weights) != 2 ** c.n_cups:
                return False, f"orientation count wrong for {c.encode()}"
            brute = [
                w
                for w in _all_weights(k)
                if orientation.is_oriented(w, c)
            ]
            if sorted(str(w) for w in brute) != sorted(str(w) for w in weights):
                return False, f"orientation oracle mismatch for {c.encode()}"
    return True, "orientations match the brute-force oracle"


def _all_weights(k):
    for combo in itertools.product(orientation.DOWN + orientation.UP, repeat=k):
        yield orientation.Weight("".join(combo))


def _suite_degree_convention(k_max, rng):
    """Each circle flip changes the degree by exactly 2, anticlockwise low."""
    for k in range(2, min(k_max, 5) + 1):
        for parity in ("even", "odd"):
            for a, b in itertools.product(diagrams.maximal_diagrams(k, parity), repeat=2):
                for o in orientation.orient_circle_diagram(a.star(), b):
                    for mx, cls in o.circle_classes:
                        cl = o.decomposition.class_of(mx)
                        flipped = o.weight.flip(cl.vertices)
                        d2 = orientation.diagram_degree(a.star(), flipped, b)
                        delta = 2 if cls == "anticlockwise" else -2
                        if d2 - o.degree != delta:
                            return False, (
                                f"circle flip at {mx} of {a.encode()}/{b.encode()} "
                                f"changed degree by {d2 - o.degree}"
                            )
    return True, "circle class by rightmost label matches the degree pattern"


def _suite_min_degree(k_max, rng):
    for k in range(2, min(k_max, 6) + 1):
        for c in diagrams.enumerate_diagrams(k, "any", "all"):
            w = orientation.degree_zero_weight(c)
            if orientation.cup_of_weight(w) != c:
                return False, f"degree-zero weight not inverted for {c.encode()}"
        for w in _all_weights(k):
            c = orientation.cup_of_weight(w)
            if orientation.half_degree(w, c) != 0:
                return False, f"cup_of_weight({w}) has positive degree"
            matches = [
                d
                for d in diagrams.enumerate_diagrams(k, "any", "all")
                if orientation.is_oriented(w, d)
                and orientation.half_degree(w, d) == 0
            ]
            if matches != [c]:
                return False, f"degree-zero diagram of {w} is not unique"
    return True, "degree-zero diagram of a weight exists uniquely"


def _suite_move_parity(k_max, rng):
    for k in range(2, k_max + 1):
        for a in diagrams.maximal_diagrams(k):
            for b, move in movegraph.successors(a):
                if a.dot_parity != b.dot_parity:
                    return False, f"move {move} changed dot parity"
                if (a, move) not in [
                    (src, mv) for src, mv in movegraph.predecessors(b)
                ]:
                    return False, f"predecessors missed {move} into {b.encode()}"
    return True, "moves preserve dot parity; successor/predecessor agree"


def _suite_connectivity(k_max, rng):
    for k in range(2, k_max + 1):
        for parity in ("even", "odd"):
            movegraph.move_graph(k, parity)  # raises when disconnected
    return True, f"move graphs connected per parity, k<={k_max}"


def _suite_distance_circles(k_max, rng):
    for k in range(2, k_max + 1):
        m = k // 2
        for parity in ("even", "odd"):
            nodes = diagrams.maximal_diagrams(k, parity)
            for a, b in itertools.product(nodes, repeat=2):
                oriented = orientation.orient_circle_diagram(a.star(), b)
                if not oriented:
                    continue
                circles = len(orientation.decompose(a.star(), b).circles)
                d = movegraph.distance(a, b)
                if d != m - circles:
                    return False, f"distance {d} != {m}-{circles} for {a.encode()},{b.encode()}"
                mde = orientation.min_degree_element(a, b)
                if mde[1] != d:
                    return False, f"minimal degree {mde[1]} != distance {d}"
    return True, "distance equals cups minus circles on orientable pairs"


def _suite_forest(k_max, rng):
    for k in range(2, k_max + 1):
        for a in diagrams.maximal_diagrams(k):
            forest = movegraph.cup_forest(a)
            if forest.n_roots + forest.n_edges != a.n_cups:
                return False, f"roots+edges != cups for {a.encode()}"
            if k % 2 == 1:
                ray = a.rays[0]
                if ray.dotted:
                    expected = set(forest.roots)
                else:
                    expected = {c for c in forest.roots if c.left > ray.at}
                if set(forest.special_roots) != expected:
                    return False, f"special roots wrong for {a.encode()}"
    return True, "forest identity and special-root rule hold"


def _suite_cell_sum(k_max, rng):
    for k in range(2, k_max + 1):
        total = sum(movegraph.free_cell_count(a) for a in diagrams.maximal_diagrams(k))
        if total != 2 ** k:
            return False, f"free cells total {total} != 2^{k}"
        for a in diagrams.maximal_diagrams(k):
            forest = movegraph.cup_forest(a)
            closed = (
                2 ** len(forest.roots)
                if k % 2 == 0
                else 2 ** (len(forest.roots) - len(forest.special_roots))
            )
            if movegraph.free_cell_count(a) != closed:
                return False, f"free cell count of {a.encode()} is not {closed}"
    return True, "free cells total 2^k and match the closed form"


def _suite_quotients(k_max, rng):
    for k in range(2, min(k_max, 6) + 1):
        for parity in ("even", "odd"):
            nodes = diagrams.maximal_diagrams(k, parity)
            for a, b in itertools.combinations(nodes, 2):
                target = ringcalc.intersection_quotient(a, b)
                if target is None:
                    continue
                # every generator of the one-diagram ideal dies downstairs
                for d in (a, b):
                    for cup in d.cups:
                        gen = ringcalc.SquarefreeElement.variable(k, cup.left) + (
                            ringcalc.SquarefreeElement.variable(k, cup.right).scale(
                                -1 if cup.dotted else 1
                            )
                        )
                        if not target.reduce(gen).is_zero():
                            return False, f"ideal inclusion fails for {d.encode()}"
                    for ray in d.rays:
                        gen = ringcalc.SquarefreeElement.variable(k, ray.at)
                        if not target.reduce(gen).is_zero():
                            return False, f"ray generator survives for {d.encode()}"
                ma, mb = ringcalc.restriction_maps(a, b)
                if not (ma.is_surjective() and mb.is_surjective()):
                    return False, f"restriction not surjective for {a.encode()},{b.encode()}"
    return True, "ideal inclusions and surjectivity of restrictions hold"


def _suite_centre(k_max, rng):
    for k in range(2, min(k_max, 7) + 1):
        dims = [ringcalc.centre(k, p).dimension for p in ("even", "odd")]
        if sum(dims) != 2 ** k:
            return False, f"centre dims {dims} do not total 2^{k}"
    return True, "equalizer dimension totals 2^k per size"


def _suite_ring_comparison(k_max, rng):
    for k in range(2, min(k_max, 6) + 1):
        pres = springer.presentation_ring(k)
        even = ringcalc.centre(k, "even").graded_dims
        odd = ringcalc.centre(k, "odd").graded_dims
        for d in range(k + 1):
            lhs = even.get(d, 0) + odd.get(d, 0)
            if lhs != 2 * pres.graded_dims[d]:
                return False, f"degree {d} of k={k}: centre {lhs} vs ring {2 * pres.graded_dims[d]}"
    return True, "centre matches two copies of the presentation ring"


def _suite_springer(k_max, rng):
    for k in range(2, k_max + 1):
        pres = springer.presentation_ring(k)  # raises when basis fails
        for t in (0, 1, 2, 3):
            if springer.equivariant_specialization(k, t) != 2 ** (k - 1):
                return False, f"deformed dimension at k={k}, t={t}"
        springer.filtration_census(k)  # raises when the total is off
    return True, "presentation bases, deformations and census verified"


def _suite_graded_identity(k_max, rng):
    for k in range(2, min(k_max, 7) + 1):
        direct = springer.arc_algebra_graded_dimension(k)
        closed = springer.arc_algebra_graded_dimension_closed_form(k)
        if direct != closed:
            return False, f"graded dimension mismatch at k={k}"
        tables = sum(
            springer.fixed_point_table(k, parity).total_count()
            for parity in ("even", "odd")
        )
        if direct.total != tables:
            return False, f"total {direct.total} != table count {tables} at k={k}"
        if direct.coefficients.get(0, 0) != len(diagrams.maximal_diagrams(k)):
            return False, f"degree-zero coefficient at k={k}"
    return True, "graded dimension matches closed form and table counts"


def _suite_tableaux(k_max, rng):
    shapes = [
        (r, s)
        for s in range(1, k_max + 1)
        for r in range(s, 2 * k_max - s + 1)
        if (r + s) % 2 == 0 and (r + s) // 2 <= k_max and tableaux.admissible_two_row((r, s))
    ]
    for shape in shapes:
        for t in tableaux.enumerate_signed(shape):
            c = tableaux.to_cup(t)
            if tableaux.from_cup(c, shape) != t:
                return False, f"cup round trip failed on {shape}"
            minus = sum(1 for _, sign in t.signs if sign == "-")
            if minus % 2 != c.dot_count % 2:
                return False, f"sign/dot parity law failed on {shape}"
        for S in tableaux.enumerate_dt(shape):
            if tableaux.cyc(tableaux.cyc_inverse(S)) != S:
                return False, f"cycle round trip failed on {shape}"
        for t in tableaux.enumerate_adt(shape):
            if tableaux.is_admissible(t) != tableaux.horizontal_rule(t):
                return False, f"admissibility tests disagree on {shape}"
    for k in range(2, k_max + 1, 2):
        images = {tableaux.stable_to_cup(p).encode() for p in tableaux.enumerate_stables(k)}
        if images != {d.encode() for d in diagrams.maximal_diagrams(k)}:
            return False, f"two-column tables miss maximal diagrams at k={k}"
    return True, "tableau bijections, parity law and table bijection hold"


def _suite_order_independence(k_max, rng):
    k = min(k_max, 5)
    for parity in ("even", "odd"):
        lex = ringcalc.centre(k, parity, tie_break="lex").graded_dims
        rev = ringcalc.centre(k, parity, tie_break="revlex").graded_dims
        if lex != rev:
            return False, f"centre dims depend on the tie break at k={k}"
    return True, "results independent of the total-order refinement"


def _suite_sampled_geodesics(k_max, rng):
    k = min(k_max + 1, 8)
    for parity in ("even", "odd"):
        nodes = diagrams.maximal_diagrams(k, parity)
        pool = [(a, b) for a in nodes for b in nodes]
        for a, b in rng.sample(pool, min(60, len(pool))):
            c = movegraph.geodesic_meet(a, b)
            if movegraph.distance(a, c) + movegraph.distance(c, b) != movegraph.distance(a, b):
                return False, f"geodesic meet fails for {a.encode()},{b.encode()}"
    return True, f"sampled geodesic meets verified at k={k}"


SUITES: List[Tuple[str, Callable]] = [
    ("diagram-counts", _suite_diagram_counts),
    ("encoding-roundtrip", _suite_encoding),
    ("orientation-oracle", _suite_orientation_counts),
    ("degree-convention", _suite_degree_convention),
    ("degree-zero-diagrams", _suite_min_degree),
    ("move-parity", _suite_move_parity),
    ("graph-connectivity", _suite_connectivity),
    ("distance-circles", _suite_distance_circles),
    ("cup-forest", _suite_forest),
    ("cell-census", _suite_cell_sum),
    ("quotient-rings", _suite_quotients),
    ("centre-dimension", _suite_centre),
    ("ring-comparison", _suite_ring_comparison),
    ("presentation-rings", _suite_springer),
    ("graded-identity", _suite_graded_identity),
    ("tableau-bijections", _suite_tableaux),
    ("order-independence", _suite_order_independence),
    ("geodesic-meets", _suite_sampled_geodesics),
]


def selftest(k_max: int, seed: int = 0) -> SelfTestReport:
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    results = []
    rng = random.Random(seed)
    for name, fn in SUITES:
        ok, detail = fn(k_max, rng)
        results.append(SuiteResult(name, ok, detail))
    return SelfTestReport(k_max, seed, results)
