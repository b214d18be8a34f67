"""Independent brute-force oracles used to pin expected test values.

Everything here recomputes results from first principles with code
paths disjoint from the package (no recursive interval generation, no
union-find, no rewrite systems) so the two sides can disagree.
"""

import itertools
from fractions import Fraction

from cupcalc.diagrams import Cup, Ray


def raw_arc_covers(k):
    """Every way to cover 1..k by disjoint pairs and singletons, with all
    dot assignments (one optional dot per arc)."""
    def partitions(vertices):
        if not vertices:
            yield [], []
            return
        first, rest = vertices[0], vertices[1:]
        for cups, rays in partitions(rest):
            yield cups, [first] + rays
        for i, other in enumerate(rest):
            remaining = rest[:i] + rest[i + 1 :]
            for cups, rays in partitions(remaining):
                yield [(first, other)] + cups, rays

    for cups, rays in partitions(list(range(1, k + 1))):
        arcs = len(cups) + len(rays)
        for dotmask in range(1 << arcs):
            cup_arcs = [
                Cup(l, r, bool(dotmask >> i & 1)) for i, (l, r) in enumerate(cups)
            ]
            ray_arcs = [
                Ray(at, bool(dotmask >> (len(cups) + i) & 1))
                for i, at in enumerate(rays)
            ]
            yield cup_arcs, ray_arcs


def brute_crossingless_matchings(k):
    """Perfect matchings of 1..k with no crossing pair, by brute force."""
    if k % 2:
        return []
    out = []
    for cups, rays in raw_arc_covers(k):
        if rays or any(c.dotted for c in cups):
            continue
        pairs = [(c.left, c.right) for c in cups]
        if any(
            a < p < b < q
            for (a, b), (p, q) in itertools.permutations(pairs, 2)
        ):
            continue
        out.append(tuple(sorted(pairs)))
    return out


def brute_orientations(k, arcs):
    """Weights satisfying the arc rules, checked symbol by symbol.

    ``arcs`` is a list of ('cup'|'ray', data, dotted) entries.
    """
    from cupcalc.orientation import Weight

    out = []
    for combo in itertools.product("v^", repeat=k):
        ok = True
        for kind, data, dotted in arcs:
            if kind == "cup":
                l, r = data
                same = combo[l - 1] == combo[r - 1]
                if dotted != same:
                    ok = False
            else:
                want = "^" if dotted else "v"
                if combo[data - 1] != want:
                    ok = False
        if ok:
            out.append(Weight("".join(combo)))
    return out


def brute_clockwise_count(weight, diagram):
    """Clockwise arcs counted directly from the label pairs."""
    count = 0
    for c in diagram.cups:
        pair = str(weight)[c.left - 1] + str(weight)[c.right - 1]
        if (not c.dotted and pair == "^v") or (c.dotted and pair == "vv"):
            count += 1
    return count


def dense_rank(rows, ncols):
    """Plain dense Gaussian elimination over Fractions."""
    matrix = [[Fraction(row.get(c, 0)) for c in range(ncols)] for row in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(matrix)):
            if matrix[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = Fraction(1) / matrix[rank][col]
        matrix[rank] = [v * inv for v in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col]:
                f = matrix[r][col]
                matrix[r] = [a - f * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank


def brute_equivariant_dimension(k, t):
    """Deformed presentation dimension by dense elimination on all
    monomial multiples of the defining relations."""
    t = Fraction(t)
    n = 1 << k
    full = n - 1
    gens = []
    if k % 2 == 0:
        seen = set()
        for mask in range(n):
            if bin(mask).count("1") == k // 2 and mask not in seen:
                seen.add(full ^ mask)
                gens.append((mask, 0))
    else:
        for mask in range(n):
            if bin(mask).count("1") == (k + 1) // 2:
                gens.append((mask, 1))
    rows = []
    for mask, extra in gens:
        comp = full ^ mask
        for m in range(n):
            row = {}
            c1 = t ** (2 * bin(m & mask).count("1"))
            c2 = t ** (2 * bin(m & comp).count("1") + extra)
            if c1:
                row[m ^ mask] = row.get(m ^ mask, Fraction(0)) + c1
            if c2:
                row[m ^ comp] = row.get(m ^ comp, Fraction(0)) - c2
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
    return n - dense_rank(rows, n)


def brute_domino_tableaux(shape):
    """All standard domino tableaux of a two-row shape by filtering every
    filling of every tiling."""
    r, s = shape
    n = (r + s) // 2
    cells = [(1, c) for c in range(1, r + 1)] + [(2, c) for c in range(1, s + 1)]

    def tilings(remaining):
        if not remaining:
            yield []
            return
        cell = min(remaining)
        row, col = cell
        for other in ((row, col + 1), (row + 1, col)):
            if other in remaining:
                rest = remaining - {cell, other}
                for tiling in tilings(rest):
                    yield [(cell, other)] + tiling

    out = []
    for tiling in tilings(set(cells)):
        for perm in itertools.permutations(range(1, n + 1)):
            filling = {}
            for label, (c1, c2) in zip(perm, tiling):
                filling[c1] = label
                filling[c2] = label
            ok = True
            for (row, col), label in filling.items():
                right = filling.get((row, col + 1))
                below = filling.get((row + 1, col))
                if (right is not None and right < label) or (
                    below is not None and below < label
                ):
                    ok = False
                    break
            if ok:
                out.append(
                    tuple(
                        sorted(
                            (label, tuple(sorted(cells_)))
                            for cells_, label in _group(filling).items()
                        )
                    )
                )
    return sorted(set(out))


def _group(filling):
    groups = {}
    for cell, label in filling.items():
        groups.setdefault(label, []).append(cell)
    return {tuple(sorted(v)): k for k, v in groups.items()}


def brute_is_admissible_chain(tableau_cells):
    """Truncation-chain admissibility recomputed from scratch."""
    placed = []
    for label, cells in tableau_cells:
        placed.extend(cells)
        r = sum(1 for (row, _) in placed if row == 1)
        s = sum(1 for (row, _) in placed if row == 2)
        if s > r:
            return False
        if s == 0:
            if r % 2 == 0 and r != 0:
                return False
        elif r != s and (r % 2 == 0 or s % 2 == 0):
            return False
    return True
