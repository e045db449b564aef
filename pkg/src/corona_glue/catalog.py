"""Tile blueprints and the internal L3/L4 gluing patterns.

The four-line tile is (P^2, L1+L2+L3+L4) with four general lines. Its marked
points are the pairwise intersections; on line ``Li`` the points are ordered by
the index of the other line, so ``L1`` carries the points meeting L2, L3, L4.

The virus tile is (P(1,1,3), C1+C2) with two hyperplane sections meeting in
three points; point ``j`` of C1 and point ``j`` of C2 form a node.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import ONE_THIRD_1_1, BoundaryBlueprint, TileBlueprint

__all__ = [
    "FOUR_LINES",
    "VIRUS",
    "TILES",
    "line_point",
    "point_line",
    "InternalPattern",
    "enumerate_L34_matchings",
    "swap_L1_L2",
    "classify_matchings_up_to_iso",
    "PATTERNS",
    "sigma",
]

LINES = (1, 2, 3, 4)


def line_point(i: int, j: int) -> tuple[int, int]:
    """(boundary_index, point_index) of the point of line ``Li`` meeting ``Lj``."""
    if i == j or i not in LINES or j not in LINES:
        raise ValueError(f"no intersection point L{i}.L{j}")
    others = [m for m in LINES if m != i]
    return i - 1, others.index(j)


def point_line(i: int, point_index: int) -> int:
    """Inverse of :func:`line_point`: the other line through a marked point of ``Li``."""
    return [m for m in LINES if m != i][point_index]


FOUR_LINES = TileBlueprint(
    name="P2_four_lines",
    chi=1,
    kplusd_sq=Fraction((-3 + 4) ** 2),
    boundaries=tuple(BoundaryBlueprint(f"L{i}", 3) for i in LINES),
    node_pairing=tuple((line_point(i, j), line_point(j, i))
                       for i, j in itertools.combinations(LINES, 2)),
    lc_certified=True,
)

VIRUS = TileBlueprint(
    name="V_P113",
    chi=1,
    kplusd_sq=Fraction(1, 3),
    boundaries=(BoundaryBlueprint("C1", 3), BoundaryBlueprint("C2", 3)),
    node_pairing=tuple(((0, j), (1, j)) for j in range(3)),
    interior_singularities=(ONE_THIRD_1_1,),
    lc_certified=True,
)

TILES = {t.name: t for t in (FOUR_LINES, VIRUS)}


@dataclass(frozen=True)
class InternalPattern:
    """A bijection from the marked points of L3 onto those of L4.

    ``matching`` is a tuple of ``(a, b)``: the point of L3 meeting ``La`` is
    glued to the point of L4 meeting ``Lb``.
    """

    name: str
    matching: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.matching)


def enumerate_L34_matchings() -> list[tuple[tuple[int, int], ...]]:
    """All 3! bijections from the points of L3 to the points of L4."""
    src = [1, 2, 4]
    return [tuple(zip(src, img)) for img in itertools.permutations([1, 2, 3])]


_SWAP12 = {1: 2, 2: 1, 3: 3, 4: 4}


def swap_L1_L2(matching):
    """Conjugate a matching by renaming L1 <-> L2."""
    return tuple(sorted((_SWAP12[a], _SWAP12[b]) for a, b in matching))


def _canonical(matching):
    return min(tuple(sorted(matching)), swap_L1_L2(matching))


def _strand_shape(matching) -> tuple[bool, bool]:
    """(has an internal loop, L1 strands end on L2) for a tile glued by ``matching``.

    Strands alternate between node partners and the L3/L4 gluing; they start
    and end on L1 or L2, except for closed loops that stay inside L3+L4.
    """
    m = dict(matching)
    # L1.L3 -> L3.L1 -> L4.L(m[1]); a detour through L4.L3 -> L3.L4 continues at L4.L(m[4])
    exit_line = m[1] if m[1] != 3 else m[4]
    return m[4] == 3, exit_line == 2


def classify_matchings_up_to_iso() -> dict[str, list[tuple[tuple[int, int], ...]]]:
    """Group the six matchings into orbits under L1 <-> L2 and label them A-D.

    Labels follow the strand behaviour of a glued tile: C and D close up an
    internal loop, A and B do not; in A and C the strands starting on L1 end
    on L2, in B and D they return to L1.
    """
    orbits: dict[tuple, list] = {}
    for m in enumerate_L34_matchings():
        orbits.setdefault(_canonical(m), []).append(tuple(sorted(m)))
    labels = {(False, True): "A", (False, False): "B", (True, True): "C", (True, False): "D"}
    out = {}
    for rep, members in orbits.items():
        shape = _strand_shape(rep)
        out[labels[shape]] = sorted(members)
    return dict(sorted(out.items()))


# frozen representatives; tests/test_catalog.py re-derives them from family invariants
PATTERNS = {
    "A": InternalPattern("A", ((1, 2), (2, 3), (4, 1))),
    "B": InternalPattern("B", ((1, 1), (2, 3), (4, 2))),
    "C": InternalPattern("C", ((1, 2), (2, 1), (4, 3))),
    "D": InternalPattern("D", ((1, 1), (2, 2), (4, 3))),
}


def sigma() -> dict[tuple[int, int], tuple[int, int]]:
    """The fixed involution on C1+C2 of the virus tile: point j of C1 <-> point j of C2.

    Any node-preserving choice gives the same invariants; this one is the node
    partner map.
    """
    out = {}
    for j in range(3):
        out[(0, j)] = (1, j)
        out[(1, j)] = (0, j)
    return out
