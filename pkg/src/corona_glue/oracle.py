"""Brute-force checks that share nothing with the main pipeline but the data model.

``delta_bruteforce`` walks the strand graph depth-first instead of using
union-find; ``chi_from_cycles`` re-derives chi(O_X) term by term from that walk;
``orbit_enumeration`` closes sets under generators by breadth-first search.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

from .core import GluedSurface, MarkedPointId

__all__ = [
    "delta_bruteforce",
    "delta_count",
    "chi_from_cycles",
    "orbit_enumeration",
    "sites_bruteforce",
]


def _strand_graph(surface: GluedSurface) -> dict[MarkedPointId, set[MarkedPointId]]:
    adj: dict[MarkedPointId, set[MarkedPointId]] = {}
    for t in surface.tiles:
        bp = t.blueprint
        for b, bd in enumerate(bp.boundaries):
            for p in range(bd.marked_point_count):
                adj.setdefault(MarkedPointId(t.id, b, p), set())
        for (b1, p1), (b2, p2) in bp.node_pairing:
            x, y = MarkedPointId(t.id, b1, p1), MarkedPointId(t.id, b2, p2)
            adj[x].add(y)
            adj[y].add(x)
    for x, y in surface.involution.point_action.items():
        if x != y:
            adj[x].add(y)
            adj[y].add(x)
    return adj


def delta_bruteforce(surface: GluedSurface) -> list[tuple[MarkedPointId, ...]]:
    """Connected components of the strand graph, each sorted, ordered by least member."""
    adj = _strand_graph(surface)
    seen: set[MarkedPointId] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    comps.sort()
    return comps


def delta_count(surface: GluedSurface) -> int:
    tau = surface.involution.point_action
    return sum(1 for comp in delta_bruteforce(surface)
               if all(tau[x] != x for x in comp))


def chi_from_cycles(surface: GluedSurface) -> Fraction:
    """chi(O_X) from the tile data, counting cusps as closed strand cycles."""
    chi_tiles = 0
    n_components = 0
    n_genus = 0
    n_points = 0
    for t in surface.tiles:
        chi_tiles += t.blueprint.chi
        for bd in t.blueprint.boundaries:
            n_components += 1
            n_genus += bd.genus
            n_points += bd.marked_point_count
    nodes = Fraction(n_points, 2)
    chi_d = n_components - n_genus - nodes
    fixed_points = 0
    for c, d in surface.involution.component_action.items():
        if c == d:
            fixed_points += surface.involution.invariant_components[c].fixed_points
    return chi_tiles - chi_d / 2 - nodes / 2 + delta_count(surface) + Fraction(fixed_points, 4)


def orbit_enumeration(elements: Iterable[Hashable],
                      generators: Sequence[Callable[[Hashable], Hashable]]) -> list[list]:
    """Orbits of the group generated by ``generators`` acting on ``elements``.

    Orbits come back in order of first appearance, members in discovery order.
    """
    elements = list(elements)
    seen = set()
    orbits = []
    for e in elements:
        if e in seen:
            continue
        seen.add(e)
        orbit = [e]
        queue = deque([e])
        while queue:
            x = queue.popleft()
            for g in generators:
                y = g(x)
                if y not in seen:
                    seen.add(y)
                    orbit.append(y)
                    queue.append(y)
        orbits.append(orbit)
    return orbits


def sites_bruteforce(surface: GluedSurface) -> list[tuple]:
    """Every unordered pair of distinct components that tau swaps, both P^1 with 3 points."""
    comps = []
    for t in surface.tiles:
        for b, bd in enumerate(t.blueprint.boundaries):
            comps.append(((t.id, b), bd))
    cact = surface.involution.component_action
    out = []
    for i, (c, bc) in enumerate(comps):
        for d, bdd in comps[i + 1:]:
            if tuple(cact[c]) != d:
                continue
            if bc.genus == bdd.genus == 0 and bc.marked_point_count == bdd.marked_point_count == 3:
                out.append(tuple(sorted((c, d))))
    return sorted(out)
