"""Random valid gluing data, for property tests and the acceptance run."""
from __future__ import annotations

import random
from fractions import Fraction

from .catalog import FOUR_LINES, VIRUS
from .core import (
    BoundaryBlueprint,
    ComponentId,
    GluedSurface,
    Involution,
    MarkedPointId,
    TileBlueprint,
    TileInstance,
)

__all__ = ["EXTRA_TILES", "random_surface"]

# small planar pairs with nodal boundary; not part of the catalog
TRIANGLE = TileBlueprint(
    name="P2_three_lines", chi=1, kplusd_sq=Fraction(0),
    boundaries=tuple(BoundaryBlueprint(f"L{i}", 2) for i in (1, 2, 3)),
    node_pairing=(((0, 0), (1, 0)), ((0, 1), (2, 0)), ((1, 1), (2, 1))),
)
CONIC_LINE = TileBlueprint(
    name="P2_conic_line", chi=1, kplusd_sq=Fraction(0),
    boundaries=(BoundaryBlueprint("Q", 2), BoundaryBlueprint("L", 2)),
    node_pairing=(((0, 0), (1, 0)), ((0, 1), (1, 1))),
)
SMOOTH_CONIC = TileBlueprint(
    name="P2_conic", chi=1, kplusd_sq=Fraction(1),
    boundaries=(BoundaryBlueprint("Q", 0),),
    node_pairing=(),
)

EXTRA_TILES = (TRIANGLE, CONIC_LINE, SMOOTH_CONIC)
POOL = (FOUR_LINES, VIRUS) + EXTRA_TILES


def _pinch(rng, c, m, pairs):
    # fixed marked points: parity of m decides, at most 2
    n_fixed = 1 if m % 2 else rng.choice([0, 2] if m >= 2 else [0])
    idx = list(range(m))
    rng.shuffle(idx)
    for p in idx[:n_fixed]:
        pairs.append((MarkedPointId(*c, p), MarkedPointId(*c, p)))
    rest = idx[n_fixed:]
    for p, q in zip(rest[::2], rest[1::2]):
        pairs.append((MarkedPointId(*c, p), MarkedPointId(*c, q)))


def random_surface(rng: random.Random, max_tiles: int = 5, pinch_prob: float = 0.15,
                   pool=POOL) -> GluedSurface:
    """A random surface that passes ``validate``.

    Components with equal marked-point counts are paired by random bijections;
    leftovers and a random fraction of the rest are pinched.
    """
    n = rng.randint(1, max_tiles)
    tiles = tuple(TileInstance(f"R{i}", rng.choice(pool)) for i in range(n))
    comps = [(ComponentId(t.id, b), bd.marked_point_count)
             for t in tiles for b, bd in enumerate(t.blueprint.boundaries)]
    rng.shuffle(comps)
    by_count: dict[int, list[ComponentId]] = {}
    comp_pairs = []
    point_pairs = []
    for c, m in comps:
        if m <= 4 and rng.random() < pinch_prob:
            comp_pairs.append((c, c))
            _pinch(rng, c, m, point_pairs)
        else:
            by_count.setdefault(m, []).append(c)
    for m, cs in by_count.items():
        if len(cs) % 2:
            c = cs.pop()
            comp_pairs.append((c, c))
            _pinch(rng, c, m, point_pairs)
        for c, d in zip(cs[::2], cs[1::2]):
            comp_pairs.append((c, d))
            img = list(range(m))
            rng.shuffle(img)
            for p in range(m):
                point_pairs.append((MarkedPointId(*c, p), MarkedPointId(*d, img[p])))
    inv = Involution.from_pairs(comp_pairs, point_pairs)
    return GluedSurface(tiles, inv, ({"family": "RANDOM", "tiles": n},))
