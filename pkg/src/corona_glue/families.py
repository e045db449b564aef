"""Generators for the example surfaces and the virus infection operator.

Circle surfaces X(k, l) glue k internally glued four-line tiles in a cycle,
sticks X(k, k+2) glue k tiles of type D in a chain with the two end lines
pinched, and virus rings glue copies of V in a cycle. ``infect`` replaces a
glued pair of boundary curves by a detour through a fresh copy of V.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .catalog import FOUR_LINES, PATTERNS, VIRUS, line_point, point_line, sigma
from .core import (
    ComponentId,
    GluedSurface,
    GluingError,
    Involution,
    MarkedPointId,
    TileInstance,
)

__all__ = [
    "Family",
    "FamilySpec",
    "Site",
    "SEAMS",
    "x_kl",
    "x13",
    "stick",
    "double_cover",
    "virus_ring",
    "base_surface",
    "list_attachment_sites",
    "infect",
    "infect_times",
    "corona",
    "corona_a_range",
]

# L2 of one tile meets L1 of the next: the point of L2 on Lj goes to the point of L1 on L(SEAM[j])
CIRCLE_SEAM = {1: 2, 3: 3, 4: 4}
# L1 <-> L2 on a single type C tile, closing each of its three strands
X13_SEAM = {2: 1, 3: 4, 4: 3}

SEAMS = {
    "identity": (0, 1, 2),
    "transposition": (1, 0, 2),
    "3-cycle": (1, 2, 0),
}
_SEAM_BY_CYCLES = {3: SEAMS["identity"], 2: SEAMS["transposition"], 1: SEAMS["3-cycle"]}


class Family(str, enum.Enum):
    CIRCLE_LOW = "CIRCLE_LOW"
    CIRCLE_HIGH = "CIRCLE_HIGH"
    SPECIAL_X13 = "SPECIAL_X13"
    STICK = "STICK"
    DOUBLE_COVER = "DOUBLE_COVER"
    VIRUS_RING = "VIRUS_RING"
    CORONA = "CORONA"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    k: Optional[int] = None
    l: Optional[int] = None
    a: Optional[int] = None
    n: Optional[int] = None
    seam: Optional[tuple[int, ...]] = None

    def to_dict(self) -> dict:
        d = {key: val for key, val in asdict(self).items() if val is not None}
        d["family"] = self.family.value
        if self.seam is not None:
            d["seam"] = list(self.seam)
        return d


@dataclass(frozen=True)
class Site:
    index: int
    first: ComponentId
    second: ComponentId


class _Builder:
    def __init__(self):
        self.tiles: list[TileInstance] = []
        self.comp_pairs: list[tuple[ComponentId, ComponentId]] = []
        self.point_pairs: list[tuple[MarkedPointId, MarkedPointId]] = []

    def add(self, tile_id, blueprint):
        self.tiles.append(TileInstance(tile_id, blueprint))

    def glue(self, c1: ComponentId, c2: ComponentId, bijection):
        """Swap two components; ``bijection`` maps point indices of c1 to c2."""
        self.comp_pairs.append((c1, c2))
        for p, q in bijection.items():
            self.point_pairs.append((MarkedPointId(*c1, p), MarkedPointId(*c2, q)))

    def pinch(self, c: ComponentId, fixed: int, swapped: tuple[int, int]):
        self.comp_pairs.append((c, c))
        self.point_pairs.append((MarkedPointId(*c, fixed), MarkedPointId(*c, fixed)))
        self.point_pairs.append((MarkedPointId(*c, swapped[0]), MarkedPointId(*c, swapped[1])))

    def build(self, spec: FamilySpec) -> GluedSurface:
        inv = Involution.from_pairs(self.comp_pairs, self.point_pairs)
        return GluedSurface(tuple(self.tiles), inv, (spec.to_dict(),))


def _line_bijection(src_line, dst_line, line_map):
    """Point bijection between two lines: the point on L(src) meeting Lj goes to the
    point on L(dst) meeting L(line_map[j])."""
    out = {}
    for p in range(3):
        j = point_line(src_line, p)
        out[p] = line_point(dst_line, line_map[j])[1]
    return out


def _add_four_line_tile(b: _Builder, tile_id: str, pattern: str):
    b.add(tile_id, FOUR_LINES)
    m = PATTERNS[pattern].as_dict()
    b.glue(ComponentId(tile_id, 2), ComponentId(tile_id, 3), _line_bijection(3, 4, m))


def _circle_types(k, l):
    if 1 - k < l <= 1:
        return Family.CIRCLE_LOW, ["A"] * (1 - l) + ["B"] * (k + l - 1)
    return Family.CIRCLE_HIGH, ["D"] * (l - 1) + ["B"] * (k - l + 1)


def _range_error(k, l):
    msg = f"X({k},{l}) is not a circle surface: need k >= 1 and 1-k < l <= k+1"
    if k >= 1 and l == k + 2:
        msg += "; use stick(k)" + (" or x13()" if k == 1 else "")
    if k < 2 * l - 6:
        msg += f"; (k, l) = ({k}, {l}) violates the Noether inequality k >= 2l - 6"
    return GluingError(msg)


def x_kl(k: int, l: int) -> GluedSurface:
    """Circle of k four-line tiles with K^2 = k, chi = l and k + l degenerate cusps."""
    if k < 1 or not (1 - k < l <= k + 1):
        raise _range_error(k, l)
    family, types = _circle_types(k, l)
    b = _Builder()
    for i, t in enumerate(types):
        _add_four_line_tile(b, f"T{i}", t)
    for i in range(k):
        nxt = (i + 1) % k
        b.glue(ComponentId(f"T{i}", 1), ComponentId(f"T{nxt}", 0),
               _line_bijection(2, 1, CIRCLE_SEAM))
    return b.build(FamilySpec(family, k=k, l=l))


def x13() -> GluedSurface:
    """A single type C tile with L1 glued to L2: K^2 = 1, chi = 3, four cusps."""
    b = _Builder()
    _add_four_line_tile(b, "T0", "C")
    b.glue(ComponentId("T0", 0), ComponentId("T0", 1), _line_bijection(1, 2, X13_SEAM))
    return b.build(FamilySpec(Family.SPECIAL_X13, k=1, l=3))


def stick(k: int) -> GluedSurface:
    """Chain of k type D tiles with L1 of the first and L2 of the last pinched."""
    if k < 1:
        raise GluingError(f"stick needs k >= 1, got {k}")
    b = _Builder()
    for i in range(k):
        _add_four_line_tile(b, f"T{i}", "D")
    for i in range(k - 1):
        b.glue(ComponentId(f"T{i}", 1), ComponentId(f"T{i + 1}", 0),
               _line_bijection(2, 1, CIRCLE_SEAM))
    b.pinch(ComponentId("T0", 0), fixed=line_point(1, 2)[1],
            swapped=(line_point(1, 3)[1], line_point(1, 4)[1]))
    b.pinch(ComponentId(f"T{k - 1}", 1), fixed=line_point(2, 1)[1],
            swapped=(line_point(2, 3)[1], line_point(2, 4)[1]))
    return b.build(FamilySpec(Family.STICK, k=k, l=k + 2))


def double_cover() -> GluedSurface:
    """Two four-line tiles glued line by line along the identity."""
    b = _Builder()
    b.add("T0", FOUR_LINES)
    b.add("T1", FOUR_LINES)
    for i in range(4):
        b.glue(ComponentId("T0", i), ComponentId("T1", i), {p: p for p in range(3)})
    return b.build(FamilySpec(Family.DOUBLE_COVER, k=2, l=4))


def _check_perm(seam):
    seam = tuple(seam)
    if sorted(seam) != [0, 1, 2]:
        raise GluingError(f"seam must be a permutation of (0, 1, 2), got {seam}")
    return seam


def virus_ring(n: int, seam: Sequence[int] = SEAMS["identity"]) -> GluedSurface:
    """Cycle of n virus tiles; the closing seam is twisted by ``seam``.

    chi and delta equal the number of cycles of ``seam``; K^2 = n/3.
    """
    if n < 1:
        raise GluingError(f"virus ring needs n >= 1, got {n}")
    seam = _check_perm(seam)
    b = _Builder()
    for i in range(n):
        b.add(f"V{i}", VIRUS)
    for i in range(n):
        nxt = (i + 1) % n
        bij = {j: (seam[j] if nxt == 0 else j) for j in range(3)}
        b.glue(ComponentId(f"V{i}", 1), ComponentId(f"V{nxt}", 0), bij)
    return b.build(FamilySpec(Family.VIRUS_RING, n=n, seam=seam))


def base_surface(k: int, l: int) -> GluedSurface:
    """The uninfected surface with K^2 = k, chi = l: circle, x13 or stick."""
    if k >= 1 and 1 - k < l <= k + 1:
        return x_kl(k, l)
    if (k, l) == (1, 3):
        return x13()
    if k >= 1 and l == k + 2:
        return stick(k)
    raise _range_error(k, l)


def list_attachment_sites(surface: GluedSurface) -> list[Site]:
    """Swapped pairs of rational boundary curves with exactly three marked points each."""
    comps = dict(surface.components())
    cact = surface.involution.component_action
    out = []
    for c in sorted(comps):
        d = cact[c]
        if c < d and all(comps[x].genus == 0 and comps[x].marked_point_count == 3
                         for x in (c, d)):
            out.append(Site(len(out), c, d))
    return out


def _fresh_virus_id(surface):
    used = {t.id for t in surface.tiles}
    for i in itertools.count():
        if f"V{i}" not in used:
            return f"V{i}"


def infect(surface: GluedSurface, site, bijection_choice: Optional[Sequence[int]] = None,
           ) -> GluedSurface:
    """Insert one virus tile at ``site`` (a :class:`Site` or its index).

    The first component of the site is glued to C1 by ``bijection_choice``
    (identity by default); the gluing of the second component to C2 is then
    forced by requiring that going through C1, sigma and C2 reproduces the
    old gluing.
    """
    sites = list_attachment_sites(surface)
    if isinstance(site, int):
        if not 0 <= site < len(sites):
            raise GluingError(f"site index {site} out of range (surface has {len(sites)} sites)")
        site = sites[site]
    elif (site.first, site.second) not in [(s.first, s.second) for s in sites]:
        raise GluingError(f"{site} is not an attachment site of this surface")
    choice = _check_perm(bijection_choice if bijection_choice is not None else (0, 1, 2))

    vid = _fresh_virus_id(surface)
    c1, c2 = ComponentId(vid, 0), ComponentId(vid, 1)
    d1, d2 = site.first, site.second
    old = surface.involution
    sig = sigma()

    cact = {c: d for c, d in old.component_action.items() if c not in (d1, d2)}
    cact.update({d1: c1, c1: d1, d2: c2, c2: d2})
    pact = {x: y for x, y in old.point_action.items() if x.component not in (d1, d2)}
    for p in range(3):
        x = MarkedPointId(*d1, p)
        y = MarkedPointId(vid, 0, choice[p])
        pact[x], pact[y] = y, x
    for q in range(3):
        y = MarkedPointId(*d2, q)
        x = old.point_action[y]
        # tau'(y) must be sigma(tau'(x)) for the partner x = tau(y) on d1
        b, p = sig[(0, choice[x.point])]
        z = MarkedPointId(vid, b, p)
        pact[y], pact[z] = z, y
    inv = Involution(cact, pact, dict(old.invariant_components))
    tiles = surface.tiles + (TileInstance(vid, VIRUS),)
    entry = {"op": "infect", "site": [list(d1), list(d2)], "virus": vid,
             "bijection": list(choice)}
    return GluedSurface(tiles, inv, surface.provenance + (entry,))


def infect_times(surface: GluedSurface, times: int, site: int = 0) -> GluedSurface:
    """Infect ``times`` times, each time at the site with the given index."""
    for _ in range(times):
        surface = infect(surface, site)
    return surface


def corona_a_range(k: int, l: int) -> list[int]:
    """Values of a in 0..k-l+2 for which corona(k, l, a) can be built."""
    out = []
    for a in range(0, k - l + 3):
        base_k = k - a
        if base_k >= 1:
            try:
                base_surface(base_k, l)
            except GluingError:
                continue
            out.append(a)
        elif base_k == 0 and l in _SEAM_BY_CYCLES:
            out.append(a)
    return out


def corona(k: int, l: int, a: int) -> GluedSurface:
    """3a-fold infection of the base surface with K^2 = k - a and chi = l.

    Result: K^2 = k, chi = l, P2 = k + l - a. When a = k the base is empty
    and the result is the pure virus ring of 3k tiles whose seam has l cycles.
    """
    if l < 1 or not 0 <= a <= k - l + 2:
        raise GluingError(
            f"corona({k}, {l}, {a}): need l >= 1 and 0 <= a <= k - l + 2 = {k - l + 2}")
    if k - a == 0:
        if l not in _SEAM_BY_CYCLES:
            raise GluingError(f"corona({k}, {l}, {a}): no pure virus ring with chi = {l}")
        s = virus_ring(3 * k, _SEAM_BY_CYCLES[l])
    else:
        s = infect_times(base_surface(k - a, l), 3 * a)
    if a == 0:
        return s
    spec = FamilySpec(Family.CORONA, k=k, l=l, a=a)
    return GluedSurface(s.tiles, s.involution, (spec.to_dict(),) + s.provenance)
