"""Gluing data: tiles, boundary curves, marked points and the involution.

A glued surface is a list of tile instances (normal log-canonical pairs with a
nodal boundary) together with an involution on the normalised boundary that
preserves the preimages of the nodes. Everything here is combinatorial: marked
points are abstract ids, never coordinates.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, NamedTuple

__all__ = [
    "SingularityKind",
    "QuotientSingularity",
    "ONE_THIRD_1_1",
    "BoundaryBlueprint",
    "TileBlueprint",
    "TileInstance",
    "ComponentId",
    "MarkedPointId",
    "InvariantComponent",
    "Involution",
    "GluedSurface",
    "ValidationResult",
    "GluingError",
    "validate",
    "relabel",
]

REALIZABLE_MARKED_POINTS = 3


class GluingError(ValueError):
    """Raised when gluing data cannot be built or transformed."""


class SingularityKind(str, enum.Enum):
    ONE_THIRD_1_1 = "1/3(1,1)"


@dataclass(frozen=True)
class QuotientSingularity:
    kind: SingularityKind
    p2_correction: Fraction
    cartier_index: int
    obstructs_local_smoothing: bool


# cone over the twisted cubic; the P2 term comes from (pi^*K - E/3)^2 = K^2 - 1/3
ONE_THIRD_1_1 = QuotientSingularity(
    kind=SingularityKind.ONE_THIRD_1_1,
    p2_correction=Fraction(1, 3),
    cartier_index=3,
    obstructs_local_smoothing=True,
)

SINGULARITIES = {ONE_THIRD_1_1.kind: ONE_THIRD_1_1}


@dataclass(frozen=True)
class BoundaryBlueprint:
    label: str
    marked_point_count: int
    genus: int = 0


@dataclass(frozen=True)
class TileBlueprint:
    """A normal pair (X, D) with its numeric invariants.

    ``node_pairing`` lists the nodes of D as pairs of marked points, each
    point given as ``(boundary_index, point_index)``.
    """

    name: str
    chi: int
    kplusd_sq: Fraction
    boundaries: tuple[BoundaryBlueprint, ...]
    node_pairing: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    interior_singularities: tuple[QuotientSingularity, ...] = ()
    lc_certified: bool = False

    def marked_points(self) -> list[tuple[int, int]]:
        return [(b, p) for b, bd in enumerate(self.boundaries)
                for p in range(bd.marked_point_count)]

    def partner_map(self) -> dict[tuple[int, int], tuple[int, int]]:
        out = {}
        for x, y in self.node_pairing:
            out[x] = y
            out[y] = x
        return out

    def check(self) -> list[str]:
        """Structural problems with the blueprint itself (empty if fine)."""
        problems = []
        points = set(self.marked_points())
        seen: set[tuple[int, int]] = set()
        for x, y in self.node_pairing:
            for z in (x, y):
                if z not in points:
                    problems.append(f"tile {self.name}: node uses unknown marked point {z}")
                elif z in seen:
                    problems.append(f"tile {self.name}: marked point {z} lies on two nodes")
                seen.add(z)
            if x[0] == y[0]:
                problems.append(
                    f"tile {self.name}: node {x}-{y} pairs points on one boundary component")
        missing = points - seen
        if missing:
            problems.append(
                f"tile {self.name}: marked points {sorted(missing)} are not on any node")
        for bd in self.boundaries:
            if bd.genus < 0 or bd.marked_point_count < 0:
                problems.append(f"tile {self.name}: boundary {bd.label} has negative data")
        return problems


@dataclass(frozen=True)
class TileInstance:
    id: str
    blueprint: TileBlueprint


class ComponentId(NamedTuple):
    tile: str
    boundary: int

    def __str__(self) -> str:
        return f"{self.tile}:{self.boundary}"


class MarkedPointId(NamedTuple):
    tile: str
    boundary: int
    point: int

    @property
    def component(self) -> ComponentId:
        return ComponentId(self.tile, self.boundary)

    def __str__(self) -> str:
        return f"{self.tile}:{self.boundary}:{self.point}"


@dataclass(frozen=True)
class InvariantComponent:
    """The restriction of the involution to a component mapped to itself.

    ``fixed_points`` counts all fixed points on the curve, marked or not.
    """

    fixed_points: int = 2
    identity: bool = False


@dataclass(frozen=True)
class Involution:
    component_action: Mapping[ComponentId, ComponentId]
    point_action: Mapping[MarkedPointId, MarkedPointId]
    invariant_components: Mapping[ComponentId, InvariantComponent] = field(default_factory=dict)

    @classmethod
    def from_pairs(cls, component_pairs, point_pairs, invariant_components=None):
        """Build from unordered pairs; a pair ``(c, c)`` marks a fixed element."""
        comp = {}
        for a, b in component_pairs:
            comp[a] = b
            comp[b] = a
        pts = {}
        for x, y in point_pairs:
            pts[x] = y
            pts[y] = x
        inv = dict(invariant_components or {})
        for c, d in comp.items():
            if c == d and c not in inv:
                inv[c] = InvariantComponent()
        return cls(comp, pts, inv)

    def __call__(self, x: MarkedPointId) -> MarkedPointId:
        return self.point_action[x]


@dataclass(frozen=True)
class GluedSurface:
    tiles: tuple[TileInstance, ...]
    involution: Involution
    provenance: tuple[dict, ...] = ()

    def tile(self, tile_id: str) -> TileInstance:
        for t in self.tiles:
            if t.id == tile_id:
                return t
        raise KeyError(tile_id)

    def components(self) -> Iterator[tuple[ComponentId, BoundaryBlueprint]]:
        for t in self.tiles:
            for b, bd in enumerate(t.blueprint.boundaries):
                yield ComponentId(t.id, b), bd

    def marked_points(self) -> list[MarkedPointId]:
        return [MarkedPointId(t.id, b, p)
                for t in self.tiles for b, p in t.blueprint.marked_points()]

    def node_partner(self) -> dict[MarkedPointId, MarkedPointId]:
        out = {}
        for t in self.tiles:
            for (b, p), (b2, p2) in t.blueprint.partner_map().items():
                out[MarkedPointId(t.id, b, p)] = MarkedPointId(t.id, b2, p2)
        return out

    def with_provenance(self, entry: dict) -> GluedSurface:
        return GluedSurface(self.tiles, self.involution, self.provenance + (entry,))


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[str, ...] = ()
    annotations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(surface: GluedSurface) -> ValidationResult:
    """Check that the gluing data satisfies the hypotheses of the gluing formula.

    Never raises; every problem found is reported as a violation string.
    """
    violations: list[str] = []
    annotations: list[str] = []

    ids = [t.id for t in surface.tiles]
    if len(set(ids)) != len(ids):
        violations.append("duplicate tile instance ids")
    for t in surface.tiles:
        violations.extend(t.blueprint.check())

    comps = dict(surface.components())
    points = set(surface.marked_points())
    inv = surface.involution
    cact, pact = inv.component_action, inv.point_action

    for c in comps:
        if c not in cact:
            violations.append(f"unmatched component {c}")
    for c, d in cact.items():
        if c not in comps or d not in comps:
            violations.append(f"component action refers to unknown component {c}->{d}")
            continue
        if cact.get(d) != c:
            violations.append(f"component action is not an involution at {c}")
            continue
        if c == d:
            continue
        if c < d:
            if comps[c].marked_point_count != comps[d].marked_point_count:
                violations.append(
                    f"marked-point count mismatch between glued components {c} and {d}")
            if comps[c].genus != comps[d].genus:
                violations.append(f"genus mismatch between glued components {c} and {d}")

    for x in points:
        if x not in pact:
            violations.append(f"marked point {x} has no image")
    for x, y in pact.items():
        if x not in points or y not in points:
            violations.append(f"point action refers to unknown marked point {x}->{y}")
            continue
        if pact.get(y) != x:
            violations.append(f"point action is not an involution at {x}")
        target = cact.get(x.component)
        if target is not None and y.component != target:
            violations.append(
                f"point action not compatible with component action: {x}->{y}, "
                f"but {x.component}->{target}")

    for c, bd in comps.items():
        if cact.get(c) != c:
            if c in inv.invariant_components:
                violations.append(f"component {c} has invariant data but is swapped")
            continue
        data = inv.invariant_components.get(c)
        if data is None:
            violations.append(f"invariant component {c} lacks fixed-point data")
            continue
        if bd.genus > 0:
            violations.append(f"invariant component {c} has genus {bd.genus} > 0")
        if data.identity:
            violations.append(f"invariant component {c} carries the identity involution")
        marked_fixed = sum(1 for p in range(bd.marked_point_count)
                           if pact.get(MarkedPointId(c.tile, c.boundary, p))
                           == MarkedPointId(c.tile, c.boundary, p))
        if data.fixed_points != 2:
            violations.append(
                f"invariant component {c}: fixed-point count {data.fixed_points} != 2")
        if marked_fixed > 2:
            violations.append(
                f"invariant component {c}: fixed-point count > 2 ({marked_fixed} marked fixed)")
        elif marked_fixed > data.fixed_points:
            violations.append(
                f"invariant component {c}: {marked_fixed} marked fixed points exceed "
                f"{data.fixed_points} fixed points")

    for c, bd in comps.items():
        if bd.marked_point_count > REALIZABLE_MARKED_POINTS:
            annotations.append(f"realizability unchecked on {c} "
                               f"({bd.marked_point_count} marked points)")

    return ValidationResult(tuple(violations), tuple(annotations))


def relabel(surface: GluedSurface, mapping: Mapping[str, str]) -> GluedSurface:
    """Rename tile instances; ``mapping`` must be a bijection on the instance ids."""
    ids = [t.id for t in surface.tiles]
    unknown = set(mapping) - set(ids)
    if unknown:
        raise GluingError(f"unknown tile ids {sorted(unknown)}")
    missing = set(ids) - set(mapping)
    if missing:
        raise GluingError(f"mapping is not defined on {sorted(missing)}")
    if len(set(mapping.values())) != len(mapping):
        raise GluingError("mapping is not injective")

    def cid(c):
        return ComponentId(mapping[c.tile], c.boundary)

    def pid(x):
        return MarkedPointId(mapping[x.tile], x.boundary, x.point)

    inv = surface.involution
    new_inv = Involution(
        {cid(c): cid(d) for c, d in inv.component_action.items()},
        {pid(x): pid(y) for x, y in inv.point_action.items()},
        {cid(c): v for c, v in inv.invariant_components.items()},
    )
    tiles = tuple(TileInstance(mapping[t.id], t.blueprint) for t in surface.tiles)
    return GluedSurface(tiles, new_inv, surface.provenance)


