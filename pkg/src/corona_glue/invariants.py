"""Numerical invariants of a glued surface.

All values are exact. With tiles (X_i, D_i) glued by the involution tau:

    K^2   = sum of (K_{X_i} + D_i)^2
    chi   = sum chi(X_i) - chi(D)/2 - mu/2 + delta + rho/4

where mu counts nodes of D, delta counts the classes of marked points (under
tau and the node partner map) that contain no fixed point of tau, and rho
counts the fixed points of tau.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import GluedSurface, MarkedPointId, SingularityKind

__all__ = [
    "UnionFind",
    "CuspType",
    "CuspClass",
    "SmoothabilityCertificate",
    "InvariantReport",
    "mu_bar",
    "chi_boundary",
    "cusp_classes",
    "delta",
    "rho",
    "chi",
    "ksq",
    "gorenstein_index",
    "p2",
    "smoothability_certificate",
    "invariants",
]

log = logging.getLogger(__name__)


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def groups(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


class CuspType(str, enum.Enum):
    NODAL_CUBIC_CONE = "nodal_cubic_cone"
    Z2_X2Y2_HYPERSURFACE = "z2=x2y2"
    CYCLE_OF_LINES_CONE = "cycle_of_lines_cone"

    @classmethod
    def for_nodes(cls, n: int) -> CuspType:
        if n < 1:
            raise ValueError("a degenerate cusp needs at least one node")
        if n == 1:
            return cls.NODAL_CUBIC_CONE
        if n == 2:
            return cls.Z2_X2Y2_HYPERSURFACE
        return cls.CYCLE_OF_LINES_CONE


@dataclass(frozen=True)
class CuspClass:
    members: tuple[MarkedPointId, ...]
    node_count: int
    contains_fixed_point: bool
    fixed_point_count: int
    cusp_type: CuspType

    @property
    def quotiented_by_z2(self) -> bool:
        return self.contains_fixed_point


@dataclass(frozen=True)
class SmoothabilityCertificate:
    obstructed_local: bool
    obstructed_global: bool
    witness: tuple[Optional[Fraction], Fraction, Fraction]


@dataclass(frozen=True)
class InvariantReport:
    mu_bar: int
    chi_boundary: int
    delta: int
    rho: int
    chi: Fraction
    chi_integral: bool
    ksq: Fraction
    cusps: tuple[CuspClass, ...]
    gorenstein_index: int
    p2: Optional[Fraction]
    p2_reason: str
    certificate: SmoothabilityCertificate

    @property
    def p2_defined(self) -> bool:
        return self.p2 is not None

    def summary(self) -> dict:
        """The numeric invariants, without the class members."""
        return {
            "mu_bar": self.mu_bar,
            "chi_boundary": self.chi_boundary,
            "delta": self.delta,
            "rho": self.rho,
            "chi": self.chi,
            "ksq": self.ksq,
            "index": self.gorenstein_index,
            "p2": self.p2,
            "obstructed_local": self.certificate.obstructed_local,
            "obstructed_global": self.certificate.obstructed_global,
        }

    def cusp_signature(self) -> tuple[tuple[int, bool], ...]:
        """Sorted (node_count, contains_fixed_point) over the classes."""
        return tuple(sorted((c.node_count, c.contains_fixed_point) for c in self.cusps))


def mu_bar(surface: GluedSurface) -> int:
    return sum(len(t.blueprint.node_pairing) for t in surface.tiles)


def chi_boundary(surface: GluedSurface) -> int:
    """chi(O_D) of the nodal boundary curve: sum of (1 - g) over components minus nodes."""
    return sum(1 - bd.genus for _, bd in surface.components()) - mu_bar(surface)


def cusp_classes(surface: GluedSurface) -> list[CuspClass]:
    """Classes of marked points under tau and the node partner map, via union-find."""
    pts = surface.marked_points()
    partner = surface.node_partner()
    tau = surface.involution.point_action
    uf = UnionFind(pts)
    for x in pts:
        uf.union(x, partner[x])
        uf.union(x, tau[x])
    classes = []
    for members in uf.groups().values():
        members = tuple(sorted(members))
        mset = set(members)
        nodes = sum(1 for x in members if partner[x] in mset and x < partner[x])
        fixed = sum(1 for x in members if tau[x] == x)
        classes.append(CuspClass(members, nodes, fixed > 0, fixed, CuspType.for_nodes(nodes)))
    classes.sort(key=lambda c: c.members[0])
    return classes


def delta(surface: GluedSurface) -> int:
    return sum(1 for c in cusp_classes(surface) if not c.contains_fixed_point)


def rho(surface: GluedSurface) -> int:
    """Number of fixed points of tau: two on each pinched rational component."""
    return sum(v.fixed_points for v in surface.involution.invariant_components.values())


def _chi(surface, n_delta):
    value = (Fraction(sum(t.blueprint.chi for t in surface.tiles))
             - Fraction(chi_boundary(surface), 2)
             - Fraction(mu_bar(surface), 2)
             + n_delta
             + Fraction(rho(surface), 4))
    return value


def chi(surface: GluedSurface) -> tuple[Fraction, bool]:
    """chi(O_X) and whether it is an integer.

    A non-integral value means the data has no geometric realisation; it is
    logged but still returned.
    """
    value = _chi(surface, delta(surface))
    integral = value.denominator == 1
    if not integral:
        log.warning("chi = %s is not integral; gluing data is likely not realisable", value)
    return value, integral


def ksq(surface: GluedSurface) -> Fraction:
    return sum((t.blueprint.kplusd_sq for t in surface.tiles), Fraction(0))


def _singularities(surface):
    return [s for t in surface.tiles for s in t.blueprint.interior_singularities]


def gorenstein_index(surface: GluedSurface, classes=None) -> int:
    classes = cusp_classes(surface) if classes is None else classes
    idx = 1
    if any(c.contains_fixed_point for c in classes):
        idx = 2
    for s in _singularities(surface):
        idx = math.lcm(idx, s.cartier_index)
    return idx


def _p2(surface, chi_value, ksq_value, classes):
    for c in classes:
        if c.contains_fixed_point and c.fixed_point_count != 2:
            return None, f"fixed-point class {c.members[0]} is not a Z/2 cusp quotient"
    sings = _singularities(surface)
    for s in sings:
        if s.kind != SingularityKind.ONE_THIRD_1_1:
            return None, f"no P2 formula for singularity {s.kind}"
    return chi_value + ksq_value - sum((s.p2_correction for s in sings), Fraction(0)), ""


def p2(surface: GluedSurface) -> Optional[Fraction]:
    """Second plurigenus, or None where no formula applies."""
    return _p2(surface, chi(surface)[0], ksq(surface), cusp_classes(surface))[0]


def _certificate(surface, chi_value, ksq_value, p2_value):
    local = any(s.obstructs_local_smoothing for s in _singularities(surface))
    global_ = p2_value is not None and p2_value != chi_value + ksq_value
    return SmoothabilityCertificate(local, global_, (p2_value, chi_value, ksq_value))


def smoothability_certificate(surface: GluedSurface) -> SmoothabilityCertificate:
    c, k = chi(surface)[0], ksq(surface)
    return _certificate(surface, c, k, p2(surface))


def invariants(surface: GluedSurface) -> InvariantReport:
    """Full invariant report; the surface is assumed to pass ``validate``."""
    classes = cusp_classes(surface)
    n_delta = sum(1 for c in classes if not c.contains_fixed_point)
    chi_value = _chi(surface, n_delta)
    integral = chi_value.denominator == 1
    if not integral:
        log.warning("chi = %s is not integral; gluing data is likely not realisable", chi_value)
    ksq_value = ksq(surface)
    p2_value, reason = _p2(surface, chi_value, ksq_value, classes)
    return InvariantReport(
        mu_bar=mu_bar(surface),
        chi_boundary=chi_boundary(surface),
        delta=n_delta,
        rho=rho(surface),
        chi=chi_value,
        chi_integral=integral,
        ksq=ksq_value,
        cusps=tuple(classes),
        gorenstein_index=gorenstein_index(surface, classes),
        p2=p2_value,
        p2_reason=reason,
        certificate=_certificate(surface, chi_value, ksq_value, p2_value),
    )
