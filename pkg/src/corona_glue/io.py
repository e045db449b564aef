"""JSON documents for glued surfaces and Graphviz export of the strand graph.

Rationals are always written as ``"p/q"`` strings. Output is deterministic:
pairs are sorted and keys keep a fixed order.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import jsonschema

from .core import (
    SINGULARITIES,
    BoundaryBlueprint,
    ComponentId,
    GluedSurface,
    InvariantComponent,
    Involution,
    MarkedPointId,
    SingularityKind,
    TileBlueprint,
    TileInstance,
)
from .invariants import cusp_classes

__all__ = [
    "SCHEMA_VERSION",
    "ParseError",
    "format_rational",
    "parse_rational",
    "to_document",
    "from_document",
    "dumps",
    "loads",
    "export_dot",
]

SCHEMA_VERSION = "1"

_RATIONAL = re.compile(r"^(-?\d+)/(\d+)$")


class ParseError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str, path: str = "$") -> Fraction:
    m = _RATIONAL.match(text) if isinstance(text, str) else None
    if not m:
        raise ParseError(path, f"malformed rational {text!r}, expected 'p/q'")
    num, den = int(m.group(1)), int(m.group(2))
    if den == 0:
        raise ParseError(path, f"zero denominator in {text!r}")
    return Fraction(num, den)


@lru_cache(maxsize=1)
def _schema():
    text = resources.files("corona_glue").joinpath("schemas/surface.schema.json").read_text()
    return json.loads(text)


def _blueprint_doc(bp: TileBlueprint) -> dict:
    return {
        "chi": bp.chi,
        "kplusd_sq": format_rational(bp.kplusd_sq),
        "boundaries": [{"label": b.label, "genus": b.genus, "marked_points": b.marked_point_count}
                       for b in bp.boundaries],
        "nodes": [[list(x), list(y)] for x, y in bp.node_pairing],
        "singularities": [s.kind.value for s in bp.interior_singularities],
        "lc_certified": bp.lc_certified,
    }


def _pairs(action):
    out = set()
    for x, y in action.items():
        out.add(tuple(sorted((tuple(x), tuple(y)))))
    return [[list(a), list(b)] for a, b in sorted(out)]


def to_document(surface: GluedSurface) -> dict:
    blueprints = {}
    for t in surface.tiles:
        doc = _blueprint_doc(t.blueprint)
        if blueprints.setdefault(t.blueprint.name, doc) != doc:
            raise ValueError(f"two different blueprints share the name {t.blueprint.name!r}")
    inv = surface.involution
    return {
        "schema_version": SCHEMA_VERSION,
        "blueprints": dict(sorted(blueprints.items())),
        "tiles": [{"id": t.id, "blueprint": t.blueprint.name} for t in surface.tiles],
        "involution": {
            "components": _pairs(inv.component_action),
            "points": _pairs(inv.point_action),
            "invariant_components": [
                {"component": list(c), "fixed_points": v.fixed_points, "identity": v.identity}
                for c, v in sorted(inv.invariant_components.items())],
        },
        "provenance": [dict(e) for e in surface.provenance],
    }


def _json_path(parts) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def _pair_action(pairs, path, make):
    action = {}
    for i, (a, b) in enumerate(pairs):
        x, y = make(a), make(b)
        for z in (x, y):
            if z in action:
                raise ParseError(f"{path}[{i}]", f"{list(z)} appears in more than one pair")
        action[x] = y
        action[y] = x
    return action


def from_document(doc: dict) -> GluedSurface:
    """Inverse of :func:`to_document`; schema violations raise :class:`ParseError`."""
    try:
        jsonschema.validate(doc, _schema())
    except jsonschema.ValidationError as exc:
        raise ParseError(_json_path(exc.absolute_path), exc.message) from None

    blueprints = {}
    for name, b in doc["blueprints"].items():
        path = f"$.blueprints.{name}"
        blueprints[name] = TileBlueprint(
            name=name,
            chi=b["chi"],
            kplusd_sq=parse_rational(b["kplusd_sq"], path + ".kplusd_sq"),
            boundaries=tuple(BoundaryBlueprint(d["label"], d["marked_points"], d["genus"])
                             for d in b["boundaries"]),
            node_pairing=tuple((tuple(x), tuple(y)) for x, y in b["nodes"]),
            interior_singularities=tuple(SINGULARITIES[SingularityKind(s)]
                                         for s in b["singularities"]),
            lc_certified=b["lc_certified"],
        )
    tiles = []
    for i, t in enumerate(doc["tiles"]):
        if t["blueprint"] not in blueprints:
            raise ParseError(f"$.tiles[{i}].blueprint", f"unknown blueprint {t['blueprint']!r}")
        tiles.append(TileInstance(t["id"], blueprints[t["blueprint"]]))

    inv_doc = doc["involution"]
    comp = _pair_action(inv_doc["components"], "$.involution.components",
                        lambda c: ComponentId(*c))
    pts = _pair_action(inv_doc["points"], "$.involution.points",
                       lambda p: MarkedPointId(*p))
    fixed = {}
    for i, item in enumerate(inv_doc["invariant_components"]):
        c = ComponentId(*item["component"])
        if c in fixed:
            raise ParseError(f"$.involution.invariant_components[{i}]", f"duplicate entry for {c}")
        fixed[c] = InvariantComponent(item["fixed_points"], item["identity"])
    return GluedSurface(tuple(tiles), Involution(comp, pts, fixed),
                        tuple(dict(e) for e in doc["provenance"]))


def dumps(surface: GluedSurface) -> str:
    return json.dumps(to_document(surface), indent=2) + "\n"


def loads(text: str) -> GluedSurface:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return from_document(doc)


_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4",
            "gold3", "gray40", "navy", "olivedrab")


def export_dot(surface: GluedSurface) -> str:
    """Strand graph: one vertex per marked point, solid edges for tau, dashed for nodes.

    Each connected component is one cusp class and gets its own colour;
    fixed points of tau are drawn as double circles.
    """
    tau = surface.involution.point_action
    partner = surface.node_partner()
    lines = ["graph strands {", "  node [shape=circle, fontsize=9];"]
    for i, cls in enumerate(cusp_classes(surface)):
        color = _PALETTE[i % len(_PALETTE)]
        kind = "Z/2 quotient" if cls.contains_fixed_point else "cusp"
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="{kind} {i}: {cls.node_count} nodes"; color={color};')
        for x in cls.members:
            shape = ", shape=doublecircle" if tau[x] == x else ""
            lines.append(f'    "{x}" [color={color}{shape}];')
        lines.append("  }")
    for x in sorted(tau):
        y = tau[x]
        if x < y:
            lines.append(f'  "{x}" -- "{y}" [style=solid];')
    for x in sorted(partner):
        y = partner[x]
        if x < y:
            lines.append(f'  "{x}" -- "{y}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"
