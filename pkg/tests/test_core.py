import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from corona_glue import families
from corona_glue.core import (
    ComponentId,
    GluedSurface,
    GluingError,
    InvariantComponent,
    Involution,
    MarkedPointId,
    relabel,
    validate,
)
from corona_glue.invariants import invariants

from conftest import family_members, random_surfaces


def _with_points(surface, updates, comp_updates=None, invariant=None):
    inv = surface.involution
    pts = dict(inv.point_action)
    pts.update(updates)
    comps = dict(inv.component_action)
    comps.update(comp_updates or {})
    fixed = dict(inv.invariant_components)
    fixed.update(invariant or {})
    return GluedSurface(surface.tiles, Involution(comps, pts, fixed), surface.provenance)


def test_x32_validates():
    assert validate(families.x_kl(3, 2)).ok


def test_identity_on_swapped_components_is_a_mismatch():
    s = families.x_kl(3, 2)
    c, d = ComponentId("T0", 1), ComponentId("T1", 0)
    assert s.involution.component_action[c] == d
    ident = {MarkedPointId("T0", 1, p): MarkedPointId("T0", 1, p) for p in range(3)}
    ident.update({MarkedPointId("T1", 0, p): MarkedPointId("T1", 0, p) for p in range(3)})
    res = validate(_with_points(s, ident))
    assert not res.ok
    assert any("not compatible with component action" in v for v in res.violations)


def test_three_fixed_points_on_pinched_line():
    s = families.stick(1)
    c = ComponentId("T0", 0)
    fixed = {MarkedPointId("T0", 0, p): MarkedPointId("T0", 0, p) for p in range(3)}
    res = validate(_with_points(s, fixed))
    assert any("fixed-point count > 2" in v for v in res.violations)


def test_non_involutive_point_action():
    s = families.x_kl(1, 1)
    x, y, z = (MarkedPointId("T0", 2, p) for p in range(3))
    target = s.involution.point_action
    # a 3-cycle through L3 -> L4 images breaks tau o tau = id
    res = validate(_with_points(s, {x: target[y], y: target[z], z: target[x]}))
    assert any("not an involution" in v for v in res.violations)


def test_unmatched_component():
    s = families.x_kl(2, 1)
    comps = {c: d for c, d in s.involution.component_action.items()
             if ComponentId("T0", 2) not in (c, d)}
    broken = GluedSurface(s.tiles, Involution(comps, s.involution.point_action), ())
    assert any("unmatched component" in v for v in validate(broken).violations)


def test_invariant_component_rules():
    s = families.stick(2)
    c = ComponentId("T0", 0)
    assert validate(_with_points(s, {}, invariant={c: InvariantComponent(3)})).violations
    assert validate(_with_points(s, {}, invariant={c: InvariantComponent(2, True)})).violations
    bp = s.tiles[0].blueprint
    bad_bp = dataclasses.replace(bp, boundaries=(dataclasses.replace(bp.boundaries[0], genus=1),)
                                 + bp.boundaries[1:])
    tiles = (dataclasses.replace(s.tiles[0], blueprint=bad_bp),) + s.tiles[1:]
    res = validate(GluedSurface(tiles, s.involution, ()))
    assert any("genus 1 > 0" in v for v in res.violations)


def test_marked_point_count_mismatch():
    from corona_glue.sampling import CONIC_LINE
    from corona_glue.core import TileInstance
    s = families.x_kl(1, 1)
    tiles = s.tiles + (TileInstance("Q", CONIC_LINE),)
    comps = dict(s.involution.component_action)
    a, b = ComponentId("T0", 0), ComponentId("Q", 0)
    # re-glue: T0 L1 <-> conic, leaving T0 L2 and the line pinched
    comps.update({a: b, b: a, ComponentId("T0", 1): ComponentId("T0", 1),
                  ComponentId("Q", 1): ComponentId("Q", 1)})
    res = validate(GluedSurface(tiles, Involution(comps, s.involution.point_action), ()))
    assert any("marked-point count mismatch" in v for v in res.violations)


def test_realizability_annotation():
    from corona_glue.core import BoundaryBlueprint, TileBlueprint, TileInstance
    from fractions import Fraction
    five = TileBlueprint("five_lines", 1, Fraction(4),
                         boundaries=tuple(BoundaryBlueprint(f"L{i}", 4) for i in range(5)),
                         node_pairing=tuple(((i, j - 1), (j, i)) for i in range(5)
                                            for j in range(i + 1, 5)))
    assert five.check() == []
    pairs = [(ComponentId("F", 0), ComponentId("F", 1)), (ComponentId("F", 2), ComponentId("F", 3)),
             (ComponentId("F", 4), ComponentId("F", 4))]
    pts = [(MarkedPointId("F", 0, p), MarkedPointId("F", 1, p)) for p in range(4)]
    pts += [(MarkedPointId("F", 2, p), MarkedPointId("F", 3, p)) for p in range(4)]
    pts += [(MarkedPointId("F", 4, 0), MarkedPointId("F", 4, 1)),
            (MarkedPointId("F", 4, 2), MarkedPointId("F", 4, 3))]
    s = GluedSurface((TileInstance("F", five),), Involution.from_pairs(pairs, pts), ())
    res = validate(s)
    assert res.ok
    assert any("realizability unchecked" in a for a in res.annotations)


def test_relabel_identity_is_equal():
    s = families.x13()
    assert relabel(s, {"T0": "T0"}) == s


def test_relabel_rotation_keeps_invariants():
    s = families.x_kl(3, 2)
    r = relabel(s, {"T0": "T1", "T1": "T2", "T2": "T0"})
    assert validate(r).ok
    assert invariants(r).summary() == invariants(s).summary()
    assert invariants(r).cusp_signature() == invariants(s).cusp_signature()


def test_relabel_rejects_bad_maps():
    s = families.x_kl(3, 2)
    with pytest.raises(GluingError):
        relabel(s, {"T0": "T0", "T1": "T0", "T2": "T2"})
    with pytest.raises(GluingError):
        relabel(s, {"T0": "T0", "T1": "T1", "T9": "T2"})
    with pytest.raises(GluingError):
        relabel(s, {"T0": "T1", "T1": "T0"})


@given(random_surfaces)
def test_marked_points_even(s):
    assert validate(s).ok
    assert len(s.marked_points()) % 2 == 0


@given(random_surfaces)
def test_point_action_bijective_per_component(s):
    tau = s.involution.point_action
    cact = s.involution.component_action
    comps = dict(s.components())
    for c, bd in comps.items():
        images = {tau[MarkedPointId(*c, p)] for p in range(bd.marked_point_count)}
        d = cact[c]
        assert images == {MarkedPointId(*d, p) for p in range(comps[d].marked_point_count)}


@given(st.one_of(random_surfaces, family_members), st.randoms(use_true_random=False))
def test_relabel_never_changes_invariants(s, rnd):
    ids = [t.id for t in s.tiles]
    perm = ids[:]
    rnd.shuffle(perm)
    r = relabel(s, dict(zip(ids, perm)))
    assert validate(r).ok
    assert invariants(r).summary() == invariants(s).summary()
    assert invariants(r).cusp_signature() == invariants(s).cusp_signature()
