from hypothesis import given

from corona_glue import families, oracle
from corona_glue.catalog import enumerate_L34_matchings
from corona_glue.invariants import chi, delta

from conftest import family_members, random_surfaces


def test_x32_five_cycles():
    comps = oracle.delta_bruteforce(families.x_kl(3, 2))
    assert oracle.delta_count(families.x_kl(3, 2)) == 5
    assert sum(len(c) for c in comps) == 3 * 4 * 3


def test_double_cover_components():
    comps = oracle.delta_bruteforce(families.double_cover())
    assert [len(c) for c in comps] == [4] * 6


def test_chi_from_cycles_examples():
    assert oracle.chi_from_cycles(families.stick(2)) == 4
    assert oracle.chi_from_cycles(families.virus_ring(3, families.SEAMS["identity"])) == 3


def test_trivial_group_gives_singletons():
    ms = [tuple(sorted(m)) for m in enumerate_L34_matchings()]
    orbits = oracle.orbit_enumeration(ms, [])
    assert sorted(len(o) for o in orbits) == [1] * 6


def test_sites_x32():
    assert len(oracle.sites_bruteforce(families.x_kl(3, 2))) == 6


@given(random_surfaces)
def test_delta_count_agrees(s):
    assert oracle.delta_count(s) == delta(s)


@given(family_members)
def test_chi_from_cycles_on_families(s):
    assert oracle.chi_from_cycles(s) == chi(s)[0]
