import pytest

from corona_glue import geography
from corona_glue.geography import admissible, a_values, component_lower_bound, sweep


@pytest.mark.parametrize("k,l,expected", [(18, 12, True), (1, 4, False), (1, 3, True),
                                          (0, 1, False), (3, 0, False)])
def test_admissible(k, l, expected):
    assert admissible(k, l) is expected


def test_component_lower_bound_examples():
    assert component_lower_bound(4, 3) == 4
    assert component_lower_bound(1, 3) == 1
    assert component_lower_bound(5, 1) >= 6
    with pytest.raises(ValueError):
        component_lower_bound(1, 4)


def test_sweep_4_3_p2_values():
    rows = [r for r in sweep(4, 3) if (r.k, r.l) == (4, 3)]
    assert sorted(r.p2 for r in rows) == [4, 5, 6, 7]


def test_every_admissible_pair_has_a_row():
    rows = sweep(6, 5)
    cells = {(r.k, r.l) for r in rows}
    for k in range(1, 7):
        for l in range(1, 6):
            if admissible(k, l):
                assert (k, l) in cells


def test_row_properties():
    rows = sweep(6, 5)
    assert rows == sorted(rows, key=lambda r: (r.k, r.l, r.a))
    by_cell = {}
    for r in rows:
        assert (r.ksq, r.chi) == (r.k, r.l)
        by_cell.setdefault((r.k, r.l), []).append(r)
        if r.a > 0:
            assert r.obstructed_local and r.obstructed_global
        if r.obstructed_global:
            assert r.p2 != r.chi + r.ksq
    for group in by_cell.values():
        p2s = [r.p2 for r in group]
        assert len(set(p2s)) == len(p2s)


def test_a_values_drop_unconstructible_bases():
    assert a_values(1, 3) == [0]
    # a = 6 would need a base with K^2 = -1
    assert a_values(5, 1) == list(range(0, 6))


def test_threads_match_sequential(monkeypatch):
    monkeypatch.delenv(geography.THREADS_ENV, raising=False)
    seq = sweep(5, 4)
    monkeypatch.setenv(geography.THREADS_ENV, "4")
    assert sweep(5, 4) == seq
    monkeypatch.setenv(geography.THREADS_ENV, "0")
    assert sweep(5, 4) == seq


def test_thread_env_rejects_garbage(monkeypatch):
    monkeypatch.setenv(geography.THREADS_ENV, "many")
    with pytest.raises(ValueError):
        geography.thread_count()


def test_bad_bounds():
    with pytest.raises(ValueError):
        sweep(0, 3)


def test_failed_cells_become_diagnostics(monkeypatch):
    from corona_glue.core import GluingError

    def boom(k, l, a):
        if (k, l, a) == (2, 1, 1):
            raise GluingError("synthetic failure")
        return real(k, l, a)

    real = geography.build_row
    monkeypatch.setattr(geography, "build_row", boom)
    diags = []
    rows = sweep(2, 1, diags)
    assert len(diags) == 1 and "synthetic failure" in diags[0]
    assert (2, 1, 1) not in {(r.k, r.l, r.a) for r in rows}
