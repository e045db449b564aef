"""Print the invariants of the named example surfaces next to their expected values."""
from corona_glue import families
from corona_glue.invariants import invariants

SEAMS = families.SEAMS

CASES = [
    ("x13", families.x13(), dict(ksq=1, chi=3, delta=4, index=1)),
    ("x_kl(3,2)", families.x_kl(3, 2), dict(ksq=3, chi=2, delta=5, index=1)),
    ("stick(2)", families.stick(2), dict(ksq=2, chi=4, delta=5, index=2)),
    ("double_cover", families.double_cover(), dict(ksq=2, chi=4, delta=6, index=1)),
    ("ring(3, 3-cycle)", families.virus_ring(3, SEAMS["3-cycle"]), dict(ksq=1, chi=1, p2=1)),
    ("ring(3, transposition)", families.virus_ring(3, SEAMS["transposition"]),
     dict(ksq=1, chi=2, p2=2)),
    ("ring(3, identity)", families.virus_ring(3, SEAMS["identity"]), dict(ksq=1, chi=3, p2=3)),
    ("ring(12, identity)", families.virus_ring(12, SEAMS["identity"]), dict(ksq=4, chi=3)),
    ("corona(4,3,1)", families.corona(4, 3, 1), dict(ksq=4, chi=3, p2=6)),
]


def main():
    bad = 0
    for name, surface, expected in CASES:
        r = invariants(surface)
        got = dict(ksq=r.ksq, chi=r.chi, delta=r.delta, index=r.gorenstein_index, p2=r.p2)
        ok = all(got[key] == v for key, v in expected.items())
        bad += not ok
        shown = " ".join(f"{key}={got[key]}" for key in expected)
        print(f"{'ok ' if ok else 'BAD'} {name:<24} {shown}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
