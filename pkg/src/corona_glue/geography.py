"""Sweeps over (K^2, chi) = (k, l) and the component count from distinct P2.

At fixed (k, l) the coronas 3aV > X(k-a, l) share K^2 and chi but have
P2 = k + l - a, so surfaces with different a lie on different connected
components of the moduli space.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import GluingError, validate
from .families import Family, FamilySpec, corona, corona_a_range
from .invariants import invariants

__all__ = [
    "GeographyRow",
    "CSV_COLUMNS",
    "admissible",
    "a_values",
    "build_row",
    "sweep",
    "component_lower_bound",
    "thread_count",
]

log = logging.getLogger(__name__)

CSV_COLUMNS = ("k", "l", "a", "family", "ksq", "chi", "delta", "rho", "index", "p2",
               "obstructed_local", "obstructed_global")

THREADS_ENV = "CORONA_GLUE_THREADS"


@dataclass(frozen=True)
class GeographyRow:
    k: int
    l: int
    a: int
    family: FamilySpec
    ksq: Fraction
    chi: Fraction
    delta: int
    rho: int
    index: int
    p2: Optional[Fraction]
    obstructed_local: bool
    obstructed_global: bool


def admissible(k: int, l: int) -> bool:
    """Positive invariants allowed by the Noether inequality k >= 2l - 6."""
    return k >= 1 and l >= 1 and k >= 2 * l - 6


def a_values(k: int, l: int) -> list[int]:
    """Infection counts a with a constructible base; logs the ones dropped from 0..k-l+2."""
    got = corona_a_range(k, l)
    dropped = sorted(set(range(0, k - l + 3)) - set(got))
    if dropped:
        log.info("(k, l) = (%d, %d): no base surface for a in %s", k, l, dropped)
    return got


def _row_family(surface, a):
    head = surface.provenance[0]
    fam = Family(head["family"])
    if a > 0 and fam != Family.VIRUS_RING:
        fam = Family.CORONA
    return FamilySpec(fam, k=head.get("k"), l=head.get("l"), a=a,
                      n=head.get("n"), seam=tuple(head["seam"]) if "seam" in head else None)


def build_row(k: int, l: int, a: int) -> GeographyRow:
    s = corona(k, l, a)
    check = validate(s)
    if not check.ok:
        raise GluingError(f"corona({k}, {l}, {a}) is invalid: {check.violations}")
    r = invariants(s)
    return GeographyRow(
        k=k, l=l, a=a, family=_row_family(s, a),
        ksq=r.ksq, chi=r.chi, delta=r.delta, rho=r.rho, index=r.gorenstein_index, p2=r.p2,
        obstructed_local=r.certificate.obstructed_local,
        obstructed_global=r.certificate.obstructed_global,
    )


def thread_count() -> int:
    """Worker count from CORONA_GLUE_THREADS: unset means 1, 0 means one per CPU."""
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"{THREADS_ENV} must be >= 0, got {n}")
    return n or (os.cpu_count() or 1)


def _try_row(cell):
    try:
        return build_row(*cell), None
    except GluingError as exc:
        return None, f"(k, l, a) = {cell}: {exc}"


def sweep(k_max: int, l_max: int, diagnostics: Optional[list] = None) -> list[GeographyRow]:
    """One row per admissible (k, l) in range and per constructible a, sorted by (k, l, a).

    Cells that fail to build are skipped; their messages go to ``diagnostics``
    when a list is passed, and to the log otherwise.
    """
    if k_max < 1 or l_max < 1:
        raise ValueError("sweep bounds must be >= 1")
    cells = [(k, l, a)
             for k in range(1, k_max + 1)
             for l in range(1, l_max + 1) if admissible(k, l)
             for a in a_values(k, l)]
    workers = thread_count()
    if workers == 1:
        results = [_try_row(c) for c in cells]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_try_row, cells))
    rows = []
    for row, err in results:
        if err is not None:
            if diagnostics is not None:
                diagnostics.append(err)
            else:
                log.warning(err)
        else:
            rows.append(row)
    rows.sort(key=lambda r: (r.k, r.l, r.a))
    return rows


def component_lower_bound(k: int, l: int, rows: Optional[list[GeographyRow]] = None) -> int:
    """Number of distinct P2 values among the surfaces built at (k, l)."""
    if not admissible(k, l):
        raise ValueError(f"(k, l) = ({k}, {l}) is not admissible")
    if rows is None:
        rows = [build_row(k, l, a) for a in a_values(k, l)]
    return len({r.p2 for r in rows if (r.k, r.l) == (k, l)})
