"""Reference parameter tables for the constructed families.

Each row records the published (set size, length, zone, theta, optimality
factor) tuple for one instance; the verify module recomputes the factor from
the other columns and checks agreement to 1e-5.  Tables 1 and 2 are periodic
(K = N and N < K < 2N-1); tables 4 and 5 are the aperiodic counterparts.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TableRow:
    n: int
    k: int
    set_size: int
    length: int
    z_x: int
    z_y: int
    theta: int
    rho: float


@dataclass(frozen=True)
class ReferenceTable:
    table_id: int
    kind: str
    regime: str
    rows: tuple[TableRow, ...]


def _row(n, k, z_x, z_y, theta, rho):
    return TableRow(
        n=n, k=k, set_size=n, length=n * k, z_x=z_x, z_y=z_y, theta=theta, rho=rho
    )


TABLES: dict[int, ReferenceTable] = {
    1: ReferenceTable(
        table_id=1,
        kind="periodic",
        regime="K=N",
        rows=(
            _row(3, 3, 3, 3, 3, 1.154701),
            _row(5, 5, 5, 5, 5, 1.095445),
            _row(7, 7, 7, 7, 7, 1.069045),
            _row(11, 11, 11, 11, 11, 1.044466),
            _row(13, 13, 13, 13, 13, 1.037749),
            _row(17, 17, 17, 17, 17, 1.028992),
            _row(19, 19, 19, 19, 19, 1.025978),
            _row(23, 23, 23, 23, 23, 1.021508),
            _row(29, 29, 29, 29, 29, 1.017095),
        ),
    ),
    2: ReferenceTable(
        table_id=2,
        kind="periodic",
        regime="N<K<2N-1",
        rows=(
            _row(7, 11, 7, 5, 11, 1.498298),
            _row(17, 26, 17, 10, 26, 1.341383),
            _row(31, 42, 31, 12, 42, 1.235186),
            _row(41, 52, 41, 12, 52, 1.190520),
            _row(67, 80, 67, 14, 80, 1.142397),
            _row(79, 93, 79, 15, 93, 1.130163),
            _row(89, 103, 89, 15, 103, 1.119777),
            _row(101, 116, 101, 16, 116, 1.112300),
            _row(127, 143, 127, 17, 143, 1.098079),
        ),
    ),
    4: ReferenceTable(
        table_id=4,
        kind="aperiodic",
        regime="K=N",
        rows=(
            _row(9, 9, 3, 9, 11, 1.496217),
            _row(15, 15, 3, 15, 17, 1.381695),
            _row(21, 21, 3, 21, 23, 1.335227),
            _row(25, 25, 5, 25, 29, 1.296886),
            _row(55, 55, 5, 55, 59, 1.198152),
            _row(77, 77, 7, 77, 83, 1.163894),
            _row(91, 91, 7, 91, 97, 1.150922),
            _row(121, 121, 11, 121, 131, 1.135486),
            _row(209, 209, 11, 209, 219, 1.098890),
            _row(221, 221, 13, 221, 233, 1.097303),
        ),
    ),
    5: ReferenceTable(
        table_id=5,
        kind="aperiodic",
        regime="N<K<2N-1",
        rows=(
            _row(25, 38, 5, 14, 42, 2.016593),
            _row(49, 71, 7, 23, 77, 1.746188),
            _row(121, 167, 11, 47, 177, 1.513314),
            _row(169, 230, 13, 62, 242, 1.451976),
            _row(289, 382, 17, 94, 398, 1.373160),
            _row(529, 680, 23, 152, 702, 1.304136),
            _row(961, 1204, 31, 244, 1234, 1.251085),
            _row(1681, 2062, 41, 382, 2102, 1.211598),
            _row(10201, 11811, 101, 1611, 11911, 1.126801),
            _row(27889, 31489, 167, 3601, 31655, 1.097300),
        ),
    ),
}

TABLE_IDS = tuple(sorted(TABLES))

# Optimality factors reported for the two showcase configurations.  Both
# aperiodic values agree with the bound formula over the guaranteed zone; the
# two periodic values follow an undocumented convention and are kept for
# side-by-side reporting only, never asserted.
REPORTED_SHOWCASE_FACTORS = {
    (35, 35): {"periodic": 1.093344, "aperiodic": 1.244779},
    (7, 7): {"periodic": 1.060660, "aperiodic": 2.125211},
}
