"""End-to-end certification: zone compliance, cyclic distinctness, empirical
maximal zones, and reference-table reproduction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ambiguity import (
    AFWitness,
    MAG_TOL_SCALE,
    ThetaReport,
    _masked_product,
    theta_max,
)
from .bounds import BoundReport, optimality_factor
from .construct import LazParams
from .errors import PreconditionError
from .seqcore import Phase, SequenceSet, equal_up_to_shift
from .tables import TABLES, ReferenceTable, TableRow

TABLE_RHO_TOL = 1e-5


@dataclass(frozen=True)
class DistinctReport:
    distinct: bool
    witness: tuple[int, int, int, Phase] | None  # (i, j, tau, phase)


def cyclic_distinct(s: SequenceSet, mode: str = "exact") -> DistinctReport:
    """No member is a cyclic shift of another (times a unimodular scalar in
    phase mode).  Returns the first offending (i, j, tau, phase) otherwise."""
    if mode not in ("exact", "phase"):
        raise PreconditionError(f"mode must be 'exact' or 'phase', got {mode!r}")
    allow_phase = mode == "phase"
    for i in range(s.size):
        for j in range(i + 1, s.size):
            hit = equal_up_to_shift(s[i], s[j], allow_phase=allow_phase)
            if hit is not None:
                tau, c = hit
                return DistinctReport(distinct=False, witness=(i, j, tau, c))
    return DistinctReport(distinct=True, witness=None)


@dataclass(frozen=True)
class LazCertificate:
    claimed: LazParams
    measured_theta: float
    passed: bool
    witness: AFWitness | None
    bound_report: BoundReport | None  # None when the zone makes the bound vacuous
    cyclically_distinct: bool
    theta_report: ThetaReport

    def to_dict(self) -> dict:
        w = self.witness
        b = self.bound_report
        return {
            "claimed": self.claimed.to_dict(),
            "measured_theta": self.measured_theta,
            "pass": self.passed,
            "witness": None
            if w is None
            else {"i": w.i, "j": w.j, "tau": w.tau, "v": w.v, "magnitude": w.magnitude},
            "bound": None
            if b is None
            else {
                "bound_value": b.bound_value,
                "theta": b.theta,
                "rho": b.rho,
                "regime": b.regime,
                "gamma_limit": b.gamma_limit,
            },
            "cyclically_distinct": self.cyclically_distinct,
        }


def certify_laz(
    s: SequenceSet, params: LazParams, threads: int | None = None
) -> LazCertificate:
    """Exhaustively measure theta over the claimed zone and compare against
    the claim (tolerance 1e-6 times the length)."""
    if s.size != params.set_size or s.length != params.length:
        raise PreconditionError("set shape does not match the claimed parameters")
    params.zone.check_fits(s.length)
    report = theta_max(s, params.zone, params.kind, threads=threads)
    tol = MAG_TOL_SCALE * s.length
    passed = report.theta_max <= params.theta + tol
    try:
        bound = optimality_factor(
            params.theta, params.set_size, params.length,
            params.zone.z_x, params.zone.z_y, params.kind,
        )
    except PreconditionError:
        bound = None  # zone too small for the bound to be informative
    distinct = cyclic_distinct(s, mode="phase").distinct
    return LazCertificate(
        claimed=params,
        measured_theta=report.theta_max,
        passed=passed,
        witness=report.witness,
        bound_report=bound,
        cyclically_distinct=distinct,
        theta_report=report,
    )


def _magnitude_grids(s: SequenceSet, kind: str) -> tuple[np.ndarray, np.ndarray]:
    """Max |AF| grids over auto and cross pairs, indexed [|tau|][|v|].

    Entry (x, y) is the max over tau in {x, -x} and v in {y, -y}; for the
    periodic kind negative delays wrap modulo the length.
    """
    mat = s.matrix
    n = s.length
    auto = np.zeros((n, n))
    cross = np.zeros((n, n))
    taus = range(n) if kind == "periodic" else range(-n + 1, n)
    for i in range(s.size):
        for j in range(s.size):
            rows = np.empty((len(taus), n))
            for r, tau in enumerate(taus):
                c = _masked_product(mat[i], mat[j], tau, kind)
                rows[r] = np.abs(n * np.fft.ifft(c))
            # fold tau and -tau onto |tau|, v and -v onto |v|
            if kind == "periodic":
                by_abs_tau = np.maximum(rows, np.roll(rows[::-1], 1, axis=0))
            else:
                pos = rows[n - 1 :]
                neg = rows[n - 1 :: -1]
                by_abs_tau = np.maximum(pos, neg)
            folded = np.maximum(by_abs_tau, np.roll(by_abs_tau[:, ::-1], 1, axis=1))
            target = auto if i == j else cross
            np.maximum(target, folded, out=target)
    return auto, cross


def empirical_zone(
    s: SequenceSet, theta_budget: float, kind: str
) -> list[tuple[int, int]]:
    """Pareto-maximal open rectangles (-Z_x, Z_x) x (-Z_y, Z_y) whose interior
    (minus the origin for auto surfaces) stays within the budget.

    Scans the full delay-Doppler grid, so runtime is O(M^2 L^2 log L).
    """
    if theta_budget < 0:
        raise PreconditionError("budget must be nonnegative")
    auto, cross = _magnitude_grids(s, kind)
    auto[0, 0] = -1.0  # origin excluded on auto surfaces only
    grid = np.maximum(auto, cross)
    prefix = np.maximum.accumulate(np.maximum.accumulate(grid, axis=0), axis=1)
    tol = MAG_TOL_SCALE * s.length
    ok = prefix <= theta_budget + tol

    n = s.length
    rects: list[tuple[int, int]] = []
    best_zy = 0
    for z_x in range(n, 0, -1):
        row = ok[z_x - 1]
        if not row[0]:
            continue
        z_y = int(np.argmin(row)) if not row.all() else n
        if z_y > best_zy:
            rects.append((z_x, z_y))
            best_zy = z_y
    rects.reverse()  # ascending z_x, descending z_y
    return rects


@dataclass(frozen=True)
class TableCheck:
    row: TableRow
    computed_rho: float
    reference_rho: float
    passed: bool


def reproduce_table(table_id: int) -> list[TableCheck]:
    """Recompute every row's optimality factor from its parameters and
    compare against the published value at 1e-5."""
    if table_id not in TABLES:
        raise PreconditionError(f"unknown table id {table_id}; have {sorted(TABLES)}")
    table: ReferenceTable = TABLES[table_id]
    checks = []
    for row in table.rows:
        rep = optimality_factor(
            row.theta, row.set_size, row.length, row.z_x, row.z_y, table.kind
        )
        checks.append(
            TableCheck(
                row=row,
                computed_rho=rep.rho,
                reference_rho=row.rho,
                passed=abs(rep.rho - row.rho) <= TABLE_RHO_TOL,
            )
        )
    return checks
