"""Interleaved construction of low-ambiguity-zone sequence sets.

From a local nonlinear function f: Z_N -> Z_K build the N x K base matrix
a_k(t) = w_K^{t f(k)}, modulate its rows by a verified companion matrix, and
read the resulting K x N column arrangement out row-major:

    s_n(t*N + m) = h_n(m) * w_K^{t f(m)}

giving N sequences of length N*K.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .hgen import HMatrix, verify_h_constraints
from .lpnf import ZFunc, lpnf_zone_for
from .numth import smallest_prime_factor
from .seqcore import SequenceSet, UnimodSequence, Zone

KINDS = ("periodic", "aperiodic")


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise PreconditionError(f"kind must be one of {KINDS}, got {kind!r}")


@dataclass(frozen=True)
class LazParams:
    """Claimed low-ambiguity-zone parameters (M, length, zone, theta)."""

    set_size: int
    length: int
    zone: Zone
    theta: float
    kind: str

    def __post_init__(self):
        _check_kind(self.kind)
        if self.theta <= 0:
            raise PreconditionError("theta must be positive")

    def to_dict(self) -> dict:
        return {
            "set_size": self.set_size,
            "length": self.length,
            "z_x": self.zone.z_x,
            "z_y": self.zone.z_y,
            "theta": self.theta,
            "kind": self.kind,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LazParams":
        return cls(
            set_size=d["set_size"],
            length=d["length"],
            zone=Zone(d["z_x"], d["z_y"]),
            theta=d["theta"],
            kind=d["kind"],
        )


def build_a_matrix(f: ZFunc) -> SequenceSet:
    """Rows a_k(t) = w_K^{t f(k)} for k in [0, N): N sequences of length K."""
    k_mod = f.codomain_size
    rows = tuple(
        UnimodSequence.from_turns(
            [(t * f.table[x]) % k_mod for t in range(k_mod)], k_mod
        )
        for x in range(f.domain_size)
    )
    return SequenceSet(rows)


def interleave(columns: list[UnimodSequence]) -> UnimodSequence:
    """Row-major read of the matrix whose m-th column is columns[m].

    Output length L*M with u(t*M + m) = columns[m](t).
    """
    if not columns:
        raise PreconditionError("need at least one column")
    length = columns[0].length
    if any(c.length != length for c in columns):
        raise PreconditionError("columns must share one length")
    entries = tuple(c.entries[t] for t in range(length) for c in columns)
    return UnimodSequence(entries)


def deinterleave(u: UnimodSequence, m: int) -> list[UnimodSequence]:
    """Split u back into the m columns that interleave() would combine."""
    if m < 1 or u.length % m != 0:
        raise PreconditionError("column count must divide the sequence length")
    return [UnimodSequence(u.entries[i::m]) for i in range(m)]


def build_laz_set(f: ZFunc, h: HMatrix) -> SequenceSet:
    """The interleaved sequence set for f and a verified companion matrix."""
    n = f.domain_size
    if h.order != n:
        raise PreconditionError(
            f"companion matrix order {h.order} != function domain size {n}"
        )
    report = verify_h_constraints(h)
    if not report.passed:
        raise PreconditionError(
            "companion matrix fails its constraints "
            f"(max inner {report.max_offdiag_inner:.6g}, "
            f"max modulated {report.max_modulated:.6g})"
        )
    base = build_a_matrix(f)
    members = tuple(
        interleave([base[m].scaled(h.rows[n_row][m]) for m in range(n)])
        for n_row in range(n)
    )
    return SequenceSet(members)


def predicted_params(n: int, k: int, kind: str) -> LazParams:
    """Guaranteed parameters for the quadratic-family construction.

    theta is K for the periodic kind and K + p - 1 for the aperiodic kind,
    with p the smallest prime factor of N; the zone is the one on which the
    quadratic family is locally perfect nonlinear.
    """
    _check_kind(kind)
    zone = lpnf_zone_for(n, k)  # validates n odd > 2, k >= n
    p = smallest_prime_factor(n)
    theta = k if kind == "periodic" else k + p - 1
    return LazParams(
        set_size=n,
        length=n * k,
        zone=Zone(zone.z_x, zone.z_y),
        theta=float(theta),
        kind=kind,
    )


def power_map_params(p: int, kind: str) -> LazParams:
    """Guaranteed parameters for the power-map construction on Z_{p-1} -> Z_p.

    The set has p-1 members of length p(p-1) with zone
    (-(p-1), p-1) x (-p, p) and theta = p (periodic) or 2p - 2 (aperiodic).
    """
    _check_kind(kind)
    if p < 3:
        raise PreconditionError("prime must be at least 3")
    theta = p if kind == "periodic" else 2 * p - 2
    return LazParams(
        set_size=p - 1,
        length=p * (p - 1),
        zone=Zone(p - 1, p),
        theta=float(theta),
        kind=kind,
    )
