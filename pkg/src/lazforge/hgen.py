"""Generators and the verifier for the N x N companion matrix used to
modulate interleaved columns.

A companion matrix must satisfy, for all row pairs i != j and 0 <= v < N:

    |sum_n h_i(n) h_j*(n)|            <= 1
    |sum_n h_i(n) h_j*(n) w_N^{nv}|   <  N

Four families are provided: columns of a DFT matrix one size up, and cyclic
shifts of Legendre, m-, and Björck sequences.  The verifier is authoritative;
generators do not promise the constraints for orders outside supported_orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import PreconditionError
from .numth import (
    is_prime,
    legendre_symbol,
    lfsr_sequence,
    smallest_primitive_polynomial,
)
from .seqcore import Phase, SequenceSet, UnimodSequence, cyclic_shift

INNER_TOL = 1e-9
MODULATED_MARGIN = 1e-6

_PLUS = Phase.rational(0, 1)
_MINUS = Phase.rational(1, 2)


@dataclass(frozen=True)
class HMatrix:
    """Square unimodular matrix whose rows modulate interleaved columns."""

    order: int
    rows: tuple[UnimodSequence, ...]
    provenance: str

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != self.order:
            raise PreconditionError("row count must equal the order")
        if any(r.length != self.order for r in self.rows):
            raise PreconditionError("rows must have length equal to the order")

    @cached_property
    def matrix(self) -> np.ndarray:
        return np.vstack([r.values for r in self.rows])

    def as_sequence_set(self) -> SequenceSet:
        return SequenceSet(self.rows)


@dataclass(frozen=True)
class HReport:
    max_offdiag_inner: float
    max_modulated: float
    passed: bool
    inner_witness: tuple[int, int] | None
    modulated_witness: tuple[int, int, int] | None


def verify_h_constraints(h: HMatrix) -> HReport:
    """Exhaustive scan of both constraints over i != j and 0 <= v < N."""
    n = h.order
    r = h.matrix
    prod = r[:, None, :] * np.conj(r)[None, :, :]  # (i, j, n)
    inner = np.abs(prod.sum(axis=2))
    modulated = np.abs(n * np.fft.ifft(prod, axis=2))  # v runs along axis 2
    diag = np.eye(n, dtype=bool)
    inner[diag] = -1.0
    modulated[diag, :] = -1.0

    i, j = np.unravel_index(int(np.argmax(inner)), inner.shape)
    max_inner = float(inner[i, j])
    iw, jw, vw = np.unravel_index(int(np.argmax(modulated)), modulated.shape)
    max_mod = float(modulated[iw, jw, vw])
    passed = max_inner <= 1.0 + INNER_TOL and max_mod <= n - MODULATED_MARGIN
    return HReport(
        max_offdiag_inner=max_inner,
        max_modulated=max_mod,
        passed=passed,
        inner_witness=(int(i), int(j)) if n > 1 else None,
        modulated_witness=(int(iw), int(jw), int(vw)) if n > 1 else None,
    )


def _shift_rows(row0: UnimodSequence, provenance: str) -> HMatrix:
    n = row0.length
    rows = tuple(cyclic_shift(row0, i) for i in range(n))
    return HMatrix(order=n, rows=rows, provenance=provenance)


def dft_submatrix(n: int) -> HMatrix:
    """Drop the last row and column of the (N+1)-point DFT matrix.

    Off-diagonal row inner products then have magnitude exactly 1: the full
    column sums of an (N+1)-point DFT vanish, so the truncated sums are single
    roots of unity.
    """
    if n < 2:
        raise PreconditionError("order must be at least 2")
    rows = tuple(
        UnimodSequence.from_turns([(i * t) % (n + 1) for t in range(n)], n + 1)
        for i in range(n)
    )
    return HMatrix(order=n, rows=rows, provenance="dft_submatrix")


def legendre_shifts(n: int) -> HMatrix:
    """Cyclic shifts of the +-1 quadratic-residue sequence of prime length.

    Only p = 3 (mod 4) passes the verifier: for p = 1 (mod 4) the off-peak
    autocorrelation reaches -1 + 2*chi(tau), magnitude 3.
    """
    if not is_prime(n) or n == 2:
        raise PreconditionError("length must be an odd prime")
    row0 = UnimodSequence(
        tuple(
            _PLUS if t == 0 or legendre_symbol(t, n) == 1 else _MINUS
            for t in range(n)
        )
    )
    return _shift_rows(row0, "legendre")


def msequence_shifts(m: int, poly_mask: int | None = None) -> HMatrix:
    """Cyclic shifts of the +-1 maximal-length sequence of period 2^m - 1.

    The default polynomial is the lexicographically smallest primitive one of
    degree m; pass poly_mask (bits = coefficients of x^0..x^{m-1}) to override.
    """
    if m < 2:
        raise PreconditionError("degree must be at least 2")
    if poly_mask is None:
        poly_mask = smallest_primitive_polynomial(m)
    bits = lfsr_sequence(m, poly_mask)
    row0 = UnimodSequence(tuple(_MINUS if b else _PLUS for b in bits))
    return _shift_rows(row0, "msequence")


def bjorck_shifts(p: int) -> HMatrix:
    """Cyclic shifts of the Björck sequence of odd prime length.

    p = 1 (mod 4): entries exp(i*theta*chi(t)) with theta = arccos(1/(1+sqrt p)).
    p = 3 (mod 4): phase theta = arccos((1-p)/(1+p)) on the non-residues only.
    For p in {3, 5} these angles degenerate to roots of unity and the shifted
    rows align with a Doppler line, so those orders fail the verifier.
    """
    if not is_prime(p) or p == 2:
        raise PreconditionError("length must be an odd prime")
    if p % 4 == 1:
        theta = math.acos(1.0 / (1.0 + math.sqrt(p)))
        angles = [theta * legendre_symbol(t, p) for t in range(p)]
    else:
        theta = math.acos((1.0 - p) / (1.0 + p))
        angles = [theta if legendre_symbol(t, p) == -1 else 0.0 for t in range(p)]
    return _shift_rows(UnimodSequence.from_angles(angles), "bjorck")


def hmatrix_from_set(s: SequenceSet, provenance: str = "custom") -> HMatrix:
    if s.size != s.length:
        raise PreconditionError("companion matrix must be square")
    return HMatrix(order=s.size, rows=s.members, provenance=provenance)


def supported_orders(kind: str, limit: int = 127) -> list[int]:
    """Arguments for which each generator's output passes the verifier.

    For mseq the listed values are the degrees m, not the orders 2^m - 1.
    """
    if kind == "dft":
        return list(range(2, limit + 1))
    if kind == "legendre":
        return [p for p in range(3, limit + 1) if is_prime(p) and p % 4 == 3]
    if kind == "mseq":
        return [m for m in range(2, limit.bit_length() + 1) if 2**m - 1 <= limit]
    if kind == "bjorck":
        return [p for p in range(7, limit + 1) if is_prime(p)]
    raise PreconditionError(f"unknown generator kind {kind!r}")


GENERATORS = {
    "dft": dft_submatrix,
    "legendre": legendre_shifts,
    "mseq": msequence_shifts,
    "bjorck": bjorck_shifts,
}


def make_hmatrix(kind: str, order: int) -> HMatrix:
    """Build a companion matrix of the given order by family name.

    For mseq the order must be 2^m - 1; the degree is inferred.
    """
    if kind == "mseq":
        m = order.bit_length()
        if 2**m - 1 != order:
            raise PreconditionError("mseq order must be 2^m - 1")
        return msequence_shifts(m)
    if kind not in GENERATORS:
        raise PreconditionError(f"unknown generator kind {kind!r}")
    return GENERATORS[kind](order)
