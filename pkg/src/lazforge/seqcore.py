"""Core types: unit-modulus phases (exact roots of unity or float angles),
unimodular sequences, sequence sets, and delay-Doppler zones.

All constructed sequences in this package have root-of-unity entries, which we
keep as exact fractions of a turn so that magnitude comparisons downstream are
bit-stable.  Float angles exist only for families whose phases are not roots
of unity (Björck rows).
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import PreconditionError

TWO_PI = 2.0 * math.pi

# per-entry comparison tolerance for float-angle phases
FLOAT_PHASE_TOL = 1e-9


@dataclass(frozen=True)
class Phase:
    """A unit-modulus complex number exp(2*pi*i*x).

    Exactly one of `turns` (x as an exact Fraction, canonical in [0, 1)) or
    `angle` (2*pi*x in radians, canonical in [0, 2*pi)) is set.
    """

    turns: Fraction | None = None
    angle: float | None = None

    def __post_init__(self):
        if (self.turns is None) == (self.angle is None):
            raise PreconditionError("exactly one of turns/angle must be set")
        if self.turns is not None:
            object.__setattr__(self, "turns", self.turns % 1)
        else:
            object.__setattr__(self, "angle", float(self.angle) % TWO_PI)

    @classmethod
    def rational(cls, numerator: int, denominator: int) -> "Phase":
        if denominator <= 0:
            raise PreconditionError("denominator must be positive")
        return cls(turns=Fraction(numerator, denominator))

    @classmethod
    def radians(cls, angle: float) -> "Phase":
        return cls(angle=angle)

    @classmethod
    def one(cls) -> "Phase":
        return cls(turns=Fraction(0))

    @property
    def is_rational(self) -> bool:
        return self.turns is not None

    @property
    def numerator(self) -> int:
        if self.turns is None:
            raise PreconditionError("float phase has no numerator")
        return self.turns.numerator

    @property
    def denominator(self) -> int:
        if self.turns is None:
            raise PreconditionError("float phase has no denominator")
        return self.turns.denominator

    def to_angle(self) -> float:
        if self.turns is not None:
            return TWO_PI * float(self.turns)
        return self.angle

    @property
    def value(self) -> complex:
        return cmath.exp(1j * self.to_angle())

    def conjugate(self) -> "Phase":
        if self.turns is not None:
            return Phase(turns=-self.turns)
        return Phase(angle=-self.angle)

    def __mul__(self, other: "Phase") -> "Phase":
        if self.turns is not None and other.turns is not None:
            return Phase(turns=self.turns + other.turns)
        return Phase(angle=self.to_angle() + other.to_angle())

    def __pow__(self, k: int) -> "Phase":
        if self.turns is not None:
            return Phase(turns=self.turns * k)
        return Phase(angle=self.angle * k)

    def approx_equal(self, other: "Phase", tol: float = FLOAT_PHASE_TOL) -> bool:
        """Exact comparison when both sides are rational, complex-value
        comparison within tol otherwise."""
        if self.turns is not None and other.turns is not None:
            return self.turns == other.turns
        return abs(self.value - other.value) <= tol


def phase_mul(p: Phase, q: Phase) -> Phase:
    """Phase of the product; rational x rational stays rational."""
    return p * q


@dataclass(frozen=True)
class UnimodSequence:
    """A finite sequence of unit-modulus entries."""

    entries: tuple[Phase, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) < 1:
            raise PreconditionError("sequence must have at least one entry")

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, t: int) -> Phase:
        return self.entries[t]

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def is_rational(self) -> bool:
        return all(p.is_rational for p in self.entries)

    @cached_property
    def values(self) -> np.ndarray:
        """Entries as a complex128 vector (cached; the dataclass is frozen)."""
        return np.exp(1j * np.array([p.to_angle() for p in self.entries]))

    def scaled(self, c: Phase) -> "UnimodSequence":
        return UnimodSequence(tuple(c * p for p in self.entries))

    @classmethod
    def from_angles(cls, angles) -> "UnimodSequence":
        return cls(tuple(Phase.radians(a) for a in angles))

    @classmethod
    def from_turns(cls, numerators, denominator: int) -> "UnimodSequence":
        return cls(tuple(Phase.rational(n, denominator) for n in numerators))


def cyclic_shift(s: UnimodSequence, tau: int) -> UnimodSequence:
    """result(t) = s(t + tau mod N); positive tau shifts left."""
    n = s.length
    return UnimodSequence(tuple(s.entries[(t + tau) % n] for t in range(n)))


def _entries_match(a: UnimodSequence, b: UnimodSequence) -> bool:
    return all(p.approx_equal(q) for p, q in zip(a.entries, b.entries))


def equal_up_to_shift(
    s: UnimodSequence, t: UnimodSequence, allow_phase: bool = False
) -> tuple[int, Phase] | None:
    """Witness (tau, c) such that t == c * cyclic_shift(s, tau), if one exists.

    Without allow_phase the scalar c is required to be 1.  Candidate shifts
    are located by an FFT correlation peak and then confirmed entry by entry
    (exactly for rational phases, within FLOAT_PHASE_TOL otherwise).
    """
    if s.length != t.length:
        raise PreconditionError("sequences must have equal length")
    n = s.length
    # corr[k] = sum_x t(x) s*(x-k) peaks at magnitude n exactly when
    # t(x) = c * s(x+tau) with tau = -k mod n; the filter is permissive,
    # the entrywise confirmation below is authoritative
    corr = np.fft.ifft(np.fft.fft(t.values) * np.conj(np.fft.fft(s.values)))
    candidates = np.nonzero(np.abs(corr) >= n - 0.5)[0]
    for tau in sorted((-int(k)) % n for k in candidates):
        shifted = cyclic_shift(s, tau)
        if allow_phase:
            c = t.entries[0] * shifted.entries[0].conjugate()
            if _entries_match(shifted.scaled(c), t):
                return tau, c
        elif _entries_match(shifted, t):
            return tau, Phase.one()
    return None


@dataclass(frozen=True)
class SequenceSet:
    """A set of unimodular sequences sharing one length."""

    members: tuple[UnimodSequence, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise PreconditionError("sequence set must be nonempty")
        n = self.members[0].length
        if any(m.length != n for m in self.members):
            raise PreconditionError("all members must share one length")

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def length(self) -> int:
        return self.members[0].length

    @property
    def is_rational(self) -> bool:
        return all(m.is_rational for m in self.members)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Members stacked as a (size, length) complex matrix (cached)."""
        return np.vstack([m.values for m in self.members])

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> UnimodSequence:
        return self.members[i]


@dataclass(frozen=True)
class Zone:
    """Open delay-Doppler rectangle (-z_x, z_x) x (-z_y, z_y) of integers."""

    z_x: int
    z_y: int

    def __post_init__(self):
        if self.z_x < 1 or self.z_y < 1:
            raise PreconditionError("zone half-widths must be positive")

    def delays(self) -> range:
        return range(-self.z_x + 1, self.z_x)

    def dopplers(self) -> range:
        return range(-self.z_y + 1, self.z_y)

    def check_fits(self, length: int) -> None:
        if self.z_x > length or self.z_y > length:
            raise PreconditionError(
                f"zone ({self.z_x},{self.z_y}) exceeds sequence length {length}"
            )


# ---------------------------------------------------------------------------
# sequence-set file format
#
# { "length": int, "size": int, "phase_mode": "rational"|"float",
#   "members": [[ [num,den] | angle, ... ], ...] }
#
# Rational mode round-trips bit-exactly; float mode stores radian angles.
# ---------------------------------------------------------------------------


def sequence_set_to_dict(s: SequenceSet) -> dict:
    rational = s.is_rational
    if rational:
        members = [
            [[p.numerator, p.denominator] for p in m.entries] for m in s.members
        ]
    else:
        members = [[p.to_angle() for p in m.entries] for m in s.members]
    return {
        "length": s.length,
        "size": s.size,
        "phase_mode": "rational" if rational else "float",
        "members": members,
    }


def sequence_set_from_dict(d: dict) -> SequenceSet:
    mode = d["phase_mode"]
    if mode == "rational":
        members = [
            UnimodSequence(tuple(Phase.rational(n, den) for n, den in row))
            for row in d["members"]
        ]
    elif mode == "float":
        members = [UnimodSequence.from_angles(row) for row in d["members"]]
    else:
        raise PreconditionError(f"unknown phase_mode {mode!r}")
    s = SequenceSet(tuple(members))
    if s.length != d["length"] or s.size != d["size"]:
        raise PreconditionError("declared length/size do not match members")
    return s


def save_sequence_set(s: SequenceSet, path: str | Path) -> None:
    Path(path).write_text(json.dumps(sequence_set_to_dict(s), indent=2) + "\n")


def load_sequence_set(path: str | Path) -> SequenceSet:
    return sequence_set_from_dict(json.loads(Path(path).read_text()))
