"""n-qubit pure-state amplitude vectors: construction, algebra, JSON I/O.

Basis label i is read with qubit 1 at the most significant bit, so the
index ranges [0, 2**(n-1)) and [2**(n-1), 2**n) are the qubit-1 |0> and
|1> half-blocks.  States are immutable; unnormalized amplitude vectors
are accepted everywhere and the invariants are evaluated on the raw
amplitudes (see README for the resulting scaling laws).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import AllZero, LengthMismatch, ParseError, TooFewQubits

NORM_TOL = 1e-12      # |<s|s> - 1| below this marks the state normalized
_RESCALE_TOL = 1e-15  # normalize() returns its input unchanged this close to 1

_CLUSTER_SUPPORT = (3, 5, 6, 9, 10, 12)


@dataclass(frozen=True)
class StateVector:
    """Immutable n-qubit amplitude vector (length 2**n, complex128)."""

    n: int
    amplitudes: np.ndarray
    normalized: bool

    def norm_squared(self) -> float:
        return float(np.real(np.vdot(self.amplitudes, self.amplitudes)))

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())


def _wrap(n: int, amplitudes: np.ndarray) -> StateVector:
    """Wrap a trusted, correctly sized array without copying."""
    amps = np.ascontiguousarray(amplitudes, dtype=np.complex128)
    amps.setflags(write=False)
    norm_sq = float(np.real(np.vdot(amps, amps)))
    return StateVector(n=n, amplitudes=amps, normalized=abs(norm_sq - 1.0) <= NORM_TOL)


def new_state(n: int, amplitudes) -> StateVector:
    """Build a state from raw amplitudes; the normalized flag is measured, not forced."""
    if n < 1:
        raise TooFewQubits(f"need n >= 1, got {n}")
    amps = np.array(amplitudes, dtype=np.complex128)
    if amps.ndim != 1 or amps.size != 1 << n:
        raise LengthMismatch(f"expected {1 << n} amplitudes for n={n}, got {amps.size}")
    if not np.any(amps):
        raise AllZero("state vector has no nonzero amplitude")
    return _wrap(n, amps)


def normalize(s: StateVector) -> StateVector:
    """Rescale to unit norm. A no-op (same object) when already within 1e-15 of 1."""
    nrm = s.norm()
    if nrm == 0.0:
        raise AllZero("cannot normalize the zero vector")
    if abs(nrm - 1.0) <= _RESCALE_TOL:
        return s
    return _wrap(s.n, s.amplitudes / nrm)


def ghz(n: int) -> StateVector:
    """(|0...0> + |1...1>)/sqrt(2) on n qubits."""
    if n < 1:
        raise TooFewQubits(f"need n >= 1, got {n}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = amps[-1] = math.sqrt(0.5)
    return _wrap(n, amps)


def w_state(n: int) -> StateVector:
    """Equal superposition of the n single-excitation basis states."""
    if n < 2:
        raise TooFewQubits(f"need n >= 2, got {n}")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[[1 << k for k in range(n)]] = 1.0 / math.sqrt(n)
    return _wrap(n, amps)


def cluster_c() -> StateVector:
    """The 4-qubit cluster state (|3>+|5>+|6>+|9>+|10>+|12>)/sqrt(6)."""
    amps = np.zeros(16, dtype=np.complex128)
    amps[list(_CLUSTER_SUPPORT)] = 1.0 / math.sqrt(6)
    return _wrap(4, amps)


def tensor(s1: StateVector, s2: StateVector) -> StateVector:
    """Tensor product; s1's qubits become the most significant ones."""
    return _wrap(s1.n + s2.n, np.kron(s1.amplitudes, s2.amplitudes))


def complement(s: StateVector) -> StateVector:
    """Move the amplitude at index i to the bit-complement index (2**n-1) ^ i."""
    return _wrap(s.n, s.amplitudes[::-1].copy())


def _random_amplitudes(rng: np.random.Generator, n: int) -> np.ndarray:
    """Unit-norm amplitudes with re/im parts drawn uniformly from [-1, 1]."""
    amps = rng.uniform(-1.0, 1.0, 1 << n) + 1j * rng.uniform(-1.0, 1.0, 1 << n)
    return amps / np.linalg.norm(amps)


def random_state(n: int, seed: int) -> StateVector:
    """Seed-deterministic random normalized state."""
    if n < 1:
        raise TooFewQubits(f"need n >= 1, got {n}")
    return _wrap(n, _random_amplitudes(np.random.default_rng(seed), n))


def to_json_dict(s: StateVector) -> dict:
    """{"n": ..., "amplitudes": [[re, im], ...]} with exactly 2**n entries."""
    pairs = np.column_stack([s.amplitudes.real, s.amplitudes.imag]).tolist()
    return {"n": s.n, "amplitudes": pairs}


def _reject_constant(token: str):
    raise ParseError(f"non-finite JSON token {token!r} is not allowed")


def from_json_dict(doc) -> StateVector:
    """Validate and build a state from the JSON schema. Rejects NaN/Inf."""
    if not isinstance(doc, dict) or "n" not in doc or "amplitudes" not in doc:
        raise ParseError('state JSON must be {"n": ..., "amplitudes": [[re, im], ...]}')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"n must be a positive integer, got {n!r}")
    entries = doc["amplitudes"]
    if not isinstance(entries, list) or len(entries) != 1 << n:
        raise ParseError(f"expected {1 << n} amplitude entries for n={n}")
    arr = np.asarray(entries, dtype=object)
    try:
        pairs = arr.astype(np.float64)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"amplitude entries must be [re, im] number pairs: {exc}") from None
    if pairs.shape != (1 << n, 2):
        raise ParseError("amplitude entries must be [re, im] number pairs")
    if not np.all(np.isfinite(pairs)):
        raise ParseError("amplitudes must be finite (no NaN/Inf)")
    amps = pairs[:, 0] + 1j * pairs[:, 1]
    if not np.any(amps):
        raise AllZero("state vector has no nonzero amplitude")
    return _wrap(n, amps)


def load_state(path) -> StateVector:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh, parse_constant=_reject_constant)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc}") from None
    return from_json_dict(doc)


def save_state(s: StateVector, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json_dict(s), fh)
        fh.write("\n")
