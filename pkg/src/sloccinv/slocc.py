"""Invertible local-operator chains and the determinant transform laws.

apply_chain sweeps the n 2x2 operators over the amplitude vector in
O(n * 2**n) time and O(2**n) extra space; the full 2**n x 2**n matrix
is never formed.  verify_theorem1/verify_theorem2 are randomized
harnesses for the transform laws

    theorem 1 (even n):  IV*(a, n) = IV*(b, n) * prod(det)
    theorem 2 (odd n):   odd_invariant(a) = odd_invariant(b) * prod(det)**2

where a = chain(b).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, ParityError, ParseError
from .invariant import iv_star, odd_invariant
from .statevec import StateVector, _random_amplitudes, _wrap

INVERTIBLE_TOL = 1e-12     # |det| above this counts as invertible
_MIN_RANDOM_DET = 0.1      # random operators below this are redrawn

_REL_ERR_FLOOR = 1e-14     # |reference| below this switches to the absolute check
_ABS_PASS = 1e-12

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
_IDENTITY = np.eye(2, dtype=np.complex128)


@dataclass(frozen=True)
class LocalOperator:
    """A 2x2 complex operator acting on one qubit."""

    entries: np.ndarray

    @property
    def det(self) -> complex:
        m = self.entries
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])

    def is_invertible(self, tol: float = INVERTIBLE_TOL) -> bool:
        return abs(self.det) > tol


def local_operator(entries) -> LocalOperator:
    m = np.array(entries, dtype=np.complex128)
    if m.shape != (2, 2):
        raise LengthMismatch(f"local operator must be 2x2, got shape {m.shape}")
    m.setflags(write=False)
    return LocalOperator(entries=m)


@dataclass(frozen=True)
class LocalOperatorChain:
    """Ordered operators; position k acts on qubit k+1 (qubit 1 = MSB)."""

    ops: tuple[LocalOperator, ...]

    def __len__(self) -> int:
        return len(self.ops)


def chain_of(matrices) -> LocalOperatorChain:
    return LocalOperatorChain(ops=tuple(local_operator(m) for m in matrices))


def identity_chain(n: int) -> LocalOperatorChain:
    return chain_of([_IDENTITY] * n)


def sigma_x_chain(n: int) -> LocalOperatorChain:
    return chain_of([SIGMA_X] * n)


def det_product(chain: LocalOperatorChain) -> complex:
    prod = complex(1.0)
    for op in chain.ops:
        prod *= op.det
    return prod


_SCRATCH_COMPLEX = 1 << 20  # 16 MiB slab bounds the in-place working set


def _mix_inplace(buf: np.ndarray, op: np.ndarray, pre: int, block: int,
                 scratch: np.ndarray) -> None:
    """In-place axis mix of the (pre, dim, block) view of buf.

    Pieces are copied into the contiguous slab and the matmul writes back
    over their original location, so only the slab is extra memory.
    """
    dim = op.shape[0]
    if block == 1:
        rows = buf.reshape(-1, dim)
        step = max(1, _SCRATCH_COMPLEX // dim)
        for a in range(0, rows.shape[0], step):
            piece = rows[a:a + step]
            slab = scratch[:piece.size].reshape(piece.shape)
            slab[...] = piece
            np.matmul(slab, op.T, out=piece)
        return
    view = buf.reshape(pre, dim, block)
    per_row = dim * block
    if per_row <= _SCRATCH_COMPLEX:
        step = _SCRATCH_COMPLEX // per_row
        for a in range(0, pre, step):
            piece = view[a:a + step]
            slab = scratch[:piece.size].reshape(piece.shape)
            slab[...] = piece
            np.matmul(op, slab, out=piece)
    else:  # early passes: few rows, huge blocks; chunk the block axis instead
        width = max(1, _SCRATCH_COMPLEX // (pre * dim))
        for c in range(0, block, width):
            piece = view[:, :, c:c + width]
            slab = scratch[:piece.size].reshape(piece.shape)
            slab[...] = piece
            np.matmul(op, slab, out=piece)


def apply_chain(chain: LocalOperatorChain, s: StateVector) -> StateVector:
    """Apply the n-fold tensor product of the chain's operators to s.

    Operators are folded in qubit order, two qubits per pass (a 4x4
    block).  The first pass writes the single full-size work buffer;
    later passes update it in place through a small slab, so peak extra
    memory is one amplitude vector.  The input state is never written.
    """
    n = s.n
    if len(chain.ops) != n:
        raise LengthMismatch(f"chain has {len(chain.ops)} operators for n={n}")
    buf = np.empty_like(s.amplitudes)
    scratch = np.empty(min(_SCRATCH_COMPLEX, buf.size), dtype=np.complex128)
    k = 0
    while k < n:
        if k + 1 < n:
            op = np.kron(chain.ops[k].entries, chain.ops[k + 1].entries)
            width = 2
        else:
            op = chain.ops[k].entries
            width = 1
        if k == 0:
            dim = op.shape[0]
            np.matmul(op, s.amplitudes.reshape(dim, -1), out=buf.reshape(dim, -1))
        else:
            _mix_inplace(buf, op, pre=1 << k, block=1 << (n - k - width),
                         scratch=scratch)
        k += width
    return _wrap(n, buf)


def _random_operator(rng: np.random.Generator, unit_det: bool) -> LocalOperator:
    while True:
        m = rng.uniform(-1.0, 1.0, (2, 2)) + 1j * rng.uniform(-1.0, 1.0, (2, 2))
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(det) >= _MIN_RANDOM_DET:
            break
    if unit_det:
        m = m / cmath.sqrt(det)  # principal branch; only det enters the laws
    return local_operator(m)


def _random_ops(rng: np.random.Generator, n: int, unit_det: bool) -> LocalOperatorChain:
    return LocalOperatorChain(ops=tuple(_random_operator(rng, unit_det) for _ in range(n)))


def random_chain(n: int, seed: int, unit_det: bool = False) -> LocalOperatorChain:
    """Seed-deterministic chain with re/im entries uniform in [-1, 1].

    Operators with |det| < 0.1 are redrawn; with unit_det each operator
    is divided by a square root of its determinant.
    """
    return _random_ops(np.random.default_rng(seed), n, unit_det)


def _transform_error(lhs: complex, rhs: complex) -> float:
    """Relative error with an absolute-agreement fallback near zero."""
    if abs(lhs) < _REL_ERR_FLOOR:
        return 0.0 if abs(rhs) < _ABS_PASS else math.inf
    return abs(lhs - rhs) / abs(lhs)


def _verify(n: int, trials: int, seed: int, value, det_power: int) -> float:
    worst = 0.0
    for trial in range(trials):
        rng = np.random.default_rng(seed + trial)  # per-trial substream
        b = _wrap(n, _random_amplitudes(rng, n))
        chain = _random_ops(rng, n, unit_det=False)
        a = apply_chain(chain, b)
        scale = det_product(chain) ** det_power
        worst = max(worst, _transform_error(value(a), value(b) * scale))
    return worst


def verify_theorem1(n: int, trials: int, seed: int) -> float:
    """Max relative error of IV*(chain(b)) = IV*(b) * prod(det) over seeded trials."""
    if n < 2 or n % 2:
        raise ParityError(f"theorem 1 needs even n >= 2, got {n}")
    return _verify(n, trials, seed, iv_star, det_power=1)


def verify_theorem2(n: int, trials: int, seed: int) -> float:
    """Max relative error of the odd-invariant law with prod(det)**2."""
    if n < 3 or n % 2 == 0:
        raise ParityError(f"theorem 2 needs odd n >= 3, got {n}")
    return _verify(n, trials, seed, odd_invariant, det_power=2)


def ops_json_dict(chain: LocalOperatorChain) -> dict:
    """{"ops": [[[re,im] x4], ...]} row-major per 2x2 operator."""
    ops = []
    for op in chain.ops:
        flat = op.entries.reshape(4)
        ops.append([[z.real, z.imag] for z in flat.tolist()])
    return {"ops": ops}


def ops_from_json_dict(doc) -> LocalOperatorChain:
    if not isinstance(doc, dict) or "ops" not in doc or not isinstance(doc["ops"], list):
        raise ParseError('operator JSON must be {"ops": [[[re,im], ...x4], ...]}')
    mats = []
    for entry in doc["ops"]:
        arr = np.asarray(entry, dtype=object)
        try:
            pairs = arr.astype(np.float64)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"operator entries must be [re, im] pairs: {exc}") from None
        if pairs.shape != (4, 2):
            raise ParseError("each operator needs exactly four [re, im] entries")
        if not np.all(np.isfinite(pairs)):
            raise ParseError("operator entries must be finite")
        mats.append((pairs[:, 0] + 1j * pairs[:, 1]).reshape(2, 2))
    return chain_of(mats)
