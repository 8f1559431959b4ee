"""Pairwise SLOCC comparison verdicts and constructive dual equivalence.

Only the tau-vanishing rule yields a proof-strength verdict: two states
whose residual entanglements differ in vanishing cannot be SLOCC
equivalent.  Disagreeing D/F vanishing patterns are reported as
heuristic flags, never as a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .criteria import criteria_signature
from .errors import SizeMismatch
from .invariant import DEFAULT_TOL, iv_star, odd_invariant, vanishing
from .slocc import INVERTIBLE_TOL, LocalOperatorChain, apply_chain, sigma_x_chain
from .statevec import StateVector, complement

PROVABLY_INEQUIVALENT = "ProvablyInequivalent"
UNDETERMINED = "Undetermined"
EQUIVALENT_BY_CONSTRUCTION = "EquivalentByConstruction"

_F_FLAG_MAX_N = 4  # F heuristics stay cheap; D heuristics run for any n >= 4


@dataclass(frozen=True)
class Evidence:
    criterion: str
    values: tuple
    vanishing: tuple[bool, bool]


@dataclass(frozen=True)
class Verdict:
    outcome: str
    evidence: tuple[Evidence, ...]
    heuristic_flags: tuple[str, ...]
    witness: LocalOperatorChain | None = None


def _tau_evidence(s1: StateVector, s2: StateVector, tol: float):
    if s1.n % 2 == 0:
        z1, z2 = iv_star(s1), iv_star(s2)
        deg = 2
        name = "iv_star"
    else:
        z1, z2 = odd_invariant(s1), odd_invariant(s2)
        deg = 4
        name = "odd_invariant"
    scale = 2.0 if s1.n % 2 == 0 else 4.0
    v1 = vanishing(z1, s1.norm_squared(), tol, deg)
    v2 = vanishing(z2, s2.norm_squared(), tol, deg)
    records = (
        Evidence("tau", (scale * abs(z1), scale * abs(z2)), (v1, v2)),
        Evidence(name, (z1, z2), (v1, v2)),
    )
    return records, v1, v2


def _heuristic_flags(s1: StateVector, s2: StateVector, tol: float) -> tuple[str, ...]:
    if s1.n < 3:
        return ()
    include_f = s1.n <= _F_FLAG_MAX_N
    sig1 = criteria_signature(s1, tol, include_f=include_f)
    sig2 = criteria_signature(s2, tol, include_f=include_f)
    flags = []
    for d1, d2, v1, v2 in zip(sig1.d_values, sig2.d_values,
                              sig1.d_vanishing, sig2.d_vanishing):
        for slot, (b1, b2) in enumerate(zip(v1, v2), start=1):
            if b1 != b2:
                val1 = getattr(d1, f"d{slot}")
                val2 = getattr(d2, f"d{slot}")
                flags.append(f"D{slot}[{d1.i}] vanishing differs: "
                             f"{abs(val1):.3e} vs {abs(val2):.3e}")
    if include_f:
        for t, b1 in sig1.f_vanishing.items():
            b2 = sig2.f_vanishing[t]
            if b1 != b2:
                flags.append(f"F{tuple(t)} vanishing differs: "
                             f"{abs(sig1.f_values[t]):.3e} vs {abs(sig2.f_values[t]):.3e}")
    return tuple(flags)


def compare(s1: StateVector, s2: StateVector, tol: float = DEFAULT_TOL,
            witness: LocalOperatorChain | None = None) -> Verdict:
    """Compare two same-size states.

    ProvablyInequivalent exactly when one tau vanishes and the other does
    not; EquivalentByConstruction only when an explicit invertible chain
    mapping s1 to s2 is supplied.  Everything else is Undetermined, with
    D/F pattern disagreements attached as informational flags.
    """
    if s1.n != s2.n:
        raise SizeMismatch(f"cannot compare n={s1.n} with n={s2.n}")
    if witness is not None:
        if len(witness.ops) != s1.n:
            raise SizeMismatch(f"witness has {len(witness.ops)} operators for n={s1.n}")
        if not all(op.is_invertible(INVERTIBLE_TOL) for op in witness.ops):
            raise ValueError("witness chain contains a non-invertible operator")
        mapped = apply_chain(witness, s1)
        scale = float(np.max(np.abs(s2.amplitudes))) or 1.0
        if not np.allclose(mapped.amplitudes, s2.amplitudes,
                           rtol=1e-9, atol=1e-12 * scale):
            raise ValueError("witness chain does not map the first state to the second")
        return Verdict(outcome=EQUIVALENT_BY_CONSTRUCTION, evidence=(),
                       heuristic_flags=(), witness=witness)
    records, v1, v2 = _tau_evidence(s1, s2, tol)
    if v1 != v2:
        return Verdict(outcome=PROVABLY_INEQUIVALENT, evidence=records,
                       heuristic_flags=())
    return Verdict(outcome=UNDETERMINED, evidence=records,
                   heuristic_flags=_heuristic_flags(s1, s2, tol))


def dual_equivalence(s: StateVector) -> tuple[StateVector, LocalOperatorChain]:
    """The bit-complement state together with its sigma_x witness chain."""
    return complement(s), sigma_x_chain(s.n)


def verdict_json_dict(v: Verdict) -> dict:
    def render(value):
        if isinstance(value, complex):
            return [value.real, value.imag]
        return value

    return {
        "outcome": v.outcome,
        "evidence": [
            {"criterion": e.criterion,
             "values": [render(e.values[0]), render(e.values[1])],
             "vanishing": list(e.vanishing)}
            for e in v.evidence
        ],
        "heuristic_flags": list(v.heuristic_flags),
        "has_witness": v.witness is not None,
    }
