"""Degree-4 D- and F-criteria families supporting SLOCC classification.

The D-criteria pair each 8-amplitude block from the front of the vector
with its mirror block from the back; there are 2**(n-4) blocks of three
values each.

The F-criteria are indexed by four basis-index pairs sharing one sum
and one XOR: i<j, k<l, p<q, r<s, i<k<p<r, i+j=k+l=p+q=r+s and
i^j = k^l = p^q = r^s.  The evaluated expression shifts half the
subscripts by 1 (odd sums) or 2 (even sums); tuples whose shifted
subscripts leave [0, 2**n - 1] are excluded from enumeration.  The pair
count per (sum, xor) class is a power of two, so the tuple count grows
roughly like 2**(4n); enumeration beyond n ~ 7 is impractical and the
CLI refuses it by default.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType
from typing import Mapping, NamedTuple

from .errors import IndexOutOfRange, TooFewQubits
from .invariant import DEFAULT_TOL, vanishing
from .statevec import StateVector


@dataclass(frozen=True)
class DCriterion:
    """The three block-i values D1, D2, D3."""

    i: int
    d1: complex
    d2: complex
    d3: complex


class FSubscripts(NamedTuple):
    i: int
    j: int
    k: int
    l: int
    p: int
    q: int
    r: int
    s: int

    @property
    def pair_sum(self) -> int:
        return self.i + self.j


def d_criteria(s: StateVector) -> list[DCriterion]:
    """All 2**(n-4) D-criterion triples, transcribed index-for-index."""
    n = s.n
    if n < 4:
        raise TooFewQubits(f"D-criteria need n >= 4, got {n}")
    a = s.amplitudes
    big = 1 << n
    out = []
    for i in range(1 << (n - 4)):
        lo = a[8 * i: 8 * i + 8]
        hi = a[big - 8 * i - 8: big - 8 * i]  # hi[c] = a_{2^n - 8i - 8 + c}
        d1 = ((lo[1] * lo[4] - lo[0] * lo[5]) * (hi[3] * hi[6] - hi[2] * hi[7])
              - (lo[3] * lo[6] - lo[2] * lo[7]) * (hi[1] * hi[4] - hi[0] * hi[5]))
        d2 = ((lo[4] * lo[7] - lo[5] * lo[6]) * (hi[0] * hi[3] - hi[1] * hi[2])
              - (lo[0] * lo[3] - lo[1] * lo[2]) * (hi[4] * hi[7] - hi[5] * hi[6]))
        d3 = ((lo[3] * lo[5] - lo[1] * lo[7]) * (hi[2] * hi[4] - hi[0] * hi[6])
              - (lo[2] * lo[4] - lo[0] * lo[6]) * (hi[3] * hi[5] - hi[1] * hi[7]))
        out.append(DCriterion(i=i, d1=complex(d1), d2=complex(d2), d3=complex(d3)))
    return out


def _shifted_in_range(t: FSubscripts, size: int) -> bool:
    if t.pair_sum % 2:
        return t.j - 1 >= 0 and t.q - 1 >= 0 and t.l + 1 < size and t.s + 1 < size
    return t.j - 2 >= 0 and t.q - 2 >= 0 and t.l + 2 < size and t.s + 2 < size


@lru_cache(maxsize=None)
def f_enumerate(n: int) -> tuple[FSubscripts, ...]:
    """All admissible subscript tuples, ordered by (i+j, i, k, p, r)."""
    if n < 3:
        raise TooFewQubits(f"F-criteria need n >= 3, got {n}")
    size = 1 << n
    classes: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u in range(size):
        for v in range(u + 1, size):
            classes.setdefault((u + v, u ^ v), []).append((u, v))
    found = []
    for pairs in classes.values():
        if len(pairs) < 4:
            continue
        for quad in combinations(pairs, 4):  # pairs are already sorted by first index
            t = FSubscripts(*quad[0], *quad[1], *quad[2], *quad[3])
            if _shifted_in_range(t, size):
                found.append(t)
    found.sort(key=lambda t: (t.pair_sum, t.i, t.k, t.p, t.r))
    return tuple(found)


def f_evaluate(s: StateVector, t: FSubscripts) -> complex:
    """The literal F expression at tuple t, dispatched on the parity of i+j."""
    size = 1 << s.n
    if not all(0 <= idx < size for idx in t):
        raise IndexOutOfRange(f"{t} has subscripts outside [0, {size})")
    if not _shifted_in_range(t, size):
        raise IndexOutOfRange(f"{t} has shifted subscripts outside [0, {size})")
    a = s.amplitudes
    head = (a[t.i] * a[t.j] + a[t.k] * a[t.l] - a[t.p] * a[t.q] - a[t.r] * a[t.s]) ** 2
    d = 1 if t.pair_sum % 2 else 2
    tail = 4 * (a[t.i] * a[t.j - d] - a[t.p] * a[t.q - d]) \
             * (a[t.k] * a[t.l + d] - a[t.r] * a[t.s + d])
    return complex(head - tail)


_F_SIGNATURE_MAX_N = 6  # tuple counts explode past this; override explicitly


@dataclass(frozen=True)
class CriteriaSignature:
    """All D and F values for one state plus their vanishing pattern."""

    n: int
    tol: float
    d_values: tuple[DCriterion, ...]
    d_vanishing: tuple[tuple[bool, bool, bool], ...]
    f_values: Mapping[FSubscripts, complex]
    f_vanishing: Mapping[FSubscripts, bool]
    f_included: bool


def criteria_signature(s: StateVector, tol: float = DEFAULT_TOL,
                       include_f: bool | None = None) -> CriteriaSignature:
    """Evaluate every criterion; D/F values are degree-4, so the vanishing
    threshold scales with the squared norm.

    include_f defaults to n <= 6 (the F family grows combinatorially).
    """
    nsq = s.norm_squared()
    d_vals: tuple[DCriterion, ...] = ()
    d_van: tuple[tuple[bool, bool, bool], ...] = ()
    if s.n >= 4:
        d_vals = tuple(d_criteria(s))
        d_van = tuple(
            (vanishing(d.d1, nsq, tol, 4), vanishing(d.d2, nsq, tol, 4),
             vanishing(d.d3, nsq, tol, 4))
            for d in d_vals)
    if include_f is None:
        include_f = s.n <= _F_SIGNATURE_MAX_N
    f_vals: dict[FSubscripts, complex] = {}
    f_van: dict[FSubscripts, bool] = {}
    if include_f and s.n >= 3:
        for t in f_enumerate(s.n):
            val = f_evaluate(s, t)
            f_vals[t] = val
            f_van[t] = vanishing(val, nsq, tol, 4)
    return CriteriaSignature(n=s.n, tol=tol, d_values=d_vals, d_vanishing=d_van,
                             f_values=MappingProxyType(f_vals),
                             f_vanishing=MappingProxyType(f_van),
                             f_included=bool(include_f and s.n >= 3))


def achieved_pair_sums(n: int) -> list[int]:
    """Sorted set of sums i+j realized by at least one admissible tuple."""
    return sorted({t.pair_sum for t in f_enumerate(n)})


def signature_json_dict(sig: CriteriaSignature) -> dict:
    def pair(z: complex):
        return [z.real, z.imag]

    d_entries = [
        {"i": d.i, "d1": pair(d.d1), "d2": pair(d.d2), "d3": pair(d.d3),
         "vanishing": list(v)}
        for d, v in zip(sig.d_values, sig.d_vanishing)
    ]
    f_entries = [
        {"subscripts": list(t), "value": pair(v), "vanishing": sig.f_vanishing[t]}
        for t, v in sig.f_values.items()
    ]
    return {
        "n": sig.n,
        "tol": sig.tol,
        "d_criteria": d_entries,
        "f_criteria": f_entries if sig.f_included else None,
        "f_included": sig.f_included,
        "note": ("F tuples whose shifted subscripts (j-1/l+1/q-1/s+1 for odd i+j, "
                 "j-2/l+2/q-2/s+2 for even i+j) fall outside [0, 2^n - 1] are excluded."),
    }
