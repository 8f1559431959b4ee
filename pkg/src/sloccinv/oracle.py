"""Hard-coded small-n invariant expressions used as ground-truth checks.

Every subscript below is transcribed digit for digit and shares no code
with the table-driven formulas, so a transcription slip and a
generalization slip cannot cancel.  The three 3-qubit forms are equal
pointwise as polynomials (checked symbolically in the test suite).
"""

from __future__ import annotations

import numpy as np

from .errors import SizeMismatch
from .statevec import StateVector


def _amps(s: StateVector, n: int) -> np.ndarray:
    if s.n != n:
        raise SizeMismatch(f"oracle expects n={n}, got n={s.n}")
    return s.amplitudes


def oracle_iv2(s: StateVector) -> complex:
    a = _amps(s, 2)
    return complex(a[0] * a[3] - a[1] * a[2])


def oracle_iv4(s: StateVector) -> complex:
    a = _amps(s, 4)
    return complex((a[0] * a[15] - a[1] * a[14]) + (a[6] * a[9] - a[7] * a[8])
                   - (a[2] * a[13] - a[3] * a[12]) - (a[4] * a[11] - a[5] * a[10]))


def oracle_iv6(s: StateVector) -> complex:
    a = _amps(s, 6)
    total = (a[0] * a[63] - a[1] * a[62]) + (a[30] * a[33] - a[31] * a[32]) \
        - (a[2] * a[61] - a[3] * a[60]) - (a[28] * a[35] - a[29] * a[34]) \
        - (a[4] * a[59] - a[5] * a[58]) - (a[26] * a[37] - a[27] * a[36]) \
        + (a[6] * a[57] - a[7] * a[56]) + (a[24] * a[39] - a[25] * a[38]) \
        - (a[8] * a[55] - a[9] * a[54]) - (a[22] * a[41] - a[23] * a[40]) \
        + (a[10] * a[53] - a[11] * a[52]) + (a[20] * a[43] - a[21] * a[42]) \
        + (a[12] * a[51] - a[13] * a[50]) + (a[18] * a[45] - a[19] * a[44]) \
        - (a[14] * a[49] - a[15] * a[48]) - (a[16] * a[47] - a[17] * a[46])
    return complex(total)


def oracle_odd3(s: StateVector, form: str = "main") -> complex:
    a = _amps(s, 3)
    if form == "main":
        val = ((a[0] * a[7] - a[1] * a[6]) - (a[2] * a[5] - a[3] * a[4])) ** 2 \
            - 4 * (a[0] * a[3] - a[1] * a[2]) * (a[4] * a[7] - a[5] * a[6])
    elif form == "alt1":
        val = ((a[0] * a[7] - a[3] * a[4]) + (a[1] * a[6] - a[2] * a[5])) ** 2 \
            - 4 * (a[3] * a[5] - a[1] * a[7]) * (a[2] * a[4] - a[0] * a[6])
    elif form == "alt2":
        val = ((a[0] * a[7] - a[3] * a[4]) - (a[1] * a[6] - a[2] * a[5])) ** 2 \
            - 4 * (a[1] * a[4] - a[0] * a[5]) * (a[3] * a[6] - a[2] * a[7])
    else:
        raise ValueError(f"unknown form {form!r}; use main, alt1 or alt2")
    return complex(val)


def oracle_odd5(s: StateVector) -> complex:
    a = _amps(s, 5)
    head = (-(a[2] * a[29] - a[3] * a[28] - a[12] * a[19] + a[13] * a[18])
            - (a[4] * a[27] - a[5] * a[26] - a[10] * a[21] + a[11] * a[20])
            + (a[0] * a[31] - a[1] * a[30] - a[14] * a[17] + a[15] * a[16])
            + (a[6] * a[25] - a[7] * a[24] - a[8] * a[23] + a[9] * a[22])) ** 2
    low = (a[0] * a[15] - a[1] * a[14]) + (a[6] * a[9] - a[7] * a[8]) \
        - (a[2] * a[13] - a[3] * a[12]) - (a[4] * a[11] - a[5] * a[10])
    high = (a[16] * a[31] - a[17] * a[30]) + (a[22] * a[25] - a[23] * a[24]) \
        - (a[18] * a[29] - a[19] * a[28]) - (a[20] * a[27] - a[21] * a[26])
    return complex(head - 4 * low * high)


ORACLE_LABELS = {
    "iv2": (2, oracle_iv2),
    "iv3_main": (3, lambda s: oracle_odd3(s, "main")),
    "iv3_alt1": (3, lambda s: oracle_odd3(s, "alt1")),
    "iv3_alt2": (3, lambda s: oracle_odd3(s, "alt2")),
    "iv4": (4, oracle_iv4),
    "a_star_5": (5, oracle_odd5),
    "iv6": (6, oracle_iv6),
}


def evaluate(label: str, s: StateVector) -> complex:
    if label not in ORACLE_LABELS:
        raise ValueError(f"unknown oracle label {label!r}")
    _, fn = ORACLE_LABELS[label]
    return fn(s)


def labels_for(n: int) -> list[str]:
    return [label for label, (qubits, _) in ORACLE_LABELS.items() if qubits == n]
