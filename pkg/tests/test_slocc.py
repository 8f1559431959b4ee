"""Local-operator chains: application, determinants, transform-law harnesses."""

import math
from functools import reduce

import numpy as np
import pytest

from sloccinv import (
    LengthMismatch,
    ParityError,
    apply_chain,
    chain_of,
    complement,
    det_product,
    ghz,
    identity_chain,
    iv_star,
    local_operator,
    new_state,
    random_chain,
    random_state,
    sigma_x_chain,
    tau,
    vanishing,
    verify_theorem1,
    verify_theorem2,
    w_state,
)

RNG = np.random.default_rng(314159)


def rand_state(n, rng=RNG):
    amps = rng.uniform(-1, 1, 1 << n) + 1j * rng.uniform(-1, 1, 1 << n)
    return new_state(n, amps / np.linalg.norm(amps))


def dense_matrix(chain):
    return reduce(np.kron, [op.entries for op in chain.ops])


def test_local_operator_validation():
    with pytest.raises(LengthMismatch):
        local_operator([[1, 0, 0], [0, 1, 0]])
    op = local_operator([[1, 2], [3, 4]])
    assert op.det == pytest.approx(-2)
    assert op.is_invertible()
    assert not local_operator([[1, 1], [1, 1]]).is_invertible()


def test_identity_chain_is_exact():
    s = rand_state(6)
    out = apply_chain(identity_chain(6), s)
    np.testing.assert_array_equal(out.amplitudes, s.amplitudes)


def test_sigma_x_chain_is_complement():
    for n in (1, 3, 4, 7):
        s = rand_state(n)
        out = apply_chain(sigma_x_chain(n), s)
        np.testing.assert_array_equal(out.amplitudes, complement(s).amplitudes)


def test_diag_op_on_bell_state():
    # oracle: direct 4x4 matrix multiply
    ch = chain_of([np.diag([2.0, 1.0]), np.eye(2)])
    s = ghz(2)
    out = apply_chain(ch, s)
    expected = dense_matrix(ch) @ s.amplitudes
    np.testing.assert_allclose(out.amplitudes, expected, rtol=0, atol=0)
    np.testing.assert_allclose(
        out.amplitudes, [2 / math.sqrt(2), 0, 0, 1 / math.sqrt(2)], rtol=1e-15)
    assert iv_star(out) == pytest.approx(2 * iv_star(s), rel=1e-14)


def test_apply_matches_dense_oracle():
    for n in range(1, 9):
        for trial in range(8):
            s = rand_state(n)
            ch = random_chain(n, seed=100 * n + trial)
            got = apply_chain(ch, s).amplitudes
            ref = dense_matrix(ch) @ s.amplitudes
            scale = np.max(np.abs(ref))
            assert np.max(np.abs(got - ref)) <= 1e-12 * scale, n


def test_apply_chain_composition():
    n = 5
    s = rand_state(n)
    c1 = random_chain(n, seed=11)
    c2 = random_chain(n, seed=22)
    two_step = apply_chain(c2, apply_chain(c1, s)).amplitudes
    fused = chain_of([b.entries @ a.entries for a, b in zip(c1.ops, c2.ops)])
    one_step = apply_chain(fused, s).amplitudes
    np.testing.assert_allclose(two_step, one_step, rtol=1e-12, atol=1e-15)


def test_apply_chain_length_mismatch():
    with pytest.raises(LengthMismatch):
        apply_chain(identity_chain(3), ghz(4))


def test_det_product_examples():
    assert det_product(identity_chain(5)) == 1
    ch = chain_of([np.diag([2.0, 1.0])] + [np.eye(2)] * 4)
    assert det_product(ch) == pytest.approx(2)
    for n in (2, 3, 6):
        assert det_product(sigma_x_chain(n)) == pytest.approx((-1) ** n)


def test_random_chain_properties():
    a = random_chain(4, seed=5)
    b = random_chain(4, seed=5)
    for x, y in zip(a.ops, b.ops):
        np.testing.assert_array_equal(x.entries, y.entries)
    for op in a.ops:
        assert abs(op.det) >= 0.1
    unit = random_chain(6, seed=5, unit_det=True)
    assert abs(det_product(unit)) == pytest.approx(1.0, abs=1e-12)


def test_verify_theorem1_spec_points():
    assert verify_theorem1(4, 100, 1) <= 1e-9
    assert verify_theorem1(6, 100, 1) <= 1e-9
    assert verify_theorem1(2, 100, 1) <= 1e-11


def test_verify_theorem2_spec_points():
    assert verify_theorem2(3, 100, 1) <= 1e-9
    assert verify_theorem2(5, 100, 1) <= 1e-9
    assert verify_theorem2(7, 50, 1) <= 1e-8


def test_verify_parity_errors():
    with pytest.raises(ParityError):
        verify_theorem1(5, 10, 1)
    with pytest.raises(ParityError):
        verify_theorem2(4, 10, 1)
    with pytest.raises(ParityError):
        verify_theorem1(1, 10, 1)


def test_unit_det_chain_preserves_tau():
    for n in range(2, 8):
        s = rand_state(n)
        ch = random_chain(n, seed=1000 + n, unit_det=True)
        t0, t1 = tau(s), tau(apply_chain(ch, s))
        assert t1 == pytest.approx(t0, rel=1e-9, abs=1e-12)


def test_vanishing_is_slocc_invariant():
    zero = new_state(1, [1, 0])
    for n in range(3, 8):
        vanisher = w_state(n)
        nonvanisher = ghz(n)
        for trial in range(20):
            ch = random_chain(n, seed=7000 + 100 * n + trial)
            for s, expect in ((vanisher, True), (nonvanisher, False)):
                out = apply_chain(ch, s)
                got = vanishing(
                    iv_star(out) if n % 2 == 0 else _odd(out),
                    out.norm_squared(),
                    degree=2 if n % 2 == 0 else 4,
                )
                assert got is expect, (n, trial, expect)


def _odd(s):
    from sloccinv import odd_invariant

    return odd_invariant(s)


def test_ops_json_roundtrip():
    from sloccinv.slocc import ops_from_json_dict, ops_json_dict

    ch = random_chain(3, seed=9)
    doc = ops_json_dict(ch)
    back = ops_from_json_dict(doc)
    for a, b in zip(ch.ops, back.ops):
        np.testing.assert_array_equal(a.entries, b.entries)


def _symbolic_chain(sympy, b, ops, n):
    """Independent per-qubit fold of generic 2x2 operators over symbols."""
    vec = list(b)
    for k, op in enumerate(ops):
        block = 1 << (n - 1 - k)
        new = [None] * (1 << n)
        for base in range(0, 1 << n, 2 * block):
            for j in range(block):
                x = vec[base + j]
                y = vec[base + block + j]
                new[base + j] = op[0, 0] * x + op[0, 1] * y
                new[base + block + j] = op[1, 0] * x + op[1, 1] * y
        vec = new
    return vec


def _symbolic_iv_star(amps, n):
    from sloccinv.signtab import sign_star_table

    size = 1 << n
    table = sign_star_table(n)
    return sum(int(table[i]) * (amps[2 * i] * amps[size - 1 - 2 * i]
                                - amps[2 * i + 1] * amps[size - 2 - 2 * i])
               for i in range(1 << (n - 2)))


def _symbolic_odd_invariant(amps, n):
    from sloccinv.signtab import sign_table

    size = 1 << n
    half = size >> 1
    table = sign_table(n)
    bar = sum(int(table[i])
              * ((amps[2 * i] * amps[size - 1 - 2 * i]
                  - amps[2 * i + 1] * amps[size - 2 - 2 * i])
                 - (amps[half - 2 - 2 * i] * amps[half + 1 + 2 * i]
                    - amps[half - 1 - 2 * i] * amps[half + 2 * i]))
              for i in range(1 << (n - 3)))
    low = _symbolic_iv_star(amps[:half], n - 1)
    high = _symbolic_iv_star(amps[half:], n - 1)
    return bar ** 2 - 4 * low * high


@pytest.mark.parametrize("n,odd", [(2, False), (3, True), (4, False)])
def test_transform_laws_hold_symbolically(n, odd):
    # exact polynomial identity over generic operators, not just random floats
    sympy = pytest.importorskip("sympy")
    b = sympy.symbols(f"b0:{1 << n}")
    ops = [sympy.Matrix(2, 2, sympy.symbols(f"o{k}_0:4")) for k in range(n)]
    a = _symbolic_chain(sympy, b, ops, n)
    dets = sympy.prod([op.det() for op in ops])
    if odd:
        lhs = _symbolic_odd_invariant(a, n)
        rhs = _symbolic_odd_invariant(list(b), n) * dets ** 2
    else:
        lhs = _symbolic_iv_star(a, n)
        rhs = _symbolic_iv_star(list(b), n) * dets
    assert sympy.expand(lhs - rhs) == 0
