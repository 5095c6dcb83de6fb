"""Backend parity: the jitted and numpy scan kernels must agree exactly,
including which counterexample they report first."""

import numpy as np
import pytest

from indigo import kernels
from indigo.core import SemiringCtx

needs_numba = pytest.mark.skipif(not kernels.HAS_NUMBA, reason="numba not installed")

PAIR_KERNELS = [
    (kernels._commut_break_jit, kernels._commut_break_np),
    (kernels._assoc_break_jit, kernels._assoc_break_np),
    (kernels._zero_divisor_jit, kernels._zero_divisor_np),
    (kernels._zero_sum_jit, kernels._zero_sum_np),
    (kernels._monotone_break_jit, kernels._monotone_break_np),
]


def tables(k, mutant=None):
    return SemiringCtx(k, mutant=mutant).tables()


@needs_numba
@pytest.mark.parametrize("k", [1, 2, 5, 16])
@pytest.mark.parametrize("mutant", [None, "add-cap", "mul-cap"])
def test_single_table_kernels_agree(k, mutant):
    add_t, mul_t = tables(k, mutant)
    for t in (add_t, mul_t):
        for jit_fn, np_fn in PAIR_KERNELS:
            assert int(jit_fn(t)) == int(np_fn(t))


@needs_numba
@pytest.mark.parametrize("k", [1, 2, 5, 16])
@pytest.mark.parametrize("mutant", [None, "add-cap", "mul-cap"])
def test_two_table_kernels_agree(k, mutant):
    add_t, mul_t = tables(k, mutant)
    assert int(kernels._distrib_break_jit(add_t, mul_t)) == int(
        kernels._distrib_break_np(add_t, mul_t)
    )
    for e in (0, 1):
        assert int(kernels._identity_break_jit(add_t, e)) == int(
            kernels._identity_break_np(add_t, e)
        )
        assert int(kernels._absorb_break_jit(mul_t, e)) == int(
            kernels._absorb_break_np(mul_t, e)
        )


@needs_numba
@pytest.mark.parametrize("k", [1, 2, 4, 8])
@pytest.mark.parametrize("mutant", [None, "mul-cap"])
def test_ideal_mask_backends_agree(k, mutant):
    add_t, mul_t = tables(k, mutant)
    jit_masks = np.asarray(kernels._ideal_masks_jit(add_t, mul_t))
    np_masks = kernels._ideal_masks_np(add_t, mul_t)
    assert jit_masks.tolist() == np_masks.tolist()


def brute_force_ideal_masks(k):
    """Independent oracle: test closure directly on raw element subsets."""
    from indigo.core import ZERO, SemiringCtx

    ctx = SemiringCtx(k)
    elems = ctx.elements()
    out = []
    n = len(elems)
    for bits in range(1 << n):
        subset = {elems[i] for i in range(n) if bits >> i & 1}
        if ZERO not in subset:
            continue
        closed = all(ctx.add(a, b) in subset for a in subset for b in subset)
        absorbing = all(ctx.mul(s, a) in subset for s in elems for a in subset)
        if closed and absorbing:
            out.append(bits)
    return out


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_ideal_masks_match_brute_force(k):
    add_t, mul_t = tables(k)
    got = sorted(int(m) for m in kernels.all_ideal_masks(add_t, mul_t))
    assert got == brute_force_ideal_masks(k)


def test_first_counterexample_is_lexicographic():
    # two commutativity breaks; the scan must report (1, 2), not (2, 1) or (2, 2)
    t = np.array([[0, 1, 2], [1, 2, 9], [2, 0, 7]], dtype=np.int16)
    assert kernels._commut_break_np(t) == 1 * 3 + 2
    if kernels.HAS_NUMBA:
        assert int(kernels._commut_break_jit(t)) == 1 * 3 + 2


def test_decode_helper():
    assert kernels._decode(-1, 5, 3) is None
    assert kernels._decode((1 * 5 + 2) * 5 + 3, 5, 3) == (1, 2, 3)
    assert kernels._decode(7, 10, 2) == (0, 7)


def test_public_wrappers_on_clean_tables():
    add_t, mul_t = tables(3)
    assert kernels.first_commutativity_break(add_t) is None
    assert kernels.first_associativity_break(mul_t) is None
    assert kernels.first_distributivity_break(add_t, mul_t) is None
    assert kernels.first_identity_break(mul_t, 1) is None
    assert kernels.first_absorption_break(mul_t, 0) is None
    assert kernels.first_zero_divisor(mul_t) is None
    assert kernels.first_zero_sum(add_t) is None
    assert kernels.first_monotonicity_break(add_t) is None


def test_public_wrappers_report_breaks():
    add_t, mul_t = tables(4, mutant="add-cap")
    ce = kernels.first_distributivity_break(add_t, mul_t)
    assert ce is not None and len(ce) == 3
