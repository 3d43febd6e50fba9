import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mrawave import (Decomposition, LengthMismatch, MalformedDecomposition, OddLength,
                     TooManyLevels, TrigPolynomial, analyze, analyze_once, derive_wavelet,
                     modulate, synthesize, synthesize_once)

from conftest import random_qmf
from oracles import naive_dwt_step

R2 = np.sqrt(2)


@pytest.fixture(scope="module")
def haar_sys(haar_filter):
    return derive_wavelet(haar_filter, normalize_support=True)


@pytest.fixture(scope="module")
def d4_sys(d4_filter):
    return derive_wavelet(d4_filter, normalize_support=True)


# -- single level -------------------------------------------------------------

def test_constant_has_no_detail(haar_sys):
    a, d = analyze_once([1, 1, 1, 1], haar_sys)
    np.testing.assert_allclose(a, [R2, R2], atol=1e-15)
    np.testing.assert_allclose(d, [0, 0], atol=1e-15)


def test_step_signal(haar_sys):
    a, d = analyze_once([1, 1, -1, -1], haar_sys)
    np.testing.assert_allclose(a, [R2, -R2], atol=1e-15)
    np.testing.assert_allclose(d, [0, 0], atol=1e-15)


def test_impulse(haar_sys):
    a, d = analyze_once([1, 0, 0, 0], haar_sys)
    np.testing.assert_allclose(a, [1 / R2, 0], atol=1e-15)
    np.testing.assert_allclose(d, [1 / R2, 0], atol=1e-15)


def test_odd_length(haar_sys):
    with pytest.raises(OddLength):
        analyze_once([1, 2, 3], haar_sys)
    with pytest.raises(OddLength):
        analyze_once([1], haar_sys)


def test_synthesize_constant(haar_sys):
    np.testing.assert_allclose(synthesize_once([R2, R2], [0, 0], haar_sys), [1, 1, 1, 1],
                               atol=1e-15)


def test_synthesize_detail_footprint(haar_sys):
    np.testing.assert_allclose(synthesize_once([0, 0], [1, 0], haar_sys),
                               [1 / R2, -1 / R2, 0, 0], atol=1e-15)


def test_synthesize_length_mismatch(haar_sys):
    with pytest.raises(LengthMismatch):
        synthesize_once([1, 2], [1], haar_sys)


def test_wavelet_footprint_has_no_approx(d4_sys):
    s = synthesize_once(np.zeros(8), np.eye(8)[2], d4_sys)
    a, d = analyze_once(s, d4_sys)
    assert np.max(np.abs(a)) < 1e-15
    np.testing.assert_allclose(d, np.eye(8)[2], atol=1e-15)


@settings(max_examples=40)
@given(st.integers(0, 2**32 - 1), st.integers(0, 3), st.integers(1, 6), st.integers(-5, 5))
def test_analyze_once_matches_naive_loop(seed, stages, log_n, offset):
    rng = np.random.default_rng(seed)
    system = derive_wavelet(random_qmf(rng, stages, offset=offset))
    s = rng.standard_normal(2**log_n) + 1j * rng.standard_normal(2**log_n)
    a, d = analyze_once(s, system)
    f, w = system.scaling_filter, system.wavelet_filter
    ea, ed = naive_dwt_step(s, f.offset, f.coeffs, w.offset, w.coeffs)
    np.testing.assert_allclose(a, ea, atol=1e-13)
    np.testing.assert_allclose(d, ed, atol=1e-13)


def test_real_in_real_out(d4_sys):
    s = np.random.default_rng(1).standard_normal(16)
    a, d = analyze_once(s, d4_sys)
    assert not np.iscomplexobj(a) and not np.iscomplexobj(d)
    assert not np.iscomplexobj(synthesize_once(a, d, d4_sys))


# -- multilevel ---------------------------------------------------------------

def test_constant_three_levels(haar_sys):
    dec = analyze(np.full(8, 3.0), haar_sys, 3)
    np.testing.assert_allclose(dec.approx, [3.0 * 2**1.5], atol=1e-14)
    assert [len(d) for d in dec.details] == [1, 2, 4]
    for d in dec.details:
        np.testing.assert_allclose(d, 0, atol=1e-14)


def test_step_two_levels(haar_sys):
    dec = analyze([1, 1, -1, -1], haar_sys, 2)
    np.testing.assert_allclose(dec.approx, [0], atol=1e-15)
    np.testing.assert_allclose(dec.details[0], [2], atol=1e-15)
    np.testing.assert_allclose(dec.details[1], [0, 0], atol=1e-15)
    np.testing.assert_allclose(synthesize(dec, haar_sys), [1, 1, -1, -1], atol=1e-12)


def test_too_many_levels(haar_sys):
    with pytest.raises(TooManyLevels):
        analyze(np.ones(6), haar_sys, 2)
    with pytest.raises(TooManyLevels):
        analyze(np.ones(4), haar_sys, 3)
    with pytest.raises(TooManyLevels):
        analyze(np.ones(6), haar_sys, 1)


def test_zero_decomposition(d4_sys):
    dec = Decomposition(np.zeros(2), [np.zeros(2), np.zeros(4)], 2)
    np.testing.assert_array_equal(synthesize(dec, d4_sys), np.zeros(8))


def test_malformed_decomposition(d4_sys):
    with pytest.raises(MalformedDecomposition):
        synthesize(Decomposition(np.zeros(2), [np.zeros(2)], 2), d4_sys)
    with pytest.raises(MalformedDecomposition):
        synthesize(Decomposition(np.zeros(2), [np.zeros(2), np.zeros(3)], 2), d4_sys)


def test_d4_roundtrip_1024(d4_sys):
    s = np.random.default_rng(2024).standard_normal(1024)
    dec = analyze(s, d4_sys, 5)
    assert np.max(np.abs(synthesize(dec, d4_sys) - s)) < 1e-10
    assert sum(dec.energies()) == pytest.approx(np.sum(s**2), rel=1e-12)


def test_batched_rows_match_single(d4_sys):
    rng = np.random.default_rng(5)
    batch = rng.standard_normal((4, 32)) + 1j * rng.standard_normal((4, 32))
    dec = analyze(batch, d4_sys, 3)
    for i in range(4):
        single = analyze(batch[i], d4_sys, 3)
        np.testing.assert_allclose(dec.approx[i], single.approx, atol=1e-15)
        for a, b in zip(dec.details, single.details):
            np.testing.assert_allclose(a[i], b, atol=1e-15)


@settings(max_examples=60)
@given(st.integers(0, 2**32 - 1), st.integers(0, 3), st.booleans(),
       st.integers(1, 10), st.data())
def test_perfect_reconstruction_and_energy(seed, stages, real, log_n, data):
    rng = np.random.default_rng(seed)
    system = derive_wavelet(random_qmf(rng, stages, real=real), normalize_support=True)
    levels = data.draw(st.integers(1, log_n))
    n = 2**log_n
    s = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    # energy at every split
    a = s
    for _ in range(levels):
        prev = np.sum(np.abs(a) ** 2)
        a, d = analyze_once(a, system)
        assert abs(np.sum(np.abs(a) ** 2) + np.sum(np.abs(d) ** 2) - prev) <= 1e-10 * max(prev, 1)
    dec = analyze(s, system, levels)
    assert np.max(np.abs(synthesize(dec, system) - s)) < 1e-10


@settings(max_examples=30)
@given(st.integers(0, 2**32 - 1), st.integers(-4, 4), st.integers(3, 8))
def test_modulation_shifts_detail_bands(seed, shift, log_n):
    # nu = exp(-2 pi i M xi) moves beta by 2M, so d'[k] = d[k + M] (cyclically)
    rng = np.random.default_rng(seed)
    system = derive_wavelet(random_qmf(rng, 2), normalize_support=True)
    moved = modulate(system, TrigPolynomial.monomial(1.0, shift))
    s = rng.standard_normal(2**log_n)
    a, d = analyze_once(s, system)
    a2, d2 = analyze_once(s, moved)
    np.testing.assert_allclose(a2, a, atol=1e-14)
    np.testing.assert_allclose(d2, np.roll(d, -shift), atol=1e-13)
    levels = log_n
    e1, e2 = analyze(s, system, levels).energies(), analyze(s, moved, levels).energies()
    np.testing.assert_allclose(e1, e2, rtol=1e-10, atol=1e-12)


def test_decomposition_dict_roundtrip(d4_sys):
    s = np.random.default_rng(9).standard_normal(16)
    dec = analyze(s, d4_sys, 2)
    back = Decomposition.from_dict(dec.to_dict())
    assert back.levels == 2 and back.system_id == d4_sys.system_id
    np.testing.assert_array_equal(back.approx, dec.approx)
