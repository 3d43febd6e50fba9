import numpy as np
import pytest

from mrawave import daubechies4, haar, make_scaling_filter


def random_unitary(rng, real=False):
    z = rng.standard_normal((2, 2))
    if not real:
        z = z + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_qmf(rng, stages=2, real=False, offset=0):
    """Random orthonormal scaling filter of length 2*(stages+1) from a lattice.

    The polyphase matrix ``V_K L(z) ... L(z) V_0`` with ``L(z) = diag(1, 1/z)``
    is paraunitary, so its first row gives an orthonormal filter; ``V_0`` is
    picked so that the row sums to ``(1, 1)/sqrt 2`` at z = 1.
    """
    vs = [random_unitary(rng, real) for _ in range(stages)]
    tail = np.eye(2)
    for v in vs:
        tail = v @ tail
    q = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    v0 = np.linalg.solve(tail, q)
    poly = np.zeros((2, 2, stages + 1), dtype=complex)
    poly[:, :, 0] = v0
    for v in vs:
        # L(z): the second row picks up a delay
        poly[1] = np.roll(poly[1], 1, axis=-1)
        poly = np.einsum("ij,jkd->ikd", v, poly)
    h = np.empty(2 * (stages + 1), dtype=complex)
    h[0::2], h[1::2] = poly[0, 0], poly[0, 1]
    if real:
        h = h.real
    return make_scaling_filter(offset, h, norm_tol=1e-9)


@pytest.fixture(scope="session")
def haar_filter():
    return haar()


@pytest.fixture(scope="session")
def d4_filter():
    return daubechies4()
