import numpy as np
import pytest


def random_orthonormal(rng, m, k, field="C"):
    """k orthonormal columns in F^m via QR of a random Gaussian matrix."""
    if field == "C":
        a = rng.standard_normal((m, k)) + 1j * rng.standard_normal((m, k))
    else:
        a = rng.standard_normal((m, k)).astype(complex)
    q, r = np.linalg.qr(a)
    # fix phases so the factorization is unambiguous
    q = q * np.where(np.diagonal(r) == 0, 1.0, np.sign(np.diagonal(r).real + 1e-300))
    return q


def random_projection(rng, m, rank, field="C"):
    v = random_orthonormal(rng, m, rank, field)
    p = v @ v.conj().T
    if field == "R":
        p = p.real.astype(complex)
    return p


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
