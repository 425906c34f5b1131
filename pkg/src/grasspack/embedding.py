"""Isometric embedding of projections onto the unit sphere in the space of
traceless Hermitian (or symmetric) matrices.

A rank-l projection P maps to P - (l/m) I, which lies on a sphere of squared
radius l(m-l)/m; dividing by that radius and reading coordinates in a fixed
orthonormal traceless basis yields a unit vector in R^d with
d = m(m+1)/2 - 1 over R and d = m^2 - 1 over C. The inner product of two
embedded vectors is recoverable from traces alone:

    <v_P, v_Q> = sqrt(m^2 / (lp lq (m-lp)(m-lq))) (tr(PQ) - lp lq / m)

which this module exposes both ways (trace formula and explicit coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRankError, DimensionMismatchError, ParameterError
from .numerics import (COMPLEX, DEFAULT_TOL, REAL, Field, Tolerance, check_field,
                       is_projection, lock)


def embedding_dim(m: int, field: Field) -> int:
    """Dimension of the traceless Hermitian/symmetric matrix space over F^m."""
    check_field(field)
    if m < 2:
        raise ParameterError(f"ambient dimension must be >= 2, got {m}")
    return m * (m + 1) // 2 - 1 if field == REAL else m * m - 1


@dataclass(frozen=True)
class EmbeddingSpace:
    """A fixed orthonormal basis of the traceless Hermitian m x m matrices.

    Ordering: symmetric pair matrices (E_jk + E_kj)/sqrt(2) for j < k in
    lexicographic order, then (complex only) the antisymmetric pairs
    (-i E_jk + i E_kj)/sqrt(2), then the diagonal matrices
    diag(1,...,1,-h,0,...,0)/sqrt(h(h+1)) for h = 1..m-1.
    """

    m: int
    field: Field
    d: int
    basis: np.ndarray  # shape (d, m, m)


def build_space(m: int, field: Field) -> EmbeddingSpace:
    d = embedding_dim(m, field)
    mats = np.zeros((d, m, m), dtype=np.complex128)
    idx = 0
    s = 1.0 / np.sqrt(2.0)
    for j in range(m):
        for k in range(j + 1, m):
            mats[idx, j, k] = s
            mats[idx, k, j] = s
            idx += 1
    if field == COMPLEX:
        for j in range(m):
            for k in range(j + 1, m):
                mats[idx, j, k] = -1j * s
                mats[idx, k, j] = 1j * s
                idx += 1
    for h in range(1, m):
        mats[idx, range(h), range(h)] = 1.0 / np.sqrt(h * (h + 1))
        mats[idx, h, h] = -h / np.sqrt(h * (h + 1))
        idx += 1
    assert idx == d
    return EmbeddingSpace(m, field, d, lock(mats))


@dataclass(frozen=True)
class EmbeddedVector:
    coords: np.ndarray
    source_rank: int
    source_index: int | None = None


def sphere_radius_sq(m: int, rank: int) -> float:
    """Squared radius l(m-l)/m of the traceless image of rank-l projections."""
    return rank * (m - rank) / m


def _checked_rank(p: np.ndarray, m: int, tol: Tolerance) -> int:
    check = is_projection(p, tol)
    if not check.ok:
        raise ParameterError(f"not a projection: {check.failure}")
    if check.rank in (0, m):
        raise DegenerateRankError(
            f"rank-{check.rank} projection in dimension {m} has no sphere image")
    return check.rank


def embed(p, space: EmbeddingSpace, source_index: int | None = None,
          tol: Tolerance = DEFAULT_TOL) -> EmbeddedVector:
    """Unit vector in R^d representing the projection ``p``.

    Subtracts (l/m) I, divides by the sphere radius, and takes coordinates in
    the space's basis. Rank 0 and rank m are rejected (zero radius).
    """
    p = np.asarray(p, dtype=np.complex128)
    m = space.m
    if p.shape != (m, m):
        raise DimensionMismatchError(f"expected {m}x{m}, got {p.shape}")
    if space.field == REAL and np.any(p.imag != 0.0):
        raise ParameterError("cannot embed a non-real projection in a real space")
    rank = _checked_rank(p, m, tol)
    traceless = p - (rank / m) * np.eye(m)
    radius = np.sqrt(sphere_radius_sq(m, rank))
    coords = np.einsum("ij,kij->k", traceless, space.basis.conj()).real / radius
    return EmbeddedVector(lock(coords), rank, source_index)


def embedded_inner(p, q, space: EmbeddingSpace, tol: Tolerance = DEFAULT_TOL) -> float:
    """Inner product of the embedded vectors of ``p`` and ``q``, computed from
    traces (not coordinates): the mixed-rank trace identity in the module
    docstring."""
    p = np.asarray(p, dtype=np.complex128)
    q = np.asarray(q, dtype=np.complex128)
    m = space.m
    if p.shape != (m, m) or q.shape != (m, m):
        raise DimensionMismatchError(f"expected {m}x{m} matrices")
    lp = _checked_rank(p, m, tol)
    lq = _checked_rank(q, m, tol)
    tr_pq = float(np.sum(p * q.conj()).real)  # = tr(PQ) for Hermitian inputs
    scale = np.sqrt(m * m / (lp * lq * (m - lp) * (m - lq)))
    return float(scale * (tr_pq - lp * lq / m))


def check_image_disjointness(p, q, space: EmbeddingSpace,
                             tol: Tolerance = DEFAULT_TOL) -> bool:
    """Assert-style check that projections of distinct ranks embed to distinct
    points; always expected true."""
    vp = embed(p, space, tol=tol)
    vq = embed(q, space, tol=tol)
    if vp.source_rank == vq.source_rank:
        raise ParameterError("ranks must differ for the disjointness check")
    return float(np.linalg.norm(vp.coords - vq.coords)) > tol.eps_abs


def embedded_code_to_json(space: EmbeddingSpace, vectors) -> dict:
    return {
        "d": space.d,
        "vectors": [
            {"coords": [float(x) for x in v.coords], "rank": v.source_rank}
            for v in vectors
        ],
    }
