"""Dense complex linear algebra for small matrices (dimension <= 16).

Thin, validated layer over LAPACK via numpy: spectral norm, SVD with a
deterministic phase convention, general eigendecomposition with a condition
estimate, and linear solves with a singularity guard.  All functions are pure
and safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InvalidInputError, NumericalFailureError, SingularMatrixError

MAX_DIM = 16

#: Condition-number ceiling beyond which solve() refuses to proceed.
SOLVE_COND_LIMIT = 1e12

#: Eigenvector condition number above which a matrix is flagged as
#: defective to working precision.
DEFECTIVE_COND = 1e10


class SingularTriplet(NamedTuple):
    sigma: float
    u: np.ndarray
    v: np.ndarray


@dataclass(frozen=True)
class EigenResult:
    values: np.ndarray
    vectors: np.ndarray
    cond: float
    defective: bool

    @property
    def spectral_radius(self) -> float:
        return float(np.max(np.abs(self.values)))


def as_matrix(M, name: str = "matrix") -> np.ndarray:
    """Validate and return a square complex matrix of dimension 1..16."""
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InvalidInputError(f"{name}: expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    if not 1 <= n <= MAX_DIM:
        raise InvalidInputError(f"{name}: dimension {n} outside 1..{MAX_DIM}")
    if not np.all(np.isfinite(A.view(float))):
        raise InvalidInputError(f"{name}: non-finite entries")
    return A


def norm2(M) -> float:
    """Spectral norm (largest singular value)."""
    A = as_matrix(M)
    if A.shape[0] == 1:
        return abs(complex(A[0, 0]))
    return float(np.linalg.svd(A, compute_uv=False)[0])


def svd(M) -> list[SingularTriplet]:
    """Full SVD as triplets sorted by descending sigma.

    The phase ambiguity is removed by rotating each (u, v) pair so that the
    largest-magnitude component of v is real and positive; reruns are
    bit-stable.
    """
    A = as_matrix(M)
    U, S, Vh = np.linalg.svd(A)
    out = []
    for i, sigma in enumerate(S):
        u = U[:, i].copy()
        v = Vh[i, :].conj().copy()
        j = int(np.argmax(np.abs(v)))
        if abs(v[j]) > 0:
            ph = v[j] / abs(v[j])
            v /= ph
            u /= ph
        out.append(SingularTriplet(float(sigma), u, v))
    return out


def eig_general(M) -> EigenResult:
    """Eigenvalues and right eigenvectors with a condition estimate of X.

    The defective flag is set when cond(X) exceeds DEFECTIVE_COND, meaning
    spectral function evaluation through X should not be trusted.
    """
    A = as_matrix(M)
    try:
        vals, X = np.linalg.eig(A)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK rarely fails here
        raise NumericalFailureError(f"eigendecomposition failed: {exc}; matrix={A!r}") from exc
    sv = np.linalg.svd(X, compute_uv=False)
    cond = float(sv[0] / sv[-1]) if sv[-1] > 0 else float("inf")
    return EigenResult(values=vals, vectors=X, cond=cond, defective=bool(cond > DEFECTIVE_COND))


def solve(M, RHS) -> np.ndarray:
    """Solve M X = RHS for X; refuses matrices with cond >= 1e12."""
    A = as_matrix(M, "lhs")
    B = np.asarray(RHS, dtype=complex)
    if B.shape[0] != A.shape[0]:
        raise InvalidInputError(f"rhs: leading dimension {B.shape[0]} != {A.shape[0]}")
    if not np.all(np.isfinite(B.view(float))):
        raise InvalidInputError("rhs: non-finite entries")
    sv = np.linalg.svd(A, compute_uv=False)
    if sv[-1] == 0 or sv[0] / sv[-1] >= SOLVE_COND_LIMIT:
        raise SingularMatrixError(
            f"matrix singular to tolerance (cond >= {SOLVE_COND_LIMIT:g})"
        )
    return np.linalg.solve(A, B)
