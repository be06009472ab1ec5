"""Numerical range boundary computation, disk/ellipse recognition, and the
translation/rotation/unitary normal form for 2x2 matrices."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateGeometryError,
    InvalidInputError,
    NotAnEllipseError,
    TrivialCaseError,
)
from .matcore import as_matrix

#: eccentricity below which an ellipse is treated as a disk
DISK_ECC_TOL = 1e-10
#: minor semi-axis below which the range is treated as a segment
SEGMENT_TOL = 1e-10
#: default number of support angles for the boundary sweep
DEFAULT_SAMPLES = 256


@dataclass(frozen=True)
class EllipseGeometry:
    """Ellipse in the plane; rho is the semi-axis sum after the foci are
    scaled to +-1 (infinite for a disk, 1 for a segment)."""

    center: complex
    rotation: float
    semi_major: float
    semi_minor: float
    eccentricity: float
    rho: float

    @property
    def is_disk(self) -> bool:
        return self.eccentricity < DISK_ECC_TOL

    @property
    def is_segment(self) -> bool:
        return self.semi_minor < SEGMENT_TOL

    @property
    def focal_distance(self) -> float:
        return self.eccentricity * self.semi_major


@dataclass(frozen=True)
class BoundaryCurve:
    points: np.ndarray  # complex boundary samples
    angles: np.ndarray  # support angles theta, same length


@dataclass(frozen=True)
class Transform2x2:
    """Record of A = shift*I + exp(i*rotation) * U C U^*  (C transposed first
    when `transposed` is set)."""

    shift: complex
    rotation: float
    unitary: np.ndarray
    transposed: bool

    def reconstruct(self, canonical: np.ndarray) -> np.ndarray:
        C = canonical.T if self.transposed else canonical
        U = self.unitary
        return self.shift * np.eye(2) + cmath.exp(1j * self.rotation) * (U @ C @ U.conj().T)


def boundary(A, samples: int = DEFAULT_SAMPLES) -> BoundaryCurve:
    """Boundary samples of the numerical range by the support-angle sweep.

    For each angle theta the top eigenvector q of the Hermitian part of
    exp(i*theta)*A gives the boundary point q* A q.
    """
    A = as_matrix(A)
    if samples < 8:
        raise InvalidInputError(f"samples={samples} below minimum of 8")
    thetas = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    pts = np.empty(samples, dtype=complex)
    for i, th in enumerate(thetas):
        R = cmath.exp(1j * th) * A
        H = 0.5 * (R + R.conj().T)
        w, V = np.linalg.eigh(H)
        q = V[:, -1]
        pts[i] = complex(q.conj() @ A @ q)
    return BoundaryCurve(points=pts, angles=thetas)


def _ellipse_from_axes(center, rotation, a, b) -> EllipseGeometry:
    a, b = float(a), float(b)
    if b > a:
        a, b = b, a
        rotation += 0.5 * math.pi
    rotation = math.atan2(math.sin(rotation), math.cos(rotation))  # wrap
    ecc = math.sqrt(max(a * a - b * b, 0.0)) / a if a > 0 else 0.0
    if ecc < DISK_ECC_TOL:
        rho = math.inf
    else:
        rho = (a + b) / math.sqrt(max(a * a - b * b, 0.0))
    return EllipseGeometry(
        center=complex(center),
        rotation=rotation,
        semi_major=a,
        semi_minor=b,
        eccentricity=ecc,
        rho=rho,
    )


def fit_conic(curve: BoundaryCurve) -> EllipseGeometry:
    """Least-squares ellipse through boundary samples.

    Classifies the result as disk, proper ellipse, or segment; raises
    NotAnEllipseError when the max radial residual exceeds 1e-6 (the samples
    then do not come from an elliptic range).
    """
    pts = np.asarray(curve.points, dtype=complex)
    if pts.size < 32:
        raise InvalidInputError("need at least 32 boundary samples")
    x, y = pts.real, pts.imag
    cx, cy = x.mean(), y.mean()
    # segment: samples collinear to tolerance
    XY = np.column_stack([x - cx, y - cy])
    sv = np.linalg.svd(XY, compute_uv=False)
    scale = sv[0] / math.sqrt(len(pts))
    if sv[-1] < 1e-10 * max(sv[0], 1.0):
        direction = np.linalg.svd(XY)[2][0]
        t = XY @ direction
        return _ellipse_from_axes(
            complex(cx, cy) + 0j,
            math.atan2(direction[1], direction[0]),
            (t.max() - t.min()) / 2.0,
            0.0,
        )
    # general conic a x^2 + b xy + c y^2 + d x + e y + f = 0 via the null
    # vector of the design matrix (coordinates centered for conditioning)
    u, v = x - cx, y - cy
    D = np.column_stack([u * u, u * v, v * v, u, v, np.ones_like(u)])
    _, _, Vh = np.linalg.svd(D)
    a0, b0, c0, d0, e0, f0 = Vh[-1]
    disc = b0 * b0 - 4.0 * a0 * c0
    if disc >= 0:
        raise NotAnEllipseError("conic fit is not an ellipse (nonnegative discriminant)")
    # center of the conic in centered coordinates
    uc = (2.0 * c0 * d0 - b0 * e0) / disc
    vc = (2.0 * a0 * e0 - b0 * d0) / disc
    M = np.array([[a0, b0 / 2.0], [b0 / 2.0, c0]])
    const = a0 * uc * uc + b0 * uc * vc + c0 * vc * vc + d0 * uc + e0 * vc + f0
    w, Q = np.linalg.eigh(M / -const)
    if np.any(w <= 0):
        raise NotAnEllipseError("conic fit has non-positive axis weights")
    axes = 1.0 / np.sqrt(w)  # w ascending -> axes descending
    rotation = math.atan2(Q[1, 0], Q[0, 0])
    geom = _ellipse_from_axes(complex(cx + uc, cy + vc), rotation, axes[0], axes[1])
    # radial residual in the ellipse frame
    ph = np.exp(-1j * geom.rotation) * (pts - geom.center)
    ang = np.angle(ph)
    r_fit = (geom.semi_major * max(geom.semi_minor, 1e-300)) / np.sqrt(
        (max(geom.semi_minor, 1e-300) * np.cos(ang)) ** 2 + (geom.semi_major * np.sin(ang)) ** 2
    )
    resid = float(np.max(np.abs(np.abs(ph) - r_fit)))
    if resid > 1e-6 * max(1.0, scale):
        raise NotAnEllipseError(f"max radial residual {resid:.3e} exceeds 1e-6")
    return geom


def normalize_2x2(A) -> tuple[Transform2x2, np.ndarray]:
    """Reduce a 2x2 matrix to the canonical form [[0, a], [d, 0]], a >= d >= 0.

    Returns the transform record (translation, rotation, unitary, optional
    transpose) together with the canonical matrix; the record reconstructs
    the input to roundoff.
    """
    A = as_matrix(A)
    if A.shape[0] != 2:
        raise InvalidInputError("normalize_2x2 expects a 2x2 matrix")
    shift = complex(np.trace(A)) / 2.0
    A0 = A - shift * np.eye(2)
    nrm = float(np.linalg.norm(A0))
    if nrm <= 1e-14 * max(1.0, abs(shift)):
        raise TrivialCaseError("matrix is a scalar multiple of the identity")
    det0 = complex(np.linalg.det(A0))
    # rotate so the determinant is real and nonpositive; eigenvalues become +-mu
    theta = 0.5 * cmath.phase(-det0) if det0 != 0 else 0.0
    B = cmath.exp(-1j * theta) * A0
    mu = math.sqrt(abs(det0))
    # Schur basis [x1 x2] with B x1 = mu x1, upper-triangular form [[mu, w], [0, -mu]]
    _, _, Vh = np.linalg.svd(B - mu * np.eye(2))
    x1 = Vh[-1].conj()
    x2 = np.array([-np.conj(x1[1]), np.conj(x1[0])])
    w_val = complex(x1.conj() @ B @ x2)
    if abs(w_val) > 0:
        x2 = x2 * (abs(w_val) / w_val)
        w_val = abs(w_val)
    w_val = float(w_val.real if isinstance(w_val, complex) else w_val)
    # rotate within the basis to zero the diagonal: tan(2*gamma) = 2*mu/w
    gamma = 0.5 * math.atan2(2.0 * mu, w_val)
    v1 = math.cos(gamma) * x1 - math.sin(gamma) * x2
    v2 = math.sin(gamma) * x1 + math.cos(gamma) * x2
    U = np.column_stack([v1, v2])
    C = U.conj().T @ B @ U
    # clean the phases: make the larger off-diagonal entry real positive
    a_raw, d_raw = complex(C[0, 1]), complex(C[1, 0])
    if abs(a_raw) > 0:
        psi = -cmath.phase(a_raw)
        P = np.diag([1.0, cmath.exp(1j * psi)])
        U = U @ P
        C = P.conj().T @ C @ P
        a_raw, d_raw = complex(C[0, 1]), complex(C[1, 0])
    a_val = abs(a_raw)
    d_val = max(d_raw.real, 0.0)
    transposed = False
    if a_val < d_val:
        a_val, d_val = d_val, a_val
        transposed = True
    canonical = np.array([[0.0, a_val], [d_val, 0.0]], dtype=complex)
    record = Transform2x2(shift=shift, rotation=theta, unitary=U, transposed=transposed)
    return record, canonical


def nome_for_ellipse(g: EllipseGeometry) -> float:
    """Nome q = rho^-4 of a proper ellipse (foci scaled to +-1)."""
    if g.is_disk or g.is_segment or not math.isfinite(g.rho):
        raise DegenerateGeometryError("nome undefined for disk or segment geometry")
    return float(g.rho) ** -4
