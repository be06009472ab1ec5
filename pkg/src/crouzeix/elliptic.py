"""Elliptic special functions: complete integrals, Jacobi theta and sn,
nome/modulus conversions, and the half-nome identity used by the 3x3 family.

Conventions
-----------
The nome is real, q = exp(-pi*K'/K) in (0,1), and the modulus is recovered
from theta constants as k = (theta2/theta3)^2.  The complementary modulus is
always computed directly as k' = (theta4/theta3)^2 rather than via
sqrt(1-k^2): for q >= 0.3 the modulus is within 1e-10 of 1 and the
subtraction would destroy it.  Downstream formulas take k' from here for the
same reason.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, NumericalFailureError, PoleError

#: theta q-series: stop once the next term falls below this fraction of the sum.
_SERIES_RTOL = 1e-16
#: theta q-series hard cap on the number of terms.
_SERIES_MAX_TERMS = 200
#: nome ceiling; beyond it the capped series is no longer trustworthy.
_Q_MAX = 1.0 - 1e-6


@dataclass(frozen=True)
class EllipticParams:
    """Modulus/nome bundle: k, k', q and the quarter periods K(k), K(k')."""

    k: float
    kprime: float
    q: float
    big_k: float
    big_kprime: float


def _check_nome(q: float) -> float:
    q = float(q)
    if not 0.0 < q < _Q_MAX:
        raise DomainError(f"nome q={q!r} outside (0, {_Q_MAX})")
    return q


def theta_2(q: float) -> float:
    """theta_2(q) = 2 q^(1/4) * sum_{n>=0} q^(n(n+1))."""
    q = _check_nome(q)
    terms = []
    for n in range(_SERIES_MAX_TERMS):
        t = q ** (n * (n + 1))
        terms.append(t)
        if t < _SERIES_RTOL * terms[0]:
            break
    return 2.0 * q**0.25 * math.fsum(terms)

def theta_3(q: float) -> float:
    """theta_3(q) = 1 + 2 * sum_{n>=1} q^(n^2)."""
    q = _check_nome(q)
    terms = [1.0]
    for n in range(1, _SERIES_MAX_TERMS):
        t = 2.0 * q ** (n * n)
        terms.append(t)
        if t < _SERIES_RTOL:
            break
    return math.fsum(terms)

def theta_4(q: float) -> float:
    """theta_4(q) = 1 + 2 * sum_{n>=1} (-1)^n q^(n^2)."""
    q = _check_nome(q)
    terms = [1.0]
    for n in range(1, _SERIES_MAX_TERMS):
        t = 2.0 * (-1) ** n * q ** (n * n)
        terms.append(t)
        if abs(t) < _SERIES_RTOL:
            break
    return math.fsum(terms)


def _agm(a: float, b: float) -> float:
    # quadratic convergence; the tolerance sits just above 1 ulp so the
    # loop always terminates.
    for _ in range(64):
        if abs(a - b) <= 4e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def agm_K(k: float) -> float:
    """Complete elliptic integral K(k) by the arithmetic-geometric mean."""
    k = float(k)
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus k={k!r} outside [0, 1)")
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    return math.pi / (2.0 * _agm(1.0, kp))


def _agm_K_from_complement(kp: float) -> float:
    # K(k) given the complementary modulus k' directly; avoids forming 1-k^2.
    if kp <= 0.0:
        raise DomainError("complementary modulus must be positive")
    return math.pi / (2.0 * _agm(1.0, kp))


def modulus_from_nome(q: float) -> EllipticParams:
    """Modulus, complementary modulus and quarter periods for a real nome."""
    q = _check_nome(q)
    t2, t3, t4 = theta_2(q), theta_3(q), theta_4(q)
    k = (t2 / t3) ** 2
    kp = (t4 / t3) ** 2
    one_minus = math.nextafter(1.0, 0.0)
    k = min(max(k, math.nextafter(0.0, 1.0)), one_minus)
    kp = min(max(kp, math.nextafter(0.0, 1.0)), one_minus)
    big_k = _agm_K_from_complement(kp)
    big_kprime = _agm_K_from_complement(k)
    return EllipticParams(k=k, kprime=kp, q=q, big_k=big_k, big_kprime=big_kprime)


def jacobi_sn(u: complex, k: float) -> complex:
    """Jacobi sn(u, k) for complex u in the fundamental strip |Im u| < K'.

    Evaluated by the descending Landen transformation: the modulus chain
    k -> k1 -> ... drops quadratically to ~1e-10, the degenerate limit is
    sin with its O(k^2) correction, and the chain is unwound through
    sn(u,k) = (1+k1) s / (1 + k1 s^2).
    """
    k = float(k)
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus k={k!r} outside [0, 1)")
    u = complex(u)
    if k > 0.0:
        big_k = agm_K(k)
        big_kp = _agm_K_from_complement(k)
        if abs(u.imag) >= big_kp:
            raise DomainError(
                f"Im u = {u.imag!r} outside the fundamental strip |Im u| < {big_kp!r}"
            )
        # poles sit at 2m*K + (2n+1)i*K'; inside the strip only the rows
        # directly above/below matter.
        re_mod = u.real - 2.0 * big_k * round(u.real / (2.0 * big_k))
        pole_dist = math.hypot(re_mod, abs(u.imag) - big_kp)
        if pole_dist < 1e-8:
            raise PoleError(f"sn argument within {pole_dist:.2e} of a pole")
    if k < 1e-12:
        return cmath.sin(u)
    chain: list[float] = []
    kk = k
    while kk > 1e-10:
        kp = math.sqrt((1.0 - kk) * (1.0 + kk))
        kk = (1.0 - kp) / (1.0 + kp)
        chain.append(kk)
        if len(chain) >= 40:  # pragma: no cover - chain shrinks quadratically
            raise NumericalFailureError("Landen chain failed to contract")
    for kk in chain:
        u = u / (1.0 + kk)
    w = cmath.sin(u)
    k_last = chain[-1] if chain else 0.0
    if k_last > 0.0:
        w = w - (k_last * k_last / 4.0) * (u - cmath.sin(u) * cmath.cos(u)) * cmath.cos(u)
    for kk in reversed(chain):
        w = (1.0 + kk) * w / (1.0 + kk * w * w)
    return w


def half_nome_identity_residual(q: float) -> float:
    """|sqrt(k(q^2)) - k(q)/(1 + k'(q))| -- the half-nome modulus identity.

    The right-hand side is k(q)/(1+sqrt(1-k(q)^2)) with the complement taken
    from theta constants.  See half_nome_theta_residual for the equivalent
    identity between theta constants at q and q^2.
    """
    q = float(q)
    if not 0.0 < q < 1.0 - 1e-3:
        raise DomainError(f"q={q!r} outside (0, {1.0 - 1e-3})")
    p = modulus_from_nome(q)
    p2 = modulus_from_nome(q * q)
    return abs(math.sqrt(p2.k) - p.k / (1.0 + p.kprime))


def half_nome_theta_residual(q: float) -> float:
    """|theta2(q^2)(theta3(q)^2 + theta4(q)^2) - theta2(q)^2 theta3(q^2)|."""
    q = float(q)
    if not 0.0 < q < 1.0 - 1e-3:
        raise DomainError(f"q={q!r} outside (0, {1.0 - 1e-3})")
    lhs = theta_2(q * q) * (theta_3(q) ** 2 + theta_4(q) ** 2)
    rhs = theta_2(q) ** 2 * theta_3(q * q)
    return abs(lhs - rhs)


#: iteration cap for the eccentricity series; only reachable for
#: eccentricities within ~3e-11 of 1, which callers should treat as 1.
_BOUND_MAX_TERMS = 5_000_000


def crouzeix_2x2_bound(epsilon: float) -> float:
    """Largest ratio ||f(A)||/max|f| over an elliptic numerical range with
    eccentricity epsilon, for 2x2 matrices.

    Computed as 2*exp(-sum_{n>=1} ((-1)^(n+1)/n) * 2/(1+R^n)) where
    R = rho^4 and rho = (1+sqrt(1-eps^2))/eps is the half-axis sum of the
    ellipse normalized to foci +-1.  (R equals the reciprocal nome of the
    ellipse; with R in place of rho the series reproduces sqrt(k(b^2)/b)
    exactly.)  Value decreases from 2 (disk) to 1 (segment).
    """
    eps = float(epsilon)
    if not 0.0 < eps <= 1.0:
        raise DomainError(f"eccentricity {eps!r} outside (0, 1]")
    if eps == 1.0:
        return 1.0
    rho = (1.0 + math.sqrt((1.0 - eps) * (1.0 + eps))) / eps
    log_r = 4.0 * math.log(rho)
    total = 0.0
    sign = 1.0
    for n in range(1, _BOUND_MAX_TERMS):
        e = n * log_r
        if e > 42.0:
            break  # remaining terms are below 1e-17
        term = (sign / n) * 2.0 / (1.0 + math.exp(e))
        total += term
        if abs(term) < 1e-16:
            break
        sign = -sign
    else:  # pragma: no cover - requires eps within ~3e-11 of 1
        raise NumericalFailureError("eccentricity too close to 1 for the series")
    return 2.0 * math.exp(-total)
