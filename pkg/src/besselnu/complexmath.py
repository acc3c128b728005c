"""Complex powers and gamma-family functions.

Complex values are Python's built-in :class:`complex`.  The principal branch
``Arg z in (-pi, pi]`` is used throughout; a negative zero imaginary part is
normalised to ``+0.0`` so the negative real axis always has argument ``+pi``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import BesselDomainError, NonConvergenceError

__all__ = [
    "GammaParams",
    "c_pow_principal",
    "cospi",
    "digamma",
    "gamma",
    "gamma_reg_lower",
    "gamma_star",
    "gamma_upper_scaled",
    "lgamma",
    "principal_log",
    "rgamma",
    "sinpi",
]

EULER_GAMMA = 0.57721566490153286060651209008240243

gamma = math.gamma
lgamma = math.lgamma

# |z| - |Re z| above which the power series loses more than ~e^6 to cancellation
_SERIES_LOSS_LIMIT = 6.0
_CF_SWITCH = 25.0
_TINY = 1e-300

# B_2k / (2k) for the digamma asymptotic expansion, k = 1..7
_PSI_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


@dataclass(frozen=True)
class GammaParams:
    """Term caps and stopping tolerance for :func:`gamma_reg_lower`."""

    series_terms_max: int = 4000
    cf_terms_max: int = 4000
    tol: float = 1e-16

    def __post_init__(self):
        if self.tol <= 0:
            raise BesselDomainError("GammaParams.tol must be positive")
        if self.series_terms_max < 1 or self.cf_terms_max < 1:
            raise BesselDomainError("term caps must be positive")


_DEFAULT_PARAMS = GammaParams()


def _as_principal(z) -> complex:
    z = complex(z)
    if z.imag == 0.0:
        # drop a signed zero so the cut is approached from above
        z = complex(z.real, 0.0)
    return z


def principal_log(z) -> complex:
    """``ln|z| + i Arg z`` with ``Arg z in (-pi, pi]``."""
    z = _as_principal(z)
    if z == 0:
        raise BesselDomainError("logarithm of zero")
    return complex(math.log(abs(z)), cmath.phase(z))


def c_pow_principal(z, a: float) -> complex:
    """Principal-branch power ``z**a = exp(a (ln|z| + i Arg z))``.

    Integer exponents use exact repeated multiplication.  ``0**a`` is ``0``
    for ``a > 0`` and a domain error otherwise.
    """
    z = _as_principal(z)
    if z == 0:
        if a > 0:
            return 0j
        raise BesselDomainError(f"0 ** {a} is undefined")
    if float(a).is_integer() and abs(a) <= 64:
        return z ** int(a)
    return cmath.rect(abs(z) ** a, a * cmath.phase(z))


def sinpi(x: float) -> float:
    """``sin(pi x)``, exactly zero at integers."""
    r = math.fmod(x, 2.0)
    if r == math.floor(r):
        return 0.0
    if r == 0.5 or r == -1.5:
        return 1.0
    if r == -0.5 or r == 1.5:
        return -1.0
    return math.sin(math.pi * r)


def cospi(x: float) -> float:
    """``cos(pi x)``, exactly zero at half-integers."""
    r = math.fmod(abs(x), 2.0)
    if r == 0.5 or r == 1.5:
        return 0.0
    if r == 0.0:
        return 1.0
    if r == 1.0:
        return -1.0
    return math.cos(math.pi * r)


def rgamma(x: float) -> float:
    """Reciprocal gamma function, zero at the poles of Γ."""
    if x <= 0 and x == math.floor(x):
        return 0.0
    if x > 170.0:
        return math.exp(-math.lgamma(x))
    return 1.0 / math.gamma(x)


def digamma(x: float) -> float:
    """Digamma function ψ(x) for real ``x``.

    Shifts ``x`` above 10 with ψ(x+1) = ψ(x) + 1/x, then applies the
    asymptotic series.  Negative arguments use the reflection formula.

    Raises
    ------
    BesselDomainError
        At the poles ``x = 0, -1, -2, ...``.
    """
    if x <= 0 and x == math.floor(x):
        raise BesselDomainError(f"digamma has a pole at {x}")
    if x < 0:
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)
    shifts = []
    while x < 10.0:
        shifts.append(-1.0 / x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    power = inv2
    tail = []
    for c in _PSI_ASYMPTOTIC:
        tail.append(-c * power)
        power *= inv2
    return math.fsum([math.log(x), -0.5 / x, *tail, *shifts])


def _csum(terms_re: list, terms_im: list) -> complex:
    return complex(math.fsum(terms_re), math.fsum(terms_im))


def _series(a: float, z: complex, params: GammaParams) -> complex:
    # sum_k z^k / (a (a+1) ... (a+k)); use for Re z >= 0
    term = complex(1.0 / a)
    re, im = [term.real], [term.imag]
    acc = term
    for k in range(1, params.series_terms_max):
        term *= z / (a + k)
        re.append(term.real)
        im.append(term.imag)
        acc += term
        if k > abs(z) - a and abs(term) <= params.tol * abs(acc):
            return _csum(re, im)
    raise NonConvergenceError(f"P({a}, {z}): power series did not converge")


def _kummer(a: float, z: complex, params: GammaParams) -> complex:
    # sum_k (-z)^k / (k! (a+k)); use for Re z < 0
    w = -z
    coeff = 1.0 + 0j
    term = complex(1.0 / a)
    re, im = [term.real], [term.imag]
    acc = term
    for k in range(1, params.series_terms_max):
        coeff *= w / k
        term = coeff / (a + k)
        re.append(term.real)
        im.append(term.imag)
        acc += term
        if k > abs(z) and abs(term) <= params.tol * abs(acc):
            return _csum(re, im)
    raise NonConvergenceError(f"P({a}, {z}): Kummer series did not converge")


def _upper_cf(a: float, z: complex, params: GammaParams) -> complex:
    # modified Lentz for Γ(a,z) = e^{-z} z^a / (z+1-a- 1(1-a)/(z+3-a- ...))
    b = z + 1.0 - a
    c = complex(1.0 / _TINY)
    d = 1.0 / b
    h = d
    for i in range(1, params.cf_terms_max):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = complex(_TINY)
        c = b + an / c
        if abs(c) < _TINY:
            c = complex(_TINY)
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) <= params.tol:
            return h
    raise NonConvergenceError(f"P({a}, {z}): continued fraction did not converge")


def _regime(a: float, z: complex) -> str:
    r = abs(z)
    if z.real > 0 and r > a + _CF_SWITCH:
        return "cf"
    if r - abs(z.real) <= _SERIES_LOSS_LIMIT:
        return "series" if z.real >= 0 else "kummer"
    return "cf"


def gamma_reg_lower(a: float, z, params: GammaParams | None = None) -> complex:
    """Regularized lower incomplete gamma ``P(a, z) = γ(a, z) / Γ(a)``.

    Parameters
    ----------
    a : float
        Order, ``a > 0``.
    z : complex
        Argument; ``z**a`` is taken on the principal branch.
    params : GammaParams, optional
        Term caps and stopping tolerance.

    Returns
    -------
    complex

    Notes
    -----
    The power series is used where ``|z| - |Re z|`` is small (the Kummer
    form when ``Re z < 0`` so that its terms do not cancel), and the
    Legendre continued fraction for the upper function elsewhere.
    """
    if not a > 0:
        raise BesselDomainError(f"P(a, z) requires a > 0, got a = {a}")
    params = params or _DEFAULT_PARAMS
    z = _as_principal(z)
    if z == 0:
        return 0j
    logz = principal_log(z)
    regime = _regime(a, z)
    if regime == "series":
        return cmath.exp(a * logz - z - math.lgamma(a)) * _series(a, z, params)
    if regime == "kummer":
        return cmath.exp(a * logz - math.lgamma(a)) * _kummer(a, z, params)
    q = cmath.exp(a * logz - z - math.lgamma(a)) * _upper_cf(a, z, params)
    return 1.0 - q


def gamma_star(a: float, z, params: GammaParams | None = None) -> complex:
    """Entire function ``z**(-a) P(a, z)``; finite at ``z = 0`` where it is ``1/Γ(a+1)``."""
    if not a > 0:
        raise BesselDomainError(f"requires a > 0, got a = {a}")
    params = params or _DEFAULT_PARAMS
    z = _as_principal(z)
    if abs(z) < 1e-4:
        # four terms of sum (-z)^k / (k! (a+k) Γ(a)); truncation < 1e-17 relative
        s = 1.0 / a - z / (a + 1.0) + z * z / (2.0 * (a + 2.0)) - z**3 / (6.0 * (a + 3.0))
        return s / math.gamma(a)
    regime = _regime(a, z)
    if regime == "series":
        return cmath.exp(-z - math.lgamma(a)) * _series(a, z, params)
    if regime == "kummer":
        return math.exp(-math.lgamma(a)) * _kummer(a, z, params)
    return gamma_reg_lower(a, z, params) / c_pow_principal(z, a)


def gamma_upper_scaled(a: float, z, params: GammaParams | None = None) -> complex:
    """``e^{z} z^{-a} Γ(a, z)`` from the continued fraction.

    Bounded for large ``|z|`` away from the negative real axis, including
    ``Re z → -∞`` at fixed positive ``Im z`` where ``P(a, z)`` itself overflows.
    """
    if not a > 0:
        raise BesselDomainError(f"requires a > 0, got a = {a}")
    z = _as_principal(z)
    if z == 0:
        raise BesselDomainError("continued fraction is undefined at z = 0")
    return _upper_cf(a, z, params or _DEFAULT_PARAMS)
