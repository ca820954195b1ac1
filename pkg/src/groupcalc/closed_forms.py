"""Closed-form q- and kappa-deformed arithmetic.

Direct transcriptions of the textbook q-algebra and kappa-algebra, used as
independent oracles for the generic operations in :mod:`groupcalc.algebra`
(generic Tsallis must equal the q-forms, generic Kaniadakis the kappa-forms).
They deliberately do not share code with the generic path.

Cutoff convention: a bracketed base ``[.]_+`` that goes negative is clamped
to zero and flagged (see :func:`groupcalc.algebra.clamp_occurred`).
"""

from __future__ import annotations

import math

from .algebra import cutoff_pow
from .errors import DomainError

# -- q-algebra ---------------------------------------------------------------


def _gamma(q: float) -> float:
    if q == 1.0:
        raise DomainError("q = 1 is the undeformed limit; use the bg class")
    return 1.0 - q


def q_exp(q: float, x: float) -> float:
    """[1 + (1-q) x]_+ ** (1/(1-q))."""
    g = _gamma(q)
    return cutoff_pow(1.0 + g * x, 1.0 / g)


def q_log(q: float, x: float) -> float:
    """(x**(1-q) - 1)/(1-q) for x > 0."""
    if x <= 0.0:
        raise DomainError(f"q_log needs x > 0, got {x!r}")
    g = _gamma(q)
    return (x**g - 1.0) / g


def q_sum(q: float, x: float, y: float) -> float:
    return x + y + _gamma(q) * x * y


def q_sub(q: float, x: float, y: float) -> float:
    g = _gamma(q)
    denom = 1.0 + g * y
    if denom == 0.0:
        raise DomainError(f"q_sub pole: y = {y!r} = -1/(1-q)")
    return (x - y) / denom


def q_neg(q: float, x: float) -> float:
    g = _gamma(q)
    denom = 1.0 + g * x
    if denom == 0.0:
        raise DomainError(f"q_neg pole: x = {x!r} = -1/(1-q)")
    return -x / denom


def q_prod(q: float, x: float, y: float) -> float:
    g = _gamma(q)
    return cutoff_pow(x**g + y**g - 1.0, 1.0 / g)


def q_div(q: float, x: float, y: float) -> float:
    g = _gamma(q)
    return cutoff_pow(x**g - y**g + 1.0, 1.0 / g)


def q_recip(q: float, x: float) -> float:
    g = _gamma(q)
    return cutoff_pow(2.0 - x**g, 1.0 / g)


def q_integer(q: float, n: int) -> float:
    """((2-q)**n - 1)/(1-q)."""
    g = _gamma(q)
    return ((2.0 - q) ** n - 1.0) / g


def q_pow(q: float, x: float, n: int) -> float:
    """[n x**(1-q) - (n-1)]_+ ** (1/(1-q))."""
    g = _gamma(q)
    return cutoff_pow(n * x**g - (n - 1.0), 1.0 / g)


# -- kappa-algebra -----------------------------------------------------------


def _check_kappa(kappa: float) -> float:
    if kappa == 0.0:
        raise DomainError("kappa = 0 is the undeformed limit; use the bg class")
    return kappa


def kappa_exp(kappa: float, x: float) -> float:
    """[kappa x + sqrt(kappa^2 x^2 + 1)]_+ ** (1/kappa)."""
    k = _check_kappa(kappa)
    return cutoff_pow(k * x + math.sqrt((k * x) ** 2 + 1.0), 1.0 / k)


def kappa_log(kappa: float, x: float) -> float:
    """(x**kappa - x**(-kappa)) / (2 kappa) for x > 0."""
    k = _check_kappa(kappa)
    if x <= 0.0:
        raise DomainError(f"kappa_log needs x > 0, got {x!r}")
    return (x**k - x**-k) / (2.0 * k)


def kappa_sum(kappa: float, x: float, y: float) -> float:
    k = _check_kappa(kappa)
    return x * math.sqrt(1.0 + (k * y) ** 2) + y * math.sqrt(1.0 + (k * x) ** 2)


def kappa_sub(kappa: float, x: float, y: float) -> float:
    k = _check_kappa(kappa)
    return x * math.sqrt(1.0 + (k * y) ** 2) - y * math.sqrt(1.0 + (k * x) ** 2)


def kappa_neg(kappa: float, x: float) -> float:
    """Additive inverse; the kappa-sum is odd, so it is plain negation."""
    _check_kappa(kappa)
    return -x


def kappa_prod(kappa: float, x: float, y: float) -> float:
    k = _check_kappa(kappa)
    if x <= 0.0 or y <= 0.0:
        raise DomainError("kappa_prod needs positive operands")
    half = (x**k + y**k - x**-k - y**-k) / 2.0
    return math.exp(math.asinh(half) / k)


def kappa_div(kappa: float, x: float, y: float) -> float:
    k = _check_kappa(kappa)
    if x <= 0.0 or y <= 0.0:
        raise DomainError("kappa_div needs positive operands")
    half = (x**k - y**k - x**-k + y**-k) / 2.0
    return math.exp(math.asinh(half) / k)


def kappa_recip(kappa: float, x: float) -> float:
    _check_kappa(kappa)
    if x <= 0.0:
        raise DomainError("kappa_recip needs a positive operand")
    return 1.0 / x


def kappa_integer(kappa: float, n: int) -> float:
    """sinh(n arcsinh(kappa)) / kappa."""
    k = _check_kappa(kappa)
    return math.sinh(n * math.asinh(k)) / k


def kappa_pow(kappa: float, x: float, n: int) -> float:
    """[n sinh(kappa log x) + sqrt(n^2 sinh^2(kappa log x) + 1)]_+ ** (1/kappa)."""
    k = _check_kappa(kappa)
    if x <= 0.0:
        raise DomainError("kappa_pow needs a positive operand")
    s = n * math.sinh(k * math.log(x))
    return cutoff_pow(s + math.sqrt(s * s + 1.0), 1.0 / k)
