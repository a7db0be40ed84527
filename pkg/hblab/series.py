"""Truncated complex power series and Taylor-coefficient extraction.

A :class:`TaylorSeries` holds the coefficients ``c_0 .. c_N`` of a power
series truncated at order ``N``. Coefficients beyond the order are unknown,
not zero, so arithmetic between two series keeps only the smaller order.

Besides the series calculus this module carries the two quadratures used to
turn evaluators into series and back: the discrete Cauchy formula on a circle
(:func:`coefficients_via_cauchy`) and graded
Gauss-Legendre integration along a ray (:func:`ray_integral`).
"""
import logging

import numpy as np

from .errors import BranchPointError, DomainError, EvaluationError

log = logging.getLogger(__name__)

DEFAULT_ORDER = 64
DEFAULT_RADIUS = 0.8

# Gauss-Legendre panels on [0, 1], halving in width towards t = 1 so that
# integrands singular just outside the disk are still resolved at |z| = 1 - 2**-20.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)
_BREAKS = np.concatenate([1.0 - 2.0 ** -np.arange(0, 24), [1.0]])
_HALF = (_BREAKS[1:] - _BREAKS[:-1]) / 2
_MID = (_BREAKS[1:] + _BREAKS[:-1]) / 2
_RAY_T = (_MID[:, None] + _HALF[:, None] * _GL_NODES[None, :]).ravel()
_RAY_W = (_HALF[:, None] * _GL_WEIGHTS[None, :]).ravel()
_CHUNK = 2048


class TaylorSeries(object):
    """Power series ``c[0] + c[1]*z + ... + c[N]*z**N`` truncated at order ``N``.

    ``TaylorSeries(c, order=N)`` pads ``c`` with zeros or truncates it so that the
    series has order ``N``. Instances are immutable.
    """

    def __init__(self, coeffs, order=None):
        c = np.array(coeffs, dtype=complex).ravel()
        if c.size == 0:
            raise DomainError("empty coefficient list")
        if order is not None:
            if order < 0:
                raise DomainError("order cannot be negative: %s" % order)
            if order + 1 <= c.size:
                c = c[: order + 1].copy()
            else:
                c = np.concatenate([c, np.zeros(order + 1 - c.size, dtype=complex)])
        if not np.all(np.isfinite(c)):
            raise DomainError("series coefficients must be finite")
        c.setflags(write=False)
        self._coeffs = c

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def order(self):
        return self._coeffs.size - 1

    def __len__(self):
        return self._coeffs.size

    def __getitem__(self, i):
        return self._coeffs[i]

    def __iter__(self):
        return iter(self._coeffs)

    def truncate(self, order):
        return TaylorSeries(self._coeffs[: order + 1])

    def __add__(self, other):
        if isinstance(other, TaylorSeries):
            order = min(self.order, other.order)
            return TaylorSeries(self._coeffs[: order + 1] + other.coeffs[: order + 1])
        c = self._coeffs.copy()
        c[0] += other
        return TaylorSeries(c)

    __radd__ = __add__

    def __neg__(self):
        return TaylorSeries(-self._coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, TaylorSeries):
            return cauchy_product(self, other)
        return TaylorSeries(self._coeffs * other)

    __rmul__ = __mul__

    def __call__(self, z):
        return evaluate(self, z)

    def deriv(self):
        return differentiate(self)

    def integ(self, c0=0.0):
        return integrate(self, c0)

    def __repr__(self):
        return "TaylorSeries(order=%d, %s)" % (self.order, np.array2string(self._coeffs[:6], precision=6))


def cauchy_product(a, b):
    """Product of two series, truncated to the smaller order."""
    order = min(a.order, b.order)
    return TaylorSeries(np.convolve(a.coeffs[: order + 1], b.coeffs[: order + 1])[: order + 1])


def differentiate(a):
    if a.order == 0:
        return TaylorSeries([0.0])
    k = np.arange(1, a.order + 1)
    return TaylorSeries(k * a.coeffs[1:])


def integrate(a, c0=0.0):
    """Antiderivative with constant term ``c0``; the order rises by one."""
    k = np.arange(1, a.order + 2)
    return TaylorSeries(np.concatenate([[c0], a.coeffs / k]))


def exp_series(a):
    """Taylor expansion of ``exp(a(z))`` from the recurrence ``b' = a' b``."""
    c = a.coeffs
    n_terms = c.size
    b = np.zeros(n_terms, dtype=complex)
    b[0] = np.exp(c[0])
    k = np.arange(n_terms)
    for n in range(1, n_terms):
        # n b_n = sum_{k=1..n} k a_k b_{n-k}
        b[n] = np.dot(k[1 : n + 1] * c[1 : n + 1], b[n - 1 :: -1][:n]) / n
    return TaylorSeries(b)


def log_series(a):
    """Principal-branch Taylor expansion of ``log(a(z))`` from ``b' = a'/a``."""
    c = a.coeffs
    if c[0] == 0:
        raise BranchPointError("log_series needs a nonzero constant term")
    n_terms = c.size
    b = np.zeros(n_terms, dtype=complex)
    b[0] = np.log(c[0])
    k = np.arange(n_terms)
    for n in range(1, n_terms):
        # n a_n = sum_{k=1..n} k b_k a_{n-k}
        acc = np.dot(k[1:n] * b[1:n], c[n - 1 : 0 : -1]) if n > 1 else 0.0
        b[n] = (n * c[n] - acc) / (n * c[0])
    return TaylorSeries(b)


def evaluate(a, z, derivative=0):
    """Horner evaluation of a series, or of one of its termwise derivatives."""
    s = a
    for _ in range(derivative):
        s = differentiate(s)
    return np.polyval(s.coeffs[::-1], np.asarray(z, dtype=complex))


def _evaluator(f):
    return getattr(f, "value", f)


def coefficients_via_cauchy(f, n_max, r=DEFAULT_RADIUS, m=None):
    """Taylor coefficients ``c_0 .. c_{n_max}`` of an analytic evaluator.

    Trapezoidal rule for Cauchy's formula on the circle ``|z| = r``::

        c_n ~ 1/(m r**n) sum_k f(r e^{i t_k}) e^{-i n t_k},   t_k = 2 pi k / m

    which is spectrally accurate for integrands analytic near the circle.
    ``f`` may be a plain callable or an object with a ``value`` evaluator.
    """
    if m is None:
        m = max(256, 8 * n_max)
    if not 0 < r < 1:
        raise DomainError("quadrature radius must lie in (0, 1), got %r" % r)
    if m < 4 * n_max:
        raise DomainError("need at least %d samples for %d coefficients, got %d" % (4 * n_max, n_max, m))

    points = r * np.exp(2j * np.pi * np.arange(m) / m)
    samples = np.asarray(_evaluator(f)(points), dtype=complex)
    bad = ~np.isfinite(samples)
    if bad.any():
        point = complex(points[np.argmax(bad)])
        raise EvaluationError("non-finite sample at z = %s" % point, point=point)

    c = np.fft.fft(samples)[: n_max + 1] / m
    return TaylorSeries(c / r ** np.arange(n_max + 1))


def ray_integral(first, z, value0=0.0):
    """``value0 + integral of first`` along the segment ``[0, z]``."""
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    out = np.empty(flat.shape, dtype=complex)
    for start in range(0, flat.size, _CHUNK):
        block = flat[start : start + _CHUNK]
        samples = first(block[:, None] * _RAY_T[None, :])
        out[start : start + _CHUNK] = block * (samples @ _RAY_W)
    return (out + value0).reshape(z.shape)
